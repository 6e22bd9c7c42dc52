"""Benchmark execution: answer every item, judge it, aggregate partitions."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Optional

from ..pipeline.types import UserQuery
from .judge import judge

PARTITION_KEYS = ("type", "chart", "answerable", "open_ended")


@dataclass
class ItemResult:
    item_id: str
    chart_id: str
    type_label: str
    answerable: bool
    open_ended: bool
    answer: Optional[str] = None
    score: Optional[int] = None
    rationale: Optional[str] = None
    error: Optional[str] = None


@dataclass
class BenchmarkReport:
    results: list = dc_field(default_factory=list)

    def scored(self, answerable_only: bool = False) -> list:
        out = [r for r in self.results if r.score is not None]
        if answerable_only:
            out = [r for r in out if r.answerable]
        return out

    def mean_score(self, answerable_only: bool = False) -> Optional[float]:
        scored = self.scored(answerable_only)
        if not scored:
            return None
        return sum(r.score for r in scored) / len(scored)

    def distribution(self, results=None) -> dict:
        pool = self.scored() if results is None else [r for r in results if r.score is not None]
        dist = {s: 0 for s in range(1, 6)}
        for r in pool:
            dist[r.score] += 1
        return dist

    def partitions(self) -> dict:
        """Score distributions keyed by type, chart, answerability, open-endedness."""
        out: dict = {key: {} for key in PARTITION_KEYS}
        keyers = {
            "type": lambda r: r.type_label,
            "chart": lambda r: r.chart_id,
            "answerable": lambda r: str(r.answerable).lower(),
            "open_ended": lambda r: str(r.open_ended).lower(),
        }
        for key, keyer in keyers.items():
            buckets: dict = {}
            for r in self.scored():
                buckets.setdefault(keyer(r), []).append(r)
            for bucket, members in buckets.items():
                out[key][bucket] = {
                    "count": len(members),
                    "mean": sum(m.score for m in members) / len(members),
                    "distribution": self.distribution(members),
                }
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "items": [vars(r) for r in self.results],
                "mean": self.mean_score(),
                "mean_answerable_only": self.mean_score(answerable_only=True),
                "partitions": self.partitions(),
                "errors": sum(1 for r in self.results if r.error),
            },
            indent=2,
            ensure_ascii=False,
        )

    def table_dump(self) -> str:
        lines = [f"{'id':<16} {'type':<12} {'chart':<10} {'score':>5}  rationale"]
        for r in self.results:
            score = "-" if r.score is None else str(r.score)
            note = r.error or (r.rationale or "")
            lines.append(
                f"{r.item_id:<16} {r.type_label:<12} {r.chart_id:<10} {score:>5}  {note[:60]}"
            )
        mean = self.mean_score()
        mean_a = self.mean_score(answerable_only=True)
        lines.append(
            f"mean: {mean if mean is None else round(mean, 4)}  "
            f"answerable-only: {mean_a if mean_a is None else round(mean_a, 4)}"
        )
        return "\n".join(lines)


def run_benchmark(items, pipeline, judge_gateway, judge_refs=(), parallelism: int = 1) -> BenchmarkReport:
    """Answer and judge every item; per-item failures are recorded, not fatal."""

    def evaluate(item) -> ItemResult:
        result = ItemResult(
            item_id=item.id,
            chart_id=item.chart_id,
            type_label=item.type_label.value,
            answerable=item.answerable,
            open_ended=item.open_ended,
        )
        try:
            query = UserQuery(
                text=item.question,
                session=f"bench-{item.id}",
                cursor_address=item.cursor_context or "1",
            )
            answer = pipeline.run(query)
            result.answer = answer.body
            verdict = judge(
                judge_gateway, answer.body, item.ground_truth, item.question, judge_refs
            )
            result.score = verdict.score
            result.rationale = verdict.rationale
        except Exception as exc:
            result.error = str(exc)
        return result

    report = BenchmarkReport()
    if parallelism <= 1:
        report.results = [evaluate(item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            by_id = {r.item_id: r for r in pool.map(evaluate, items)}
        report.results = [by_id[item.id] for item in items]
    return report
