"""Benchmark corpus records and the released-dataset converter.

Native corpus format: one JSON record per line with the BenchmarkItem
fields. The converter ingests the released CSV layout (one row per
question with chart/type/ground-truth columns) into this format.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..pipeline.types import QueryType


@dataclass(frozen=True)
class BenchmarkItem:
    id: str
    chart_id: str
    question: str
    type_label: QueryType
    ground_truth: str
    answerable: bool = True
    open_ended: bool = False
    cursor_context: Optional[str] = None  # tree address for navigation items

    def __post_init__(self):
        if self.type_label is QueryType.NAVIGATION and not self.cursor_context:
            raise ValueError(f"navigation item {self.id} requires cursor_context")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "chart_id": self.chart_id,
            "question": self.question,
            "type": self.type_label.value,
            "ground_truth": self.ground_truth,
            "answerable": self.answerable,
            "open_ended": self.open_ended,
            "cursor_context": self.cursor_context,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "BenchmarkItem":
        return cls(
            id=str(raw["id"]),
            chart_id=str(raw["chart_id"]),
            question=raw["question"],
            type_label=QueryType(raw["type"]),
            ground_truth=raw.get("ground_truth", ""),
            answerable=bool(raw.get("answerable", True)),
            open_ended=bool(raw.get("open_ended", False)),
            cursor_context=raw.get("cursor_context"),
        )


def load_corpus(path: str) -> list:
    items = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip():
            items.append(BenchmarkItem.from_dict(json.loads(line)))
    return items


def save_corpus(items, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for item in items:
            f.write(json.dumps(item.to_dict(), ensure_ascii=False) + "\n")


# Header aliases seen in the released dataset layout.
_ALIASES = {
    "chart_id": ("chart_id", "chart", "chart_type", "stimulus"),
    "question": ("question", "query", "text"),
    "type": ("type", "classification", "query_type", "label"),
    "ground_truth": ("ground_truth", "groundtruth", "answer", "gt"),
    "answerable": ("answerable",),
    "open_ended": ("open_ended", "openended", "open-ended"),
    "cursor_context": ("cursor_context", "cursor", "active_element"),
}

_TYPE_WORDS = {
    "analytical": QueryType.ANALYTICAL,
    "visual": QueryType.VISUAL,
    "contextual": QueryType.CONTEXTUAL,
    "navigation": QueryType.NAVIGATION,
}


def convert_released_corpus(csv_path: str, out_path: str) -> int:
    """Convert the released CSV layout to the native JSONL corpus format."""
    with open(csv_path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        rows = list(reader)
    if not rows:
        save_corpus([], out_path)
        return 0

    lowered = {k.lower().strip(): k for k in rows[0].keys()}

    def pick(row: dict, field: str, default: str = "") -> str:
        for alias in _ALIASES[field]:
            if alias in lowered:
                return (row.get(lowered[alias]) or "").strip()
        return default

    items = []
    for i, row in enumerate(rows, 1):
        type_raw = pick(row, "type").lower()
        type_label = next(
            (t for word, t in _TYPE_WORDS.items() if word in type_raw), None
        )
        if type_label is None:
            raise ValueError(f"row {i}: unrecognized query type {type_raw!r}")
        items.append(
            BenchmarkItem(
                id=str(i),
                chart_id=pick(row, "chart_id") or "unknown",
                question=pick(row, "question"),
                type_label=type_label,
                ground_truth=pick(row, "ground_truth"),
                answerable=_truthy(pick(row, "answerable", "true")),
                open_ended=_truthy(pick(row, "open_ended", "false")),
                cursor_context=pick(row, "cursor_context") or
                ("1" if type_label is QueryType.NAVIGATION else None),
            )
        )
    save_corpus(items, out_path)
    return len(items)


def _truthy(text: str) -> bool:
    return text.strip().lower() in ("1", "true", "yes", "y")
