"""LLM-judge Likert scoring of answers against reference responses.

The prompt presents Response A (the reference) and Response B (the system
answer) without revealing which is which; the rubric is a five-point
coherence scale. Scores outside 1-5 trigger one re-ask.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from ..errors import JudgeParseError
from ..gateway.core import Gateway, Prompt
from ..pipeline.prompts import render_template

_SCORE = re.compile(r"Score:\s*(-?\d+)")
_RATIONALE = re.compile(r"Rationale:\s*(.+)", re.DOTALL)

REASSESS_SUFFIX = (
    "\nYour previous score deviated from the 1-5 range. Reassess your "
    "evaluation of Response B and stay within the scale."
)


@dataclass(frozen=True)
class JudgeExample:
    question: str
    response_a: str
    response_b: str
    score: int
    rationale: str


@dataclass(frozen=True)
class JudgeVerdict:
    score: int
    rationale: str
    raw: str


def judge_prompt(question: str, response_a: str, response_b: str, refs=()) -> Prompt:
    few_shot = tuple(
        (
            f"Question: {ref.question}\nResponse A: {ref.response_a}\n"
            f"Response B: {ref.response_b}",
            f"Score: {ref.score} Rationale: {ref.rationale}",
        )
        for ref in refs
    )
    return Prompt(
        system=render_template(
            "judge_v1", question=question, response_a=response_a, response_b=response_b
        ),
        user="Assess Response B now.",
        few_shot=few_shot,
    )


def judge(
    gateway: Gateway, response: str, ground_truth: str, question: str = "", refs=()
) -> JudgeVerdict:
    """Score the system response against the reference (Response A)."""
    prompt = judge_prompt(question, ground_truth, response, refs)
    text = gateway.complete(prompt).text or ""
    verdict = _parse(text)
    if verdict is not None:
        return verdict

    retry = Prompt(
        system=prompt.system + REASSESS_SUFFIX, user=prompt.user, few_shot=prompt.few_shot
    )
    text = gateway.complete(retry).text or ""
    verdict = _parse(text)
    if verdict is None:
        raise JudgeParseError(f"unparseable judge output: {text!r}")
    return verdict


def _parse(text: str) -> Optional[JudgeVerdict]:
    score_match = _SCORE.search(text)
    if not score_match:
        return None
    score = int(score_match.group(1))
    if not 1 <= score <= 5:
        return None
    rationale_match = _RATIONALE.search(text)
    rationale = rationale_match.group(1).strip() if rationale_match else ""
    return JudgeVerdict(score=score, rationale=rationale, raw=text)
