"""Few-shot query classification with similarity-selected examples."""

from __future__ import annotations

import re
from typing import Optional

from ..errors import FormatError
from ..gateway.core import Gateway, Prompt
from ..gateway.embeddings import cosine_similarity
from .prompts import render_template
from .types import CLASSIFIABLE_TYPES, BankEntry, ExampleBank, QueryType

APOLOGY = "I am sorry. I am unable to answer this question"

CORRECTIVE_SUFFIX = (
    "\nYour previous response did not follow the required format. "
    "Respond with exactly one of the allowed outputs."
)


def select_examples(query_text: str, bank: ExampleBank, k: int, gateway: Gateway) -> list:
    """The k most similar bank entries per query type, ties by bank order."""
    bank.require_per_type(k)
    query_vec = gateway.embed(query_text)
    selected: list = []
    for type_label in CLASSIFIABLE_TYPES:
        candidates = bank.of_type(type_label)
        scored = [
            (-cosine_similarity(query_vec, entry.embedding), position, entry)
            for position, entry in enumerate(candidates)
        ]
        scored.sort(key=lambda item: (item[0], item[1]))
        selected.extend(entry for _, _, entry in scored[:k])
    return selected


def classification_prompt(query_text: str, examples) -> Prompt:
    few_shot = tuple(
        (entry.question, entry.type_label.model_label) for entry in examples
    )
    return Prompt(
        system=render_template("classify_v1"),
        user=f"Query: {query_text}",
        few_shot=few_shot,
    )


def classify(query_text: str, examples, gateway: Gateway) -> QueryType:
    """Parse the model's constrained output into a QueryType.

    The apology escape string maps to UNANSWERABLE. Unparseable output gets
    one corrective re-ask, then surfaces a format error to mitigation.
    """
    prompt = classification_prompt(query_text, examples)
    completion = gateway.complete(prompt)
    parsed = parse_query_type(completion.text)
    if parsed is not None:
        return parsed

    retry = Prompt(
        system=prompt.system + CORRECTIVE_SUFFIX,
        user=prompt.user,
        few_shot=prompt.few_shot,
    )
    completion = gateway.complete(retry)
    parsed = parse_query_type(completion.text)
    if parsed is None:
        raise FormatError(f"unparseable classification output: {completion.text!r}")
    return parsed


def parse_query_type(text: str) -> Optional[QueryType]:
    lowered = text.lower()
    if "unable to answer" in lowered or "i am sorry" in lowered:
        return QueryType.UNANSWERABLE
    hits = [t for t in CLASSIFIABLE_TYPES if re.search(rf"\b{t.value}\b", lowered)]
    if len(hits) == 1:
        return hits[0]
    return None
