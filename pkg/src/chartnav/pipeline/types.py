"""Query pipeline domain types."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Optional

from ..errors import InsufficientBankError
from ..gateway.embeddings import EmbeddingVector


class QueryType(str, Enum):
    ANALYTICAL = "analytical"
    VISUAL = "visual"
    CONTEXTUAL = "contextual"
    NAVIGATION = "navigation"
    UNANSWERABLE = "unanswerable"

    @property
    def model_label(self) -> str:
        """The constrained output string the classifier model must emit."""
        return f"{self.value.capitalize()} Query"


# The four types the classifier chooses between; the apology escape string
# maps to UNANSWERABLE internally rather than being a fifth model class.
CLASSIFIABLE_TYPES = (
    QueryType.ANALYTICAL,
    QueryType.VISUAL,
    QueryType.CONTEXTUAL,
    QueryType.NAVIGATION,
)


@dataclass(frozen=True)
class UserQuery:
    text: str
    session: str = "default"
    cursor_address: str = "1"
    table_mode: bool = False

    def __post_init__(self):
        if not self.text or not self.text.strip():
            raise ValueError("query text must be non-empty")


@dataclass(frozen=True)
class BankEntry:
    question: str
    type_label: QueryType
    embedding: EmbeddingVector


class ExampleBank:
    """Validation-split questions with embeddings, stratified across types."""

    def __init__(self, entries):
        self.entries = list(entries)

    @classmethod
    def from_pairs(cls, pairs, embedder) -> "ExampleBank":
        entries = [
            BankEntry(
                question=question,
                type_label=QueryType(label),
                embedding=embedder.embed(question),
            )
            for question, label in pairs
        ]
        return cls(entries)

    @classmethod
    def load_jsonl(cls, path: str, embedder) -> "ExampleBank":
        pairs = []
        with open(path, encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    raw = json.loads(line)
                    pairs.append((raw["question"], raw["type"]))
        return cls.from_pairs(pairs, embedder)

    def of_type(self, type_label: QueryType) -> list:
        return [e for e in self.entries if e.type_label is type_label]

    def require_per_type(self, k: int) -> None:
        for t in CLASSIFIABLE_TYPES:
            n = len(self.of_type(t))
            if n < k:
                raise InsufficientBankError(
                    f"bank has {n} {t.value} entries, needs at least {k}"
                )

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Answer:
    query_echo: str
    justification: str
    body: str
    kind: QueryType
    suggestions: tuple = ()  # 0 or 2 alternative queries
    instruction_script: Optional[object] = None  # nav.InstructionScript

    def to_dict(self) -> dict:
        script = None
        if self.instruction_script is not None:
            script = {
                "steps": [
                    (getattr(k, "value", k), n) for k, n in self.instruction_script.steps
                ],
                "spoken": self.instruction_script.spoken,
            }
        return {
            "query_echo": self.query_echo,
            "justification": self.justification,
            "body": self.body,
            "kind": self.kind.value,
            "suggestions": list(self.suggestions),
            "instruction_script": script,
        }
