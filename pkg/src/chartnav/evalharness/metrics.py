"""Classification metrics over the four query types plus a rejected column."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LengthMismatchError
from ..pipeline.types import CLASSIFIABLE_TYPES, QueryType


@dataclass(frozen=True)
class ConfusionMatrix:
    """4x4 grid over (actual, predicted) plus per-class rejected counts.

    Predictions of UNANSWERABLE land in the rejected column; they count
    against accuracy and recall but belong to no predicted class.
    """

    counts: dict  # (actual, predicted) -> int over the four classifiable types
    rejected: dict  # actual -> int

    @classmethod
    def from_pairs(cls, preds, labels) -> "ConfusionMatrix":
        if len(preds) != len(labels):
            raise LengthMismatchError(
                f"{len(preds)} predictions vs {len(labels)} labels"
            )
        counts = {(a, p): 0 for a in CLASSIFIABLE_TYPES for p in CLASSIFIABLE_TYPES}
        rejected = {a: 0 for a in CLASSIFIABLE_TYPES}
        for pred, label in zip(preds, labels):
            if pred is QueryType.UNANSWERABLE:
                rejected[label] += 1
            else:
                counts[(label, pred)] += 1
        return cls(counts=counts, rejected=rejected)

    def row_sum(self, actual: QueryType) -> int:
        inner = sum(self.counts[(actual, p)] for p in CLASSIFIABLE_TYPES)
        return inner + self.rejected[actual]

    def col_sum(self, predicted: QueryType) -> int:
        return sum(self.counts[(a, predicted)] for a in CLASSIFIABLE_TYPES)

    @property
    def total(self) -> int:
        return sum(self.row_sum(a) for a in CLASSIFIABLE_TYPES)

    @property
    def trace(self) -> int:
        return sum(self.counts[(t, t)] for t in CLASSIFIABLE_TYPES)


def classification_metrics(preds, labels) -> dict:
    """Per-class precision/recall/F1 plus overall accuracy, as fractions."""
    matrix = ConfusionMatrix.from_pairs(preds, labels)
    out: dict = {"per_class": {}, "confusion": matrix}
    for t in CLASSIFIABLE_TYPES:
        tp = matrix.counts[(t, t)]
        predicted = matrix.col_sum(t)
        actual = matrix.row_sum(t)
        precision = tp / predicted if predicted else 0.0
        recall = tp / actual if actual else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        out["per_class"][t] = {"precision": precision, "recall": recall, "f1": f1}
    out["accuracy"] = matrix.trace / matrix.total if matrix.total else 0.0
    return out


def expand_confusion_counts(cell_counts: dict) -> tuple:
    """Turn {(actual, predicted): n} cells into aligned (preds, labels) lists."""
    preds: list = []
    labels: list = []
    for (actual, predicted), n in cell_counts.items():
        preds.extend([predicted] * n)
        labels.extend([actual] * n)
    return preds, labels
