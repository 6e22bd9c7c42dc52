"""Text embeddings with an offline deterministic fallback.

The fallback is a 256-dimension hashed bag of words: lowercase tokens split
on non-alphanumerics, each counted into a sha256-assigned bucket. Identical
texts embed identically and disjoint vocabularies are orthogonal (up to
hash collisions), which is all similarity-based example selection needs
when no model is available.
"""

from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass

from ..errors import DimensionMismatchError, ZeroVectorError

_TOKEN_SPLIT = re.compile(r"[^a-z0-9]+")


@dataclass(frozen=True)
class EmbeddingVector:
    values: tuple

    @property
    def dimension(self) -> int:
        return len(self.values)

    def norm(self) -> float:
        return math.sqrt(sum(v * v for v in self.values))


def cosine_similarity(a: EmbeddingVector, b: EmbeddingVector) -> float:
    if a.dimension != b.dimension:
        raise DimensionMismatchError(f"dimensions differ: {a.dimension} vs {b.dimension}")
    na, nb = a.norm(), b.norm()
    if na == 0.0 or nb == 0.0:
        raise ZeroVectorError("cosine similarity is undefined for a zero vector")
    dot = sum(x * y for x, y in zip(a.values, b.values))
    return dot / (na * nb)


def tokenize(text: str) -> list:
    return [t for t in _TOKEN_SPLIT.split(text.lower()) if t]


class HashedEmbedder:
    def __init__(self, dimension: int = 256):
        self.dimension = dimension

    def bucket(self, token: str) -> int:
        h = hashlib.sha256(token.encode("utf-8")).hexdigest()
        return int(h, 16) % self.dimension

    def embed(self, text: str) -> EmbeddingVector:
        counts = [0.0] * self.dimension
        for token in tokenize(text):
            counts[self.bucket(token)] += 1.0
        return EmbeddingVector(values=tuple(counts))


class SentenceTransformerEmbedder:
    """Optional live embedder; requires the sentence-transformers package."""

    def __init__(self, model_name: str = "all-MiniLM-L6-v2"):
        from sentence_transformers import SentenceTransformer

        self._model = SentenceTransformer(model_name)

    def embed(self, text: str) -> EmbeddingVector:
        vec = self._model.encode([text])[0]
        return EmbeddingVector(values=tuple(float(v) for v in vec))
