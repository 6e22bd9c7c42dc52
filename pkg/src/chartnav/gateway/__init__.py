"""Deterministic, replayable boundary for all model and web calls."""

from .core import LOADING_MESSAGE, STILL_LOADING_MESSAGE, Completion, Gateway, Prompt
from .embeddings import (
    EmbeddingVector,
    HashedEmbedder,
    SentenceTransformerEmbedder,
    cosine_similarity,
    tokenize,
)
from .providers import FailingProvider, HTTPProvider, ScriptedProvider
from .transcript import Transcript, TranscriptEntry

__all__ = [
    "Completion",
    "EmbeddingVector",
    "FailingProvider",
    "Gateway",
    "HTTPProvider",
    "HashedEmbedder",
    "LOADING_MESSAGE",
    "Prompt",
    "STILL_LOADING_MESSAGE",
    "ScriptedProvider",
    "SentenceTransformerEmbedder",
    "Transcript",
    "TranscriptEntry",
    "cosine_similarity",
    "tokenize",
]
