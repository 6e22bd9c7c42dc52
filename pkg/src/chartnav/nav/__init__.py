"""Keyboard navigation: cursor moves, shortest paths, spoken instructions."""

from .engine import (
    ARROWS,
    Cursor,
    Key,
    MoveResult,
    apply_key,
    auto_traverse,
    orient,
    replay_moves,
    shortest_path,
)
from .speech import ALREADY_THERE, InstructionScript, coalesce

__all__ = [
    "ALREADY_THERE",
    "ARROWS",
    "Cursor",
    "InstructionScript",
    "Key",
    "MoveResult",
    "apply_key",
    "auto_traverse",
    "coalesce",
    "orient",
    "replay_moves",
    "shortest_path",
]
