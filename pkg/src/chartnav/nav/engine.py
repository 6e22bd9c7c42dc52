"""Cursor state and keyboard semantics over the accessibility tree.

Up widens scope (parent), down narrows (first child), left/right move
between siblings, and t toggles the snapshot table on group nodes. Illegal
moves stay put and flag a boundary event instead of raising.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from ..errors import UnknownAddressError
from ..tree.model import AccessTree, NodeKind
from .speech import coalesce


class Key(str, Enum):
    UP = "up"
    DOWN = "down"
    LEFT = "left"
    RIGHT = "right"
    T = "t"


# The move graph used for pathfinding; tables are a mode, not a node.
ARROWS = (Key.UP, Key.DOWN, Key.LEFT, Key.RIGHT)


@dataclass(frozen=True)
class Cursor:
    session: str
    address: str = "1"
    table_open: bool = False


@dataclass(frozen=True)
class MoveResult:
    cursor: Cursor
    boundary: bool = False
    toggled_table: bool = False


def apply_key(tree: AccessTree, cursor: Cursor, key: Key) -> MoveResult:
    node = tree.resolve(cursor.address)

    if key is Key.T:
        if node.kind is NodeKind.GROUP:
            return MoveResult(
                cursor=replace(cursor, table_open=not cursor.table_open),
                toggled_table=True,
            )
        return MoveResult(cursor=cursor, boundary=True)

    if cursor.table_open:
        # Arrow keys inside an open table belong to the screen reader.
        return MoveResult(cursor=cursor, boundary=True)

    target = _arrow_target(tree, cursor.address, key)
    if target is None:
        return MoveResult(cursor=cursor, boundary=True)
    return MoveResult(cursor=replace(cursor, address=target))


def _arrow_target(tree: AccessTree, address: str, key: Key) -> Optional[str]:
    node = tree.resolve(address)
    if key is Key.UP:
        return node.parent_address
    if key is Key.DOWN:
        return node.children[0].address if node.children else None
    siblings = tree.siblings_of(node)
    i = node.sibling_index - 1
    if key is Key.LEFT:
        return siblings[i - 1].address if i > 0 else None
    if key is Key.RIGHT:
        return siblings[i + 1].address if i + 1 < len(siblings) else None
    return None


def shortest_path(tree: AccessTree, from_addr: str, to_addr: str) -> list:
    """Minimal arrow-key sequence between two addresses (breadth-first)."""
    tree.resolve(from_addr)
    tree.resolve(to_addr)
    if from_addr == to_addr:
        return []

    parent: dict = {from_addr: None}
    queue = deque([from_addr])
    while queue:
        current = queue.popleft()
        for key in ARROWS:
            nxt = _arrow_target(tree, current, key)
            if nxt is None or nxt in parent:
                continue
            parent[nxt] = (current, key)
            if nxt == to_addr:
                queue.clear()
                break
            queue.append(nxt)
        else:
            continue
        break

    if to_addr not in parent:
        raise UnknownAddressError(f"no path from {from_addr!r} to {to_addr!r}")
    moves: list = []
    cursor = to_addr
    while parent[cursor] is not None:
        cursor, key = parent[cursor]
        moves.append(key)
    moves.reverse()
    return moves


def orient(tree: AccessTree, cursor: Cursor) -> str:
    """Current node label plus its ancestry chain from the root."""
    chain = tree.ancestry(cursor.address)
    return " > ".join(node.label for node in chain)


def auto_traverse(tree: AccessTree, cursor: Cursor, to_addr: str):
    """Jump the cursor straight to a node.

    Returns (cursor, script); the script is the key-press equivalent of the
    jump so callers can surface what was skipped.
    """
    tree.resolve(to_addr)
    moves = shortest_path(tree, cursor.address, to_addr)
    script = coalesce(moves)
    return replace(cursor, address=to_addr, table_open=False), script


def replay_moves(tree: AccessTree, cursor: Cursor, moves) -> MoveResult:
    """Apply a move list in order; boundary flag set if any move was illegal."""
    hit_boundary = False
    for key in moves:
        result = apply_key(tree, cursor, key)
        hit_boundary = hit_boundary or result.boundary
        cursor = result.cursor
    return MoveResult(cursor=cursor, boundary=hit_boundary)
