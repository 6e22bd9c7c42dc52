"""Synthetic navigation-query generation for the benchmark corpus."""

from __future__ import annotations

import re

from ..errors import FormatError
from ..gateway.core import Gateway, Prompt
from ..pipeline.prompts import render_template
from ..pipeline.types import QueryType
from ..tree.model import AccessTree
from .corpus import BenchmarkItem

_LINE = re.compile(
    r"^\s*(wayfinding|orientation)\s*\|\s*([\d.]+)\s*\|\s*([\d.\-]+)\s*\|\s*(.+?)\s*$",
    re.IGNORECASE,
)


def generate_navigation_queries(
    gateway: Gateway, tree: AccessTree, n: int, chart_id: str
) -> list:
    """n navigation items, half wayfinding and half orientation."""
    prompt = Prompt(
        system=render_template("navgen_v1", n=n, tree_text=tree.tree_text),
        user=f"Generate the {n} navigation queries.",
    )
    text = gateway.complete(prompt).text or ""

    items = []
    for line in text.splitlines():
        match = _LINE.match(line)
        if not match:
            continue
        kind, cursor, target, question = match.groups()
        kind = kind.lower()
        tree.resolve(cursor)  # each cursor_context must resolve in the tree
        if kind == "wayfinding":
            tree.resolve(target)
            ground_truth = f"Starting Address: {cursor}; Ending Address: {target}"
        else:
            ground_truth = f"Current Address: {cursor}"
        items.append(
            BenchmarkItem(
                id=f"{chart_id}-nav-{len(items) + 1}",
                chart_id=chart_id,
                question=question,
                type_label=QueryType.NAVIGATION,
                ground_truth=ground_truth,
                cursor_context=cursor,
            )
        )

    if len(items) != n:
        raise FormatError(f"expected {n} navigation queries, parsed {len(items)}")
    wayfinding = sum("Ending Address" in item.ground_truth for item in items)
    if wayfinding * 2 != n:
        raise FormatError(
            f"expected equal wayfinding/orientation split, got {wayfinding}/{n - wayfinding}"
        )
    return items
