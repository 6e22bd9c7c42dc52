"""Screen-reader label text for tree nodes.

Group labels follow fixed templates so downstream prompts and tests can rely
on them verbatim:

    category  "{i} of {n}. {Field} equals {value}. {k} value(s). Press t to open table."
    interval  "{Field} is between {lo} and {hi}"
"""

from __future__ import annotations

from typing import Optional

from ..chart.csvio import format_cell
from ..chart.model import Channel, ChartKind, ChartSpec
from .model import NodeKind, TreeNode

_CHANNEL_PHRASE = {
    Channel.X: "X-axis",
    Channel.Y: "Y-axis",
    Channel.COLOR: "Legend",
    Channel.DETAIL: "Detail",
}


def render_root_label(spec: ChartSpec) -> str:
    x = spec.encoding_for(Channel.X)
    y = spec.encoding_for(Channel.Y)
    head = f"A {spec.chart_kind.phrase}."
    if x is not None and y is not None:
        return f"{head} With axes {x.display_title} and {y.display_title}"
    parts = []
    color = spec.encoding_for(Channel.COLOR)
    detail = spec.encoding_for(Channel.DETAIL)
    if color is not None:
        parts.append(f"legend {color.display_title}")
    if detail is not None:
        parts.append(f"detail {detail.display_title}")
    if parts:
        return f"{head} With {' and '.join(parts)}"
    return head


def render_channel_label(channel: Channel, display_title: str) -> str:
    return f"{_CHANNEL_PHRASE[channel]} titled {display_title}."


def render_node_label(node: TreeNode, sibling_count: int) -> str:
    """Render a node's spoken label from its structural fields.

    Root and channel labels are fixed at build time (they depend on the
    chart spec, which nodes do not carry) and are returned as stored.
    """
    if node.kind in (NodeKind.ROOT, NodeKind.CHANNEL):
        return node.label
    if node.kind is NodeKind.GROUP:
        if isinstance(node.span, tuple):
            lo, hi = node.span
            return f"{node.field} is between {_fmt(lo)} and {_fmt(hi)}"
        count = len(node.row_indices)
        plural = "value" if count == 1 else "values"
        return (
            f"{node.sibling_index} of {sibling_count}. "
            f"{node.field} equals {_fmt(node.span)}. "
            f"{count} {plural}. Press t to open table."
        )
    return node.label  # leaf labels carry their row summary


def render_leaf_label(index: int, count: int, pairs: list) -> str:
    summary = "; ".join(f"{name} equals {_fmt(value)}" for name, value in pairs)
    return f"{index} of {count}. {summary}."


def render_tree_text(tree, max_level: int = 4) -> str:
    """Depth-first text rendering, one node per line, address first.

    The dot-separated address doubles as the depth cue, so lines carry no
    leading whitespace and always begin with their node's address.
    Truncating at ``max_level`` bounds prompt size.
    """
    lines = []
    for node in tree.root.walk():
        if node.level <= max_level:
            lines.append(f"{node.address} {node.label}")
    return "\n".join(lines)


def _fmt(value) -> str:
    return format_cell(value)
