"""Compile a chart spec + materialized view into the navigable tree.

Four levels: chart description at the root, one node per encoding channel,
category or numerical-range groups inside each channel, and leaf data
points. Channel order is x, y, color legend, detail.
"""

from __future__ import annotations

from typing import Optional

from ..chart.model import (
    Channel,
    ChartSpec,
    DataType,
    EncodingChannel,
    Timestamp,
    TransformedView,
    comparable_number,
)
from .binning import bin_intervals, interval_contains
from .labels import (
    render_channel_label,
    render_leaf_label,
    render_node_label,
    render_root_label,
    render_tree_text,
)
from .model import AccessTree, NodeKind, TreeNode

_CHANNEL_ORDER = (Channel.X, Channel.Y, Channel.COLOR, Channel.DETAIL)

# Calendar binning switches from months to years beyond this span.
_TWO_YEARS_MS = 2 * 365.25 * 24 * 3600 * 1000


def build_tree(spec: ChartSpec, view: TransformedView) -> AccessTree:
    root = TreeNode(
        address="1",
        level=1,
        kind=NodeKind.ROOT,
        label=render_root_label(spec),
        row_indices=tuple(range(len(view.rows))),
    )

    channel_idx = 0
    for channel in _CHANNEL_ORDER:
        enc = spec.encoding_for(channel)
        if enc is None:
            continue
        channel_idx += 1
        node = TreeNode(
            address=f"1.{channel_idx}",
            level=2,
            kind=NodeKind.CHANNEL,
            label=render_channel_label(enc.channel, enc.display_title),
            field=enc.field,
            channel=enc.channel,
        )
        groups = _groups_for(enc, view)
        for j, (span, rows) in enumerate(groups, 1):
            group = TreeNode(
                address=f"{node.address}.{j}",
                level=3,
                kind=NodeKind.GROUP,
                label="",
                field=enc.field,
                channel=enc.channel,
                span=span,
                row_indices=rows,
            )
            group.label = render_node_label(group, len(groups))
            for k, row_index in enumerate(rows, 1):
                pairs = list(zip(view.column_names, view.rows[row_index]))
                group.children.append(
                    TreeNode(
                        address=f"{group.address}.{k}",
                        level=4,
                        kind=NodeKind.LEAF,
                        label=render_leaf_label(k, len(rows), pairs),
                        field=enc.field,
                        channel=enc.channel,
                        row_indices=(row_index,),
                    )
                )
            node.children.append(group)
        root.children.append(node)

    index = {n.address: n for n in root.walk()}
    tree = AccessTree(root=root, node_index=index, tree_text="")
    tree.tree_text = render_tree_text(tree, 4)
    return tree


def _groups_for(enc: EncodingChannel, view: TransformedView):
    """Partition view rows into (span, row_indices) groups for one channel.

    Rows with a null in the encoded field belong to no group.
    """
    idx = view.column_index(enc.field)
    values = [row[idx] for row in view.rows]

    if enc.data_type is DataType.NOMINAL:
        return _category_groups(values, enc.scale_domain)
    if enc.data_type is DataType.TEMPORAL:
        return _calendar_groups(enc.field, values)
    return _interval_groups(enc, values)


def _category_groups(values, domain):
    if domain is not None:
        categories = [str(v) for v in domain]
    else:
        categories = []
        for v in values:
            if v is not None and str(v) not in categories:
                categories.append(str(v))
    buckets = {c: [] for c in categories}
    for i, v in enumerate(values):
        if v is None:
            continue
        key = str(v)
        if key in buckets:
            buckets[key].append(i)
    return [(c, tuple(buckets[c])) for c in categories]


def _interval_groups(enc: EncodingChannel, values):
    numbers = [comparable_number(v) for v in values]
    finite = [n for n in numbers if n is not None]
    if not finite:
        return []
    target = 10 if _percentage_like(enc, finite) else 8
    intervals = bin_intervals(finite, target)
    groups = []
    last = len(intervals) - 1
    for j, interval in enumerate(intervals):
        rows = tuple(
            i
            for i, n in enumerate(numbers)
            if n is not None and interval_contains(interval, n, j == last)
        )
        groups.append((interval, rows))
    return groups


def _percentage_like(enc: EncodingChannel, finite) -> bool:
    if enc.scale_domain is not None and len(enc.scale_domain) == 2:
        lo, hi = float(enc.scale_domain[0]), float(enc.scale_domain[1])
    else:
        lo, hi = min(finite), max(finite)
    return 0.0 <= lo and hi <= 100.0


def _calendar_groups(field: str, values):
    stamps = [(i, v) for i, v in enumerate(values) if isinstance(v, Timestamp)]
    if not stamps:
        return []
    span = max(v.epoch_ms for _, v in stamps) - min(v.epoch_ms for _, v in stamps)
    by_year = span > _TWO_YEARS_MS

    buckets: dict = {}
    order: list = []
    for i, ts in stamps:
        dt = ts.to_datetime()
        key = (dt.year,) if by_year else (dt.year, dt.month)
        if key not in buckets:
            buckets[key] = []
            order.append(key)
        buckets[key].append(i)
    order.sort()

    groups = []
    for key in order:
        if by_year:
            span_text = (str(key[0]), str(key[0] + 1))
        else:
            year, month = key
            nxt = (year + 1, 1) if month == 12 else (year, month + 1)
            span_text = (f"{year:04d}-{month:02d}", f"{nxt[0]:04d}-{nxt[1]:02d}")
        groups.append((span_text, tuple(buckets[key])))
    return groups
