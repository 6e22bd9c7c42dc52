"""Materialize and manipulate the transformed data view of a chart.

The view is what the chart actually depicts: declared transforms applied in
order, with interactive params resolved to their current values. Downstream
consumers (tree builder, CSV export, query agents) never see the raw rows
when transforms exist.
"""

from __future__ import annotations

import math
from typing import Any, Optional

from ..errors import (
    MissingDataError,
    ParamRangeError,
    TransformError,
    UnknownColumnError,
    UnknownParamError,
)
from ..tree.binning import bin_intervals, interval_contains
from .model import (
    AggregateTransform,
    BinTransform,
    ChartSpec,
    Column,
    DataType,
    DataValue,
    FilterPredicate,
    InteractiveParam,
    Timestamp,
    TransformedView,
    comparable_number,
)


def materialize_view(spec: ChartSpec, data: list) -> TransformedView:
    """Apply the spec's transforms (in declaration order) to raw rows."""
    if not isinstance(data, list):
        raise MissingDataError("raw data must be a list of records")
    columns, rows = _ingest(spec, data)
    for transform in spec.transforms:
        if isinstance(transform, FilterPredicate):
            columns, rows = _apply_filter(spec, transform, columns, rows)
        elif isinstance(transform, BinTransform):
            columns, rows = _apply_bin(transform, columns, rows)
        elif isinstance(transform, AggregateTransform):
            columns, rows = _apply_aggregate(transform, columns, rows)
        else:  # pragma: no cover - parser only emits the three kinds
            raise TransformError(f"unknown transform {transform!r}")
    return TransformedView(columns=tuple(columns), rows=tuple(rows))


def sort_view(view: TransformedView, column: str, order: str = "asc") -> TransformedView:
    """Stable sort; numeric columns compare numerically, nulls always last."""
    if order not in ("asc", "desc"):
        raise ValueError(f"order must be 'asc' or 'desc', got {order!r}")
    try:
        idx = view.column_index(column)
    except KeyError:
        raise UnknownColumnError(f"unknown column {column!r}") from None

    indexed = list(range(len(view.rows)))
    nulls = [i for i in indexed if view.rows[i][idx] is None]
    present = [i for i in indexed if view.rows[i][idx] is not None]

    def key(i: int):
        value = view.rows[i][idx]
        num = comparable_number(value)
        if num is not None:
            return (0, num, "")
        return (1, 0.0, str(value))

    present.sort(key=key, reverse=(order == "desc"))
    permutation = present + nulls
    rows = tuple(view.rows[i] for i in permutation)
    colors = None
    if view.row_color_hex is not None:
        colors = tuple(view.row_color_hex[i] for i in permutation)
    return TransformedView(columns=view.columns, rows=rows, row_color_hex=colors)


def update_params(spec: ChartSpec, name: str, value: DataValue) -> ChartSpec:
    """Return a spec with one interactive param set; callers rebuild the tree."""
    param = spec.param_named(name)
    if param is None:
        raise UnknownParamError(f"unknown param {name!r}")
    if (param.minimum is not None or param.maximum is not None) and not param.in_range(value):
        raise ParamRangeError(
            f"value {value!r} outside allowed range "
            f"[{param.minimum}, {param.maximum}] for param {name!r}"
        )
    return spec.with_param(
        InteractiveParam(
            name=param.name,
            value=value,
            minimum=param.minimum,
            maximum=param.maximum,
            step=param.step,
        )
    )


# -- ingestion ---------------------------------------------------------------

def _ingest(spec: ChartSpec, data: list):
    names: list = []
    for row in data:
        for key in row.keys():
            if key not in names:
                names.append(key)
    if not names and data:
        raise MissingDataError("rows carry no fields")

    produced = set()
    for t in spec.transforms:
        if isinstance(t, BinTransform):
            produced.update((t.as_field, f"{t.as_field}_end"))
        elif isinstance(t, AggregateTransform):
            produced.update(t.as_fields)

    enc_types = {enc.field: enc.data_type for enc in spec.encodings}
    for field in enc_types:
        if data and field not in names and field not in produced:
            raise MissingDataError(f"encoding field {field!r} missing from data")

    columns = []
    for name in names:
        dtype = enc_types.get(name)
        if dtype is None:
            dtype = _infer_type(name, data)
        columns.append(Column(name=name, data_type=dtype))

    rows = []
    for i, record in enumerate(data):
        row = []
        for col in columns:
            row.append(_coerce(record.get(col.name), col, i))
        rows.append(tuple(row))
    return columns, rows


def _infer_type(name: str, data: list) -> DataType:
    for row in data:
        value = row.get(name)
        if value is None:
            continue
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return DataType.QUANTITATIVE
        return DataType.NOMINAL
    return DataType.NOMINAL


def _coerce(value: Any, col: Column, row_index: int) -> DataValue:
    if value is None:
        return None
    if col.data_type is DataType.TEMPORAL:
        if isinstance(value, Timestamp):
            return value
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            ts = Timestamp(epoch_ms=int(value), text=str(int(value)))
            return ts
        try:
            return Timestamp.parse(str(value))
        except ValueError as exc:
            raise TransformError(f"row {row_index}: {exc}") from exc
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (int, float)):
        if not math.isfinite(value):
            raise TransformError(f"row {row_index}: non-finite number in {col.name!r}")
        if col.data_type is DataType.NOMINAL:
            return str(value)
        return value
    if col.data_type is DataType.QUANTITATIVE:
        raise TransformError(
            f"row {row_index}: expected a number in {col.name!r}, got {value!r}"
        )
    return str(value)


# -- transforms --------------------------------------------------------------

def _apply_filter(spec: ChartSpec, pred: FilterPredicate, columns, rows):
    names = [c.name for c in columns]
    if pred.field not in names:
        raise TransformError(f"filter references missing field {pred.field!r}")
    idx = names.index(pred.field)

    value = pred.value
    if pred.value_is_param:
        param = spec.param_named(str(value))
        if param is None:
            raise TransformError(f"filter references undeclared param {value!r}")
        value = param.value

    col = columns[idx]
    comparison = pred.op in ("<", "<=", ">", ">=")
    if col.data_type in (DataType.QUANTITATIVE, DataType.TEMPORAL):
        if not isinstance(value, (int, float)):
            raise TransformError(
                f"type mismatch: filter on numeric field {pred.field!r} "
                f"with non-numeric value {value!r}"
            )
    elif comparison:
        raise TransformError(
            f"type mismatch: ordered comparison on non-numeric field {pred.field!r}"
        )

    kept = []
    for row in rows:
        cell = row[idx]
        if cell is None:
            continue
        left = comparable_number(cell)
        if left is not None:
            right = float(value)
        else:
            left, right = str(cell), str(value)
        if _compare(left, right, pred.op):
            kept.append(row)
    return columns, kept


def _compare(left, right, op: str) -> bool:
    if op == "==":
        return left == right
    if op == "!=":
        return left != right
    if op == "<":
        return left < right
    if op == "<=":
        return left <= right
    if op == ">":
        return left > right
    return left >= right


def _apply_bin(transform: BinTransform, columns, rows):
    names = [c.name for c in columns]
    if transform.field not in names:
        raise TransformError(f"bin references missing field {transform.field!r}")
    idx = names.index(transform.field)
    values = [comparable_number(r[idx]) for r in rows]
    finite = [v for v in values if v is not None]
    if not finite:
        raise TransformError(f"bin on {transform.field!r}: no numeric values")
    intervals = bin_intervals(finite, transform.maxbins)

    out_columns = list(columns) + [
        Column(transform.as_field, DataType.QUANTITATIVE),
        Column(f"{transform.as_field}_end", DataType.QUANTITATIVE),
    ]
    out_rows = []
    for row, value in zip(rows, values):
        lo: Optional[float] = None
        hi: Optional[float] = None
        if value is not None:
            for j, interval in enumerate(intervals):
                if interval_contains(interval, value, j == len(intervals) - 1):
                    lo, hi = interval
                    break
        out_rows.append(tuple(row) + (lo, hi))
    return out_columns, out_rows


def _apply_aggregate(transform: AggregateTransform, columns, rows):
    names = [c.name for c in columns]
    for field in transform.groupby:
        if field not in names:
            raise TransformError(f"aggregate groupby references missing field {field!r}")
    for field in transform.fields:
        if field is not None and field not in names:
            raise TransformError(f"aggregate references missing field {field!r}")

    group_idx = [names.index(f) for f in transform.groupby]
    field_idx = [None if f is None else names.index(f) for f in transform.fields]

    order: list = []
    buckets: dict = {}
    for row in rows:
        key = tuple(row[i] for i in group_idx)
        if key not in buckets:
            buckets[key] = []
            order.append(key)
        buckets[key].append(row)

    out_columns = [columns[i] for i in group_idx] + [
        Column(as_field, DataType.QUANTITATIVE) for as_field in transform.as_fields
    ]
    out_rows = []
    for key in order:
        members = buckets[key]
        aggs = []
        for op, idx in zip(transform.ops, field_idx):
            aggs.append(_aggregate(op, members, idx))
        out_rows.append(tuple(key) + tuple(aggs))
    return out_columns, out_rows


def _aggregate(op: str, members: list, idx: Optional[int]):
    if op == "count" and idx is None:
        return len(members)
    values = []
    for row in members:
        num = comparable_number(row[idx])
        if num is not None:
            values.append(num)
    if op == "count":
        return len(values)
    if not values:
        return None  # nulls are excluded; empty groups aggregate to null
    if op == "mean":
        return sum(values) / len(values)
    if op == "sum":
        return sum(values)
    if op == "min":
        return min(values)
    return max(values)
