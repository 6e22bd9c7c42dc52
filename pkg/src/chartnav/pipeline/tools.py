"""Closed tool protocol the tabular agent executes against the host.

The model never runs code; it names one of these actions per turn and the
host applies it to an in-memory table seeded from the chart's transformed
view (including the English color-name column when one exists).

    filter      {"column", "op", "value"}            -> table
    aggregate   {"op", "column", "by"?}              -> scalar or per-group map
    sort        {"column", "order"?}                 -> table
    head        {"n"?}                               -> table
    unique      {"column"}                           -> list
    describe    {}                                   -> per-column summary
    calc        {"expression"} arithmetic over scalars -> number
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass
from typing import Any, Mapping, Optional

from ..chart.csvio import format_cell
from ..chart.model import Timestamp, TransformedView, comparable_number
from ..errors import UnknownColumnError

TOOL_NAMES = ("filter", "aggregate", "sort", "head", "unique", "describe", "calc")

_COMPARE_OPS = ("==", "!=", "<", "<=", ">", ">=")
_AGG_OPS = ("mean", "sum", "count", "min", "max")


@dataclass(frozen=True)
class TableFrame:
    columns: tuple  # of column names
    rows: tuple  # of value tuples

    @classmethod
    def from_view(cls, view: TransformedView, color_names: Optional[Mapping] = None):
        columns = list(view.column_names)
        rows = [list(r) for r in view.rows]
        if color_names is not None and view.row_color_hex is not None:
            columns.append("color")
            for row, hex_color in zip(rows, view.row_color_hex):
                row.append(color_names.get(hex_color, hex_color))
        return cls(columns=tuple(columns), rows=tuple(tuple(r) for r in rows))

    def index(self, column: str) -> int:
        try:
            return self.columns.index(column)
        except ValueError:
            raise UnknownColumnError(f"unknown column {column!r}") from None

    def values(self, column: str) -> list:
        i = self.index(column)
        return [r[i] for r in self.rows]

    def preview(self, limit: int = 10) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows[:limit]:
            lines.append(",".join(format_cell(v) for v in row))
        if len(self.rows) > limit:
            lines.append(f"... ({len(self.rows)} rows total)")
        return "\n".join(lines)


def tool_filter(table: TableFrame, column: str, op: str, value: Any) -> TableFrame:
    if op not in _COMPARE_OPS:
        raise ValueError(f"unsupported filter op {op!r}")
    i = table.index(column)
    kept = []
    for row in table.rows:
        cell = row[i]
        if cell is None:
            continue
        left = comparable_number(cell)
        if left is not None and isinstance(value, (int, float)):
            right: Any = float(value)
        else:
            left, right = _text(cell), _text(value)
        if _apply_op(left, right, op):
            kept.append(row)
    return TableFrame(columns=table.columns, rows=tuple(kept))


def tool_aggregate(table: TableFrame, op: str, column: Optional[str] = None, by: Optional[str] = None):
    if op not in _AGG_OPS:
        raise ValueError(f"unsupported aggregate op {op!r}")
    if by is None:
        return _agg_values(op, table.values(column) if column else [1] * len(table.rows))
    groups: dict = {}
    bi = table.index(by)
    ci = table.index(column) if column else None
    for row in table.rows:
        key = _text(row[bi])
        groups.setdefault(key, []).append(row[ci] if ci is not None else 1)
    return {key: _agg_values(op, vals) for key, vals in groups.items()}


def tool_sort(table: TableFrame, column: str, order: str = "asc") -> TableFrame:
    if order not in ("asc", "desc"):
        raise ValueError(f"order must be asc or desc, got {order!r}")
    i = table.index(column)
    present = [r for r in table.rows if r[i] is not None]
    nulls = [r for r in table.rows if r[i] is None]

    def key(row):
        num = comparable_number(row[i])
        if num is not None:
            return (0, num, "")
        return (1, 0.0, _text(row[i]))

    present.sort(key=key, reverse=(order == "desc"))
    return TableFrame(columns=table.columns, rows=tuple(present + nulls))


def tool_head(table: TableFrame, n: int = 5) -> TableFrame:
    return TableFrame(columns=table.columns, rows=table.rows[: max(0, int(n))])


def tool_unique(table: TableFrame, column: str) -> list:
    seen: list = []
    for value in table.values(column):
        text = _text(value)
        if text not in seen:
            seen.append(text)
    return seen


def tool_describe(table: TableFrame) -> dict:
    out: dict = {"rows": len(table.rows)}
    for column in table.columns:
        values = [v for v in table.values(column) if v is not None]
        numbers = [comparable_number(v) for v in values]
        numbers = [n for n in numbers if n is not None and not isinstance(values[0], Timestamp)]
        if numbers and len(numbers) == len(values):
            out[column] = {
                "count": len(numbers),
                "min": min(numbers),
                "max": max(numbers),
                "mean": sum(numbers) / len(numbers),
            }
        else:
            out[column] = {"count": len(values), "distinct": len({_text(v) for v in values})}
    return out


_CALC_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
    ast.Pow: operator.pow,
    ast.USub: operator.neg,
    ast.UAdd: operator.pos,
}


def tool_calc(expression: str) -> float:
    """Arithmetic over scalar literals only; no names, calls, or attributes."""
    try:
        node = ast.parse(str(expression), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {expression!r}") from exc
    return _eval_node(node.body)


def _eval_node(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return node.value
    if isinstance(node, ast.BinOp) and type(node.op) in _CALC_OPS:
        return _CALC_OPS[type(node.op)](_eval_node(node.left), _eval_node(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _CALC_OPS:
        return _CALC_OPS[type(node.op)](_eval_node(node.operand))
    raise ValueError(f"unsupported expression element: {ast.dump(node)}")


def run_tool(table: TableFrame, action: str, args: dict):
    """Dispatch one agent action; returns (result, next_table)."""
    if action == "filter":
        result = tool_filter(table, args["column"], args.get("op", "=="), args.get("value"))
        return result, result
    if action == "aggregate":
        return tool_aggregate(table, args["op"], args.get("column"), args.get("by")), table
    if action == "sort":
        result = tool_sort(table, args["column"], args.get("order", "asc"))
        return result, result
    if action == "head":
        result = tool_head(table, args.get("n", 5))
        return result, result
    if action == "unique":
        return tool_unique(table, args["column"]), table
    if action == "describe":
        return tool_describe(table), table
    if action == "calc":
        return tool_calc(args.get("expression", args.get("expr", ""))), table
    raise ValueError(f"unknown action {action!r}")


def observation_text(result) -> str:
    if isinstance(result, TableFrame):
        return result.preview()
    if isinstance(result, float):
        return format_cell(result)
    if isinstance(result, dict):
        parts = []
        for key, value in result.items():
            parts.append(f"{key}: {format_cell(value) if isinstance(value, (int, float)) else value}")
        return "; ".join(parts)
    if isinstance(result, list):
        return ", ".join(str(v) for v in result)
    return str(result)


def _agg_values(op: str, raw: list):
    numbers = [comparable_number(v) for v in raw]
    numbers = [n for n in numbers if n is not None]
    if op == "count":
        return len(numbers)
    if not numbers:
        return None
    if op == "mean":
        return sum(numbers) / len(numbers)
    if op == "sum":
        return sum(numbers)
    if op == "min":
        return min(numbers)
    return max(numbers)


def _apply_op(left, right, op: str) -> bool:
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


def _text(value) -> str:
    if isinstance(value, Timestamp):
        return value.text
    return format_cell(value) if isinstance(value, float) else str(value)
