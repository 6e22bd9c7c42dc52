"""Core chart-grammar types: parsed specs and materialized data views.

A ChartSpec is the validated form of a declarative chart document
(a Vega-Lite-compatible subset). A TransformedView is the tabular data the
chart actually depicts: raw rows with all declared transforms and current
interactive-parameter values applied, plus per-row colors once a color
scale has been resolved.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Optional, Sequence, Union


class ChartKind(str, Enum):
    BAR = "bar"
    LINE = "line"
    SCATTER = "scatter"
    CHOROPLETH = "choropleth"

    @property
    def phrase(self) -> str:
        """Noun phrase used in screen-reader text, e.g. 'bar chart'."""
        return {
            ChartKind.BAR: "bar chart",
            ChartKind.LINE: "line chart",
            ChartKind.SCATTER: "scatter plot",
            ChartKind.CHOROPLETH: "choropleth map",
        }[self]


class Channel(str, Enum):
    X = "x"
    Y = "y"
    COLOR = "color"
    DETAIL = "detail"


class DataType(str, Enum):
    QUANTITATIVE = "quantitative"
    NOMINAL = "nominal"
    TEMPORAL = "temporal"


@dataclass(frozen=True)
class Timestamp:
    """A temporal value carrying both epoch milliseconds and its source text."""

    epoch_ms: int
    text: str

    @classmethod
    def parse(cls, raw: str) -> "Timestamp":
        text = str(raw).strip()
        dt: Optional[datetime] = None
        for fmt in ("%Y-%m-%d", "%Y-%m", "%Y", "%Y-%m-%dT%H:%M:%S"):
            try:
                dt = datetime.strptime(text, fmt)
                break
            except ValueError:
                continue
        if dt is None:
            raise ValueError(f"unrecognized timestamp: {raw!r}")
        dt = dt.replace(tzinfo=timezone.utc)
        return cls(epoch_ms=int(dt.timestamp() * 1000), text=text)

    def to_datetime(self) -> datetime:
        return datetime.fromtimestamp(self.epoch_ms / 1000, tz=timezone.utc)

    def __str__(self) -> str:
        return self.text


# A cell value: finite number, text, timestamp, or null.
DataValue = Union[int, float, str, Timestamp, None]


@dataclass(frozen=True)
class EncodingChannel:
    channel: Channel
    field: str
    data_type: DataType
    binned: bool = False
    title: Optional[str] = None
    scale_domain: Optional[tuple] = None
    scale_range: Optional[tuple] = None  # sequential ramp endpoints (two hexes)

    def __post_init__(self):
        if self.channel is Channel.DETAIL and self.data_type is not DataType.NOMINAL:
            raise ValueError("detail channel carries nominal data")
        if self.binned and self.data_type is not DataType.QUANTITATIVE:
            raise ValueError("binned implies quantitative")

    @property
    def display_title(self) -> str:
        return self.title or self.field


@dataclass(frozen=True)
class FilterPredicate:
    """Comparison/equality predicate over one field.

    ``value`` may be a literal or the name of a declared interactive param,
    resolved when the view is materialized.
    """

    field: str
    op: str  # one of ==, !=, <, <=, >, >=
    value: Any
    value_is_param: bool = False

    OPS = ("==", "!=", "<", "<=", ">", ">=")


@dataclass(frozen=True)
class BinTransform:
    field: str
    as_field: str
    maxbins: int = 10


@dataclass(frozen=True)
class AggregateTransform:
    # parallel lists: ops[i] applied to fields[i], written to as_fields[i]
    ops: tuple
    fields: tuple
    as_fields: tuple
    groupby: tuple = ()

    SUPPORTED_OPS = ("mean", "sum", "count", "min", "max")


Transform = Union[FilterPredicate, BinTransform, AggregateTransform]


@dataclass(frozen=True)
class InteractiveParam:
    name: str
    value: DataValue
    minimum: Optional[float] = None
    maximum: Optional[float] = None
    step: Optional[float] = None

    def in_range(self, value: Any) -> bool:
        if not isinstance(value, (int, float)):
            return False
        if self.minimum is not None and value < self.minimum:
            return False
        if self.maximum is not None and value > self.maximum:
            return False
        return True


@dataclass(frozen=True)
class ChartSpec:
    chart_kind: ChartKind
    description: str
    data_ref: Any  # inline row list or file reference string
    encodings: tuple = ()
    transforms: tuple = ()
    params: tuple = ()

    def encoding_for(self, channel: Channel) -> Optional[EncodingChannel]:
        for enc in self.encodings:
            if enc.channel is channel:
                return enc
        return None

    def param_named(self, name: str) -> Optional[InteractiveParam]:
        for p in self.params:
            if p.name == name:
                return p
        return None

    def with_param(self, param: InteractiveParam) -> "ChartSpec":
        new = tuple(param if p.name == param.name else p for p in self.params)
        return replace(self, params=new)


@dataclass(frozen=True)
class Column:
    name: str
    data_type: DataType


@dataclass(frozen=True)
class TransformedView:
    """Post-transform tabular view with optional per-row resolved colors."""

    columns: tuple  # of Column
    rows: tuple  # of row tuples aligned with columns
    row_color_hex: Optional[tuple] = None  # 6-digit hex per row, no '#'

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("row does not conform to column schema")
        if self.row_color_hex is not None and len(self.row_color_hex) != len(self.rows):
            raise ValueError("row_color_hex must align with rows")

    @property
    def column_names(self) -> list:
        return [c.name for c in self.columns]

    def column_index(self, name: str) -> int:
        for i, c in enumerate(self.columns):
            if c.name == name:
                return i
        raise KeyError(name)

    def column_values(self, name: str) -> list:
        i = self.column_index(name)
        return [row[i] for row in self.rows]

    def row_dicts(self) -> list:
        names = self.column_names
        return [dict(zip(names, row)) for row in self.rows]


def comparable_number(value: DataValue) -> Optional[float]:
    """Numeric sort/compare key for a cell, or None for non-numeric values."""
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, Timestamp):
        return float(value.epoch_ms)
    return None
