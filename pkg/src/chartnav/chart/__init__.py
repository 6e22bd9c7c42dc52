"""Chart grammar model: spec parsing, view materialization, colors, CSV."""

from .colors import default_categorical_palette, resolve_colors
from .csvio import export_csv, format_cell
from .model import (
    AggregateTransform,
    BinTransform,
    Channel,
    ChartKind,
    ChartSpec,
    Column,
    DataType,
    DataValue,
    EncodingChannel,
    FilterPredicate,
    InteractiveParam,
    Timestamp,
    TransformedView,
)
from .parser import load_chart, parse_chart_doc, parse_chart_spec
from .view import materialize_view, sort_view, update_params

__all__ = [
    "AggregateTransform",
    "BinTransform",
    "Channel",
    "ChartKind",
    "ChartSpec",
    "Column",
    "DataType",
    "DataValue",
    "EncodingChannel",
    "FilterPredicate",
    "InteractiveParam",
    "Timestamp",
    "TransformedView",
    "default_categorical_palette",
    "export_csv",
    "format_cell",
    "load_chart",
    "materialize_view",
    "parse_chart_doc",
    "parse_chart_spec",
    "resolve_colors",
    "sort_view",
    "update_params",
]
