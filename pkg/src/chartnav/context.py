"""A loaded chart with everything derived from it, rebuilt as one unit.

Bundles the parsed spec, raw rows, transformed view with resolved colors,
accessibility tree, and the CSV (with English color names) fed to the
tabular agent. Updating an interactive param produces a fresh context;
callers swap trees atomically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .chart.csvio import export_csv
from .chart.model import ChartSpec, DataValue, TransformedView
from .chart.parser import load_chart, parse_chart_doc
from .chart.view import materialize_view, update_params
from .chart.colors import resolve_colors
from .naming.names import name_colors
from .tree.build import build_tree
from .tree.labels import render_tree_text
from .tree.model import AccessTree


@dataclass(frozen=True)
class ChartContext:
    spec: ChartSpec
    rows: list
    view: TransformedView
    tree: AccessTree
    csv: str
    color_names: Optional[dict]

    @classmethod
    def from_spec(cls, spec: ChartSpec, rows: list) -> "ChartContext":
        view = resolve_colors(spec, materialize_view(spec, rows))
        tree = build_tree(spec, view)
        names = name_colors(view.row_color_hex) if view.row_color_hex else None
        csv = export_csv(view, color_names=names)
        return cls(spec=spec, rows=rows, view=view, tree=tree, csv=csv, color_names=names)

    @classmethod
    def load(cls, path: str) -> "ChartContext":
        spec, rows = load_chart(path)
        return cls.from_spec(spec, rows)

    @classmethod
    def from_doc(cls, doc: dict, rows: Optional[list] = None) -> "ChartContext":
        spec = parse_chart_doc(doc)
        if rows is None:
            rows = spec.data_ref if isinstance(spec.data_ref, list) else []
        return cls.from_spec(spec, rows)

    def with_param(self, name: str, value: DataValue) -> "ChartContext":
        return ChartContext.from_spec(update_params(self.spec, name, value), self.rows)

    def prompt_tree_text(self, max_level: int = 3) -> str:
        """Bounded tree rendering for prompt context (no leaf rows)."""
        return render_tree_text(self.tree, max_level)
