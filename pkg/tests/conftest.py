from __future__ import annotations

import json
from pathlib import Path

import pytest

from chartnav.chart import load_chart, materialize_view, resolve_colors
from chartnav.tree import build_tree

CHART_DIR = Path(__file__).resolve().parent.parent / "src" / "chartnav" / "data" / "charts"
TRANSCRIPT_DIR = Path(__file__).resolve().parent.parent / "src" / "chartnav" / "data" / "transcripts"

CHART_NAMES = ("bar", "line", "scatter", "map")


def load_fixture(name: str):
    spec, rows = load_chart(str(CHART_DIR / f"{name}.json"))
    view = resolve_colors(spec, materialize_view(spec, rows))
    return spec, rows, view


@pytest.fixture(scope="session")
def charts():
    """name -> (spec, raw_rows, view, tree) for the four reference charts."""
    out = {}
    for name in CHART_NAMES:
        spec, rows, view = load_fixture(name)
        out[name] = (spec, rows, view, build_tree(spec, view))
    return out


@pytest.fixture(scope="session")
def map_chart(charts):
    return charts["map"]


@pytest.fixture(scope="session")
def line_chart(charts):
    return charts["line"]


@pytest.fixture(scope="session")
def bar_chart(charts):
    return charts["bar"]


@pytest.fixture(scope="session")
def scatter_chart(charts):
    return charts["scatter"]


@pytest.fixture(scope="session")
def scatter_raw():
    rows = json.loads((CHART_DIR / "scatter_data.json").read_text())
    return rows
