"""Resolve a chart's color encoding to one hex value per view row.

Categorical scales assign palette colors by domain order; sequential scales
linearly interpolate two ramp endpoint hexes in sRGB. Both are pure
functions of (spec, view), so repeated calls are byte-identical.
"""

from __future__ import annotations

from importlib import resources
from typing import Optional

from .model import Channel, ChartSpec, DataType, TransformedView, comparable_number

DEFAULT_RAMP = ("#f7fbff", "#08306b")
NULL_COLOR = "cccccc"


def default_categorical_palette() -> list:
    """The fixed 10-color categorical palette shipped with the package."""
    text = resources.files("chartnav.data").joinpath("palette10.csv").read_text("utf-8")
    return [line.strip().lstrip("#").lower() for line in text.splitlines() if line.strip()]


def resolve_colors(spec: ChartSpec, view: TransformedView) -> TransformedView:
    """Attach row colors to the view; no color encoding returns it unchanged."""
    enc = spec.encoding_for(Channel.COLOR)
    if enc is None:
        return view
    idx = view.column_index(enc.field)
    values = [row[idx] for row in view.rows]

    if enc.data_type is DataType.NOMINAL:
        hexes = _categorical(values, enc.scale_domain)
    else:
        hexes = _sequential(values, enc.scale_domain, enc.scale_range)
    return TransformedView(columns=view.columns, rows=view.rows, row_color_hex=tuple(hexes))


def _categorical(values, domain) -> list:
    palette = default_categorical_palette()
    if domain is not None:
        ordered = [str(v) for v in domain]
    else:
        ordered = []
        for v in values:
            if v is not None and str(v) not in ordered:
                ordered.append(str(v))
    assignment = {cat: palette[i % len(palette)] for i, cat in enumerate(ordered)}
    return [NULL_COLOR if v is None else assignment.get(str(v), NULL_COLOR) for v in values]


def _sequential(values, domain, ramp) -> list:
    numbers = [comparable_number(v) for v in values]
    finite = [n for n in numbers if n is not None]
    if domain is not None and len(domain) == 2:
        lo, hi = float(domain[0]), float(domain[1])
    elif finite:
        lo, hi = min(finite), max(finite)
    else:
        lo, hi = 0.0, 1.0
    start, end = ramp if ramp else DEFAULT_RAMP
    r0, g0, b0 = _split(start)
    r1, g1, b1 = _split(end)

    out = []
    for n in numbers:
        if n is None:
            out.append(NULL_COLOR)
            continue
        t = 0.0 if hi == lo else (n - lo) / (hi - lo)
        t = min(1.0, max(0.0, t))
        r = round(r0 + (r1 - r0) * t)
        g = round(g0 + (g1 - g0) * t)
        b = round(b0 + (b1 - b0) * t)
        out.append(f"{r:02x}{g:02x}{b:02x}")
    return out


def _split(hex_color: str):
    h = hex_color.lstrip("#")
    return int(h[0:2], 16), int(h[2:4], 16), int(h[4:6], 16)
