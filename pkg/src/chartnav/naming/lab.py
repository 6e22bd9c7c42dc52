"""sRGB hex to CIELAB conversion (D65 white point, 2-degree observer)."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import MalformedHexError

_HEX = re.compile(r"^#?([0-9a-fA-F]{6})$")

# sRGB -> XYZ (D65) matrix rows
_M = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.2126729, 0.7151522, 0.0721750),
    (0.0193339, 0.1191920, 0.9503041),
)
_WHITE = (0.95047, 1.0, 1.08883)
_EPSILON = 216 / 24389
_KAPPA = 24389 / 27


@dataclass(frozen=True)
class LabColor:
    L: float
    a: float
    b: float

    def distance(self, other: "LabColor") -> float:
        """Euclidean distance (CIE76 delta-E)."""
        return (
            (self.L - other.L) ** 2 + (self.a - other.a) ** 2 + (self.b - other.b) ** 2
        ) ** 0.5


def parse_hex(hex_color: str):
    """Validate a 6-digit hex color, returning (r, g, b) in 0..255."""
    m = _HEX.match(hex_color.strip())
    if not m:
        raise MalformedHexError(f"malformed hex color {hex_color!r}")
    h = m.group(1)
    return int(h[0:2], 16), int(h[2:4], 16), int(h[4:6], 16)


def hex_to_lab(hex_color: str) -> LabColor:
    r, g, b = parse_hex(hex_color)
    rgb = [_linearize(c / 255.0) for c in (r, g, b)]
    xyz = [sum(m * c for m, c in zip(row, rgb)) for row in _M]
    fx, fy, fz = (_f(c / w) for c, w in zip(xyz, _WHITE))
    return LabColor(L=116.0 * fy - 16.0, a=500.0 * (fx - fy), b=200.0 * (fy - fz))


def _linearize(channel: float) -> float:
    if channel <= 0.04045:
        return channel / 12.92
    return ((channel + 0.055) / 1.055) ** 2.4


def _f(t: float) -> float:
    if t > _EPSILON:
        return t ** (1.0 / 3.0)
    return (_KAPPA * t + 16.0) / 116.0
