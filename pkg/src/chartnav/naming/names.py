"""Nearest common English color name via CIELAB distance.

The shipped palette is the extended CSS named-color list. Several CSS names
are spelling aliases of the same hex (gray/grey, aqua/cyan, ...); the loader
keeps only the first of each so that every loaded palette hex maps back to
its own name. Ties on distance break by palette order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional

from .lab import LabColor, hex_to_lab, parse_hex


@dataclass(frozen=True)
class NamedColor:
    name: str
    hex: str  # 6 lowercase hex digits, no '#'

    def lab(self) -> LabColor:
        return hex_to_lab(self.hex)


def load_palette(lines: Iterable, dedupe_hex: bool = True) -> list:
    """Parse "name,hex" lines into NamedColor entries."""
    seen = set()
    palette = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, _, hex_part = line.partition(",")
        r, g, b = parse_hex(hex_part.strip())
        hex_norm = f"{r:02x}{g:02x}{b:02x}"
        if dedupe_hex and hex_norm in seen:
            continue
        seen.add(hex_norm)
        palette.append(NamedColor(name=name.strip(), hex=hex_norm))
    return palette


@lru_cache(maxsize=1)
def default_palette() -> tuple:
    text = resources.files("chartnav.data").joinpath("css_colors.csv").read_text("utf-8")
    return tuple(load_palette(text.splitlines()))


def palette_hex(name: str, palette: Optional[tuple] = None) -> str:
    for entry in palette or default_palette():
        if entry.name == name:
            return entry.hex
    raise KeyError(name)


def nearest_name(hex_color: str, palette: Optional[Iterable] = None) -> str:
    """Name of the palette entry nearest in Lab space; first entry wins ties."""
    entries = list(palette) if palette is not None else list(default_palette())
    if not entries:
        raise ValueError("palette must not be empty")
    target = hex_to_lab(hex_color)
    best_name = entries[0].name
    best_dist = target.distance(_lab_of(entries[0].hex))
    for entry in entries[1:]:
        d = target.distance(_lab_of(entry.hex))
        if d < best_dist:
            best_dist = d
            best_name = entry.name
    return best_name


def name_colors(hexes: Iterable, palette: Optional[Iterable] = None) -> dict:
    """Map each distinct hex to its nearest name (for CSV color columns)."""
    entries = tuple(palette) if palette is not None else None
    return {h: nearest_name(h, entries) for h in dict.fromkeys(hexes)}


@lru_cache(maxsize=1024)
def _lab_of(hex_color: str) -> LabColor:
    return hex_to_lab(hex_color)
