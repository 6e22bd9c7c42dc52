"""Common English color names for scale hexes via CIELAB nearest-neighbor."""

from .lab import LabColor, hex_to_lab, parse_hex
from .names import NamedColor, default_palette, load_palette, name_colors, nearest_name, palette_hex

__all__ = [
    "LabColor",
    "NamedColor",
    "default_palette",
    "hex_to_lab",
    "load_palette",
    "name_colors",
    "nearest_name",
    "palette_hex",
    "parse_hex",
]
