from __future__ import annotations

import random

import pytest

from chartnav.errors import MalformedHexError
from chartnav.naming import (
    default_palette,
    hex_to_lab,
    load_palette,
    name_colors,
    nearest_name,
    palette_hex,
)


def reference_lab(hex_color: str):
    """Independent textbook sRGB -> D65 XYZ -> Lab pipeline (oracle)."""
    h = hex_color.lstrip("#")
    rgb = [int(h[i : i + 2], 16) / 255.0 for i in (0, 2, 4)]
    lin = [(c / 12.92) if c <= 0.04045 else ((c + 0.055) / 1.055) ** 2.4 for c in rgb]
    r, g, b = lin
    x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b
    y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b
    z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b

    def f(t):
        return t ** (1 / 3) if t > 216 / 24389 else ((24389 / 27) * t + 16) / 116

    fx, fy, fz = f(x / 0.95047), f(y / 1.0), f(z / 1.08883)
    return 116 * fy - 16, 500 * (fx - fy), 200 * (fy - fz)


# -- hex_to_lab ---------------------------------------------------------------

def test_white_point():
    lab = hex_to_lab("#FFFFFF")
    assert lab.L == pytest.approx(100.0, abs=0.01)
    assert abs(lab.a) < 0.01
    assert abs(lab.b) < 0.01


def test_black():
    assert hex_to_lab("#000000").L == pytest.approx(0.0, abs=1e-9)


def test_red_matches_reference_pipeline():
    lab = hex_to_lab("#FF0000")
    L, a, b = reference_lab("#FF0000")
    assert lab.L == pytest.approx(L, abs=0.05)
    assert lab.a == pytest.approx(a, abs=0.05)
    assert lab.b == pytest.approx(b, abs=0.05)


def test_random_hexes_match_reference_pipeline():
    rng = random.Random(3)
    for _ in range(25):
        hex_color = f"{rng.randrange(1 << 24):06x}"
        lab = hex_to_lab(hex_color)
        L, a, b = reference_lab(hex_color)
        assert lab.L == pytest.approx(L, abs=0.05)
        assert lab.a == pytest.approx(a, abs=0.05)
        assert lab.b == pytest.approx(b, abs=0.05)


def test_malformed_hex():
    for bad in ("fff", "#12345", "not-a-color", "#gggggg"):
        with pytest.raises(MalformedHexError):
            hex_to_lab(bad)


# -- nearest_name --------------------------------------------------------------

def test_palette_hex_maps_to_own_name():
    for entry in default_palette():
        assert nearest_name(entry.hex) == entry.name


def test_steelblue_self_match():
    assert nearest_name(palette_hex("steelblue")) == "steelblue"


def test_random_hexes_match_exhaustive_scan():
    palette = default_palette()
    rng = random.Random(99)
    for _ in range(50):
        hex_color = f"{rng.randrange(1 << 24):06x}"
        target = hex_to_lab(hex_color)
        # exhaustive linear-scan oracle, first-entry tie break
        best_name, best_d = None, None
        for entry in palette:
            d = target.distance(hex_to_lab(entry.hex))
            if best_d is None or d < best_d:
                best_name, best_d = entry.name, d
        assert nearest_name(hex_color) == best_name


def test_nearest_distance_is_minimal():
    palette = default_palette()
    rng = random.Random(4)
    for _ in range(20):
        hex_color = f"{rng.randrange(1 << 24):06x}"
        name = nearest_name(hex_color)
        chosen = next(e for e in palette if e.name == name)
        d_chosen = hex_to_lab(hex_color).distance(hex_to_lab(chosen.hex))
        for entry in palette:
            assert d_chosen <= hex_to_lab(hex_color).distance(hex_to_lab(entry.hex)) + 1e-12


def test_tie_breaks_by_palette_order():
    palette = load_palette(["first,00ff00", "second,00ff00"], dedupe_hex=False)
    assert nearest_name("00ff00", palette) == "first"


def test_shipped_file_has_148_entries_loader_dedupes():
    from importlib import resources

    text = resources.files("chartnav.data").joinpath("css_colors.csv").read_text("utf-8")
    lines = [l for l in text.splitlines() if l.strip()]
    assert len(lines) == 148
    palette = default_palette()
    hexes = [e.hex for e in palette]
    assert len(hexes) == len(set(hexes))  # spelling aliases removed on load


def test_name_colors_covers_all_input_hexes(map_chart):
    _, _, view, _ = map_chart
    names = name_colors(view.row_color_hex)
    assert set(names) == set(view.row_color_hex)
    assert all(isinstance(n, str) and n for n in names.values())
