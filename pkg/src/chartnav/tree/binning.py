"""Nice-step interval binning for numeric group nodes.

Intervals are equal-width, aligned to steps of 1, 2, or 5 times a power of
ten, cover the full data extent, and are half-open [lo, hi) except for the
last, which is closed so the maximum always lands in a bin.
"""

from __future__ import annotations

import math

from ..errors import EmptyInputError


def nice_step(raw: float) -> float:
    """Round a raw step up/down to the nearest 1, 2, or 5 x 10^k value."""
    if raw <= 0:
        return 1.0
    exponent = math.floor(math.log10(raw))
    best = None
    for exp in (exponent - 1, exponent, exponent + 1):
        for mantissa in (1.0, 2.0, 5.0):
            candidate = mantissa * (10.0 ** exp)
            if best is None or abs(candidate - raw) < abs(best - raw):
                best = candidate
    return best


def bin_intervals(values, target_bins: int = 8):
    """Split values into nice-step [lo, hi) intervals covering min..max.

    The step is the 1/2/5 x 10^k candidate whose resulting bin count is
    nearest ``target_bins`` (ties prefer the larger step, i.e. fewer bins).
    All values identical yields a single degenerate [v, v] interval.
    """
    finite = [v for v in values if v is not None and math.isfinite(v)]
    if not finite:
        raise EmptyInputError("bin_intervals requires at least one finite value")
    lo, hi = min(finite), max(finite)
    if target_bins < 1:
        target_bins = 1
    if lo == hi:
        return [(lo, hi)]

    raw = (hi - lo) / target_bins
    exponent = math.floor(math.log10(raw))
    candidates = set()
    for exp in (exponent - 1, exponent, exponent + 1):
        for mantissa in (1.0, 2.0, 5.0):
            candidates.add(mantissa * (10.0 ** exp))

    def count_for(step: float) -> int:
        start = math.floor(lo / step) * step
        end = math.ceil(hi / step) * step
        return max(1, round((end - start) / step))

    step = min(candidates, key=lambda s: (abs(count_for(s) - target_bins), -s))
    start = math.floor(lo / step) * step
    end = math.ceil(hi / step) * step
    n = max(1, round((end - start) / step))

    intervals = []
    for i in range(n):
        a = start + i * step
        b = start + (i + 1) * step
        intervals.append((_snap(a, step), _snap(b, step)))
    return intervals


def interval_contains(interval, value: float, is_last: bool) -> bool:
    """Membership under the half-open edge rule (last interval closed)."""
    lo, hi = interval
    if lo == hi:
        return value == lo
    if is_last:
        return lo <= value <= hi
    return lo <= value < hi


def _snap(x: float, step: float) -> float:
    # Kill float noise from repeated addition so boundaries render cleanly.
    digits = max(0, -math.floor(math.log10(step)) + 2)
    return round(x, digits)
