"""Kendall's tau-b rank correlation (tie-corrected).

tau_b = (C - D) / sqrt((C + D + Tx) (C + D + Ty)) where C and D count
concordant and discordant pairs and Tx / Ty count pairs tied only in one
sequence. Computed via sort-and-merge counting rather than the O(n^2)
pair enumeration (which the tests keep as the independent oracle).
"""

from __future__ import annotations

import math

from ..errors import DegenerateRankingError, LengthMismatchError


def kendall_tau(xs, ys) -> float:
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        raise LengthMismatchError(f"{len(xs)} vs {len(ys)} values")
    n = len(xs)
    if n < 2:
        raise LengthMismatchError("kendall_tau needs at least 2 observations")

    pairs = sorted(zip(xs, ys))
    n0 = n * (n - 1) // 2
    n1 = _tie_pairs(x for x, _ in pairs)
    n2 = _tie_pairs(sorted(ys))
    n3 = _tie_pairs(pairs)

    if n0 == n1 or n0 == n2:
        raise DegenerateRankingError("all pairs tied in one sequence; tau-b undefined")

    discordant = _inversions([y for _, y in pairs])
    numerator = n0 - n1 - n2 + n3 - 2 * discordant
    return numerator / math.sqrt((n0 - n1) * (n0 - n2))


def _tie_pairs(values) -> int:
    total = 0
    run = 0
    previous = object()
    for value in list(values) + [object()]:
        if value == previous:
            run += 1
        else:
            total += run * (run - 1) // 2
            run = 1
        previous = value
    return total


def _inversions(values) -> int:
    """Strict inversions (a > b with a before b), via merge counting."""

    def sort(seq):
        if len(seq) <= 1:
            return seq, 0
        mid = len(seq) // 2
        left, inv_l = sort(seq[:mid])
        right, inv_r = sort(seq[mid:])
        merged = []
        inversions = inv_l + inv_r
        i = j = 0
        while i < len(left) and j < len(right):
            if right[j] < left[i]:
                inversions += len(left) - i
                merged.append(right[j])
                j += 1
            else:
                merged.append(left[i])
                i += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inversions

    return sort(list(values))[1]
