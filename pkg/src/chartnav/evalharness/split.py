"""Stratified random splitting of the benchmark corpus."""

from __future__ import annotations

import random

from ..errors import InsufficientItemsError


def stratified_split(items, ratio: float, seed: int):
    """Split into (test, validation) preserving per-type proportions.

    Deterministic per seed; per-type test counts are round(ratio * n), so
    proportions hold within one item per type. Disjoint and exhaustive.
    """
    if not 0.0 <= ratio <= 1.0:
        raise ValueError(f"ratio must be within [0, 1], got {ratio}")

    groups: dict = {}
    order: list = []
    for item in items:
        key = item.type_label
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(item)

    for key, members in groups.items():
        if len(members) < 2:
            raise InsufficientItemsError(
                f"type {key.value!r} has {len(members)} items, needs at least 2"
            )

    rng = random.Random(seed)
    test: list = []
    validation: list = []
    for key in order:
        members = list(groups[key])
        rng.shuffle(members)
        n_test = round(ratio * len(members))
        test.extend(members[:n_test])
        validation.extend(members[n_test:])
    return test, validation
