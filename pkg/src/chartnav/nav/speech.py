"""Spoken key-press instructions with run-length coalescing.

Repeated presses merge into one sentence ("Press the right arrow key
3 times."). Repeat counts are always rendered as numerals.
"""

from __future__ import annotations

from dataclasses import dataclass

ALREADY_THERE = "You are already there."

_KEY_NAMES = {
    "up": "the up arrow key",
    "down": "the down arrow key",
    "left": "the left arrow key",
    "right": "the right arrow key",
    "t": "the t key",
}


@dataclass(frozen=True)
class InstructionScript:
    steps: tuple  # of (key, repeat_count), consecutive keys differ
    spoken: str

    def expand(self) -> list:
        """Back to the flat move list the script was coalesced from."""
        moves = []
        for key, count in self.steps:
            moves.extend([key] * count)
        return moves


def coalesce(moves) -> InstructionScript:
    steps: list = []
    for key in moves:
        if steps and steps[-1][0] == key:
            steps[-1] = (key, steps[-1][1] + 1)
        else:
            steps.append((key, 1))

    if not steps:
        return InstructionScript(steps=(), spoken=ALREADY_THERE)

    sentences = []
    for key, count in steps:
        name = _KEY_NAMES[getattr(key, "value", key)]
        if count == 1:
            sentences.append(f"Press {name}.")
        else:
            sentences.append(f"Press {name} {count} times.")
    return InstructionScript(steps=tuple(steps), spoken=" ".join(sentences))
