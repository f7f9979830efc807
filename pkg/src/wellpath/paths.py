"""Well-labelled paths: a step word over {-1, 0, +1} and a compatible permutation.

A path of size ``n`` has ``n - 1`` steps and ``n`` labels.  Step ``-1``
forces an ascent of the labels, step ``+1`` a descent, step ``0`` is free.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from wellpath.errors import (
    InvalidStep,
    LengthMismatch,
    NotAPermutation,
    StepLabelConflict,
)

STEPS = (-1, 0, 1)


class PathClass(enum.Enum):
    POSITIVE = "positive"
    MOTZKIN = "motzkin"
    NEITHER = "neither"


def _check_permutation(labels: Sequence[int]) -> None:
    n = len(labels)
    if n == 0 or sorted(labels) != list(range(1, n + 1)):
        raise NotAPermutation(f"{tuple(labels)} is not a permutation of 1..{n}")


@dataclass(frozen=True)
class WellLabelledPath:
    steps: tuple[int, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        steps, labels = self.steps, self.labels
        if len(labels) != len(steps) + 1:
            raise LengthMismatch(
                f"{len(steps)} steps need {len(steps) + 1} labels, got {len(labels)}"
            )
        for s in steps:
            if s not in STEPS:
                raise InvalidStep(f"step {s!r} not in {{-1, 0, 1}}")
        _check_permutation(labels)
        for i, s in enumerate(steps):
            if s == -1 and labels[i] > labels[i + 1]:
                raise StepLabelConflict(i + 1)
            if s == 1 and labels[i] < labels[i + 1]:
                raise StepLabelConflict(i + 1)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __str__(self):
        word = "".join({-1: "D", 0: "H", 1: "U"}[s] for s in self.steps)
        return f"({word or '-'}, {''.join(map(str, self.labels))})"


def validate_path(steps: Sequence[int], labels: Sequence[int]) -> WellLabelledPath:
    """Build a path from raw input, raising on anything invalid.

    Nothing is repaired: a wrong length, a non-permutation, or a step that
    contradicts its labels raises the matching error from `wellpath.errors`.
    """
    return WellLabelledPath(tuple(int(s) for s in steps), tuple(int(x) for x in labels))


def prefix_sums(path: WellLabelledPath) -> list[int]:
    return list(accumulate(path.steps))


def classify(path: WellLabelledPath) -> PathClass:
    sums = prefix_sums(path)
    if all(h >= 0 for h in sums):
        return PathClass.POSITIVE
    # Motzkin: nonnegative up to j = n - 2, total exactly -1
    if sums[-1] == -1 and all(h >= 0 for h in sums[:-1]):
        return PathClass.MOTZKIN
    return PathClass.NEITHER


def is_motzkin(path: WellLabelledPath) -> bool:
    return classify(path) is PathClass.MOTZKIN


def is_positive(path: WellLabelledPath) -> bool:
    return classify(path) is PathClass.POSITIVE


def horizontal_step_count(path: WellLabelledPath) -> int:
    return path.steps.count(0)


def final_height(path: WellLabelledPath) -> int:
    return sum(path.steps)


def reverse_path(path: WellLabelledPath) -> WellLabelledPath:
    """Read the path backward: labels reversed, steps reversed and negated."""
    return WellLabelledPath(
        tuple(-s for s in reversed(path.steps)), tuple(reversed(path.labels))
    )


def updown_word(perm: Sequence[int]) -> tuple[int, ...]:
    """-1 at each ascent, +1 at each descent."""
    return tuple(-1 if a < b else 1 for a, b in zip(perm, perm[1:]))


def path_from_permutation(perm: Sequence[int]) -> WellLabelledPath:
    """The unique path with no horizontal step carrying ``perm`` as labels."""
    perm = tuple(int(x) for x in perm)
    _check_permutation(perm)
    return WellLabelledPath(updown_word(perm), perm)
