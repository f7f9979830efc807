"""Perfect matchings, i.e. fixed-point-free involutions on {1, ..., 2m}."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from wellpath.errors import BadRange, CoverageGap, FixedPoint, NotAnInvolution


@dataclass(frozen=True)
class Matching:
    """Stored as a partner array: ``partner[i - 1]`` is the partner of ``i``."""

    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        if len(p) % 2:
            raise CoverageGap(f"odd ground set size {len(p)}")
        for i, j in enumerate(p, start=1):
            if not 1 <= j <= len(p):
                raise CoverageGap(f"partner {j} of {i} outside 1..{len(p)}")
            if j == i:
                raise FixedPoint(f"{i} is a fixed point")
            if p[j - 1] != i:
                raise NotAnInvolution(f"{i} -> {j} -> {p[j - 1]}")

    @property
    def m(self) -> int:
        return len(self.partner) // 2

    def __call__(self, i: int) -> int:
        return self.partner[i - 1]

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.partner, start=1) if i < j]

    def __str__(self):
        return "".join(f"({i} {j})" for i, j in self.pairs()) or "()"


def from_partner_map(partner: dict[int, int]) -> Matching:
    return Matching(tuple(partner[i] for i in range(1, len(partner) + 1)))


def validate_matching(pairs: Iterable[tuple[int, int]]) -> Matching:
    """Check that ``pairs`` covers {1..2m} exactly once with no fixed point."""
    partner: dict[int, int] = {}
    for pair in pairs:
        i, j = (int(x) for x in pair)
        if i == j:
            raise FixedPoint(f"pair ({i}, {j}) is a fixed point")
        for x, y in ((i, j), (j, i)):
            if x in partner:
                raise NotAnInvolution(f"{x} is paired twice")
            partner[x] = y
    size = len(partner)
    if sorted(partner) != list(range(1, size + 1)):
        missing = sorted(set(range(1, size + 1)) - set(partner))
        raise CoverageGap(f"pairs do not cover 1..{size}; missing {missing}")
    return from_partner_map(partner)


def enumerate_matchings(m: int) -> Iterator[Matching]:
    """All matchings on [2m]: pair the smallest free element with each larger one."""
    partner = [0] * (2 * m)

    def rec(free):
        if not free:
            yield Matching(tuple(partner))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            partner[a - 1], partner[b - 1] = b, a
            yield from rec(free[1:idx] + free[idx + 1:])

    yield from rec(list(range(1, 2 * m + 1)))


def random_matching(m: int, seed: int | random.Random) -> Matching:
    """Uniform matching on [2m].

    The smallest unmatched element is paired with a uniformly chosen other
    unmatched element; there are (2m-1)(2m-3)...1 equally likely outcomes.
    ``seed`` is an integer (fresh Mersenne Twister) or a ``random.Random``
    to draw from an existing stream.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    free = list(range(1, 2 * m + 1))
    partner = [0] * (2 * m)
    while free:
        a = free.pop(0)
        b = free.pop(rng.randrange(len(free)))
        partner[a - 1], partner[b - 1] = b, a
    return Matching(tuple(partner))


def block_pair_count(matching: Matching, low_max: int, high_min: int, high_max: int) -> int:
    """Number of pairs (i, j) with i <= low_max and high_min <= j <= high_max.

    An empty high block (``high_min == high_max + 1``) is allowed and gives 0.
    """
    if not (1 <= low_max < high_min <= high_max + 1 and high_max <= len(matching.partner)):
        raise BadRange(f"bad blocks [1,{low_max}] / [{high_min},{high_max}]")
    return sum(1 for i in range(1, low_max + 1) if high_min <= matching(i) <= high_max)
