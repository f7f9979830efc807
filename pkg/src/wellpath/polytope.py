"""Monte Carlo check of the volume of the prefix-sum polytope.

Pi_n is the set of points of [-1, 1]^n whose prefix sums are all
nonnegative; its volume is (2n-1)!!/n!.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, sqrt
from typing import Sequence

import numpy as np

from wellpath.counting import double_factorial
from wellpath.errors import DimensionMismatch

SHARD_SIZE = 1 << 16


@dataclass(frozen=True)
class VolumeEstimate:
    n: int
    samples: int
    hits: int
    estimate: float
    std_error: float
    exact: Fraction

    @property
    def z_score(self) -> float:
        if self.std_error == 0:
            return 0.0 if self.estimate == float(self.exact) else float("inf")
        return (self.estimate - float(self.exact)) / self.std_error


def contains(point: Sequence[float], n: int) -> bool:
    if len(point) != n:
        raise DimensionMismatch(f"expected {n} coordinates, got {len(point)}")
    total = 0.0
    for x in point:
        if not -1.0 <= x <= 1.0:
            return False
        total += x
        if total < 0:
            return False
    return True


def exact_volume(n: int) -> Fraction:
    return Fraction(double_factorial(2 * n - 1), factorial(n))


def _shard_hits(n: int, count: int, seed: int, shard: int) -> int:
    rng = np.random.default_rng(np.random.SeedSequence([seed, shard]))
    x = rng.uniform(-1.0, 1.0, size=(count, n))
    # cumsum in float64 is exact enough: a 3-sigma band absorbs rounding at these n
    return int(np.count_nonzero((np.cumsum(x, axis=1) >= 0).all(axis=1)))


def mc_estimate(n: int, samples: int, seed: int) -> VolumeEstimate:
    """Hit-or-miss estimate of vol(Pi_n) from uniform points in [-1, 1]^n.

    Samples are split into fixed-size shards, each seeded from
    ``(seed, shard index)``, so the result depends only on the arguments.
    """
    if n < 1 or samples < 1:
        raise ValueError("need n >= 1 and samples >= 1")
    seed = int(seed) % (1 << 64)
    hits = 0
    for shard, start in enumerate(range(0, samples, SHARD_SIZE)):
        hits += _shard_hits(n, min(SHARD_SIZE, samples - start), seed, shard)
    cube = 2.0 ** n
    p = hits / samples
    return VolumeEstimate(
        n=n,
        samples=samples,
        hits=hits,
        estimate=cube * p,
        std_error=cube * sqrt(p * (1 - p) / samples),
        exact=exact_volume(n),
    )
