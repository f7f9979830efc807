"""Exact counts of well-labelled paths, up-down permutations and series coefficients.

All arithmetic is on Python integers and ``fractions.Fraction``.  The
generators `enumerate_motzkin` / `enumerate_positive` build paths directly
from their definition and never touch the bijections, so they can serve as
independent oracles for them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterator, Sequence

from wellpath.errors import DomainError, NotAPermutation
from wellpath.paths import WellLabelledPath


def double_factorial(m: int) -> int:
    """m!! = m (m-2) (m-4) ..., with 0!! = (-1)!! = 1."""
    if m < -1:
        raise DomainError(f"{m}!! is undefined")
    return prod(range(m, 0, -2))


def count_motzkin(n: int) -> int:
    """a_n: Motzkin paths of size n, (2n-3)!! for n >= 2 and 0 below."""
    return double_factorial(2 * n - 3) if n >= 2 else 0


def count_positive(n: int) -> int:
    """b_n: positive paths of size n, (2n-1)!! for n >= 1 and b_0 = 0."""
    return double_factorial(2 * n - 1) if n >= 1 else 0


def count_motzkin_refined(n: int, k: int) -> int:
    """Motzkin paths of size n with exactly k horizontal steps."""
    if k < 0 or k > n - 2 or (n - k) % 2:
        return 0
    return (comb(n, k) * comb(n - 2, k) * factorial(k)
            * double_factorial(n - k - 1) * double_factorial(n - k - 3))


def count_positive_refined(n: int, k: int) -> int:
    """Positive paths of size n with exactly k horizontal steps."""
    if k < 0 or k > n - 1:
        return 0
    base = comb(n, k) * comb(n - 1, k) * factorial(k)
    if (n - k) % 2 == 0:
        return base * double_factorial(n - k - 1) ** 2
    return base * double_factorial(n - k) * double_factorial(n - k - 2)


def count_positive_updown(n: int) -> int:
    """Permutations of size n whose every prefix has no more ascents than descents."""
    if n < 1:
        raise DomainError("n must be at least 1")
    if n % 2 == 0:
        return double_factorial(n - 1) ** 2
    return double_factorial(n) * double_factorial(n - 2)


def count_dyck_updown(n: int) -> int:
    """Permutations with a Dyck up-down sequence: (n-1)!! (n-3)!! for even n, else 0."""
    if n < 2:
        raise DomainError("n must be at least 2")
    if n % 2:
        return 0
    return double_factorial(n - 1) * double_factorial(n - 3)


# --- up-down sequences of permutations ------------------------------------------

def _ascent_descent_balance(perm: Sequence[int]) -> list[int]:
    """Descents minus ascents among indices < j, for j = 2..n."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)) or n == 0:
        raise NotAPermutation(f"{tuple(perm)} is not a permutation")
    out, balance = [], 0
    for i in range(n - 1):
        balance += 1 if perm[i] > perm[i + 1] else -1
        out.append(balance)
    return out


def is_positive_updown(perm: Sequence[int]) -> bool:
    return all(x >= 0 for x in _ascent_descent_balance(perm))


def is_dyck_updown(perm: Sequence[int]) -> bool:
    bal = _ascent_descent_balance(perm)
    return bool(bal) and bal[-1] == -1 and all(x >= 0 for x in bal[:-1])


# --- direct generation ------------------------------------------------------------

def _step_words(length: int, motzkin: bool) -> Iterator[tuple[int, ...]]:
    def rec(prefix, height):
        remaining = length - len(prefix)
        if remaining == 0:
            if not motzkin or height == -1:
                yield tuple(prefix)
            return
        for s in (-1, 0, 1):
            h = height + s
            if h < 0 and not (motzkin and remaining == 1 and h == -1):
                continue
            # a Motzkin word must be able to come back down to -1
            if motzkin and h > remaining:
                continue
            prefix.append(s)
            yield from rec(prefix, h)
            prefix.pop()

    yield from rec([], 0)


def _compatible_permutations(steps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    n = len(steps) + 1
    used = [False] * (n + 1)
    labels: list[int] = []

    def rec():
        i = len(labels)
        if i == n:
            yield tuple(labels)
            return
        for x in range(1, n + 1):
            if used[x]:
                continue
            if i:
                s = steps[i - 1]
                if (s == -1 and labels[-1] > x) or (s == 1 and labels[-1] < x):
                    continue
            used[x] = True
            labels.append(x)
            yield from rec()
            labels.pop()
            used[x] = False

    yield from rec()


def enumerate_motzkin(n: int) -> Iterator[WellLabelledPath]:
    """Every well-labelled Motzkin path of size n, each once."""
    if n < 2:
        return
    for steps in _step_words(n - 1, motzkin=True):
        for labels in _compatible_permutations(steps):
            yield WellLabelledPath(steps, labels)


def enumerate_positive(n: int) -> Iterator[WellLabelledPath]:
    """Every well-labelled positive path of size n, each once."""
    if n < 1:
        return
    for steps in _step_words(n - 1, motzkin=False):
        for labels in _compatible_permutations(steps):
            yield WellLabelledPath(steps, labels)


# --- exponential generating functions --------------------------------------------

@dataclass(frozen=True)
class SeriesCoefficients:
    """Coefficients [z^0..z^order] of A(z) = sum a_n z^n/n! and B(z) = sum b_n z^n/n!."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    order: int

    def a_count(self, n: int) -> int:
        return _as_count(self.a[n] * factorial(n))

    def b_count(self, n: int) -> int:
        return _as_count(self.b[n] * factorial(n))


def _as_count(x: Fraction) -> int:
    if x.denominator != 1 or x < 0:
        raise ArithmeticError(f"{x} is not a nonnegative integer")
    return x.numerator


def series_mul(f: Sequence[Fraction], g: Sequence[Fraction], order: int) -> list[Fraction]:
    """Truncated product of two power series given by coefficient lists."""
    out = [Fraction(0)] * (order + 1)
    for i, fi in enumerate(f[: order + 1]):
        if fi:
            for j, gj in enumerate(g[: order + 1 - i]):
                out[i + j] += fi * gj
    return out


def series_coefficients(order: int) -> SeriesCoefficients:
    """Solve A = z^2/2 + zA + A^2/2 and B = z + zB + A + AB by fixed-point iteration.

    Starting from A = B = 0, each pass of either equation fixes at least one
    more coefficient, so ``order + 1`` passes are exact up to z^order.
    """
    N = order
    zero = [Fraction(0)] * (N + 1)
    z = list(zero)
    z2_half = list(zero)
    if N >= 1:
        z[1] = Fraction(1)
    if N >= 2:
        z2_half[2] = Fraction(1, 2)

    A = list(zero)
    for _ in range(N + 1):
        zA = series_mul(z, A, N)
        AA = series_mul(A, A, N)
        A = [c + x + y / 2 for c, x, y in zip(z2_half, zA, AA)]

    B = list(zero)
    for _ in range(N + 1):
        zB = series_mul(z, B, N)
        AB = series_mul(A, B, N)
        B = [c + x + y + w for c, x, y, w in zip(z, zB, A, AB)]

    return SeriesCoefficients(tuple(A), tuple(B), N)
