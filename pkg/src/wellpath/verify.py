"""Exhaustive verification suites shared by the CLI and the acceptance tests.

Each suite returns a list of `Check` records, one per (claim, size).  Path
sides always come from the direct generators in `wellpath.counting` and
tree/matching sides from their own generators, never from a bijection.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from wellpath import bijections as bj
from wellpath.counting import (
    count_dyck_updown,
    count_motzkin,
    count_motzkin_refined,
    count_positive,
    count_positive_refined,
    count_positive_updown,
    double_factorial,
    enumerate_motzkin,
    enumerate_positive,
    is_dyck_updown,
    is_positive_updown,
)
from wellpath.matchings import block_pair_count, enumerate_matchings
from wellpath.paths import final_height, horizontal_step_count
from wellpath.trees import (
    Leaf,
    enumerate_marked_trees,
    enumerate_trees,
    quasi_single_leaf_count,
    single_leaf_count,
)


@dataclass(frozen=True)
class Check:
    name: str
    n: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{status}  {self.name} n={self.n}{extra}"


def _bijective(forward: Callable, inverse: Callable, domain: list, codomain: list) -> tuple[bool, str]:
    images = [forward(x) for x in domain]
    counts = Counter(images)
    dupes = sum(c - 1 for c in counts.values())
    if dupes:
        return False, f"{dupes} repeated images"
    if set(counts) != set(codomain) or len(codomain) != len(set(codomain)):
        return False, f"image has {len(counts)} objects, codomain {len(codomain)}"
    bad = sum(inverse(y) != x for x, y in zip(domain, images))
    bad += sum(forward(inverse(y)) != y for y in codomain)
    if bad:
        return False, f"{bad} round-trip failures"
    return True, f"{len(domain)} objects"


def roundtrip(max_n: int) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        trees = list(enumerate_trees(n))
        marked = list(enumerate_marked_trees(n))
        if n >= 2:
            ok, detail = _bijective(bj.phi, bj.phi_inv, list(enumerate_motzkin(n)), trees)
            out.append(Check("phi", n, ok, detail))
        ok, detail = _bijective(bj.phi_prime, bj.phi_prime_inv, list(enumerate_positive(n)), marked)
        out.append(Check("phi_prime", n, ok, detail))
        ok, detail = _bijective(bj.psi, bj.psi_inv, trees, list(enumerate_matchings(n - 1)))
        out.append(Check("psi", n, ok, detail))
        ok, detail = _bijective(bj.psi_prime, bj.psi_prime_inv, marked, list(enumerate_matchings(n)))
        out.append(Check("psi_prime", n, ok, detail))
    return out


def _count_check(name, n, got, want) -> Check:
    return Check(name, n, got == want, f"got {got}, expected {want}")


def cardinality(max_n: int) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        if n >= 2:
            out.append(_count_check("motzkin paths", n, sum(1 for _ in enumerate_motzkin(n)),
                                    double_factorial(2 * n - 3)))
            out.append(_count_check("trees", n, sum(1 for _ in enumerate_trees(n)),
                                    count_motzkin(n)))
        out.append(_count_check("positive paths", n, sum(1 for _ in enumerate_positive(n)),
                                double_factorial(2 * n - 1)))
        out.append(_count_check("marked trees", n, sum(1 for _ in enumerate_marked_trees(n)),
                                count_positive(n)))
        out.append(_count_check("matchings", n, sum(1 for _ in enumerate_matchings(n)),
                                double_factorial(2 * n - 1)))
    return out


def statistics(max_n: int) -> list[Check]:
    """Refined counts, transport of the horizontal-step statistic, final-height parity."""
    out = []
    for n in range(1, max_n + 1):
        if n >= 2:
            motzkin = list(enumerate_motzkin(n))
            hist = Counter(horizontal_step_count(p) for p in motzkin)
            want = {k: count_motzkin_refined(n, k) for k in range(n + 1)}
            got = {k: hist.get(k, 0) for k in range(n + 1)}
            out.append(Check("motzkin refined counts", n, got == want, f"{got}"))
            bad = 0
            for p in motzkin:
                tree = bj.phi(p)
                h = horizontal_step_count(p)
                bad += not (h == single_leaf_count(tree)
                            == block_pair_count(bj.psi(tree), n, n + 1, 2 * n - 2))
            out.append(Check("motzkin statistic transport", n, bad == 0, f"{bad} mismatches"))

        positive = list(enumerate_positive(n))
        hist = Counter(horizontal_step_count(p) for p in positive)
        want = {k: count_positive_refined(n, k) for k in range(n + 1)}
        got = {k: hist.get(k, 0) for k in range(n + 1)}
        out.append(Check("positive refined counts", n, got == want, f"{got}"))
        bad_stat = bad_parity = 0
        for p in positive:
            mt = bj.phi_prime(p)
            h = horizontal_step_count(p)
            bad_stat += not (h == quasi_single_leaf_count(mt)
                             == block_pair_count(bj.psi_prime(mt), n, n + 1, 2 * n - 1))
            on_leaf = isinstance(mt.marked_vertex(), Leaf)
            bad_parity += (final_height(p) % 2 == 0) != on_leaf
        out.append(Check("positive statistic transport", n, bad_stat == 0, f"{bad_stat} mismatches"))
        out.append(Check("final height parity", n, bad_parity == 0, f"{bad_parity} mismatches"))
    return out


def updown(max_n: int) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        pos = dyck = 0
        for perm in permutations(range(1, n + 1)):
            pos += is_positive_updown(perm)
            if n >= 2:
                dyck += is_dyck_updown(perm)
        out.append(_count_check("positive up-down", n, pos, count_positive_updown(n)))
        if n >= 2:
            out.append(_count_check("dyck up-down", n, dyck, count_dyck_updown(n)))
    return out


def eq3(max_n: int) -> list[Check]:
    """add_step is a bijection B_n x [n+1] x {0,1} -> B_{n+1} + A_{n+1}, for 1 <= n <= max_n."""
    out = []
    for n in range(1, max_n + 1):
        image = Counter(
            bj.add_step(bj.StepAddInput(p, k, b))
            for p in enumerate_positive(n)
            for k in range(1, n + 2)
            for b in (0, 1)
        )
        target = Counter(enumerate_positive(n + 1)) + Counter(enumerate_motzkin(n + 1))
        ok = image == target and max(target.values()) == 1
        ok = ok and 2 * (n + 1) * count_positive(n) == count_positive(n + 1) + count_motzkin(n + 1)
        out.append(Check("add_step bijection", n, ok, f"{sum(image.values())} images"))
    return out


SUITES = {
    "roundtrip": roundtrip,
    "cardinality": cardinality,
    "statistics": statistics,
    "updown": updown,
    "eq3": eq3,
}
