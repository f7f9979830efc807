"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line (shown in the pytest terminal summary)
and then asserts at the stated tolerance.
"""
import random
import time
from collections import Counter
from itertools import permutations

from scipy.stats import chisquare

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
    series_coefficients,
)
from wellpath.matchings import block_pair_count, enumerate_matchings, random_matching
from wellpath.paths import final_height, horizontal_step_count
from wellpath.polytope import exact_volume, mc_estimate
from wellpath.trees import (
    Leaf,
    enumerate_marked_trees,
    enumerate_trees,
    quasi_single_leaf_count,
    single_leaf_count,
)


def test_1_cardinalities(report):
    t0 = time.perf_counter()
    motzkin = {n: sum(1 for _ in enumerate_motzkin(n)) for n in range(2, 8)}
    positive = {n: sum(1 for _ in enumerate_positive(n)) for n in range(1, 8)}
    elapsed = time.perf_counter() - t0
    ok = (all(motzkin[n] == double_factorial(2 * n - 3) for n in motzkin)
          and all(positive[n] == double_factorial(2 * n - 1) for n in positive)
          and elapsed < 30)
    report("1 cardinalities", ok,
           f"|A_7|={motzkin[7]} |B_7|={positive[7]} in {elapsed:.1f}s (<30s)")
    assert ok


def _bijection_ok(forward, inverse, domain, codomain):
    images = [forward(x) for x in domain]
    return (len(set(images)) == len(images) == len(codomain)
            and set(images) == set(codomain)
            and all(inverse(y) == x for x, y in zip(domain, images))
            and all(forward(inverse(y)) == y for y in codomain))


def test_2_bijection_round_trips(report):
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 7):
        trees = list(enumerate_trees(n))
        marked = list(enumerate_marked_trees(n))
        if n >= 2 and not _bijection_ok(bj.phi, bj.phi_inv, list(enumerate_motzkin(n)), trees):
            failures.append(f"phi n={n}")
        if not _bijection_ok(bj.phi_prime, bj.phi_prime_inv, list(enumerate_positive(n)), marked):
            failures.append(f"phi' n={n}")
        if not _bijection_ok(bj.psi, bj.psi_inv, trees, list(enumerate_matchings(n - 1))):
            failures.append(f"psi n={n}")
        if not _bijection_ok(bj.psi_prime, bj.psi_prime_inv, marked, list(enumerate_matchings(n))):
            failures.append(f"psi' n={n}")
    psi5 = {bj.psi(t) for t in enumerate_trees(5)}
    if psi5 != set(enumerate_matchings(4)) or len(psi5) != 105:
        failures.append("psi over size-5 trees")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    report("2 bijection round trips", ok,
           f"phi, phi', psi, psi' on sizes <= 6, {elapsed:.1f}s (<60s) {failures or ''}")
    assert ok


def test_3_refined_counts(report):
    bad = []
    for n in range(1, 8):
        if n >= 2:
            hist = Counter(horizontal_step_count(p) for p in enumerate_motzkin(n))
            bad += [("A", n, k) for k in range(n + 1) if hist.get(k, 0) != count_motzkin_refined(n, k)]
        hist = Counter(horizontal_step_count(p) for p in enumerate_positive(n))
        bad += [("B", n, k) for k in range(n + 1) if hist.get(k, 0) != count_positive_refined(n, k)]
    report("3 refined counts", not bad, f"a_(n,k), b_(n,k) for n <= 7 {bad or ''}")
    assert not bad


def test_4_statistic_transport(report):
    bad = 0
    checked = 0
    for n in range(2, 7):
        for p in enumerate_motzkin(n):
            tree = bj.phi(p)
            bad += not (horizontal_step_count(p) == single_leaf_count(tree)
                        == block_pair_count(bj.psi(tree), n, n + 1, 2 * n - 2))
            checked += 1
    for n in range(1, 7):
        for p in enumerate_positive(n):
            mt = bj.phi_prime(p)
            bad += not (horizontal_step_count(p) == quasi_single_leaf_count(mt)
                        == block_pair_count(bj.psi_prime(mt), n, n + 1, 2 * n - 1))
            checked += 1
    report("4 statistic transport", bad == 0, f"{checked} paths, {bad} mismatches")
    assert bad == 0


def test_5_updown_permutations(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 9):
        perms = list(permutations(range(1, n + 1)))
        if sum(map(is_positive_updown, perms)) != count_positive_updown(n):
            bad.append(("positive", n))
        if n >= 2 and sum(map(is_dyck_updown, perms)) != count_dyck_updown(n):
            bad.append(("dyck", n))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5
    report("5 up-down permutations", ok, f"S_1..S_8 brute force in {elapsed:.2f}s (<5s) {bad or ''}")
    assert ok


def test_6_step_adding_identity(report):
    bad = []
    for n in range(1, 6):
        image = Counter(bj.add_step(bj.StepAddInput(p, k, b))
                        for p in enumerate_positive(n)
                        for k in range(1, n + 2) for b in (0, 1))
        target = Counter(enumerate_positive(n + 1)) + Counter(enumerate_motzkin(n + 1))
        if image != target or max(target.values()) != 1:
            bad.append(n)
        if 2 * (n + 1) * count_positive(n) != count_positive(n + 1) + count_motzkin(n + 1):
            bad.append(n)
    report("6 step-adding identity", not bad, f"multiset equality for n = 1..5 {bad or ''}")
    assert not bad


def test_7_series_consistency(report):
    s = series_coefficients(21)
    ok = all(s.a_count(n) == count_motzkin(n) and s.b_count(n) == count_positive(n)
             for n in range(21))
    ok = ok and all(s.b_count(n) == s.a_count(n + 1) for n in range(21))
    report("7 series consistency", ok, "n! [z^n] A and B vs closed forms, n <= 20; b_n = a_(n+1)")
    assert ok


def test_8_final_height_parity(report):
    bad = 0
    for n in range(1, 7):
        for p in enumerate_positive(n):
            on_leaf = isinstance(bj.phi_prime(p).marked_vertex(), Leaf)
            bad += (final_height(p) % 2 == 0) != on_leaf
    report("8 final-height parity", bad == 0, f"{bad} violations over sizes <= 6")
    assert bad == 0


def test_9_volume(report):
    details, ok = [], True
    for n in range(1, 7):
        t0 = time.perf_counter()
        est = mc_estimate(n, 1_000_000, seed=20240 + n)
        if abs(est.z_score) > 3:
            est = mc_estimate(n, 1_000_000, seed=90000 + n)
        elapsed = time.perf_counter() - t0
        good = abs(est.z_score) <= 3 and elapsed < 10
        ok = ok and good
        details.append(f"n={n}: {est.estimate:.4f} vs {float(exact_volume(n)):.4f} (z={est.z_score:+.2f})")
    report("9 polytope volume", ok, "; ".join(details))
    assert ok


def test_10_sampler_uniformity(report):
    n, samples = 3, 150_000
    rng = random.Random(31337)
    counts = Counter(bj.phi_prime_inv(bj.psi_prime_inv(random_matching(n, rng)))
                     for _ in range(samples))
    paths = list(enumerate_positive(n))
    observed = [counts[p] for p in paths]
    worst = max(abs(c / samples * 15 - 1) for c in observed)
    pvalue = chisquare(observed).pvalue
    ok = len(paths) == 15 and set(counts) == set(paths) and worst <= 0.15 and pvalue > 0.001
    report("10 sampler uniformity", ok, f"max relative deviation {worst:.3f} (<=0.15), chi-square p={pvalue:.3f}")
    assert ok
