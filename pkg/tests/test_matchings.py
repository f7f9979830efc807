import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.stats import chisquare

from strategies import matchings
from wellpath.counting import double_factorial
from wellpath.errors import BadRange, CoverageGap, FixedPoint, NotAnInvolution
from wellpath.matchings import (
    Matching,
    block_pair_count,
    enumerate_matchings,
    random_matching,
    validate_matching,
)


def test_validate_examples():
    assert validate_matching({(1, 2)}).partner == (2, 1)
    assert validate_matching({(1, 3), (2, 4)}).partner == (3, 4, 1, 2)
    with pytest.raises(FixedPoint):
        validate_matching({(1, 1), (2, 3)})
    with pytest.raises(NotAnInvolution):
        validate_matching([(1, 2), (2, 3)])
    with pytest.raises(CoverageGap):
        validate_matching([(1, 2), (4, 5)])
    with pytest.raises(NotAnInvolution):
        Matching((2, 3, 4, 1))
    assert validate_matching([]).m == 0


def test_enumerate_small():
    assert [m.pairs() for m in enumerate_matchings(1)] == [[(1, 2)]]
    assert {tuple(m.pairs()) for m in enumerate_matchings(2)} == {
        ((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))
    }
    assert list(enumerate_matchings(0)) == [Matching(())]


def _pairings_count(k):
    # brute force: number of ways to pair up 2k points, by direct recursion
    return 1 if k == 0 else (2 * k - 1) * _pairings_count(k - 1)


@pytest.mark.parametrize("m", range(0, 8))
def test_enumerate_counts(m):
    out = list(enumerate_matchings(m))
    assert len(out) == len(set(out)) == _pairings_count(m) == double_factorial(2 * m - 1)


def test_random_matching_basic():
    assert random_matching(1, 123).pairs() == [(1, 2)]
    assert random_matching(5, 42) == random_matching(5, 42)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_random_matching_uniform(m):
    rng = random.Random(2024 + m)
    samples = 100_000
    counts = Counter(random_matching(m, rng) for _ in range(samples))
    all_matchings = list(enumerate_matchings(m))
    assert set(counts) <= set(all_matchings)
    observed = [counts[x] for x in all_matchings]
    assert chisquare(observed).pvalue > 0.001
    if m == 2:
        assert all(abs(c / samples - 1 / 3) <= 0.02 for c in observed)


def test_block_pair_count_examples():
    assert block_pair_count(validate_matching({(1, 3), (2, 4)}), 3, 4, 4) == 1
    assert block_pair_count(validate_matching({(1, 2), (3, 4)}), 2, 3, 3) == 0
    # empty high block
    assert block_pair_count(validate_matching({(1, 2)}), 2, 3, 2) == 0
    with pytest.raises(BadRange):
        block_pair_count(validate_matching({(1, 2)}), 2, 2, 2)
    with pytest.raises(BadRange):
        block_pair_count(validate_matching({(1, 2)}), 1, 2, 3)


@given(matchings(min_m=2), st.data())
def test_block_pair_count_invariant_under_block_relabelling(matching, data):
    size = 2 * matching.m
    low_max = data.draw(st.integers(1, size - 1))
    high_min = data.draw(st.integers(low_max + 1, size))
    high_max = data.draw(st.integers(high_min, size))
    blocks = [range(1, low_max + 1), range(low_max + 1, high_min),
              range(high_min, high_max + 1), range(high_max + 1, size + 1)]
    sigma = {}
    for block in blocks:
        shuffled = data.draw(st.permutations(list(block)))
        sigma.update(zip(block, shuffled))
    relabelled = validate_matching((sigma[i], sigma[j]) for i, j in matching.pairs())
    assert (block_pair_count(relabelled, low_max, high_min, high_max)
            == block_pair_count(matching, low_max, high_min, high_max))
