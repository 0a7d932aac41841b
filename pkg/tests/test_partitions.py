import math
from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from rderange.condition import SplitCondition
from rderange.partitions import (
    block_count, enumerate_cycle_partitions, filtered_weight_sum, partition_count, weight,
)
from rderange.permutation import Permutation
from rderange.sequences import stirling_first, weight_sum_piecewise


def cycle_type_counts(r):
    """Cycle types of S_r counted by brute force."""
    out = Counter()
    for im in permutations(range(1, r + 1)):
        lens = [len(c) for c in Permutation(im).cycle_decomposition()]
        out[tuple(lens.count(l) for l in range(1, r + 1))] += 1
    return out


def test_enumeration_examples():
    assert enumerate_cycle_partitions(0) == [()]
    assert enumerate_cycle_partitions(3) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]
    assert len(enumerate_cycle_partitions(5)) == 7


@pytest.mark.parametrize("r", range(21))
def test_enumeration_is_complete(r):
    parts = enumerate_cycle_partitions(r)
    assert len(parts) == partition_count(r)
    assert len(set(parts)) == len(parts)
    assert all(sum(l * j for l, j in enumerate(p, 1)) == r for p in parts)
    assert parts == sorted(parts, reverse=True)


def test_weight_examples():
    assert weight((3, 0, 0)) == Fraction(1, 6)
    assert weight((1, 1, 0)) == Fraction(1, 2)
    assert weight(()) == 1


@pytest.mark.parametrize("r", range(7))
def test_weights_are_cycle_type_frequencies(r):
    counts = cycle_type_counts(r)
    for p in enumerate_cycle_partitions(r):
        assert weight(p) * math.factorial(r) == counts[p]


def test_sum_examples():
    assert filtered_weight_sum(3, SplitCondition.any()) == 1
    assert filtered_weight_sum(3, SplitCondition.parity(1)) == Fraction(1, 2)
    assert filtered_weight_sum(3, SplitCondition.equal_k(2)) == Fraction(1, 2)
    assert filtered_weight_sum(1, SplitCondition.parity(0)) == 0


@pytest.mark.parametrize("r", range(21))
def test_sum_identities(r):
    assert filtered_weight_sum(r, SplitCondition.any()) == 1
    for k in range(r + 2):
        assert filtered_weight_sum(r, SplitCondition.equal_k(k)) == Fraction(
            stirling_first(r, k), math.factorial(r))
    for eps in (0, 1):
        assert filtered_weight_sum(r, SplitCondition.parity(eps)) == weight_sum_piecewise(r, eps)


@pytest.mark.parametrize("r", range(16))
def test_residue_sums(r):
    for d in range(1, 7):
        for c in range(d):
            rhs = Fraction(sum(stirling_first(r, k) for k in range(r + 1) if k % d == c),
                           math.factorial(r))
            assert filtered_weight_sum(r, SplitCondition.residue(c, d)) == rhs


def test_residue_sum_at_r0_needs_the_k0_term():
    for d in range(1, 7):
        assert filtered_weight_sum(0, SplitCondition.residue(0, d)) == 1
        assert sum(stirling_first(0, k) for k in range(1, 1)) == 0


@given(st.integers(0, 14), st.sampled_from(
    [SplitCondition.any(), SplitCondition.parity(0), SplitCondition.parity(1),
     SplitCondition.residue(1, 3), SplitCondition.residue(0, 4), SplitCondition.equal_k(3),
     SplitCondition.equal_k_and_parity(3, 1)]))
def test_scaled_sum_is_integral(r, w):
    assert (math.factorial(r) * filtered_weight_sum(r, w)).denominator == 1


def test_block_count():
    assert block_count((1, 1, 0)) == 2
    assert block_count(()) == 0
