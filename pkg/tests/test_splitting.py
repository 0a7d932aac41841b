import math

import pytest
from hypothesis import given, settings, strategies as st

from rderange.condition import SplitCondition
from rderange.oracle import ClassSpec, Family, classify, enumerate_class
from rderange.permutation import PermutationError, from_cycles, identity
from rderange.sequences import stirling_first
from rderange.splitting import (
    fiber, fiber_size_formula, glue, groupings, is_separated, set_partitions, split,
)

from conftest import perms


def bell(n):
    return sum(1 for _ in set_partitions(range(n)))


def test_split_examples():
    assert str(split(from_cycles([(1, 3, 2, 4)]), 2)) == "(1 3)(2 4)"
    assert split(from_cycles([(1, 2)]), 2) == identity(2)
    sep = from_cycles([(1, 3), (2, 4, 5)])
    assert split(sep, 2) == sep


def test_split_keeps_tail_runs_in_order():
    sigma = from_cycles([(1, 5, 3, 2, 6, 7)], 7)
    assert str(split(sigma, 3)) == "(1 5)(2 6 7)(3)(4)"


def test_glue_examples():
    rho = from_cycles([(1, 3), (2, 4)])
    assert str(glue(rho, 2, [(1, 2)])) == "(1 3 2 4)"
    assert glue(rho, 2, [(1,), (2,)]) == rho
    assert str(glue(identity(2), 2, [(1, 2)])) == "(1 2)"


def test_glue_errors():
    with pytest.raises(PermutationError):
        glue(from_cycles([(1, 2)]), 2, [(1,), (2,)])
    with pytest.raises(ValueError, match="least"):
        glue(identity(2), 2, [(2, 1)])
    with pytest.raises(ValueError, match="cover"):
        glue(identity(3), 3, [(1, 2)])


def test_fiber_examples():
    assert [str(s) for s in fiber(identity(2), 2, SplitCondition.equal_k(1))] == ["(1 2)"]
    assert sorted(str(s) for s in fiber(identity(2), 2)) == ["(1 2)", "(1)(2)"]
    rho = from_cycles([(1, 2), (3, 4)])
    assert fiber(rho, 0) == [rho]


def test_fiber_refuses_large_r():
    with pytest.raises(ValueError, match="r <= 6"):
        fiber(identity(7), 7)


@pytest.mark.parametrize("r, w, expected", [
    (2, SplitCondition.equal_k(1), 1),
    (3, SplitCondition.any(), 6),
    (0, SplitCondition.any(), 1),
    (0, SplitCondition.equal_k(0), 1),
    (0, SplitCondition.parity(0), 1),
    (4, SplitCondition.parity(0), 12),
    (1, SplitCondition.parity(0), 0),
])
def test_fiber_size_formula_examples(r, w, expected):
    assert fiber_size_formula(r, w) == expected


@pytest.mark.parametrize("r", range(7))
def test_groupings_count_is_r_factorial(r):
    gs = list(groupings(r))
    assert len(gs) == math.factorial(r)
    assert len(set(gs)) == len(gs)
    assert sum(1 for _ in set_partitions(range(r))) == bell(r)


@pytest.mark.parametrize("r", range(6))
def test_round_trip_on_identity(r):
    rho = identity(r)
    for g in groupings(r):
        assert split(glue(rho, r, g), r) == rho


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_round_trip_random(data):
    sigma = data.draw(perms(max_size=8))
    r = data.draw(st.integers(0, min(sigma.size, 5)))
    rho = split(sigma, r)
    assert is_separated(rho, r)
    for g in groupings(r):
        assert split(glue(rho, r, g), r) == rho


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_split_preserves_statistics(data):
    sigma = data.draw(perms(max_size=8))
    r = data.draw(st.integers(0, sigma.size))
    before, after = classify(sigma, r), classify(split(sigma, r), r)
    assert after.separated
    assert after.u_fixed_front == before.u_pairs
    assert after.u_pairs == before.u_pairs
    assert after.m_fixed_tail == before.m_fixed_tail


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_sigma_is_in_fiber_of_its_split(data):
    sigma = data.draw(perms(max_size=8))
    r = data.draw(st.integers(0, min(sigma.size, 5)))
    assert sigma in fiber(split(sigma, r), r)


@pytest.mark.parametrize("r, n", [(r, n) for r in range(6) for n in range(7 - r)])
def test_fiber_sizes_match_formula(r, n):
    conds = ([SplitCondition.any()] + [SplitCondition.equal_k(k) for k in range(r + 1)]
             + [SplitCondition.parity(e) for e in (0, 1)])
    for u in range(r + 1):
        for m in range(n + 1):
            for rho in enumerate_class(ClassSpec(Family.SEP, r, u, m, n)):
                for w in conds:
                    assert len(fiber(rho, r, w)) == fiber_size_formula(r, w)


@pytest.mark.parametrize("r", range(7))
def test_fiber_counts_by_block_number_are_stirling(r):
    counts = [0] * (r + 1)
    for s in fiber(identity(r), r):
        counts[s.front_cycle_count(r)] += 1
    assert counts == [stirling_first(r, k) for k in range(r + 1)]


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_parity_transport(data):
    sigma = data.draw(perms(max_size=8))
    r = data.draw(st.integers(0, min(sigma.size, 5)))
    rho = split(sigma, r)
    for s in fiber(rho, r):
        assert s.parity() == (rho.parity() + r + s.front_cycle_count(r)) % 2


@pytest.mark.parametrize("text", ["any", "k=2", "parity=1", "k=2,parity=0", "residue=1mod3"])
def test_condition_round_trips(text):
    assert str(SplitCondition.parse(text)) == text


@pytest.mark.parametrize("text", ["k=", "parity=2", "residue=3mod3", "foo=1", "k=1,k=2"])
def test_condition_parse_errors(text):
    with pytest.raises(ValueError):
        SplitCondition.parse(text)


def test_condition_accepts():
    assert SplitCondition.residue(1, 3).accepts(4)
    assert not SplitCondition.residue(1, 3).accepts(3)
    assert SplitCondition.equal_k_and_parity(3, 1).accepts(3)
    assert not SplitCondition.equal_k_and_parity(2, 1).accepts(2)
