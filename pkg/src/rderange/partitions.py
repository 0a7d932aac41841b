"""Cycle-type partitions of r and their exact weights.

A cycle-type partition is a tuple ``(j_1, ..., j_r)`` with
``sum(l * j_l) == r``; its weight is ``1 / prod(l**j_l * j_l!)``, which is
the fraction of S_r having that cycle type.

>>> enumerate_cycle_partitions(3)
[(3, 0, 0), (1, 1, 0), (0, 0, 1)]
>>> weight((1, 1, 0))
Fraction(1, 2)
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .condition import SplitCondition

CyclePartition = tuple[int, ...]


def enumerate_cycle_partitions(r: int) -> list[CyclePartition]:
    """All multiplicity vectors of partitions of r, descending lexicographic."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return list(_partitions(r))


@lru_cache(maxsize=None)
def _partitions(r: int) -> tuple[CyclePartition, ...]:
    out = []

    def descend(l, remaining, prefix):
        if l > r:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for j in range(remaining // l, -1, -1):
            prefix.append(j)
            descend(l + 1, remaining - l * j, prefix)
            prefix.pop()

    descend(1, r, [])
    return tuple(out)


@lru_cache(maxsize=None)
def partition_count(n: int, largest: int | None = None) -> int:
    """Number of partitions of n with parts at most ``largest``; recursion on
    the largest part, kept independent of the enumerator above."""
    if largest is None:
        largest = n
    if n == 0:
        return 1
    if largest == 0:
        return 0
    return sum(partition_count(n - p, p) for p in range(1, min(n, largest) + 1))


def block_count(p: CyclePartition) -> int:
    return sum(p)


def weight(p: CyclePartition) -> Fraction:
    denom = 1
    for l, j in enumerate(p, start=1):
        denom *= l**j * math.factorial(j)
    return Fraction(1, denom)


@lru_cache(maxsize=None)
def _weighted(r: int) -> tuple[tuple[int, Fraction], ...]:
    return tuple((block_count(p), weight(p)) for p in _partitions(r))


def filtered_weight_sum(r: int, w: SplitCondition) -> Fraction:
    """Sum of weights over cycle-type partitions of r whose block count
    satisfies ``w``."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return sum((wt for blocks, wt in _weighted(r) if w.accepts(blocks)), Fraction(0))
