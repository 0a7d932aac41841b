"""Cycle splitting at front elements, and its inverse by gluing.

Front elements are 1..r. ``split`` cuts every cycle holding several front
elements just before each front element, so that afterwards every front
element sits in its own cycle. ``glue`` concatenates front cycles block by
block. Because every front cycle of a separated permutation contains exactly
one front element (its least element), a block is given by the front
elements it contains, leading element first.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterator, Sequence

from .condition import SplitCondition
from .partitions import filtered_weight_sum
from .permutation import Cycle, Permutation, PermutationError, from_cycles

MAX_FIBER_R = 6

Grouping = tuple[tuple[int, ...], ...]


def split(sigma: Permutation, r: int) -> Permutation:
    if not 0 <= r <= sigma.size:
        raise PermutationError(f"r={r} outside 0..{sigma.size}")
    pieces: list[Cycle] = []
    for cyc in sigma.cycle_decomposition():
        cuts = [pos for pos, x in enumerate(cyc) if x <= r]
        if len(cuts) <= 1:
            pieces.append(cyc)
            continue
        # cyc starts at its least element, which is a front element, so cuts[0] == 0
        bounds = cuts + [len(cyc)]
        pieces.extend(cyc[a:b] for a, b in zip(bounds, bounds[1:]))
    return from_cycles(pieces, sigma.size)


def is_separated(rho: Permutation, r: int) -> bool:
    return all(sum(1 for x in c if x <= r) <= 1 for c in rho.cycle_decomposition())


def _front_cycles(rho: Permutation, r: int) -> dict[int, Cycle]:
    if not 0 <= r <= rho.size:
        raise PermutationError(f"r={r} outside 0..{rho.size}")
    if not is_separated(rho, r):
        raise PermutationError(f"{rho} has two front elements in one cycle (r={r})")
    return {c[0]: c for c in rho.cycle_decomposition() if c[0] <= r}


def check_grouping(g: Sequence[Sequence[int]], r: int) -> Grouping:
    g = tuple(tuple(b) for b in g)
    elems = [a for b in g for a in b]
    if any(not b for b in g):
        raise ValueError("empty block in grouping")
    if sorted(elems) != list(range(1, r + 1)):
        raise ValueError(f"grouping {g} does not cover 1..{r} exactly once")
    for b in g:
        if b[0] != min(b):
            raise ValueError(f"block {b} must lead with its least element")
    return g


def glue(rho: Permutation, r: int, g: Sequence[Sequence[int]]) -> Permutation:
    fronts = _front_cycles(rho, r)
    g = check_grouping(g, r)
    pieces = [c for c in rho.cycle_decomposition() if c[0] > r]
    for block in g:
        pieces.append(sum((fronts[a] for a in block), ()))
    return from_cycles(pieces, rho.size)


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """Set partitions of ``items``; each block keeps input order, blocks are
    ordered by their first element."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[head]] + part
        for idx in range(len(part)):
            yield [[head] + part[idx]] + part[:idx] + part[idx + 1:]


def groupings(r: int) -> Iterator[Grouping]:
    """Every grouping of front elements 1..r: a set partition with the
    non-leading members of each block in every order."""
    for part in sorted(set_partitions(range(1, r + 1))):
        per_block = [[(b[0],) + tail for tail in permutations(b[1:])] for b in part]
        yield from _product(per_block)


def _product(choices):
    if not choices:
        yield ()
        return
    for first in choices[0]:
        for rest in _product(choices[1:]):
            yield (first,) + rest


def fiber(rho: Permutation, r: int, w: SplitCondition = SplitCondition.any(),
          max_r: int = MAX_FIBER_R) -> list[Permutation]:
    """All σ with split(σ, r) == rho whose front-cycle count satisfies ``w``."""
    _front_cycles(rho, r)
    if r > max_r:
        raise ValueError(f"fiber listing is limited to r <= {max_r}; use fiber_size_formula")
    return [glue(rho, r, g) for g in groupings(r) if w.accepts(len(g))]


def fiber_size_formula(r: int, w: SplitCondition) -> int:
    total = math.factorial(r) * filtered_weight_sum(r, w)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral fiber size {total} for r={r}, {w}")
    return total.numerator
