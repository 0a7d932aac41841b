"""Brute-force ground truth: enumerate S_{r+n} and classify every permutation.

Nothing here uses a counting formula. Counts come from walking all (r+n)!
one-line tuples in lexicographic order and tallying their statistics.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, NamedTuple

from .permutation import Permutation

DEFAULT_CAP = 9


class OracleCapError(ValueError):
    pass


class Family(enum.Enum):
    BLOCK = "BLOCK"              # D(r,u,m,n)
    BLOCK_K = "BLOCK_K"          # D_k(r,u,m,n)
    BLOCK_PAR = "BLOCK_PAR"      # D^(i)(r,u,m,n)
    BLOCK_K_PAR = "BLOCK_K_PAR"  # D_k^(i)(r,u,m,n)
    SEP = "SEP"                  # D_{r,u,m}(n)
    SEP_PAR = "SEP_PAR"          # D_{r,u,m}^(i)(n)

    @property
    def needs_k(self) -> bool:
        return self in (Family.BLOCK_K, Family.BLOCK_K_PAR)

    @property
    def needs_i(self) -> bool:
        return self in (Family.BLOCK_PAR, Family.BLOCK_K_PAR, Family.SEP_PAR)

    @property
    def separated(self) -> bool:
        return self in (Family.SEP, Family.SEP_PAR)


@dataclass(frozen=True)
class ClassSpec:
    family: Family
    r: int
    u: int
    m: int
    n: int
    k: int | None = None
    i: int | None = None

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family.upper()))
        for name in ("r", "u", "m", "n"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.u > self.r:
            raise ValueError(f"u={self.u} exceeds r={self.r}")
        if self.m > self.n:
            raise ValueError(f"m={self.m} exceeds n={self.n}")
        if self.family.needs_k:
            if self.k is None:
                raise ValueError(f"{self.family.value} requires k")
        elif self.k is not None:
            raise ValueError(f"{self.family.value} takes no k")
        if self.k is not None and not 0 <= self.k <= self.r:
            raise ValueError(f"k={self.k} outside 0..r")
        if self.family.needs_i:
            if self.i not in (0, 1):
                raise ValueError(f"{self.family.value} requires i in {{0, 1}}")
        elif self.i is not None:
            raise ValueError(f"{self.family.value} takes no i")


class ClassStats(NamedTuple):
    u_pairs: int         # x in 1..r with σ(x) in 1..r
    u_fixed_front: int   # x in 1..r with σ(x) = x
    m_fixed_tail: int    # t in r+1..r+n with σ(t) = t
    k_front: int         # cycles meeting 1..r
    separated: bool      # no cycle holds two front elements
    parity: int


def _stats(images: tuple[int, ...], r: int) -> ClassStats:
    size = len(images)
    u_pairs = u_fixed = m_fixed = 0
    for x in range(1, size + 1):
        y = images[x - 1]
        if x <= r:
            if y <= r:
                u_pairs += 1
                if y == x:
                    u_fixed += 1
        elif y == x:
            m_fixed += 1
    seen = [False] * (size + 1)
    ncyc = k_front = 0
    separated = True
    for start in range(1, size + 1):
        if seen[start]:
            continue
        ncyc += 1
        front = 0
        x = start
        while not seen[x]:
            seen[x] = True
            if x <= r:
                front += 1
            x = images[x - 1]
        if front:
            k_front += 1
            if front > 1:
                separated = False
    return ClassStats(u_pairs, u_fixed, m_fixed, k_front, separated, (size - ncyc) % 2)


def classify(p: Permutation, r: int) -> ClassStats:
    if not 0 <= r <= p.size:
        raise ValueError(f"r={r} outside 0..{p.size}")
    return _stats(p.images, r)


def is_member(stats: ClassStats, spec: ClassSpec) -> bool:
    fam = spec.family
    if stats.m_fixed_tail != spec.m:
        return False
    if fam.separated:
        # vacuous for r <= 1: no pair of front elements exists
        if not stats.separated or stats.u_fixed_front != spec.u:
            return False
    elif stats.u_pairs != spec.u:
        return False
    if spec.k is not None and stats.k_front != spec.k:
        return False
    if spec.i is not None and stats.parity != spec.i:
        return False
    return True


def _check_cap(size: int, cap: int) -> None:
    if size > cap:
        raise OracleCapError(
            f"refusing to enumerate {size}! = {math.factorial(size)} permutations "
            f"(cap is {cap})")


def _tally_slice(r: int, n: int, first: int | None) -> Counter:
    size = r + n
    out = Counter()
    if first is None:
        for images in permutations(range(1, size + 1)):
            out[_stats(images, r)] += 1
        return out
    rest = [v for v in range(1, size + 1) if v != first]
    for tail in permutations(rest):
        out[_stats((first,) + tail, r)] += 1
    return out


def tally(r: int, n: int, cap: int = DEFAULT_CAP, shards: int = 1) -> Counter:
    """Counter of ClassStats over all of S_{r+n}.

    With ``shards > 1`` the work is split by the value of σ(1) across worker
    processes; the merged counter does not depend on the shard count.
    """
    _check_cap(r + n, cap)
    if shards <= 1 or r + n < 2:
        return Counter(dict(_cached_tally(r, n)))
    firsts = list(range(1, r + n + 1))
    total = Counter()
    with ProcessPoolExecutor(max_workers=shards) as pool:
        for part in pool.map(_tally_slice, [r] * len(firsts), [n] * len(firsts), firsts):
            total.update(part)
    return total


@lru_cache(maxsize=64)
def _cached_tally(r: int, n: int) -> tuple[tuple[ClassStats, int], ...]:
    return tuple(sorted(_tally_slice(r, n, None).items()))


def brute_count(spec: ClassSpec, cap: int = DEFAULT_CAP) -> int:
    _check_cap(spec.r + spec.n, cap)
    return sum(c for stats, c in _cached_tally(spec.r, spec.n) if is_member(stats, spec))


def enumerate_class(spec: ClassSpec, cap: int = DEFAULT_CAP) -> Iterator[Permutation]:
    """Members of the class in lexicographic one-line order."""
    _check_cap(spec.r + spec.n, cap)
    for images in permutations(range(1, spec.r + spec.n + 1)):
        if is_member(_stats(images, spec.r), spec):
            yield Permutation(images)
