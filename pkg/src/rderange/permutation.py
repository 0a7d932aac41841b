"""Permutations of {1..N} in one-line form, with canonical cycle decomposition.

Everything is 1-indexed at the surface: ``p.images[x - 1] == p(x)``.

>>> p = parse_permutation("(1 3 2 4)")
>>> p.images
(3, 4, 2, 1)
>>> str(p.inverse())
'(1 4 2 3)'
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Cycle = tuple[int, ...]


class PermutationError(ValueError):
    pass


def _check_images(images: Sequence[int]) -> None:
    n = len(images)
    seen = set()
    for v in images:
        if not isinstance(v, int) or isinstance(v, bool):
            raise PermutationError(f"non-integer image {v!r}")
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} out of range 1..{n}")
        if v in seen:
            missing = sorted(set(range(1, n + 1)) - set(images))
            raise PermutationError(f"value {v} is duplicated (missing: {missing})")
        seen.add(v)


def cycles_of(images: Sequence[int]) -> tuple[Cycle, ...]:
    """Canonical cycles of a one-line tuple: each cycle starts at its least
    element, cycles ordered by least element, fixed points kept as 1-cycles."""
    n = len(images)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = images[x - 1]
        out.append(tuple(cyc))
    return tuple(out)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]
    _cycles: tuple[Cycle, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __len__(self) -> int:
        return len(self.images)

    def cycle_decomposition(self) -> tuple[Cycle, ...]:
        if self._cycles is None:
            object.__setattr__(self, "_cycles", cycles_of(self.images))
        return self._cycles

    def cycle_count(self) -> int:
        return len(self.cycle_decomposition())

    def parity(self) -> int:
        """0 for even, 1 for odd; equal to (N - #cycles) mod 2."""
        return (self.size - self.cycle_count()) % 2

    def compose(self, other: Permutation) -> Permutation:
        """The product ``self ∘ other``, i.e. x -> self(other(x))."""
        if self.size != other.size:
            raise PermutationError(f"size mismatch: {self.size} vs {other.size}")
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    __mul__ = compose

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def fixed_points(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images, start=1) if x == y)

    def front_cycle_count(self, r: int) -> int:
        """Number of cycles meeting {1..r}."""
        if not 0 <= r <= self.size:
            raise PermutationError(f"r={r} outside 0..{self.size}")
        # cycles are listed from their least element
        return sum(1 for c in self.cycle_decomposition() if c[0] <= r)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return format_cycles(self.cycle_decomposition())


def from_one_line(images: Iterable[int]) -> Permutation:
    images = tuple(images)
    _check_images(images)
    return Permutation(images)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def from_cycles(cycles: Iterable[Sequence[int]], size: int | None = None) -> Permutation:
    """Build a permutation from disjoint cycles. Elements not mentioned are
    fixed; ``size`` defaults to the largest element mentioned."""
    cycles = [tuple(c) for c in cycles]
    elems = [x for c in cycles for x in c]
    if size is None:
        size = max(elems, default=0)
    if len(set(elems)) != len(elems):
        dup = sorted(x for x in set(elems) if elems.count(x) > 1)
        raise PermutationError(f"cycles are not disjoint: {dup} repeated")
    if any(not 1 <= x <= size for x in elems):
        raise PermutationError(f"cycle element outside 1..{size}")
    images = list(range(1, size + 1))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))


def format_cycles(cycles: Iterable[Cycle]) -> str:
    text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
    return text or "()"


_ONE_LINE = re.compile(r"^\[\s*([0-9,\s]*)\]$")
_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, size: int | None = None) -> Permutation:
    """Parse ``[2,1,4,3]`` (one-line) or ``(1 2)(3 4)`` (cycle form).

    ``size`` pads cycle form with trailing fixed points; it must match the
    length for one-line input.
    """
    s = text.strip()
    m = _ONE_LINE.match(s)
    if m:
        body = m.group(1).replace(",", " ").split()
        p = from_one_line(int(v) for v in body)
        if size is not None and size != p.size:
            raise PermutationError(f"one-line form has size {p.size}, expected {size}")
        return p
    if not s.startswith("("):
        raise PermutationError(f"cannot parse permutation {text!r}")
    if _CYCLE.sub("", s).strip():
        raise PermutationError(f"stray characters in cycle form {text!r}")
    cycles = []
    for body in _CYCLE.findall(s):
        items = body.replace(",", " ").split()
        try:
            cyc = tuple(int(v) for v in items)
        except ValueError:
            raise PermutationError(f"non-integer entry in {text!r}") from None
        if cyc:
            cycles.append(cyc)
    return from_cycles(cycles, size)
