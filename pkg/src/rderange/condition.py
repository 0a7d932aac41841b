"""Conditions on the number of front cycles (equivalently, the number of
blocks in a cycle-type partition)."""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class SplitCondition:
    variant: str = "ANY"   # ANY | EQUAL_K | PARITY | EQUAL_K_AND_PARITY | RESIDUE
    k: int | None = None
    eps: int | None = None
    c: int | None = None
    d: int | None = None

    @classmethod
    def any(cls) -> SplitCondition:
        return cls("ANY")

    @classmethod
    def equal_k(cls, k: int) -> SplitCondition:
        if k < 0:
            raise ValueError("k must be non-negative")
        return cls("EQUAL_K", k=k)

    @classmethod
    def parity(cls, eps: int) -> SplitCondition:
        if eps not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        return cls("PARITY", eps=eps)

    @classmethod
    def equal_k_and_parity(cls, k: int, eps: int) -> SplitCondition:
        if k < 0 or eps not in (0, 1):
            raise ValueError("need k >= 0 and parity in {0, 1}")
        return cls("EQUAL_K_AND_PARITY", k=k, eps=eps)

    @classmethod
    def residue(cls, c: int, d: int) -> SplitCondition:
        if d < 1 or not 0 <= c < d:
            raise ValueError("need d >= 1 and 0 <= c < d")
        return cls("RESIDUE", c=c, d=d)

    def accepts(self, count: int) -> bool:
        v = self.variant
        if v == "ANY":
            return True
        if v == "EQUAL_K":
            return count == self.k
        if v == "PARITY":
            return count % 2 == self.eps
        if v == "EQUAL_K_AND_PARITY":
            return count == self.k and count % 2 == self.eps
        if v == "RESIDUE":
            return count % self.d == self.c
        raise ValueError(f"unknown condition {v}")

    def __str__(self) -> str:
        v = self.variant
        if v == "ANY":
            return "any"
        if v == "EQUAL_K":
            return f"k={self.k}"
        if v == "PARITY":
            return f"parity={self.eps}"
        if v == "EQUAL_K_AND_PARITY":
            return f"k={self.k},parity={self.eps}"
        return f"residue={self.c}mod{self.d}"

    @classmethod
    def parse(cls, text: str) -> SplitCondition:
        """Inverse of ``str``: ``any``, ``k=2``, ``parity=1``,
        ``k=2,parity=0`` or ``residue=1mod3``."""
        s = text.strip().lower().replace(" ", "")
        if s == "any":
            return cls.any()
        m = re.fullmatch(r"residue=(\d+)mod(\d+)", s)
        if m:
            return cls.residue(int(m.group(1)), int(m.group(2)))
        fields = {}
        for part in s.split(","):
            key, sep, val = part.partition("=")
            if not sep or key not in ("k", "parity") or not val.isdigit() or key in fields:
                raise ValueError(f"cannot parse condition {text!r}")
            fields[key] = int(val)
        if set(fields) == {"k"}:
            return cls.equal_k(fields["k"])
        if set(fields) == {"parity"}:
            return cls.parity(fields["parity"])
        return cls.equal_k_and_parity(fields["k"], fields["parity"])
