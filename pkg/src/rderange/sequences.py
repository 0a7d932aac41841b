"""Exact counting sequences: closed forms, recurrences and reductions.

Naming: ``d_r(n, r)`` counts r-derangements (front 1..r, tail of size n),
``c_r(n, r)`` is the odd-minus-even difference of those counts, and the
``big_d*`` functions count the block families via reduction to ``d_rum``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .condition import SplitCondition
from .oracle import ClassSpec, Family
from .partitions import filtered_weight_sum


def binomial(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def falling(n: int, j: int) -> int:
    """n!/(n-j)!"""
    return math.perm(n, j)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


_stirling_rows: list[tuple[int, ...]] = [(1,)]
_stirling_lock = threading.Lock()


def stirling_row(r: int) -> tuple[int, ...]:
    """Unsigned Stirling numbers [r, 0..r] via [r,k] = [r-1,k-1] + (r-1)[r-1,k]."""
    with _stirling_lock:
        while len(_stirling_rows) <= r:
            s = len(_stirling_rows)
            prev = _stirling_rows[-1] + (0,)
            _stirling_rows.append(tuple((prev[k - 1] if k else 0) + (s - 1) * prev[k]
                                        for k in range(s + 1)))
        return _stirling_rows[r]


def stirling_first(r: int, k: int) -> int:
    if r < 0 or k < 0:
        raise ValueError("r and k must be non-negative")
    if k > r:
        return 0
    return stirling_row(r)[k]


def derangement(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = 1, 0  # D(0), D(1)
    if n == 0:
        return a
    for j in range(2, n + 1):
        a, b = b, (j - 1) * (a + b)
    return b


def d_r(n: int, r: int) -> int:
    """Number of r-derangements: sum_{j=r}^n n!/(n-j)! (-1)^(n-j) C(j, r)."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    return sum(falling(n, j) * _sign(n - j) * math.comb(j, r) for j in range(r, n + 1))


def c_r(n: int, r: int) -> int:
    """C_r(n) = D_r^(1)(n) - D_r^(0)(n).

    For r >= 2 this is (-1)^(n-1) sum_{j=r}^n n!/(n-j)! C(j-2, r-2). That
    sum has a negative lower binomial index when r < 2, so r = 0 and r = 1
    use the expansions of -(1+x)e^{-x} and x e^{-x} instead.
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    if r == 0:
        return _sign(n) * (n - 1)
    if r == 1:
        return _sign(n - 1) * n
    if n < r:
        return 0
    return _sign(n - 1) * sum(falling(n, j) * math.comb(j - 2, r - 2) for j in range(r, n + 1))


def c_r_literal(n: int, r: int) -> int:
    """The r >= 2 sum applied verbatim at every r, reading C(a, b) as 0 for
    b < 0. Disagrees with ``c_r`` at r in {0, 1}."""
    return _sign(n - 1) * sum(falling(n, j) * binomial(j - 2, r - 2) for j in range(r, n + 1))


def d_r_parity_explicit(n: int, r: int, i: int) -> int:
    """D_r^(i)(n) = (D_r(n) - (-1)^i C_r(n)) / 2."""
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    twice = d_r(n, r) - _sign(i) * c_r(n, r)
    if twice % 2:
        raise ArithmeticError(f"odd numerator for D_{r}^({i})({n})")
    return twice // 2


def d_r_parity_double_sum(n: int, r: int, i: int) -> int:
    """The single-sum form
    1/2 sum_{j=r}^n n!/(n-j)! ((-1)^(n-j) C(j,r) + (-1)^(n+i) C(j-2,r-2)),
    evaluated with C(a, b) = 0 for b < 0 (only meaningful for r >= 2)."""
    total = sum(falling(n, j) * (_sign(n - j) * math.comb(j, r) + _sign(n + i) * binomial(j - 2, r - 2))
                for j in range(r, n + 1))
    if total % 2:
        raise ArithmeticError(f"odd numerator for D_{r}^({i})({n})")
    return total // 2


def base_value(r: int, i: int) -> int:
    """D_r^(i)(r) = r!/2 (1 + (-1)^(r+i))."""
    return math.factorial(r) if (r + i) % 2 == 0 else 0


@lru_cache(maxsize=256)
def parity_table(r_max: int, n_max: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """``table[r][n] == (D_r^(0)(n), D_r^(1)(n))`` for r <= r_max, n <= n_max,
    filled bottom-up from

        D_r^(i)(n) = r D_{r-1}^(1-i)(n-1) + (n-1) D_r^(1-i)(n-2) + (n+r-1) D_r^(1-i)(n-1)

    for n > r, with zeros below n = r and the base value at n = r.
    """
    table: list[list[tuple[int, int]]] = []
    for r in range(r_max + 1):
        row: list[tuple[int, int]] = []
        for n in range(n_max + 1):
            if n < r:
                row.append((0, 0))
            elif n == r:
                row.append((base_value(r, 0), base_value(r, 1)))
            else:
                vals = []
                for i in (0, 1):
                    j = 1 - i
                    prev_r = table[r - 1][n - 1][j] if r else 0
                    two_back = row[n - 2][j] if n >= 2 else 0
                    vals.append(r * prev_r + (n - 1) * two_back + (n + r - 1) * row[n - 1][j])
                row.append(tuple(vals))
        table.append(row)
    return tuple(tuple(row) for row in table)


def d_r_parity_recurrence(n: int, r: int, i: int) -> int:
    if n < 0 or r < 0 or i not in (0, 1):
        raise ValueError("need n, r >= 0 and i in {0, 1}")
    return parity_table(r, n)[r][n][i]


def c_r_recurrence(n: int, r: int) -> int:
    """C_r(n) = -r C_{r-1}(n-1) - (n-1) C_r(n-2) - (n+r-1) C_r(n-1), with
    C_r(n) = 0 below n = r and C_r(r) = (-1)^(r+1) r!."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    rows: list[list[int]] = []
    for s in range(r + 1):
        row = []
        for t in range(n + 1):
            if t < s:
                row.append(0)
            elif t == s:
                row.append(_sign(s + 1) * math.factorial(s))
            else:
                prev_r = rows[s - 1][t - 1] if s else 0
                two_back = row[t - 2] if t >= 2 else 0
                row.append(-s * prev_r - (t - 1) * two_back - (t + s - 1) * row[t - 1])
        rows.append(row)
    return rows[r][n]


def _check_rum(n: int, r: int, u: int, m: int) -> None:
    if min(n, r, u, m) < 0:
        raise ValueError("parameters must be non-negative")
    if u > r:
        raise ValueError(f"u={u} exceeds r={r}")
    if m > n:
        raise ValueError(f"m={m} exceeds n={n}")


def d_rum(n: int, r: int, u: int, m: int, d_r_fn: Callable[[int, int], int] = d_r) -> int:
    """Separated permutations with u fixed front points and m fixed tail
    points: C(r,u) C(n,m) D_{r-u}(n-m)."""
    _check_rum(n, r, u, m)
    return math.comb(r, u) * math.comb(n, m) * d_r_fn(n - m, r - u)


def d_rum_parity(n: int, r: int, u: int, m: int, i: int,
                 d_r_par_fn: Callable[[int, int, int], int] = d_r_parity_explicit) -> int:
    _check_rum(n, r, u, m)
    return math.comb(r, u) * math.comb(n, m) * d_r_par_fn(n - m, r - u, i)


def big_d(r: int, u: int, m: int, n: int) -> int:
    return math.factorial(r) * d_rum(n, r, u, m)


def big_d_k(r: int, u: int, m: int, n: int, k: int) -> int:
    return stirling_first(r, k) * d_rum(n, r, u, m)


def big_d_parity(r: int, u: int, m: int, n: int, i: int) -> int:
    if r >= 2:
        return math.factorial(r) // 2 * d_rum(n, r, u, m)
    return d_rum_parity(n, r, u, m, i)


def big_d_k_parity(r: int, u: int, m: int, n: int, k: int, i: int) -> int:
    return stirling_first(r, k) * d_rum_parity(n, r, u, m, (r + k + i) % 2)


def f_value(r: int, w: SplitCondition) -> int:
    """r! times the filtered partition-weight sum; always an integer."""
    total = math.factorial(r) * filtered_weight_sum(r, w)
    if total.denominator != 1:
        raise ArithmeticError(f"f({r}, {w}) = {total} is not integral")
    return total.numerator


def count(spec: ClassSpec,
          d_r_fn: Callable[[int, int], int] = d_r,
          d_r_par_fn: Callable[[int, int, int], int] = d_r_parity_explicit) -> int:
    """Formula value for any family. The r-derangement backends can be
    swapped (recurrence, series coefficients) without touching the
    reductions."""
    r, u, m, n, k, i = spec.r, spec.u, spec.m, spec.n, spec.k, spec.i
    fam = spec.family
    if fam is Family.SEP:
        return d_rum(n, r, u, m, d_r_fn)
    if fam is Family.SEP_PAR:
        return d_rum_parity(n, r, u, m, i, d_r_par_fn)
    if fam is Family.BLOCK:
        return math.factorial(r) * d_rum(n, r, u, m, d_r_fn)
    if fam is Family.BLOCK_K:
        return stirling_first(r, k) * d_rum(n, r, u, m, d_r_fn)
    if fam is Family.BLOCK_PAR:
        if r >= 2:
            return math.factorial(r) // 2 * d_rum(n, r, u, m, d_r_fn)
        return d_rum_parity(n, r, u, m, i, d_r_par_fn)
    if fam is Family.BLOCK_K_PAR:
        return stirling_first(r, k) * d_rum_parity(n, r, u, m, (r + k + i) % 2, d_r_par_fn)
    raise ValueError(f"unknown family {fam}")


def weight_sum_piecewise(r: int, eps: int) -> Fraction:
    """Closed values of the even (eps=0) / odd (eps=1) block-count sums:
    1-r and r for r in {0, 1}, one half from r = 2 on."""
    if r >= 2:
        return Fraction(1, 2)
    return Fraction(1 - r) if eps == 0 else Fraction(r)
