"""Power series over Fraction truncated at x^N, and the exponential
generating functions built from them.

>>> egf_g_r(2, 4).egf_coefficients()
[0, 0, -2, 12, -60]
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

DEFAULT_ORDER = 32


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of x^0..x^N; everything beyond x^N is discarded."""
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the x^0 coefficient")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def of(cls, coeffs: Iterable, order: int) -> TruncatedSeries:
        """Pad with zeros or cut to exactly ``order + 1`` coefficients."""
        coeffs = list(coeffs)[: order + 1]
        return cls(tuple(coeffs) + (Fraction(0),) * (order + 1 - len(coeffs)))

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls.of([c], order)

    @classmethod
    def monomial(cls, power: int, order: int, c=1) -> TruncatedSeries:
        return cls.of([0] * power + [c], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self.coefficients[j] if 0 <= j <= self.order else Fraction(0)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[j] + other[j] for j in range(n + 1)))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def scale(self, c) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries(tuple(c * a for a in self.coefficients))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return TruncatedSeries(tuple(
            sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)))

    def shift(self, power: int) -> TruncatedSeries:
        """Multiply by x^power, keeping the order."""
        return TruncatedSeries.of([0] * power + list(self.coefficients), self.order)

    def derivative(self) -> TruncatedSeries:
        """Exact up to x^(N-1); the top coefficient is unknown and set to 0."""
        coeffs = [j * self.coefficients[j] for j in range(1, self.order + 1)]
        return TruncatedSeries.of(coeffs, self.order)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.of(self.coefficients, min(order, self.order))

    def egf_coefficient(self, n: int) -> Fraction:
        return math.factorial(n) * self[n]

    def egf_coefficients(self) -> list:
        """n! [x^n] for every n, as ints where integral."""
        out = []
        for n in range(self.order + 1):
            v = self.egf_coefficient(n)
            out.append(v.numerator if v.denominator == 1 else v)
        return out


def exp_series(order: int, sign: int = 1) -> TruncatedSeries:
    """e^(sign x)."""
    return TruncatedSeries(tuple(Fraction(sign**j, math.factorial(j)) for j in range(order + 1)))


def exp_neg_x(order: int) -> TruncatedSeries:
    return exp_series(order, -1)


def general_binomial(e: int, j: int) -> Fraction:
    """e(e-1)...(e-j+1)/j! for any integer e."""
    num = 1
    for t in range(j):
        num *= e - t
    return Fraction(num, math.factorial(j))


def binomial_power(sign: int, exponent: int, order: int) -> TruncatedSeries:
    """(1 + sign*x)^exponent; negative exponents give the binomial series."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return TruncatedSeries(tuple(general_binomial(exponent, j) * sign**j for j in range(order + 1)))


def egf_g_r(r: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(-1)^(r-1) x^r e^{-x} / (1+x)^(r-1); at r = 0 this is -(1+x)e^{-x}."""
    s = (exp_neg_x(order) * binomial_power(1, -(r - 1), order)).shift(r)
    return s.scale(-1 if (r - 1) % 2 else 1)


def egf_f_r(r: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """x^r e^{-x} / (1-x)^(r+1)."""
    return (exp_neg_x(order) * binomial_power(-1, -(r + 1), order)).shift(r)


def egf_f_r_parity(r: int, i: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """1/2 (x^r e^{-x}/(1-x)^(r+1) + (-1)^(r+i) x^r e^{-x}/(1+x)^(r-1))."""
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    odd_part = (exp_neg_x(order) * binomial_power(1, -(r - 1), order)).shift(r)
    sign = -1 if (r + i) % 2 else 1
    return (egf_f_r(r, order) + odd_part.scale(sign)).scale(Fraction(1, 2))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in y, lowest degree first."""
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs) or (0,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k <= self.degree else 0

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __call__(self, y):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * y + c
        return acc


def _product_of_linear(shifts: Sequence[int]) -> IntPolynomial:
    poly = IntPolynomial((1,))
    for s in shifts:
        poly = poly * IntPolynomial((s, 1))
    return poly


def rising_factorial_poly(r: int) -> IntPolynomial:
    """y (y+1) ... (y+r-1)"""
    return _product_of_linear(range(r))


def falling_factorial_poly(r: int) -> IntPolynomial:
    """y (y-1) ... (y-r+1)"""
    return _product_of_linear([-j for j in range(r)])
