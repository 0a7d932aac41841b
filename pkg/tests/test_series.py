import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rderange import sequences as seq
from rderange.condition import SplitCondition
from rderange.partitions import filtered_weight_sum
from rderange.series import (
    IntPolynomial, TruncatedSeries, binomial_power, egf_f_r, egf_f_r_parity, egf_g_r,
    exp_neg_x, exp_series, falling_factorial_poly, rising_factorial_poly,
)

N = 25

coeffs = st.lists(st.fractions(max_denominator=20).filter(lambda f: abs(f) < 100),
                  min_size=1, max_size=8)


def test_mul_examples():
    s = TruncatedSeries.of([1, 2, 3], 2)
    assert TruncatedSeries.constant(1, 2) * s == s
    x = TruncatedSeries.monomial(1, 1)
    assert list((x * x).coefficients) == [0, 0]
    a = TruncatedSeries.of([1, -1, Fraction(1, 2)], 2)
    b = TruncatedSeries.of([1, 1, Fraction(1, 2)], 2)
    assert list((a * b).coefficients) == [1, 0, 0]


def test_mul_truncates_to_shorter_order():
    a = TruncatedSeries.of([1, 1, 1, 1], 3)
    b = TruncatedSeries.of([1, 1], 1)
    assert (a * b).order == 1
    assert (a + b).order == 1


def test_exp_examples():
    assert list(exp_neg_x(2).coefficients) == [1, -1, Fraction(1, 2)]
    assert exp_neg_x(5)[5] == Fraction(-1, 120)
    assert list((exp_neg_x(10) * exp_series(10)).coefficients) == [1] + [0] * 10


@pytest.mark.parametrize("sign, e, expected", [
    (-1, -1, [1, 1, 1, 1]),
    (1, 1, [1, 1, 0, 0]),
    (1, -2, [1, -2, 3, -4]),
    (-1, 2, [1, -2, 1, 0]),
    (1, 0, [1, 0, 0, 0]),
])
def test_binomial_power_examples(sign, e, expected):
    assert list(binomial_power(sign, e, 3).coefficients) == expected


@given(st.sampled_from([-1, 1]), st.integers(-6, 6), st.integers(-6, 6))
def test_binomial_power_is_multiplicative(sign, a, b):
    lhs = binomial_power(sign, a, 12) * binomial_power(sign, b, 12)
    assert lhs == binomial_power(sign, a + b, 12)


@given(coeffs, coeffs, coeffs)
def test_ring_laws(a, b, c):
    order = 7
    A, B, C = (TruncatedSeries.of(v, order) for v in (a, b, c))
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A - A == TruncatedSeries.constant(0, order)


@given(coeffs, coeffs)
def test_derivative_is_a_derivation(a, b):
    A, B = TruncatedSeries.of(a, 7), TruncatedSeries.of(b, 7)
    lhs = (A * B).derivative().truncate(6)
    rhs = (A.derivative() * B + A * B.derivative()).truncate(6)
    assert lhs == rhs


def test_egf_g_examples():
    g0 = egf_g_r(0, 6).egf_coefficients()
    assert g0 == [(-1) ** n * (n - 1) for n in range(7)]
    g1 = egf_g_r(1, 6).egf_coefficients()
    assert g1 == [(-1) ** (n - 1) * n for n in range(7)]
    assert egf_g_r(2, 4).egf_coefficients()[2] == -2 == seq.c_r(2, 2)


def test_egf_f_examples():
    assert egf_f_r_parity(0, 0, 5).egf_coefficient(3) == 2
    assert egf_f_r_parity(2, 0, 5).egf_coefficient(2) == 2
    for r in range(6):
        for n in range(r):
            assert egf_f_r(r, 8).egf_coefficient(n) == 0
            assert egf_f_r_parity(r, 1, 8).egf_coefficient(n) == 0


@pytest.mark.parametrize("r", range(9))
def test_egf_coefficients_match_sequences(r):
    g, f = egf_g_r(r, N), egf_f_r(r, N)
    f0, f1 = egf_f_r_parity(r, 0, N), egf_f_r_parity(r, 1, N)
    for n in range(N + 1):
        assert g.egf_coefficient(n) == seq.c_r(n, r)
        assert f.egf_coefficient(n) == seq.d_r(n, r)
        assert f0.egf_coefficient(n) == seq.d_r_parity_explicit(n, r, 0)
        assert f1.egf_coefficient(n) == seq.d_r_parity_explicit(n, r, 1)
    assert f0 + f1 == f
    assert (f0 - f1) == g.scale(-1)


@pytest.mark.parametrize("r", range(1, 9))
def test_g_differential_equation(r):
    one_plus_x = TruncatedSeries.of([1, 1], N)
    x_plus_r = TruncatedSeries.of([r, 1], N)
    g, g_prev = egf_g_r(r, N), egf_g_r(r - 1, N)
    lhs = (one_plus_x * g.derivative()).truncate(N - 1)
    rhs = (-(g_prev.scale(r)) - x_plus_r * g).truncate(N - 1)
    assert lhs == rhs


def test_factorial_polynomials():
    assert rising_factorial_poly(0) == IntPolynomial((1,))
    assert list(rising_factorial_poly(3).coefficients) == [0, 2, 3, 1]
    for r in range(10):
        assert falling_factorial_poly(r)(r) == math.factorial(r)
        assert falling_factorial_poly(r)(r - 1 if r else 0) == (0 if r else 1)


@pytest.mark.parametrize("r", range(13))
def test_rising_is_reflected_falling(r):
    rise, fall = rising_factorial_poly(r), falling_factorial_poly(r)
    for y in range(-4, 5):
        assert rise(y) == (-1) ** r * fall(-y)


@pytest.mark.parametrize("r", range(13))
def test_rising_coefficients_are_weight_sums(r):
    poly = rising_factorial_poly(r)
    for k in range(r + 1):
        assert Fraction(poly[k], math.factorial(r)) == filtered_weight_sum(r, SplitCondition.equal_k(k))


def test_int_polynomial_trims_and_multiplies():
    p = IntPolynomial((1, 1, 0, 0))
    assert p.degree == 1
    assert (p * p).coefficients == (1, 2, 1)
    assert p(3) == 4
