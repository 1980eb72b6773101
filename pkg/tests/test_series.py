"""Exact series arithmetic and the generating-function coefficient route."""

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landaukit import (DivisorNotUnit, DomainError, NonzeroConstantTerm,
                       PowerSeries, UnknownFunction, Verdict,
                       alpha_from_generating, elementary_series,
                       hypergeom_series, ps_arith, ps_compose, u_series,
                       quadratic_transform_check)
from landaukit.reference import EULER_NUMBERS

coeff_st = st.fractions(min_value=-50, max_value=50, max_denominator=100)
series_st = st.lists(coeff_st, min_size=1, max_size=7).map(
    lambda cs: PowerSeries(tuple(cs)))


def geometric(T):
    return PowerSeries((Fraction(1),) * (T + 1))


# -- ring laws ---------------------------------------------------------------


@given(series_st, series_st)
def test_add_commutes(a, b):
    assert (a + b).coeffs == (b + a).coeffs


@given(series_st, series_st)
def test_mul_commutes(a, b):
    assert (a * b).coeffs == (b * a).coeffs


@given(series_st, series_st, series_st)
@settings(deadline=None)
def test_mul_associates_at_shared_order(a, b, c):
    order = min(a.order, b.order, c.order)
    left = ((a * b) * c).truncated(order)
    right = (a * (b * c)).truncated(order)
    assert left.coeffs == right.coeffs


@given(series_st, series_st, series_st)
@settings(deadline=None)
def test_mul_distributes(a, b, c):
    order = min(a.order, b.order, c.order)
    left = (a * (b + c)).truncated(order)
    right = (a * b + a * c).truncated(order)
    assert left.coeffs == right.coeffs


@given(series_st, series_st)
def test_division_inverts_multiplication(a, b):
    if b.coeffs[0] == 0:
        with pytest.raises(DivisorNotUnit):
            a / b
    else:
        assert ((a * b) / b).coeffs == a.coeffs[:min(a.order, b.order) + 1]


# -- analytic identities -----------------------------------------------------


def exp_series(T):
    return PowerSeries(tuple(Fraction(1, factorial(i)) for i in range(T + 1)))


def test_exp_log1p_round_trip():
    T = 20
    out = ps_compose(exp_series(T), elementary_series("log1p", 1, T))
    expected = (Fraction(1), Fraction(1)) + (Fraction(0),) * (T - 1)
    assert out.coeffs == expected


def test_pythagorean_identity():
    T = 40
    s = elementary_series("sin", 1, T)
    c = elementary_series("cos", 1, T)
    total = s * s + c * c
    assert total.coeffs == (Fraction(1),) + (Fraction(0),) * T


def test_tan_times_cos_is_sin():
    T = 25
    scale = Fraction(1, 3)
    t = elementary_series("tan", scale, T)
    c = elementary_series("cos", scale, T)
    assert (t * c).coeffs == elementary_series("sin", scale, T).coeffs


def test_sec_squared_is_one_plus_tan_squared():
    T = 24
    sec = elementary_series("sec", Fraction(1, 2), T)
    tan = elementary_series("tan", Fraction(1, 2), T)
    one = PowerSeries((Fraction(1),) + (Fraction(0),) * T)
    assert (sec * sec).coeffs == (one + tan * tan).coeffs


def test_sec_coefficients_carry_euler_numbers():
    # E_{2k} from the recurrence sum_j C(2k,2j) E_{2j} = 0, then matched
    # against the series: [x^{2k}] sec(sx) = (-1)^k E_{2k} s^{2k} / (2k)!
    euler = {0: 1}
    for k in range(1, 8):
        euler[2 * k] = -sum(comb(2 * k, 2 * j) * euler[2 * j]
                            for j in range(k))
    for idx, value in EULER_NUMBERS.items():
        assert euler[idx] == value
    scale = Fraction(1, 8)
    sec = elementary_series("sec", scale, 14)
    for k in range(8):
        expected = (Fraction((-1) ** k * euler[2 * k]) * scale ** (2 * k)
                    / factorial(2 * k))
        assert sec.coeffs[2 * k] == expected
        if 2 * k + 1 <= sec.order:
            assert sec.coeffs[2 * k + 1] == 0


def test_small_catalogue_values():
    sec = elementary_series("sec", 1, 4)
    assert sec.coeffs == (Fraction(1), Fraction(0), Fraction(1, 2),
                          Fraction(0), Fraction(5, 24))
    sin = elementary_series("sin", Fraction(1, 4), 3)
    assert sin.coeffs == (Fraction(0), Fraction(1, 4), Fraction(0),
                          Fraction(-1, 384))


def test_hypergeom_coefficients():
    series = hypergeom_series(12)
    for m in range(13):
        assert series.coeffs[m] == Fraction(comb(2 * m, m) ** 2, 16 ** m)


# -- generating route --------------------------------------------------------


def test_u_series_shape():
    u = u_series(60)
    assert u.coeffs[0] == 1
    assert u.coeffs[2] == Fraction(11, 192)
    for i in range(1, 61, 2):
        assert u.coeffs[i] == 0


def test_generating_coefficients_first_values():
    even, odd = alpha_from_generating(8)
    assert even[0] == 1
    assert even[1] == Fraction(5, 192)
    assert odd[0] == Fraction(1, 4)
    assert odd[1] == Fraction(3, 256)


def test_generating_matches_triangular_solver(derived202):
    even, odd = alpha_from_generating(30)
    for k in range(1, len(even)):
        assert even[k] == derived202.alpha_tilde(2 * k)
    for k in range(len(odd)):
        assert odd[k] == derived202.alpha_tilde(2 * k + 1)


def test_quadratic_transform_small():
    assert quadratic_transform_check(20) is Verdict.PROVEN_POSITIVE


# -- bookkeeping and error surface -------------------------------------------


def test_arith_dispatch():
    a = geometric(4)
    b = exp_series(4)
    assert ps_arith(a, b, "add").coeffs == (a + b).coeffs
    assert ps_arith(a, b, "mul").coeffs == (a * b).coeffs
    with pytest.raises(DomainError):
        ps_arith(a, b, "pow")


def test_truncation_never_extends():
    s = geometric(5)
    assert s.truncated(3).order == 3
    with pytest.raises(DomainError):
        s.truncated(6)


def test_compose_order_rule():
    outer = geometric(3)
    inner = PowerSeries((Fraction(0), Fraction(0), Fraction(1),
                         Fraction(0), Fraction(0), Fraction(0)))
    out = ps_compose(outer, inner)
    # valuation 2, outer order 3: trusted order min(5, 2*4 - 1) = 5
    assert out.order == 5
    assert out.coeffs == (Fraction(1), Fraction(0), Fraction(1),
                          Fraction(0), Fraction(1), Fraction(0))


def test_compose_rejects_nonzero_constant():
    with pytest.raises(NonzeroConstantTerm):
        ps_compose(geometric(3), geometric(3))


def test_compose_zero_inner_is_constant():
    zero = PowerSeries((Fraction(0),) * 5)
    out = ps_compose(geometric(3), zero)
    assert out.coeffs == (Fraction(1),) + (Fraction(0),) * 4


def test_catalogue_and_order_validation():
    with pytest.raises(UnknownFunction):
        elementary_series("cosh", 1, 4)
    with pytest.raises(DomainError):
        elementary_series("sin", 1, -1)
    with pytest.raises(DomainError):
        PowerSeries(())
    with pytest.raises(DomainError):
        hypergeom_series(-2)
    with pytest.raises(DomainError):
        u_series(-1)
    with pytest.raises(DomainError):
        alpha_from_generating(1)
    with pytest.raises(DomainError):
        quadratic_transform_check(3)
