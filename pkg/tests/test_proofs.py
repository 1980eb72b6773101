"""Exact rational checks behind the alternating-sign induction."""

from fractions import Fraction
from math import factorial

import pytest

from landaukit import (DomainError, alpha_table, check_direct_values,
                       check_paired_increment_positivity,
                       check_paired_increment_reference,
                       check_residual_even_coeffs, check_residual_identities,
                       check_residual_paired_coeffs, d_coeff,
                       paired_increment_parts, r_coeff)

# faithful exact values of the three increment checkpoints, frozen the
# first time the formulas were evaluated; any drift here is a regression
CHECKPOINTS = {
    (0, 4): (Fraction(114139, 327680), Fraction(433, 1024),
             Fraction(-24421, 327680)),
    (1, 5): (Fraction(21991421, 23592960), Fraction(33651, 32768),
             Fraction(-2237299, 23592960)),
    (2, 6): (Fraction(18927891845, 5637144576), Fraction(3740823, 1048576),
             Fraction(-1182772603, 5637144576)),
}


def tilde(coeffs, k):
    parity = k // 2 if k % 2 == 0 else (k - 1) // 2
    return (-1) ** (parity + 1) * coeffs.alpha[k - 1] / factorial(k - 1)


# -- the residue family ------------------------------------------------------


def test_r_first_values(alpha12):
    assert r_coeff(0, 4, alpha12) == Fraction(7, 24)
    assert r_coeff(0, 5, alpha12) == Fraction(-1, 6)
    assert r_coeff(0, 6, alpha12) == Fraction(47, 240)
    for s in range(3, 12):
        assert r_coeff(0, s, alpha12) == d_coeff(0, s)


def test_r_reduces_to_solver_rows(alpha12):
    # after eliminating all unknowns of a row, what is left is exactly
    # the diagonal times the next coefficient
    for s in range(3, 13):
        l = s - 3
        assert (r_coeff(l, s, alpha12)
                == (s - 2) ** 2 * alpha12.alpha[s - 3])


def test_r_domain(alpha12):
    with pytest.raises(DomainError):
        r_coeff(-1, 5, alpha12)
    with pytest.raises(DomainError):
        r_coeff(2, 4, alpha12)
    with pytest.raises(DomainError):
        r_coeff(13, 30, alpha12)


def test_anchor_identities(alpha12):
    assert (-r_coeff(0, 5, alpha12) - r_coeff(0, 6, alpha12) / 2
            == Fraction(11, 160))
    for j in range(3, 12):
        assert d_coeff(1, 2 * j + 2) * alpha12.alpha[0] == Fraction(3, 16)
    report = check_residual_identities(alpha12)
    assert report.all_proven
    assert report.max_precision_bits == 0


def test_even_and_paired_sign_windows(alpha202):
    even = check_residual_even_coeffs(alpha202, l_max=4, j_span=12)
    paired = check_residual_paired_coeffs(alpha202, l_max=4, j_span=12)
    assert even.all_proven and paired.all_proven
    assert not even.inconclusive and not paired.inconclusive
    with pytest.raises(DomainError):
        check_residual_even_coeffs(alpha202, l_max=102)


# -- the increment split -----------------------------------------------------


def test_parts_domain(alpha12):
    with pytest.raises(DomainError):
        paired_increment_parts(alpha12, -1, 5)
    with pytest.raises(DomainError):
        paired_increment_parts(alpha12, 1, 4)
    with pytest.raises(DomainError):
        paired_increment_parts(alpha12, 5, 12)


def test_split_recovers_signed_residue(alpha202):
    for l in range(5):
        for j in range(l + 4, l + 13):
            record = paired_increment_parts(alpha202, l, j)
            assert (record.r_even_sum + record.r_odd_sum
                    == (-1) ** l * r_coeff(2 * l, 2 * j + 2, alpha202))


def test_split_component_signs(alpha202):
    for l in range(5):
        for j in range(l + 4, l + 13):
            record = paired_increment_parts(alpha202, l, j)
            assert record.r_even_sum > 0
            assert record.r_odd_sum >= 0


def test_increment_advances_the_paired_residue(alpha202):
    # moving the truncation from 2l to 2l+4 changes the signed paired
    # residue by exactly o + e
    for l in range(4):
        for j in range(l + 4, l + 13):
            record = paired_increment_parts(alpha202, l, j)
            before = (-1) ** (l + 1) * (
                r_coeff(2 * l, 2 * j + 1, alpha202)
                + r_coeff(2 * l, 2 * j + 2, alpha202) / 2)
            after = (-1) ** (l + 3) * (
                r_coeff(2 * l + 4, 2 * j + 1, alpha202)
                + r_coeff(2 * l + 4, 2 * j + 2, alpha202) / 2)
            assert after == before + record.o_term + record.e_term


def test_even_mass_recurrence(alpha202):
    for l in range(4):
        for j in range(l + 6, l + 14):
            low = paired_increment_parts(alpha202, l, j)
            high = paired_increment_parts(alpha202, l + 2, j)
            step = (-1) ** (l + 1) * (
                d_coeff(2 * l + 2, 2 * j + 2) * alpha202.alpha[2 * l + 1]
                + d_coeff(2 * l + 4, 2 * j + 2) * alpha202.alpha[2 * l + 3])
            assert high.r_even_sum - low.r_even_sum == step


def test_boundary_identity(alpha202):
    # the first admissible window of the paired residue, written through
    # the normalized coefficients; l = 0 gives 5/48
    for l in range(7):
        lhs = (-1) ** (l + 1) * (
            r_coeff(2 * l, 2 * l + 3, alpha202)
            + r_coeff(2 * l, 2 * l + 4, alpha202) / 2)
        a1 = tilde(alpha202, 2 * l + 1)
        a2 = tilde(alpha202, 2 * l + 2)
        rhs = factorial(2 * l) * a1 * (
            Fraction((2 * l + 1) * (12 * l + 5), 8)
            - a2 / a1 * (2 * l + 2) ** 2 * (2 * l + 1) / 2)
        assert lhs == rhs
        if l == 0:
            assert lhs == Fraction(5, 48)


def test_order_two_paired_closed_form(alpha12):
    for j in range(3, 21):
        lhs = (r_coeff(2, 2 * j + 1, alpha12)
               + r_coeff(2, 2 * j + 2, alpha12) / 2)
        rhs = (Fraction(5 * j, 768) + Fraction(281, 1536)
               - (Fraction(1, 2 * j) - Fraction(1, 2 * j + 2))
               - (Fraction(1, 2 * (2 * j + 1)) - Fraction(1, 4 * (2 * j - 1)))
               + Fraction(1, 16 * j))
        assert lhs == rhs


def test_checkpoint_values_frozen(alpha12):
    for (l, j), (total, o, e) in CHECKPOINTS.items():
        record = paired_increment_parts(alpha12, l, j)
        assert record.o_term == o
        assert record.e_term == e
        assert record.o_term + record.e_term == total


# -- report-level checks -----------------------------------------------------


def test_positivity_report(alpha12):
    report = check_paired_increment_positivity(alpha12, l_max=3, j_span=12)
    assert report.all_proven
    assert not report.inconclusive


def test_reference_comparison_reports_honestly(alpha12):
    report = check_paired_increment_reference(alpha12)
    assert not report.all_proven
    assert len(report.counterexamples) == 3
    assert not report.inconclusive
    points = {v.point for v in report.counterexamples}
    assert points == {(0, 4), (1, 5), (2, 6)}
    for v in report.counterexamples:
        assert "computed" in v.detail and "reference" in v.detail


def test_direct_values_report(alpha12):
    report = check_direct_values(alpha12)
    assert report.all_proven
    kinds = {v.point[0] for v in report.verdicts}
    assert kinds == {"value", "positive"}
    with pytest.raises(DomainError):
        check_direct_values(alpha_table(11))
