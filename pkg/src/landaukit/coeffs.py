"""Expansion coefficients alpha_k and the families derived from them.

alpha_k is the coefficient of 1/N^k in the asymptotic expansion of
pi * G_n in N = n + 1 beyond ln(16 N) + euler_gamma. The d(k, s)
entries below are the coefficients of the lower-triangular linear
system that pins the alpha down; solving it in increasing s yields one
new alpha per step, exactly, with d(s-2, s) = (s-2)^2 on the diagonal.

Derived families, all exact:

  alpha_tilde   sign-normalized, factorial-scaled alpha; always positive
  beta          the same expansion rewritten in powers of 1/(4N);
                beta vanishes at every odd index
  rho           beta_{2s} rescaled by (2s-1)! with the alternating sign
                removed; these are the Maclaurin coefficients of the
                generating series built independently in the series
                module
  gamma_coeffs  the alternating copy (-1)^k alpha_k that plays the role
                of alpha when the expansion variable is shifted by one
                half
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .config import Limits, active_limits
from .enclosure import const_ln, const_pi
from .errors import DomainError, ResourceLimit


def d_coeff(k: int, s: int) -> Fraction:
    """Entry d(k, s) of the triangular system.

    Defined for k = 0 with s >= 3, for the diagonal k = s - 2 with
    s >= 3, and for 1 <= k <= s - 3. Anything else is outside the
    system and raises.
    """
    if k == 0 and s >= 3:
        even = 2 if s % 2 == 0 else 0
        return Fraction(even, s) - Fraction(1, s - 1) + Fraction(1, 4 * (s - 2))
    if k == s - 2 and s >= 3:
        return Fraction((s - 2) ** 2)
    if 1 <= k <= s - 3:
        even = 2 if (s - k) % 2 == 0 else 0
        return (Fraction(even * comb(s - 1, k - 1))
                - comb(s - 2, k - 1)
                + Fraction(comb(s - 3, k - 1), 4))
    raise DomainError(f"d(k, s) undefined at k={k}, s={s}")


@dataclass(frozen=True)
class CoeffTable:
    """alpha_1..alpha_K as exact rationals; alpha[i] holds alpha_{i+1}."""

    alpha: tuple[Fraction, ...]

    @property
    def K(self) -> int:
        return len(self.alpha)

    def alpha_k(self, k: int) -> Fraction:
        if not 1 <= k <= self.K:
            raise DomainError(f"alpha_{k} not in table (K={self.K})")
        return self.alpha[k - 1]


def alpha_table(K: int, limits: Limits | None = None) -> CoeffTable:
    """Solve the triangular system for alpha_1..alpha_K, exactly."""
    lim = limits or active_limits()
    if K < 1:
        raise DomainError("K must be at least 1")
    if K > lim.max_coeff_index:
        raise ResourceLimit(
            f"K={K} above ceiling {lim.max_coeff_index}"
            " (raise LANDAUKIT_MAX_K to allow)")
    alpha: list[Fraction] = []
    for s in range(3, K + 3):
        acc = d_coeff(0, s)
        for k in range(1, s - 2):
            acc -= d_coeff(k, s) * alpha[k - 1]
        alpha.append(acc / ((s - 2) ** 2))
    return CoeffTable(tuple(alpha))


@dataclass(frozen=True)
class DerivedCoeffs:
    """The derived families; see the module docstring for index layout.

    alpha_tilde_even[k-1] holds alpha_tilde_{2k} for k >= 1.
    alpha_tilde_odd[k] holds alpha_tilde_{2k+1} for k >= 0.
    beta[j-1] holds beta_j. rho[s] holds rho_s with rho_0 = 1.
    gamma_coeffs[k-1] holds (-1)^k alpha_k.
    """

    alpha_tilde_even: tuple[Fraction, ...]
    alpha_tilde_odd: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    rho: tuple[Fraction, ...]
    gamma_coeffs: tuple[Fraction, ...]

    def alpha_tilde(self, k: int) -> Fraction:
        """alpha_tilde_k for either parity of k."""
        if k < 1:
            raise DomainError("alpha_tilde starts at index 1")
        if k % 2 == 0:
            if k // 2 > len(self.alpha_tilde_even):
                raise DomainError(f"alpha_tilde_{k} not derived")
            return self.alpha_tilde_even[k // 2 - 1]
        if (k - 1) // 2 >= len(self.alpha_tilde_odd):
            raise DomainError(f"alpha_tilde_{k} not derived")
        return self.alpha_tilde_odd[(k - 1) // 2]


def beta_from_alpha(table: CoeffTable) -> DerivedCoeffs:
    """All derived families, by exact triangular inversion.

    The beta recurrence folds the binomial reshuffle between the 1/N
    and 1/(4N) scales into one pass; its output is cross-checked against
    the independent series construction in the test suite.
    """
    K = table.K
    beta: list[Fraction] = []
    for k in range(1, K + 1):
        acc = Fraction(4) ** k * table.alpha[k - 1] + Fraction(1, k)
        top = factorial(k - 1)
        for j in range(1, k):
            acc -= Fraction(top * 4 ** j,
                            factorial(j - 1) * factorial(k - j)) * beta[j - 1]
        beta.append(acc / Fraction(4) ** k)

    tilde_even = tuple(
        (-1) ** (k + 1) * table.alpha[2 * k - 1] / factorial(2 * k - 1)
        for k in range(1, K // 2 + 1))
    tilde_odd = tuple(
        (-1) ** (k + 1) * table.alpha[2 * k] / factorial(2 * k)
        for k in range((K - 1) // 2 + 1))
    rho = (Fraction(1),) + tuple(
        (-1) ** (s + 1) * beta[2 * s - 1] / factorial(2 * s - 1)
        for s in range(1, K // 2 + 1))
    gamma = tuple((-1) ** k * table.alpha[k - 1] for k in range(1, K + 1))
    return DerivedCoeffs(
        alpha_tilde_even=tilde_even,
        alpha_tilde_odd=tilde_odd,
        beta=tuple(beta),
        rho=rho,
        gamma_coeffs=gamma,
    )


def coefficient_asymptotic_deviation(derived: DerivedCoeffs, k: int,
                                     precision_bits: int = 256
                                     ) -> tuple[Fraction, Fraction]:
    """Relative deviation of alpha_{2k} and alpha_{2k+1} from their
    large-k approximations, as enclosure midpoints.

    The even deviation is |alpha_tilde_{2k} (2k-1) (2pi)^{2k} / 2 - 1|
    and decays like 1/k; the odd one replaces the constant target by
    4 ln(2k+1) and decays like 1/ln k. Both are diagnostics rather than
    certified bounds, which is why midpoints are returned instead of
    enclosures.
    """
    if k < 1:
        raise DomainError("deviations start at k = 1")
    if k > len(derived.alpha_tilde_even) or k >= len(derived.alpha_tilde_odd):
        raise DomainError(f"need alpha up to index {2 * k + 1}")
    two_pi = const_pi(precision_bits) * 2
    even_expr = (two_pi.pow_int(2 * k)
                 * (derived.alpha_tilde_even[k - 1] * (2 * k - 1) / 2) - 1)
    log_term = const_ln(2 * k + 1, precision_bits)
    odd_expr = (two_pi.pow_int(2 * k + 2) * derived.alpha_tilde_odd[k]
                / (log_term * 8) - 1)
    return abs(even_expr.midpoint()), abs(odd_expr.midpoint())
