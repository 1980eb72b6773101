"""The constants G_n and rigorous enclosures of pi * G_n.

G_n is the partial sum of the squared ratios ((2m-1)!!/(2m)!!)^2,
accumulated exactly. The direct path keeps a running term multiplied by
((2m-1)/(2m))^2 each step; the table path drives the equivalent
first-difference recurrence. Both are compared against an independent
central-binomial oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import Limits, active_limits
from .enclosure import Enclosure, const_pi
from .errors import DomainError, ResourceLimit


def _check_index(n: int, limits: Limits | None) -> Limits:
    lim = limits or active_limits()
    if n < 0:
        raise DomainError("index must be non-negative")
    if n > lim.max_landau_index:
        raise ResourceLimit(
            f"index {n} above ceiling {lim.max_landau_index}"
            " (raise LANDAUKIT_MAX_N to allow)")
    return lim


def gn_exact(n: int, limits: Limits | None = None) -> Fraction:
    """G_n as an exact rational, by direct summation."""
    _check_index(n, limits)
    total = Fraction(1)
    term = Fraction(1)
    for m in range(1, n + 1):
        term *= Fraction((2 * m - 1) ** 2, (2 * m) ** 2)
        total += term
    return total


@dataclass(frozen=True)
class LandauTable:
    """G_0..G_n_max as exact rationals; strictly increasing."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise DomainError("table must hold at least G_0")
        if self.values[0] != 1:
            raise DomainError("table must start at G_0 = 1")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]


def gn_table(n_max: int, limits: Limits | None = None) -> LandauTable:
    """G_0..G_n_max via the first-difference recurrence.

    The increment G_{n+1} - G_n shrinks by the factor ((2n+1)/(2n+2))^2
    each step, starting from G_1 - G_0 = 1/4.
    """
    _check_index(n_max, limits)
    values = [Fraction(1)]
    diff = Fraction(1, 4)
    for n in range(1, n_max + 1):
        values.append(values[-1] + diff)
        diff *= Fraction((2 * n + 1) ** 2, (2 * n + 2) ** 2)
    return LandauTable(tuple(values))


def pi_gn_enclosure(n: int, precision_bits: int, *,
                    gn: Fraction | None = None,
                    limits: Limits | None = None) -> Enclosure:
    """Enclosure of pi * G_n; pass gn to reuse a table value."""
    if gn is None:
        gn = gn_exact(n, limits)
    else:
        _check_index(n, limits)
    return const_pi(precision_bits) * gn
