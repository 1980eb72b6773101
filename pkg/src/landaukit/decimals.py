"""Exact decimal rendering of rationals for table reproduction.

Everything works on integers scaled by powers of ten, so a rendered
string is a statement about the exact rational, not about any
intermediate float.
"""

from __future__ import annotations

from fractions import Fraction


def _format(sign: str, units: int, places: int) -> str:
    digits = str(units).rjust(places + 1, "0")
    if places:
        return f"{sign}{digits[:-places]}.{digits[-places:]}"
    return sign + digits


def round_half_even(value: Fraction, places: int) -> str:
    """Decimal string with the given fractional digits, ties to even."""
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10 ** places
    units, remainder = divmod(scaled.numerator, scaled.denominator)
    doubled = Fraction(2 * remainder, scaled.denominator)
    if doubled > 1 or (doubled == 1 and units % 2 == 1):
        units += 1
    return _format(sign, units, places)


def truncate(value: Fraction, places: int) -> str:
    """Decimal string with the given fractional digits, toward zero."""
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10 ** places
    return _format(sign, scaled.numerator // scaled.denominator, places)


def classify_display(value: Fraction, displayed: str, places: int) -> str:
    """How an exact value relates to a published decimal string.

    "round": round-half-even reproduces the string exactly.
    "truncate": truncation reproduces it (the likely convention when
        rounding does not).
    "ulp": within one unit in the last displayed place.
    "off": further away than that.
    """
    if round_half_even(value, places) == displayed:
        return "round"
    if truncate(value, places) == displayed:
        return "truncate"
    if abs(value - Fraction(displayed)) <= Fraction(1, 10 ** places):
        return "ulp"
    return "off"
