"""Directed-rounding interval arithmetic on MPFR endpoints.

An Enclosure is a pair of floating endpoints produced under explicit
rounding modes, so the real number being tracked stays inside [lo, hi]
no matter how many operations were chained. That outward discipline is
what turns a floating computation into a proof of a strict inequality:
once hi < 0, every number the interval could stand for is negative.

Endpoints are gmpy2.mpfr values. Every operation picks its working
precision from the operands (the larger of the two), rounds the low
endpoint toward -inf and the high endpoint toward +inf, one rounding
per endpoint per operation. Exact rational operands are bracketed
outward into an endpoint pair first, then treated like a degenerate
interval; operating on a raw mpq directly would let the implicit
conversion round in the wrong direction whenever the operation is
decreasing in that operand. There is no fast non-rigorous mode; code
that wants speed over rigour has no business importing this module.

The constants come from MPFR's correctly rounded implementations,
bracketed by evaluating once under each rounding mode. The test suite
checks them against an independent arbitrary-precision implementation
and against embedded digit literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import gmpy2
from gmpy2 import RoundDown, RoundUp, context, mpfr, mpq

from .errors import DomainError, NonPositiveArgument
from .reports import Verdict


def _to_mpq(value) -> mpq:
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, mpq):
        return value
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def exact_fraction(endpoint) -> Fraction:
    """The exact rational value of a finite mpfr (binary floats are rational)."""
    if not gmpy2.is_finite(endpoint):
        raise OverflowError("endpoint is not finite")
    as_q = mpq(endpoint)
    return Fraction(int(as_q.numerator), int(as_q.denominator))


@dataclass(frozen=True)
class Enclosure:
    lo: "mpfr"
    hi: "mpfr"
    precision_bits: int

    def __post_init__(self) -> None:
        if gmpy2.is_nan(self.lo) or gmpy2.is_nan(self.hi):
            raise DomainError("enclosure endpoint is NaN")
        if not self.lo <= self.hi:
            raise DomainError("enclosure endpoints out of order")
        if self.precision_bits < 2:
            raise DomainError("precision_bits must be at least 2")

    @classmethod
    def from_rational(cls, value, precision_bits: int) -> "Enclosure":
        """Tightest enclosure of an exact rational at the given precision."""
        as_q = _to_mpq(value)
        with context(precision=precision_bits, round=RoundDown):
            lo = mpfr(as_q)
        with context(precision=precision_bits, round=RoundUp):
            hi = mpfr(as_q)
        return cls(lo, hi, precision_bits)

    # -- exact views ---------------------------------------------------

    @property
    def exact_lo(self) -> Fraction:
        return exact_fraction(self.lo)

    @property
    def exact_hi(self) -> Fraction:
        return exact_fraction(self.hi)

    def width(self) -> Fraction:
        return self.exact_hi - self.exact_lo

    def midpoint(self) -> Fraction:
        return (self.exact_lo + self.exact_hi) / 2

    def contains(self, value) -> bool:
        as_q = value if isinstance(value, Fraction) else Fraction(value)
        return self.exact_lo <= as_q <= self.exact_hi

    # -- arithmetic ----------------------------------------------------

    def _operands(self, other):
        if isinstance(other, Enclosure):
            return other.lo, other.hi, max(self.precision_bits, other.precision_bits)
        if isinstance(other, (int, Fraction, mpq)):
            # bracket the rational outward BEFORE any arithmetic: gmpy2
            # converts an mpq operand under the ambient rounding mode and
            # then operates, which flips direction when the operation is
            # decreasing in that operand (negative factor, subtrahend)
            as_q = _to_mpq(other)
            with context(precision=self.precision_bits, round=RoundDown):
                olo = mpfr(as_q)
            with context(precision=self.precision_bits, round=RoundUp):
                ohi = mpfr(as_q)
            return olo, ohi, self.precision_bits
        return None

    def __add__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        olo, ohi, bits = ops
        with context(precision=bits, round=RoundDown):
            lo = self.lo + olo
        with context(precision=bits, round=RoundUp):
            hi = self.hi + ohi
        return Enclosure(lo, hi, bits)

    __radd__ = __add__

    def __neg__(self):
        # negation at matching precision is exact under any rounding mode
        with context(precision=self.precision_bits):
            return Enclosure(-self.hi, -self.lo, self.precision_bits)

    def __sub__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        olo, ohi, bits = ops
        with context(precision=bits, round=RoundDown):
            lo = self.lo - ohi
        with context(precision=bits, round=RoundUp):
            hi = self.hi - olo
        return Enclosure(lo, hi, bits)

    def __rsub__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        olo, ohi, bits = ops
        with context(precision=bits, round=RoundDown):
            lo = olo - self.hi
        with context(precision=bits, round=RoundUp):
            hi = ohi - self.lo
        return Enclosure(lo, hi, bits)

    def __mul__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        olo, ohi, bits = ops
        with context(precision=bits, round=RoundDown):
            lo = min(self.lo * olo, self.lo * ohi, self.hi * olo, self.hi * ohi)
        with context(precision=bits, round=RoundUp):
            hi = max(self.lo * olo, self.lo * ohi, self.hi * olo, self.hi * ohi)
        return Enclosure(lo, hi, bits)

    __rmul__ = __mul__

    def __truediv__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        olo, ohi, bits = ops
        if olo <= 0 <= ohi:
            raise ZeroDivisionError("divisor enclosure contains zero")
        with context(precision=bits, round=RoundDown):
            lo = min(self.lo / olo, self.lo / ohi, self.hi / olo, self.hi / ohi)
        with context(precision=bits, round=RoundUp):
            hi = max(self.lo / olo, self.lo / ohi, self.hi / olo, self.hi / ohi)
        return Enclosure(lo, hi, bits)

    def __rtruediv__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        olo, ohi, bits = ops
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("divisor enclosure contains zero")
        with context(precision=bits, round=RoundDown):
            lo = min(olo / self.lo, olo / self.hi, ohi / self.lo, ohi / self.hi)
        with context(precision=bits, round=RoundUp):
            hi = max(olo / self.lo, olo / self.hi, ohi / self.lo, ohi / self.hi)
        return Enclosure(lo, hi, bits)

    def pow_int(self, exponent: int) -> "Enclosure":
        """Integer power, exact semantics, outward rounded.

        On strictly positive intervals this uses directed MPFR pow, which
        is monotone there; otherwise it falls back to binary
        exponentiation through interval products.
        """
        if exponent < 0:
            raise DomainError("negative exponents are not supported")
        if exponent == 0:
            return Enclosure.from_rational(1, self.precision_bits)
        if self.lo > 0:
            with context(precision=self.precision_bits, round=RoundDown):
                lo = self.lo ** exponent
            with context(precision=self.precision_bits, round=RoundUp):
                hi = self.hi ** exponent
            return Enclosure(lo, hi, self.precision_bits)
        result = Enclosure.from_rational(1, self.precision_bits)
        base = self
        remaining = exponent
        while remaining:
            if remaining & 1:
                result = result * base
            remaining >>= 1
            if remaining:
                base = base * base
        return result

    def abs(self) -> "Enclosure":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        with context(precision=self.precision_bits):
            return Enclosure(mpfr(0), max(-self.lo, self.hi), self.precision_bits)


def _require_bits(precision_bits: int) -> None:
    if precision_bits < 16:
        raise DomainError("precision_bits must be at least 16")


def const_pi(precision_bits: int) -> Enclosure:
    """Enclosure of pi, a few ulp wide at the requested precision."""
    _require_bits(precision_bits)
    with context(precision=precision_bits, round=RoundDown):
        lo = gmpy2.const_pi()
    with context(precision=precision_bits, round=RoundUp):
        hi = gmpy2.const_pi()
    return Enclosure(lo, hi, precision_bits)


def const_euler_gamma(precision_bits: int) -> Enclosure:
    """Enclosure of the Euler-Mascheroni constant."""
    _require_bits(precision_bits)
    with context(precision=precision_bits, round=RoundDown):
        lo = gmpy2.const_euler()
    with context(precision=precision_bits, round=RoundUp):
        hi = gmpy2.const_euler()
    return Enclosure(lo, hi, precision_bits)


def const_ln(value, precision_bits: int) -> Enclosure:
    """Enclosure of ln(value) for a strictly positive rational.

    The argument is bracketed first at a guard precision, then the log
    of each bracket endpoint is taken under the matching rounding mode;
    monotonicity of ln keeps the result an enclosure regardless of how
    the two rounding steps interact.
    """
    _require_bits(precision_bits)
    as_q = _to_mpq(value)
    if as_q <= 0:
        raise NonPositiveArgument(f"ln needs a positive argument, got {value}")
    guard = precision_bits + 32
    with context(precision=guard, round=RoundDown):
        arg_lo = mpfr(as_q)
    with context(precision=guard, round=RoundUp):
        arg_hi = mpfr(as_q)
    with context(precision=precision_bits, round=RoundDown):
        lo = gmpy2.log(arg_lo)
    with context(precision=precision_bits, round=RoundUp):
        hi = gmpy2.log(arg_hi)
    return Enclosure(lo, hi, precision_bits)


def certify_sign(enclosure: Enclosure) -> Verdict:
    """Machine verdict on the sign of everything the enclosure contains."""
    if enclosure.lo > 0:
        return Verdict.PROVEN_POSITIVE
    if enclosure.hi < 0:
        return Verdict.PROVEN_NEGATIVE
    return Verdict.INCONCLUSIVE


def certify_sign_escalating(make: Callable[[int], Enclosure],
                            start_bits: int,
                            ceiling_bits: int) -> tuple[Verdict, int]:
    """Evaluate make(bits) at doubling precision until the sign resolves.

    Returns the verdict with the precision that produced it. Inconclusive
    comes back only after the ceiling itself has been tried.
    """
    bits = min(start_bits, ceiling_bits)
    while True:
        verdict = certify_sign(make(bits))
        if verdict is not Verdict.INCONCLUSIVE or bits >= ceiling_bits:
            return verdict, bits
        bits = min(bits * 2, ceiling_bits)
