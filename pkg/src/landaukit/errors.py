"""Exception types shared across the package."""


class LandaukitError(Exception):
    """Base class for every error this package raises on purpose."""


class ResourceLimit(LandaukitError):
    """A requested table size or precision exceeds a configured ceiling."""


class DomainError(LandaukitError, ValueError):
    """Arguments lie outside the mathematical domain of an operation."""


class NonPositiveArgument(DomainError):
    """A logarithm was requested for a number that is not strictly positive."""


class DivisorNotUnit(LandaukitError, ZeroDivisionError):
    """Power-series division needs a divisor with a nonzero constant term."""


class NonzeroConstantTerm(DomainError):
    """Power-series composition needs an inner series that vanishes at 0."""


class UnknownFunction(DomainError):
    """The requested name is not in the elementary-series catalogue."""


class InvalidOrderClass(DomainError):
    """A truncation order whose residue class cannot give a one-sided bound."""
