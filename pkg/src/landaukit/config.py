"""Hard ceilings for table sizes and working precision.

Ceilings exist so that a typo in a sweep request fails fast instead of
grinding through a factorially growing computation. Each ceiling can be
moved through an environment variable; the CLI help text lists them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

VERSION = "0.1.0"

ENV_MAX_COEFF = "LANDAUKIT_MAX_K"
ENV_MAX_INDEX = "LANDAUKIT_MAX_N"
ENV_MAX_PRECISION = "LANDAUKIT_MAX_PRECISION"


@dataclass(frozen=True)
class Limits:
    """Resource ceilings plus the starting precision of the escalation ladder."""

    max_coeff_index: int = 400
    max_landau_index: int = 100_000
    start_precision: int = 128
    max_precision: int = 4096

    def __post_init__(self) -> None:
        for name in ("max_coeff_index", "max_landau_index", "start_precision",
                     "max_precision"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if self.start_precision < 16:
            raise ValueError("start_precision must be at least 16 bits")
        if self.max_precision < self.start_precision:
            raise ValueError("max_precision must not be below start_precision")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def active_limits() -> Limits:
    """Default limits with environment overrides applied, read at call time.

    Lowering the precision ceiling below the default starting precision
    pulls the start down with it, so the escalation ladder stays valid.
    """
    base = Limits()
    max_precision = _env_int(ENV_MAX_PRECISION, base.max_precision)
    return Limits(
        max_coeff_index=_env_int(ENV_MAX_COEFF, base.max_coeff_index),
        max_landau_index=_env_int(ENV_MAX_INDEX, base.max_landau_index),
        start_precision=min(base.start_precision, max_precision),
        max_precision=max_precision,
    )
