"""Exact Landau constants, expansion coefficients, and certified sign checks."""

from .cli import RunConfig, run
from .coeffs import (CoeffTable, DerivedCoeffs, alpha_table, beta_from_alpha,
                     coefficient_asymptotic_deviation, d_coeff)
from .config import VERSION, Limits, active_limits
from .enclosure import (Enclosure, certify_sign, certify_sign_escalating,
                        const_euler_gamma, const_ln, const_pi, exact_fraction)
from .errors import (DivisorNotUnit, DomainError, InvalidOrderClass,
                     LandaukitError, NonPositiveArgument, NonzeroConstantTerm,
                     ResourceLimit, UnknownFunction)
from .landau import LandauTable, gn_exact, gn_table, pi_gn_enclosure
from .proofs import (ProofCheckRecord, check_direct_values,
                     check_paired_increment_positivity,
                     check_paired_increment_reference,
                     check_residual_even_coeffs, check_residual_identities,
                     check_residual_paired_coeffs, paired_increment_parts,
                     r_coeff)
from .reports import EXACT, PointVerdict, Verdict, VerificationReport
from .series import (PowerSeries, alpha_from_generating, elementary_series,
                     hypergeom_series, ps_arith, ps_compose,
                     quadratic_transform_check, u_series)
from .verify import (ApproximantSpec, RatioTable, approximant,
                     check_alpha_cross_oracle, check_beta_properties,
                     check_coefficient_envelope, check_coefficient_signs,
                     check_deviation_trend, check_error_sign_pattern,
                     check_generating_relations, check_ratio_bounds,
                     check_residual_sign, check_sharp_bounds, epsilon,
                     residual_weights)

__version__ = VERSION

__all__ = [
    "ApproximantSpec",
    "CoeffTable",
    "DerivedCoeffs",
    "DivisorNotUnit",
    "DomainError",
    "EXACT",
    "Enclosure",
    "InvalidOrderClass",
    "LandauTable",
    "LandaukitError",
    "Limits",
    "NonPositiveArgument",
    "NonzeroConstantTerm",
    "PointVerdict",
    "PowerSeries",
    "ProofCheckRecord",
    "RatioTable",
    "ResourceLimit",
    "RunConfig",
    "UnknownFunction",
    "Verdict",
    "VerificationReport",
    "active_limits",
    "alpha_from_generating",
    "alpha_table",
    "approximant",
    "beta_from_alpha",
    "certify_sign",
    "certify_sign_escalating",
    "check_alpha_cross_oracle",
    "check_beta_properties",
    "check_coefficient_envelope",
    "check_coefficient_signs",
    "check_deviation_trend",
    "check_direct_values",
    "check_error_sign_pattern",
    "check_generating_relations",
    "check_paired_increment_positivity",
    "check_paired_increment_reference",
    "check_ratio_bounds",
    "check_residual_even_coeffs",
    "check_residual_identities",
    "check_residual_paired_coeffs",
    "check_residual_sign",
    "check_sharp_bounds",
    "coefficient_asymptotic_deviation",
    "const_euler_gamma",
    "const_ln",
    "const_pi",
    "d_coeff",
    "elementary_series",
    "epsilon",
    "exact_fraction",
    "gn_exact",
    "gn_table",
    "hypergeom_series",
    "paired_increment_parts",
    "pi_gn_enclosure",
    "ps_arith",
    "ps_compose",
    "quadratic_transform_check",
    "r_coeff",
    "residual_weights",
    "run",
    "u_series",
    "__version__",
]
