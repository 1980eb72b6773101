#!/usr/bin/env python3
"""Run the complete claim catalogue and emit one JSON document.

Unlike the packaged report-all subcommand, which is pinned to the
acceptance scales, every sweep size here is a knob. Per-claim wall-clock
goes to stderr as the run progresses; the JSON (stdout or --output)
carries full point-level detail when --points is given.

Exit code mirrors the packaged tool: 0 all proven, 1 at least one
counterexample, 2 counterexample-free but with Inconclusive points,
3 on a configuration error.
"""

import argparse
import json
import sys
import time

from landaukit import (LandaukitError, alpha_table, beta_from_alpha, proofs,
                       verify)

BOUND_PAIRS = ((1, 0), (2, 3), (5, 4), (5, 7), (9, 11), (13, 12))


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--K", type=int, default=202,
                        help="coefficient table size (default 202)")
    parser.add_argument("--n-max", type=int, default=500,
                        help="index sweep ceiling for sign and bound checks")
    parser.add_argument("--l-max", type=int, default=30,
                        help="truncation sweep ceiling for the sign check")
    parser.add_argument("--residual-n-max", type=int, default=300)
    parser.add_argument("--residual-l-max", type=int, default=15)
    parser.add_argument("--k-max", type=int, default=60,
                        help="envelope and ratio sweep ceiling")
    parser.add_argument("--cross-order", type=int, default=80,
                        help="order of the generating-series cross check")
    parser.add_argument("--precision-ceiling", type=int, default=None,
                        help="bits at which escalation gives up")
    parser.add_argument("--points", action="store_true",
                        help="include per-point verdicts in the JSON")
    parser.add_argument("--output", default=None,
                        help="write the JSON here instead of stdout")
    return parser.parse_args(argv)


def deviation_knobs(K):
    """Largest usable deviation index for a table of size K, plus a
    ladder of even checkpoints inside it; None when K is too small for
    the odd threshold to be meaningful."""
    top = min(K // 2, (K + 1) // 2 - 1)
    if top < 10:
        return None
    ladder = tuple(k for k in (10, 20, 40, 80) if k <= top)
    if len(ladder) < 2:
        ladder = (top // 2, top)
    return ladder, top


def build_claims(args):
    coeffs = alpha_table(args.K)
    derived = beta_from_alpha(coeffs)
    ceiling = args.precision_ceiling
    claims = (
        ("coefficient-sign-pattern",
         lambda: verify.check_coefficient_signs(coeffs)),
        ("alpha-cross-oracle",
         lambda: verify.check_alpha_cross_oracle(derived, T=args.cross_order)),
        ("error-sign-pattern",
         lambda: verify.check_error_sign_pattern(
             coeffs, args.n_max, args.l_max, precision_ceiling=ceiling)),
        ("sharp-bounds",
         lambda: verify.check_sharp_bounds(
             coeffs, args.n_max, BOUND_PAIRS, precision_ceiling=ceiling)),
        ("residual-sign",
         lambda: verify.check_residual_sign(
             coeffs, args.residual_n_max, args.residual_l_max,
             precision_ceiling=ceiling)),
        ("coefficient-envelope",
         lambda: verify.check_coefficient_envelope(
             derived, args.k_max, precision_ceiling=ceiling)),
        ("ratio-bounds",
         lambda: verify.check_ratio_bounds(derived, k_max=args.k_max)[0]),
        ("residual-even-sign",
         lambda: proofs.check_residual_even_coeffs(coeffs)),
        ("residual-paired-sign",
         lambda: proofs.check_residual_paired_coeffs(coeffs)),
        ("paired-increment-positivity",
         lambda: proofs.check_paired_increment_positivity(coeffs)),
        ("paired-increment-reference",
         lambda: proofs.check_paired_increment_reference(coeffs)),
        ("direct-values",
         lambda: proofs.check_direct_values(coeffs)),
        ("residual-identities",
         lambda: proofs.check_residual_identities(coeffs)),
        ("beta-properties",
         lambda: verify.check_beta_properties(derived)),
        ("generating-relations",
         lambda: verify.check_generating_relations()),
    )
    knobs = deviation_knobs(args.K)
    if knobs is None:
        print("deviation-trend: skipped, table too small", file=sys.stderr)
        return claims
    ladder, top = knobs
    return claims + (
        ("deviation-trend",
         lambda: verify.check_deviation_trend(derived, even_ks=ladder,
                                              odd_k=top)),
    )


def main(argv=None):
    args = parse_args(argv)
    try:
        claims = build_claims(args)
        reports = []
        for name, thunk in claims:
            start = time.monotonic()
            report = thunk()
            elapsed = time.monotonic() - start
            status = ("proven" if report.all_proven
                      else f"{len(report.counterexamples)} counterexamples,"
                           f" {len(report.inconclusive)} inconclusive")
            print(f"{name}: {status} ({elapsed:.2f}s)", file=sys.stderr)
            reports.append(report)
    except (LandaukitError, ValueError) as exc:
        print(f"run_full_certification: {exc}", file=sys.stderr)
        return 3
    if any(r.counterexamples for r in reports):
        code = 1
    elif any(r.inconclusive for r in reports):
        code = 2
    else:
        code = 0
    document = json.dumps({
        "claims": [r.to_dict(include_points=args.points) for r in reports],
        "exit_code": code,
        "all_proven": all(r.all_proven for r in reports),
    }, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
