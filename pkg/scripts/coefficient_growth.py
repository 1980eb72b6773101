#!/usr/bin/env python3
"""Tabulate how the normalized coefficient families approach their
large-index behaviour.

For each k the even and odd deviation diagnostics are printed next to
the neighbouring gap ratios; the gap ratios crawl toward (2 pi)^2 from
above and the deviations shrink, which is the picture the envelope and
ratio checks certify at fixed scales. Handy for picking sweep ceilings.
"""

import argparse
import math
import sys

from landaukit import (LandaukitError, alpha_table, beta_from_alpha,
                       coefficient_asymptotic_deviation)


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k-max", type=int, default=40,
                        help="largest index to tabulate (default 40)")
    parser.add_argument("--k-min", type=int, default=2)
    parser.add_argument("--precision", type=int, default=256,
                        help="working precision for the deviation column")
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    if args.k_min < 2:
        print("coefficient_growth: --k-min must be at least 2",
              file=sys.stderr)
        return 3
    try:
        coeffs = alpha_table(2 * args.k_max + 3)
        derived = beta_from_alpha(coeffs)
        even = derived.alpha_tilde_even
        odd = derived.alpha_tilde_odd
        header = (f"{'k':>4} {'even_dev':>12} {'odd_dev':>12}"
                  f" {'even_gap':>10} {'odd_gap':>10}")
        print(header)
        print("-" * len(header))
        for k in range(args.k_min, args.k_max + 1):
            even_dev, odd_dev = coefficient_asymptotic_deviation(
                derived, k, args.precision)
            even_gap = even[k - 2] / even[k - 1]
            odd_gap = odd[k - 1] / odd[k]
            print(f"{k:>4} {float(even_dev):>12.6f} {float(odd_dev):>12.6f}"
                  f" {float(even_gap):>10.4f} {float(odd_gap):>10.4f}")
    except LandaukitError as exc:
        print(f"coefficient_growth: {exc}", file=sys.stderr)
        return 3
    print(f"\n(2 pi)^2 = {4 * math.pi ** 2:.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
