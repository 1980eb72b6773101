"""Command-line front end.

Every subcommand is a thin wrapper over the library: build the exact
tables, run the requested checks, serialize. Output bytes are a pure
function of the arguments; run metadata (timestamp, version) goes to a
sidecar file, and only when --output is given, so that captured stdout
can be diffed across runs.

Exit codes: 0 all requested checks proven (or data written), 1 at least
one proven counterexample, 2 no counterexample but at least one point
unresolved at the precision ceiling, 3 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import proofs, verify
from .coeffs import CoeffTable, alpha_table, beta_from_alpha
from .config import (ENV_MAX_COEFF, ENV_MAX_INDEX, ENV_MAX_PRECISION,
                     VERSION, active_limits)
from .errors import LandaukitError
from .landau import gn_table
from .reports import VerificationReport

_FORMATS = ("text", "json", "csv")

_BOUND_PAIRS_DEFAULT = "1:0,2:3,5:4,5:7,9:11,13:12"


@dataclass(frozen=True)
class RunConfig:
    """Parsed arguments for one invocation, ready for run()."""

    command: str
    n_max: int | None = None
    l_max: int | None = None
    K: int | None = None
    k_max: int | None = None
    j_span: int | None = None
    pairs: tuple[tuple[int, int], ...] | None = None
    precision_ceiling: int | None = None
    format: str = "text"
    output_path: str | None = None
    corrupt_coefficient: int | None = None


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here reserves 2 for
    # inconclusive verification, so usage errors remap to 3
    def error(self, message: str) -> None:
        self.exit(3, f"landaukit: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="landaukit",
        description="Exact expansion coefficients and certified sign "
                    "checks for the Landau constants.",
        epilog=(
            "environment overrides:\n"
            f"  {ENV_MAX_COEFF}          largest coefficient index "
            "(default 400)\n"
            f"  {ENV_MAX_INDEX}          largest constant index "
            "(default 100000)\n"
            f"  {ENV_MAX_PRECISION}  largest working precision in bits "
            "(default 4096)\n"),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=_FORMATS, default="text",
                        help="output format (default: text)")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write to PATH instead of stdout; a "
                             "PATH.meta.json sidecar records run metadata")
    ceiling = argparse.ArgumentParser(add_help=False)
    ceiling.add_argument("--precision-ceiling", type=int, metavar="BITS",
                         default=None,
                         help="stop escalating at BITS instead of the "
                              "configured maximum")
    corrupt = argparse.ArgumentParser(add_help=False)
    corrupt.add_argument("--corrupt-coefficient", type=int, metavar="K",
                         default=None, help=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="COMMAND")

    p = sub.add_parser("coeffs", parents=[common, corrupt],
                       help="exact expansion coefficients alpha_1..alpha_K")
    p.add_argument("--K", type=int, default=12,
                   help="number of coefficients (default: 12)")

    p = sub.add_parser("gn", parents=[common],
                       help="exact constants G_0..G_n")
    p.add_argument("--n-max", type=int, default=50,
                   help="largest index (default: 50)")

    p = sub.add_parser("table1", parents=[common, corrupt],
                       help="scaled-ratio table plus exact ratio bounds")
    p.add_argument("--k-max", type=int, default=60,
                   help="largest index for the exact bounds (default: 60)")

    p = sub.add_parser("verify-theorem", parents=[common, ceiling, corrupt],
                       help="certify the period-four sign of the error term")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--l-max", type=int, default=20)

    p = sub.add_parser("verify-bounds", parents=[common, ceiling, corrupt],
                       help="certify two-sided approximant bounds")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--pairs", default=_BOUND_PAIRS_DEFAULT,
                   help="comma-separated lower:upper truncation orders "
                        f"(default: {_BOUND_PAIRS_DEFAULT})")

    p = sub.add_parser("verify-lemma3", parents=[common, ceiling, corrupt],
                       help="certify the sign of the second-difference "
                            "residual")
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--l-max", type=int, default=10)

    p = sub.add_parser("verify-lemma4", parents=[common, ceiling, corrupt],
                       help="certify envelopes for the normalized "
                            "coefficients")
    p.add_argument("--k-max", type=int, default=60)

    p = sub.add_parser("verify-section5", parents=[common, corrupt],
                       help="exact sign and identity checks on the "
                            "triangular-system residues")
    p.add_argument("--l-max", type=int, default=10)
    p.add_argument("--j-span", type=int, default=40)

    sub.add_parser("report-all", parents=[common, ceiling, corrupt],
                   help="run the full verification suite at acceptance "
                        "scale; --format json gives one machine-readable "
                        "summary")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    pairs = None
    if getattr(args, "pairs", None) is not None:
        parsed = []
        for chunk in args.pairs.split(","):
            left, sep, right = chunk.partition(":")
            if not sep:
                raise ValueError(f"bad --pairs entry {chunk!r}, "
                                 "expected lower:upper")
            parsed.append((int(left), int(right)))
        pairs = tuple(parsed)
    return RunConfig(
        command=args.command,
        n_max=getattr(args, "n_max", None),
        l_max=getattr(args, "l_max", None),
        K=getattr(args, "K", None),
        k_max=getattr(args, "k_max", None),
        j_span=getattr(args, "j_span", None),
        pairs=pairs,
        precision_ceiling=getattr(args, "precision_ceiling", None),
        format=args.format,
        output_path=args.output,
        corrupt_coefficient=getattr(args, "corrupt_coefficient", None),
    )


def _build_coeffs(K: int, config: RunConfig) -> CoeffTable:
    table = alpha_table(K)
    flip = config.corrupt_coefficient
    if flip is None:
        return table
    if not 1 <= flip <= K:
        raise ValueError(f"--corrupt-coefficient {flip} outside 1..{K}")
    alpha = list(table.alpha)
    alpha[flip - 1] = -alpha[flip - 1]
    return CoeffTable(tuple(alpha))


# ---------------------------------------------------------------------------
# serialization


def _json_dump(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_payload(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _report_text(report: VerificationReport) -> str:
    lines = [f"claim {report.claim_id}"]
    for key, value in sorted(report.sweep.items()):
        lines.append(f"  {key} = {value}")
    bits = report.max_precision_bits
    lines.append(f"  points {len(report.verdicts)}, "
                 f"max precision {'exact' if bits == 0 else f'{bits} bits'}")
    for warning in report.warnings:
        lines.append(f"  warning: {warning}")
    shown = 0
    for v in report.verdicts:
        if v.ok:
            continue
        if shown == 20:
            lines.append("  ... further failing points elided")
            break
        shown += 1
        kind = ("inconclusive" if v.verdict.value == "Inconclusive"
                else "counterexample")
        where = ", ".join(str(part) for part in v.point)
        suffix = f" [{v.detail}]" if v.detail else ""
        lines.append(f"  {kind} at ({where}): {v.verdict.value}{suffix}")
    lines.append("  result: " + ("all proven" if report.all_proven
                                 else "NOT proven"))
    return "\n".join(lines) + "\n"


def _reports_payload(reports: list[VerificationReport],
                     fmt: str) -> str:
    if fmt == "json":
        return _json_dump({"claims": [r.to_dict() for r in reports]})
    if fmt == "csv":
        rows = [[r.claim_id, str(len(r.verdicts)),
                 str(sum(1 for v in r.verdicts if v.ok)),
                 str(len(r.counterexamples)), str(len(r.inconclusive)),
                 str(r.max_precision_bits)]
                for r in reports]
        return _csv_payload(
            ["claim", "points", "proven", "counterexamples",
             "inconclusive", "max_precision_bits"], rows)
    return "".join(_report_text(r) for r in reports)


def _exit_code(reports: list[VerificationReport]) -> int:
    if any(r.counterexamples for r in reports):
        return 1
    if any(r.inconclusive for r in reports):
        return 2
    return 0


def _emit(payload: str, config: RunConfig) -> None:
    if config.output_path is None:
        sys.stdout.write(payload)
        return
    path = Path(config.output_path)
    path.write_text(payload, encoding="utf-8")
    meta = {
        "command": config.command,
        "config": {k: str(v) for k, v in vars(config).items()
                   if v is not None and k != "output_path"},
        "created_utc": datetime.now(timezone.utc).isoformat(
            timespec="seconds"),
        "version": VERSION,
    }
    Path(str(path) + ".meta.json").write_text(_json_dump(meta),
                                              encoding="utf-8")


# ---------------------------------------------------------------------------
# subcommand bodies


def _run_coeffs(config: RunConfig) -> int:
    table = _build_coeffs(config.K, config)
    if config.format == "csv":
        rows = [[str(k), str(a.numerator), str(a.denominator)]
                for k, a in enumerate(table.alpha, start=1)]
        payload = _csv_payload(["k", "alpha_numerator", "alpha_denominator"],
                               rows)
    elif config.format == "json":
        payload = _json_dump({
            "K": table.K,
            "alpha": [{"k": k, "numerator": a.numerator,
                       "denominator": a.denominator}
                      for k, a in enumerate(table.alpha, start=1)],
        })
    else:
        payload = "".join(f"alpha_{k} = {a}\n"
                          for k, a in enumerate(table.alpha, start=1))
    _emit(payload, config)
    return 0


def _run_gn(config: RunConfig) -> int:
    table = gn_table(config.n_max)
    if config.format == "csv":
        rows = [[str(n), str(g.numerator), str(g.denominator)]
                for n, g in enumerate(table.values)]
        payload = _csv_payload(["n", "gn_numerator", "gn_denominator"], rows)
    elif config.format == "json":
        payload = _json_dump({
            "n_max": table.n_max,
            "gn": [{"n": n, "numerator": g.numerator,
                    "denominator": g.denominator}
                   for n, g in enumerate(table.values)],
        })
    else:
        payload = "".join(f"G_{n} = {g}\n"
                          for n, g in enumerate(table.values))
    _emit(payload, config)
    return 0


def _table1_K(k_max: int) -> int:
    # exact bounds reach alpha_tilde at odd index 2k_max+3; the display
    # grid and its continuation need the first 29 coefficients
    return max(2 * k_max + 3, 29)


def _run_table1(config: RunConfig) -> int:
    coeffs = _build_coeffs(_table1_K(config.k_max), config)
    derived = beta_from_alpha(coeffs)
    report, table = verify.check_ratio_bounds(derived, k_max=config.k_max)
    if config.format == "csv":
        header = ["family"] + [f"k{k}" for k in table.ks]
        rows = [[family] + list(table.display[family])
                for family in table.display]
        payload = _csv_payload(header, rows)
    elif config.format == "json":
        payload = _json_dump({
            "table": {family: {f"k{k}": cell for k, cell in
                               zip(table.ks, table.display[family])}
                      for family in table.display},
            "odd_gap_extension": {f"k{k}": cell for k, cell in
                                  zip(table.extension_ks,
                                      table.extension_display)},
            "report": report.to_dict(),
        })
    else:
        width = max(len(f) for f in table.display) + 2
        lines = ["k".ljust(width)
                 + "".join(f"{k:>9}" for k in table.ks)]
        for family in table.display:
            lines.append(family.ljust(width)
                         + "".join(f"{cell:>9}"
                                   for cell in table.display[family]))
        lines.append("")
        lines.append("odd_gap_ratio continued: "
                     + ", ".join(f"k{k}={cell}"
                                 for k, cell in zip(table.extension_ks,
                                                    table.extension_display)))
        lines.append("")
        payload = "\n".join(lines) + _report_text(report)
    _emit(payload, config)
    return _exit_code([report])


def _run_verify_theorem(config: RunConfig) -> int:
    coeffs = _build_coeffs(max(config.l_max, 1), config)
    report = verify.check_error_sign_pattern(
        coeffs, config.n_max, config.l_max,
        precision_ceiling=config.precision_ceiling)
    _emit(_reports_payload([report], config.format), config)
    return _exit_code([report])


def _run_verify_bounds(config: RunConfig) -> int:
    K = max(max(p, q) for p, q in config.pairs)
    coeffs = _build_coeffs(K, config)
    report = verify.check_sharp_bounds(
        coeffs, config.n_max, config.pairs,
        precision_ceiling=config.precision_ceiling)
    _emit(_reports_payload([report], config.format), config)
    return _exit_code([report])


def _run_verify_lemma3(config: RunConfig) -> int:
    coeffs = _build_coeffs(max(2 * config.l_max, 1), config)
    report = verify.check_residual_sign(
        coeffs, config.n_max, config.l_max,
        precision_ceiling=config.precision_ceiling)
    _emit(_reports_payload([report], config.format), config)
    return _exit_code([report])


def _run_verify_lemma4(config: RunConfig) -> int:
    coeffs = _build_coeffs(2 * config.k_max + 1, config)
    derived = beta_from_alpha(coeffs)
    report = verify.check_coefficient_envelope(
        derived, config.k_max,
        precision_ceiling=config.precision_ceiling)
    _emit(_reports_payload([report], config.format), config)
    return _exit_code([report])


def _run_verify_section5(config: RunConfig) -> int:
    K = max(2 * config.l_max + 4, 12)
    coeffs = _build_coeffs(K, config)
    reports = [
        proofs.check_residual_even_coeffs(coeffs, config.l_max,
                                          config.j_span),
        proofs.check_residual_paired_coeffs(coeffs, config.l_max,
                                            config.j_span),
        proofs.check_paired_increment_positivity(coeffs),
        proofs.check_paired_increment_reference(coeffs),
        proofs.check_direct_values(coeffs),
        proofs.check_residual_identities(coeffs),
    ]
    _emit(_reports_payload(reports, config.format), config)
    return _exit_code(reports)


def _run_report_all(config: RunConfig) -> int:
    ceiling = config.precision_ceiling
    coeffs = _build_coeffs(202, config)
    derived = beta_from_alpha(coeffs)
    reports = [
        verify.check_coefficient_signs(coeffs, l_max=199),
        verify.check_alpha_cross_oracle(derived, T=80),
        verify.check_error_sign_pattern(coeffs, 500, 30,
                                        precision_ceiling=ceiling),
        verify.check_sharp_bounds(
            coeffs, 500, ((1, 0), (2, 3), (5, 4), (5, 7), (9, 11), (13, 12)),
            precision_ceiling=ceiling),
        verify.check_residual_sign(coeffs, 300, 15,
                                   precision_ceiling=ceiling),
        verify.check_coefficient_envelope(derived, 60,
                                          precision_ceiling=ceiling),
        verify.check_ratio_bounds(derived, k_max=60)[0],
        proofs.check_residual_even_coeffs(coeffs),
        proofs.check_residual_paired_coeffs(coeffs),
        proofs.check_paired_increment_positivity(coeffs),
        proofs.check_paired_increment_reference(coeffs),
        proofs.check_direct_values(coeffs),
        proofs.check_residual_identities(coeffs),
        verify.check_beta_properties(derived),
        verify.check_generating_relations(60, 60),
        verify.check_deviation_trend(derived),
    ]
    code = _exit_code(reports)
    if config.format == "json":
        payload = _json_dump({
            "claims": [r.to_dict() for r in reports],
            "exit_code": code,
            "all_proven": all(r.all_proven for r in reports),
        })
    else:
        payload = _reports_payload(reports, config.format)
    _emit(payload, config)
    return code


_RUNNERS = {
    "coeffs": _run_coeffs,
    "gn": _run_gn,
    "table1": _run_table1,
    "verify-theorem": _run_verify_theorem,
    "verify-bounds": _run_verify_bounds,
    "verify-lemma3": _run_verify_lemma3,
    "verify-lemma4": _run_verify_lemma4,
    "verify-section5": _run_verify_section5,
    "report-all": _run_report_all,
}


def run(config: RunConfig) -> int:
    """Execute one parsed invocation; returns the process exit code."""
    limits = active_limits()
    if config.precision_ceiling is not None and \
            config.precision_ceiling > limits.max_precision:
        raise ValueError(
            f"precision ceiling {config.precision_ceiling} above limit "
            f"{limits.max_precision} (raise {ENV_MAX_PRECISION} to allow)")
    return _RUNNERS[config.command](config)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return run(_config_from_args(args))
    except (LandaukitError, ValueError, OSError) as exc:
        print(f"landaukit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
