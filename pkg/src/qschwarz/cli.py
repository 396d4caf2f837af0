"""Command line: run verification suites and print q-expansions.

    qschwarz verify all --seed 1729 --format json
    qschwarz verify dedekind
    qschwarz series eisenstein --weight 2 --order 4

Exit status is 0 when every executed check passed, 1 when any failed and 2
on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import __version__
from .errors import QSchwarzError
from .modular import delta, eisenstein
from .report import all_passed, emit_report
from .verify import SUITES, VerifyOptions, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qschwarz", description="Exact checks for the matrix Schwarzian calculus.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=["all", *SUITES])
    v.add_argument("--order", type=_positive_int, default=64, help="q-series truncation order (default 64)")
    v.add_argument("--trials", type=_positive_int, default=200, help="random instances per identity (default 200)")
    v.add_argument("--seed", type=int, default=1729, help="seed for random instances (default 1729)")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--step", type=_positive_float, default=1e-3, help="integrator step for numeric suites")

    s = sub.add_parser("series", help="print q-expansion coefficients")
    s.add_argument("kind", choices=["eisenstein", "delta"])
    s.add_argument("--weight", type=int, default=4, help="Eisenstein weight: 2, 4 or 6")
    s.add_argument("--order", type=_positive_int, default=16)
    s.add_argument("--method", choices=["product", "eisenstein"], default="product", help="construction of Delta")
    s.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _cmd_verify(args, out: TextIO) -> int:
    opts = VerifyOptions(order=args.order, trials=args.trials, seed=args.seed, step=args.step)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, opts)
    out.write(emit_report(reports, args.format))
    return EXIT_OK if all_passed(reports) else EXIT_FAIL


def _cmd_series(args, out: TextIO) -> int:
    if args.kind == "eisenstein":
        f = eisenstein(args.weight, args.order)
    else:
        f = delta(args.order, args.method)
    coeffs = [str(c) for c in f.series.to_list()]
    if args.format == "json":
        out.write(json.dumps({"label": f.label, "weight": f.weight, "order": f.order, "coefficients": coeffs}) + "\n")
    else:
        out.write(", ".join(coeffs) + "\n")
    return EXIT_OK


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Parse ``argv``, run the command and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        return _cmd_series(args, out)
    except (ValueError, QSchwarzError) as exc:
        # bad parameter values that argparse cannot see (e.g. unsupported weight)
        err.write(f"qschwarz: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
