"""Command-line driver for the verification suites and one-off queries.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
input error.  Reports are JSON on stdout (or --out), human-readable
progress lines go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .report import SUITES, fibration_query, run_suite, smoothness_query
from .scalars import ParseError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klein-fano",
        description="Exact verification of the lattice invariants of the "
        "Fano surface of the Klein cubic threefold.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", nargs="?", choices=SUITES, help="suite to run")
    verify.add_argument("--suite", dest="suite_flag", choices=SUITES)
    verify.add_argument("--json", action="store_true", help="compact JSON output")
    verify.add_argument("--out", metavar="PATH", help="write the JSON report here")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=25,
                        help="sampled members per uncertified eigenspace")
    verify.add_argument("--prime", type=int, default=10007,
                        help="modulus of the smoothness pre-pass")

    fib = sub.add_parser("fibration", help="normalize a fibration class")
    fib.add_argument("--l", required=True, metavar="SCALARS",
                     help="5 comma-separated Q(nu) scalars, e.g. '1+2*nu,0,0,0,0'")
    fib.add_argument("--l2", metavar="SCALARS",
                     help="second class; reports the intersection number")
    fib.add_argument("--json", action="store_true", help="compact JSON output")

    smooth = sub.add_parser("smooth", help="run the smoothness oracle on a cubic")
    smooth.add_argument("--cubic", required=True, metavar="TERMS",
                        help="semicolon-separated monomial=coeff terms, "
                        "e.g. 'x1^2*x2=1;x3^3=-1/2'")
    smooth.add_argument("--prime", type=int, default=10007)
    smooth.add_argument("--json", action="store_true", help="compact JSON output")

    return parser


def _emit(payload: dict, compact: bool) -> None:
    if compact:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(json.dumps(payload, indent=2))


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        suite = args.suite_flag or args.suite
        if suite is None:
            parser.error("a suite is required (positional or --suite)")
        report = run_suite(
            suite, seed=args.seed, samples=args.samples, prime=args.prime
        )
        for line in report.summary_lines():
            print(line, file=sys.stderr)
        text = report.to_json(compact=args.json)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
            print(f"report written to {args.out}", file=sys.stderr)
        else:
            print(text)
        return 0 if report.passed else 1

    if args.command == "fibration":
        try:
            payload = fibration_query(args.l, args.l2)
        except (ParseError, ValueError, ZeroDivisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _emit(payload, args.json)
        return 0

    if args.command == "smooth":
        try:
            payload = smoothness_query(args.cubic, args.prime)
        except (ParseError, ValueError, ZeroDivisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _emit(payload, args.json)
        return 0

    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
