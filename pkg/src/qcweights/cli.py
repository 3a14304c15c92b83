"""Command line front end: ``qcweights analyze|bounds|cosets``.

Exit codes: 0 success, 1 invalid input, 2 enumeration limit exceeded,
3 an explicitly requested group does not act on the code.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .analysis import AnalysisConfig, analyze_spec, format_report, parse_groups
from .code import DEFAULT_LIMIT
from .config import parse_config
from .errors import QccError
from .numth import cyclotomic_cosets, multiplicative_order


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


class _UsageError(QccError):
    pass


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(format_report(report))


def cmd_analyze(args: argparse.Namespace) -> int:
    parsed = parse_config(_read(args.file))
    cfg = AnalysisConfig(
        max_enum=args.max_enum,
        groups=parse_groups(args.groups) if args.groups else None,
        omega_index=args.omega_index,
    )
    _emit(analyze_spec(parsed.spec, cfg, parsed.warnings), args.json)
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    parsed = parse_config(_read(args.file))
    cfg = AnalysisConfig(enumerate=False)
    _emit(analyze_spec(parsed.spec, cfg, parsed.warnings), args.json)
    return 0


def cosets_listing(q: int, m: int) -> dict:
    cosets = cyclotomic_cosets(q, m)
    return {
        "q": q,
        "m": m,
        "m_prime": multiplicative_order(q, m),
        "cosets": [{"rep": c.rep, "members": sorted(c.members), "size": c.size} for c in cosets],
    }


def cmd_cosets(args: argparse.Namespace) -> int:
    from .fields import prime_power

    prime_power(args.q)
    listing = cosets_listing(args.q, args.m)
    if args.json:
        print(json.dumps(listing, indent=2))
    else:
        print(f"{args.q}-cyclotomic cosets modulo {args.m} (m' = {listing['m_prime']}):")
        for c in listing["cosets"]:
            print(f"  rep {c['rep']:>4}  size {c['size']:>3}  {{{','.join(map(str, c['members']))}}}")
    return 0


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qcweights",
        description="Weight distributions and orbit-count bounds for simple-root quasi-cyclic codes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="enumerate a code and compare orbit counts with the formulas")
    an.add_argument("file", help="code description (.qcc)")
    an.add_argument("--json", action="store_true", help="print the JSON report")
    an.add_argument("--max-enum", type=_positive_int, default=DEFAULT_LIMIT,
                    help=f"refuse codes with more codewords than this (default {DEFAULT_LIMIT})")
    an.add_argument("--groups", help="comma-separated subset of shift,shift-scalar,full")
    an.add_argument("--omega-index", type=_positive_int, default=1,
                    help="which primitive element of the splitting field to use (default 1)")
    an.set_defaults(func=cmd_analyze)

    bd = sub.add_parser("bounds", help="evaluate the closed-form counts only (no enumeration)")
    bd.add_argument("file", help="code description (.qcc)")
    bd.add_argument("--json", action="store_true", help="print the JSON report")
    bd.set_defaults(func=cmd_bounds)

    co = sub.add_parser("cosets", help="list q-cyclotomic cosets modulo m")
    co.add_argument("--q", type=int, required=True)
    co.add_argument("--m", type=int, required=True)
    co.add_argument("--json", action="store_true")
    co.set_defaults(func=cmd_cosets)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2; map them to invalid input
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except QccError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
