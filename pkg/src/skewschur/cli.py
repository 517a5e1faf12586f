"""Command line front end.

Exit codes: 0 multiplicity-free / clean run, 1 not multiplicity-free /
mismatches found, 2 bad input, 3 internal invariant violation, 4 I/O error.
Machine-readable output goes to stdout, progress to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .classification import classify, format_extended, min_nonfree_vars
from .errors import NotReduced, ParseError, SkewSchurError
from .lr import multiplicity_witness, skew_schur_expansion
from .skewshapes import SkewPartition
from .verify import run_verify

EXIT_OK, EXIT_NONFREE, EXIT_PARSE, EXIT_INTERNAL, EXIT_IO = 0, 1, 2, 3, 4

log = logging.getLogger("skewschur")


def _shape(text: str) -> SkewPartition:
    try:
        return SkewPartition.parse(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vars(args: argparse.Namespace) -> int:
    return args.vars if args.vars is not None else len(args.shape.outer)


def cmd_expand(args: argparse.Namespace) -> int:
    exp = skew_schur_expansion(args.shape, _vars(args))
    if args.json:
        print(exp.dumps())
    else:
        print(exp.format() or "0")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    n = _vars(args)
    if n < 1:
        print("error: --vars must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    verdict = classify(args.shape, n, witness=args.witness)
    if verdict.witness is None and args.witness and not verdict.multiplicity_free:
        # formula and enumeration disagree
        print(f"error: no witness found for {args.shape} in {n} variables", file=sys.stderr)
        return EXIT_INTERNAL
    if args.json:
        print(json.dumps(verdict.to_json(), ensure_ascii=False))
    else:
        data = verdict.to_json()
        witness = data.pop("witness")
        for key, value in data.items():
            print(f"{key}: {value}")
        if witness:
            for i, t in enumerate(witness, start=1):
                print(f"witness {i}:")
                print(t)
    return EXIT_OK if verdict.multiplicity_free else EXIT_NONFREE


def cmd_witness(args: argparse.Namespace) -> int:
    pair = multiplicity_witness(args.shape, _vars(args))
    if pair is None:
        print("multiplicity-free")
        return EXIT_OK
    for i, t in enumerate(pair, start=1):
        print(f"witness {i}:")
        print(t)
    return EXIT_NONFREE


def cmd_minvars(args: argparse.Namespace) -> int:
    try:
        m = min_nonfree_vars(args.shape)
    except NotReduced as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(format_extended(m))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    def progress(done: int, total: int) -> None:
        if done == total or done % 50 == 0:
            print(f"verify: {done}/{total} outer shapes", file=sys.stderr)

    report = run_verify(args.max_width, args.max_length, args.max_n, jobs=args.jobs, progress=progress)
    text = report.dumps()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_NONFREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewschur",
        description="Littlewood-Richardson expansions and multiplicity-free classification of skew Schur polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def shape_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("shape", type=_shape, help="outer/inner, e.g. 5,4,1,1/2,1,1")
        p.add_argument("-n", "--vars", type=int, default=None, help="number of variables (default: rows of outer)")
        return p

    p = shape_cmd("expand", "Schur expansion of a skew Schur polynomial")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = shape_cmd("classify", "multiplicity-free verdict with reduction data")
    p.add_argument("--json", action="store_true")
    p.add_argument("--witness", action="store_true", help="print two ballot tableaux of equal content")
    p.set_defaults(func=cmd_classify)

    p = shape_cmd("witness", "two ballot tableaux of equal content, if any")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("minvars", help="least n at which a basic, tight, ordinary shape stops being multiplicity-free")
    p.add_argument("shape", type=_shape)
    p.set_defaults(func=cmd_minvars)

    p = sub.add_parser("verify", help="exhaustive check of the classifiers against the brute-force oracle")
    p.add_argument("--max-width", type=int, required=True)
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with code 2 on bad input
    if getattr(args, "vars", None) is not None and args.vars < 0:
        parser.error("--vars must be non-negative")
    if args.command == "verify" and min(args.max_width, args.max_length, args.max_n, args.jobs) < 1:
        parser.error("bounds and --jobs must be at least 1")
    try:
        return args.func(args)
    except SkewSchurError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
