"""Command-line front end.

Exit codes: 0 success, 1 a mathematical or validation failure, 2 usage or
input/output trouble.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import io
from .dot import lattice_dot, poset_dot
from .errors import MonoidPointsError, OutOfRange, ParseError, TooLarge, ValidationError
from .fixtures import FIXTURES, cyclic_group, fixture, t_n
from .oracle import MAX_ENUMERATION_ORDER, build_corpus
from .report import analyze
from .suite import run_theorem_suite
from .topologies import idem_j_poset, idempotent_ideal_lattice

MAX_T_DEGREE = 4
MAX_CYCLIC = 64

log = logging.getLogger("monoidpoints")


class UsageError(Exception):
    pass


def generate(kind: str, arg: str):
    if kind in ("t", "cyclic"):
        try:
            n = int(arg)
        except ValueError:
            raise OutOfRange(f"{kind} needs an integer, got {arg!r}") from None
        if kind == "t":
            if not 1 <= n <= MAX_T_DEGREE:
                raise OutOfRange(f"t n needs 1 <= n <= {MAX_T_DEGREE}")
            return t_n(n)
        if not 1 <= n <= MAX_CYCLIC:
            raise OutOfRange(f"cyclic n needs 1 <= n <= {MAX_CYCLIC}")
        return cyclic_group(n)
    if kind == "fixture":
        try:
            return fixture(arg)
        except KeyError:
            raise OutOfRange(f"unknown fixture {arg!r}; choose from {', '.join(FIXTURES)}") from None
    raise OutOfRange(f"unknown generator kind {kind!r}")


def _write(text: str, dest) -> None:
    if dest in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(dest).write_text(text)
        except OSError as exc:
            raise ParseError(f"cannot write {dest}: {exc.strerror or exc}") from None


def cmd_validate(args) -> int:
    try:
        io.load_monoid(args.path)
    except ValidationError as exc:
        print(f"FAIL {exc.law}: {exc}")
        if exc.witness:
            print("witness: " + " ".join(str(w) for w in exc.witness))
        return 1
    print("OK")
    return 0


def cmd_analyze(args) -> int:
    if args.gen:
        m = generate(*args.gen)
    elif args.path:
        m = io.load_monoid(args.path)
    else:
        raise UsageError("analyze needs a path or --gen KIND ARG")
    report = analyze(m)
    text = io.dumps(report)
    _write(text, args.json)
    if args.dot_lattice:
        _write(lattice_dot(idempotent_ideal_lattice(m)), args.dot_lattice)
    if args.dot_poset:
        _write(poset_dot(idem_j_poset(m)), args.dot_poset)
    return 0


def cmd_gen(args) -> int:
    _write(io.dumps(io.monoid_to_json(generate(args.kind, args.arg))), None)
    return 0


def cmd_check(args) -> int:
    corpus = build_corpus(args.max_order, fixtures=args.fixtures)
    report = run_theorem_suite(corpus)
    for w in report.warnings:
        print(f"warning: {w}")
    width = max((len(k) for k in report.summary()), default=5)
    print(f"{'check'.ljust(width)}  passed  failed  skipped")
    for name, row in report.summary().items():
        print(f"{name.ljust(width)}  {row['passed']:6d}  {row['failed']:6d}  {row['skipped']:7d}")
    for r in report.failures:
        print(f"FAIL {r.check} on {r.monoid}: {r.witness}")
    print(f"{len(corpus)} monoids, {len(report.results)} results, {len(report.failures)} failures")
    if args.json:
        _write(io.dumps(report.to_dict(timing=args.timing)), args.json)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monoidpoints", description="Points and localisations of toposes of M-sets for finite monoids M.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check a monoid JSON file")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="full report for one monoid")
    a.add_argument("path", nargs="?")
    a.add_argument("--gen", nargs=2, metavar=("KIND", "ARG"), help="analyze a generated monoid instead of a file")
    a.add_argument("--json", metavar="OUT", help="write the report here instead of standard output")
    a.add_argument("--dot-lattice", metavar="OUT")
    a.add_argument("--dot-poset", metavar="OUT")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("gen", help="print a monoid as JSON")
    g.add_argument("kind", choices=["t", "cyclic", "fixture"])
    g.add_argument("arg")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="run the theorem suite over the corpus")
    c.add_argument("--max-order", type=int, default=MAX_ENUMERATION_ORDER)
    c.add_argument("--fixtures", action="store_true", help="add the named example monoids")
    c.add_argument("--json", metavar="OUT", help="write the suite report as JSON")
    c.add_argument("--timing", action="store_true", help="include per-check timings in the JSON report")
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ParseError, OutOfRange, TooLarge, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"FAIL {exc.law}: {exc}", file=sys.stderr)
        return 1
    except MonoidPointsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
