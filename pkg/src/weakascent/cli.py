"""Command-line interface: ``wasc <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import enumeration, objects, verify
from .errors import DomainError, InvalidInputError, ResourceLimitError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_CUTOFF = 4
EXIT_PROPERTY = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wasc", description="Weak ascent sequences and their bijections.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="list every object of one family")
    g.add_argument("--object", required=True, choices=objects.KINDS)
    g.add_argument("--n", required=True, type=_positive)
    g.add_argument("--format", default="jsonl", choices=("jsonl", "text"))

    c = sub.add_parser("count", help="count every family at one size")
    c.add_argument("--n", required=True, type=_positive)

    m = sub.add_parser("map", help="map objects read from stdin")
    m.add_argument("--from", dest="src", required=True, choices=objects.KINDS)
    m.add_argument("--to", dest="dst", required=True, choices=objects.KINDS)
    m.add_argument("--format", default="jsonl", choices=("jsonl", "text"))

    v = sub.add_parser("verify", help="run exhaustive property suites")
    v.add_argument("--suite", default="all", choices=(*verify.SUITES, "all"))
    v.add_argument("--max-n", required=True, type=_positive)

    t = sub.add_parser("table", help="a(n, k) triangle as TSV")
    t.add_argument("--max-n", type=_nonneg, default=10)

    s = sub.add_parser("series", help="coefficients of A(z)")
    s.add_argument("--terms", type=_nonneg, default=12)

    b = sub.add_parser("bfile", help="OEIS b-file of A_n")
    b.add_argument("--terms", type=_nonneg, default=12)
    return parser


def _emit(obj, kind: str, fmt: str, out: TextIO) -> None:
    if fmt == "jsonl":
        out.write(json.dumps(objects.to_json(obj, kind), separators=(",", ":")) + "\n")
    elif kind == "matrix":
        out.write(objects.to_text(obj, kind) + "\n\n")
    else:
        out.write(objects.to_text(obj, kind) + "\n")


def _dispatch(args: argparse.Namespace, stdin: TextIO, out: TextIO) -> int:
    if args.command == "generate":
        for obj in objects.enumerate_objects(args.object, args.n):
            _emit(obj, args.object, args.format, out)
        return EXIT_OK
    if args.command == "count":
        counts = enumeration.count_all(args.n)
        out.write(json.dumps({"n": args.n, **counts}) + "\n")
        known = {v for v in counts.values() if v is not None}
        return EXIT_OK if len(known) == 1 else EXIT_PROPERTY
    if args.command == "map":
        for obj in objects.read_objects(stdin.read(), args.src):
            _emit(objects.convert(obj, args.src, args.dst), args.dst, args.format, out)
        return EXIT_OK
    if args.command == "verify":
        checks = verify.run(args.suite, args.max_n)
        for check in checks:
            out.write(check.line() + "\n")
        return EXIT_OK if all(c.passed for c in checks) else EXIT_PROPERTY
    if args.command == "table":
        table = enumeration.a_table(args.max_n)
        out.write("n\tk\ta\n")
        for n in range(args.max_n + 1):
            for k in range(n + 1):
                out.write(f"{n}\t{k}\t{table.a[n][k]}\n")
        return EXIT_OK
    if args.command == "series":
        for v in enumeration.series_A(args.terms):
            out.write(f"{v}\n")
        return EXIT_OK
    if args.command == "bfile":
        for line in enumeration.bfile_lines(args.terms):
            out.write(line + "\n")
        return EXIT_OK
    raise AssertionError(args.command)


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, stdin, stdout)
    except ResourceLimitError as exc:
        print(f"wasc: cutoff exceeded: {exc}", file=sys.stderr)
        return EXIT_CUTOFF
    except (InvalidInputError, DomainError) as exc:
        print(f"wasc: invalid object: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
