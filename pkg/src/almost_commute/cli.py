"""Command-line front end: ``almost-commute {count,table,enumerate,verify}``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from itertools import groupby
from math import gcd
from typing import Callable, Iterator

from . import counting
from .enumeration import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    enumerate_exactly_one,
    enumerate_h,
    enumerate_h_shift,
    enumerate_intersection,
)
from .finewilf import search_fine_wilf_pairs
from .verify import run_verify
from .words import DEFAULT_OUTPUT_WIDTH

EXIT_OK, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3

BUDGET_ENV = "AC_ORACLE_BUDGET"
WIDTH_ENV = "AC_OUTPUT_WIDTH"

# kind -> (evaluator(k, n, extra), name of the extra parameter or None)
COUNT_KINDS: dict[str, tuple[Callable[[int, int, int | None], int], str | None]] = {
    "h": (lambda k, n, _: counting.h_total(k, n), None),
    "h_shift": (counting.h_shift, "i"),
    "h_overlap": (counting.h_overlap, "i"),
    "h_new": (counting.h_new, "i"),
    "h_exactly_one": (lambda k, n, _: counting.h_exactly_one(k, n), None),
    "lyndon": (lambda k, n, _: counting.count_lyndon_in_h(k, n), None),
    "primitive": (lambda k, n, _: counting.count_primitive(k, n), None),
    "powers": (lambda k, n, _: counting.count_powers(k, n), None),
    "pairs": (lambda k, n, m: counting.h_pairs(k, m, n), "m"),
    "prime_form": (lambda k, n, _: counting.h_prime_closed_form(k, n), None),
    "even_bound": (lambda k, n, _: counting.even_lower_bound(k, n), None),
}

ENUMERATE_KINDS = ("h", "h_shift", "intersection", "exactly_one", "finewilf")


class _Parser(argparse.ArgumentParser):
    # usage errors are precondition violations; exit status 2 is reserved for budgets
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PRECONDITION, f"{self.prog}: error: {message}\n")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` (inclusive) or a single ``"a"``."""
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected a..b") from None
    if start > stop:
        raise argparse.ArgumentTypeError(f"empty range {text!r}: {start} > {stop}")
    return start, stop


def _need(args: argparse.Namespace, name: str, kind: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise ValueError(f"{kind} requires --{name}")
    return value


def cmd_count(args: argparse.Namespace, out) -> int:
    fn, extra = COUNT_KINDS[args.kind]
    value = fn(args.k, args.n, _need(args, extra, args.kind) if extra else None)
    print(value, file=out)
    return EXIT_OK


def _natural_extras(kind: str, n: int) -> range:
    if kind == "h_shift":
        return range(1, n)
    if kind == "pairs":
        return range(1, n + 1)
    return range(1, n // 2 + 1)


def table_rows(kind: str, k: int, n_min: int, n_max: int, extra: int | None = None) -> Iterator[dict]:
    fn, extra_name = COUNT_KINDS[kind]
    for n in range(n_min, n_max + 1):
        if kind == "prime_form" and not counting.is_prime(n):
            continue
        if extra_name is None:
            yield {"k": k, "n": n, "value": fn(k, n, None)}
            continue
        extras = _natural_extras(kind, n)
        if extra is not None:
            extras = [extra] if extra in extras else []
        for e in extras:
            yield {"k": k, "n": n, extra_name: e, "value": fn(k, n, e)}


def cmd_table(args: argparse.Namespace, out) -> int:
    n_min, n_max = args.n
    _, extra_name = COUNT_KINDS[args.kind]
    extra = getattr(args, extra_name) if extra_name else None
    rows = list(table_rows(args.kind, args.k, n_min, n_max, extra))
    if args.format == "csv":
        header = ["k", "n"] + ([extra_name] if extra_name else []) + ["value"]
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[h] for h in header])
    else:
        key = extra_name or "i"
        for row in rows:
            record = {"k": row["k"], "n": row["n"], key: row.get(key), "kind": args.kind, "value": row["value"]}
            print(json.dumps(record), file=out)
    return EXIT_OK


def _intersection_count(k: int, n: int, i: int, j: int) -> int:
    g = gcd(gcd(n, i), j)
    return (n // g) * k**g * g * (k - 1)


def cmd_enumerate(args: argparse.Namespace, out) -> int:
    k, n, budget, width = args.k, args.n, args.budget, args.width
    expected: int | None
    if args.kind == "finewilf":
        m = _need(args, "m", "finewilf")
        pairs = search_fine_wilf_pairs(k, m, n, budget)
        lines = [f"{x.format(width)} {y.format(width)}" for x, y in pairs]
        expected = None
    else:
        if args.kind == "h":
            words = enumerate_h(k, n, budget)
            expected = counting.h_total(k, n)
        elif args.kind == "h_shift":
            i = _need(args, "i", "h_shift")
            words = enumerate_h_shift(k, n, i, budget)
            expected = counting.h_shift(k, n, i)
        elif args.kind == "intersection":
            i, j = _need(args, "i", "intersection"), _need(args, "j", "intersection")
            words = enumerate_intersection(k, n, i, j, budget)
            expected = _intersection_count(k, n, i, j)
        else:
            words = enumerate_exactly_one(k, n, budget)
            expected = counting.h_exactly_one(k, n)
        lines = [w.format(width) for w in words]
    for line in lines:
        print(line, file=out)
    print(f"# count={len(lines)}", file=out)
    if expected is not None and expected != len(lines):
        print(f"error: enumerated {len(lines)} words but the closed form gives {expected}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out) -> int:
    report = run_verify(args.k_max, args.n_max, args.budget)
    for (k, n), cases in groupby(report.cases, key=lambda c: (c.k, c.n)):
        cases = list(cases)
        bad = sum(not c.ok for c in cases)
        print(f"k={k} n={n} checks={len(cases)} {'ok' if not bad else f'FAIL ({bad})'}", file=out)
    for k, n in report.skipped:
        print(f"k={k} n={n} skipped (k^n over budget {report.budget})", file=out)
    status = "PASS" if report.passed else "FAIL"
    print(
        f"{status} checks={len(report.cases)} mismatches={len(report.mismatches)} "
        f"elapsed={report.elapsed:.2f}s",
        file=out,
    )
    if not report.passed:
        print(f"first mismatch: {report.mismatches[0].describe()}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    budget_default = _env_int(BUDGET_ENV, DEFAULT_BUDGET)
    width_default = _env_int(WIDTH_ENV, DEFAULT_OUTPUT_WIDTH)

    parser = _Parser(prog="almost-commute", description="Count and enumerate words with a conjugate at Hamming distance 2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="print one exact count")
    p.add_argument("kind", choices=sorted(COUNT_KINDS))
    p.add_argument("--k", type=int, required=True, help="alphabet size")
    p.add_argument("--n", type=int, required=True, help="word length (half-length for even_bound, |y| for pairs)")
    p.add_argument("--i", type=int, help="shift index")
    p.add_argument("--m", type=int, help="|x| for pairs")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="print a count for a range of lengths")
    p.add_argument("kind", choices=sorted(COUNT_KINDS))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--i", type=int, help="fix the shift (default: every valid shift)")
    p.add_argument("--m", type=int, help="fix |x| for pairs (default: 1..n)")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list the words of a set, one per line")
    p.add_argument("kind", choices=ENUMERATE_KINDS)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="word length (|y| for finewilf)")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--m", type=int, help="|x| for finewilf")
    p.add_argument("--budget", type=int, default=budget_default)
    p.add_argument("--width", type=int, default=width_default, help="largest k printed as contiguous digits")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check every closed form against a brute-force census")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=budget_default, help="skip (k, n) with k^n above this")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
