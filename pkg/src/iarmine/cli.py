"""Command-line entry point: ``iarmine {gen,mine,rules,bench}``.

Exit codes: 0 success, 1 user error, 2 internal invariant violation.
Data goes to stdout (or ``--out``), diagnostics and timings to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import bench
from .core import (ParseError, StructuralError, SupportThreshold, format_itemset,
                   parse_transaction_file, serialize)
from .datagen import GenConfig, generate
from .miner import apriori, iar
from .rules import InvariantViolation, UndefinedConfidence, generate_rules


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _fraction_open(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}")
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(
            f"fractional support must lie in (0, 1); use --support-count for {text}")
    return value


def _fraction_closed(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}")
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"value must lie in [0, 1], got {text}")
    return value


def _fraction_list(text: str) -> list[Fraction]:
    return [_fraction_open(v) for v in text.split(",") if v.strip()]


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="iarmine", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a synthetic transaction file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=_positive, default=7)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--seed", type=_u64, default=0)
    g.add_argument("--out", type=Path)

    for name in ("mine", "rules"):
        p = sub.add_parser(name, help="mine frequent itemsets" if name == "mine"
                           else "mine and print association rules")
        p.add_argument("--input", type=Path, required=True)
        thr = p.add_mutually_exclusive_group(required=True)
        thr.add_argument("--support-frac", type=_fraction_open)
        thr.add_argument("--support-count", type=_positive)
        p.add_argument("--attrs", type=_int_list,
                       help="user attributes; switches to IAR mode")
        if name == "mine":
            p.add_argument("--rules", action="store_true")
        p.add_argument("--min-conf", type=_fraction_closed)
        p.add_argument("--no-lhs-constraint", action="store_true")
        p.add_argument("--metrics", action="store_true")
        p.add_argument("--out", type=Path)

    b = sub.add_parser("bench", help="compare Apriori and IAR")
    b.add_argument("--sizes", type=_int_list, default=list(bench.DEFAULT_SIZES))
    b.add_argument("--supports", type=_fraction_list,
                   default=[Fraction(repr(s)) for s in bench.DEFAULT_SUPPORTS])
    b.add_argument("--attrs", type=_int_list, default=[1])
    b.add_argument("--seed", type=_u64, default=bench.DEFAULT_SEED)
    b.add_argument("--m", type=_positive, default=7)
    b.add_argument("--density", type=float, default=0.5)
    b.add_argument("--format", choices=("csv", "markdown"), default="csv")
    b.add_argument("--assert", dest="check", action="store_true")
    b.add_argument("--reps", type=_positive, default=3)
    b.add_argument("--out", type=Path)
    return parser


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        print(f"wrote {len(text.encode())} bytes to {out}", file=sys.stderr)


def _cmd_gen(args) -> int:
    db = generate(GenConfig(args.n, args.m, args.density, args.seed))
    _write(serialize(db), args.out)
    return 0


def _cmd_mine(args) -> int:
    want_rules = args.command == "rules" or args.rules
    if want_rules and args.min_conf is None:
        raise UsageError("rule generation needs --min-conf")
    if not want_rules and (args.min_conf is not None or args.no_lhs_constraint):
        raise UsageError("--min-conf/--no-lhs-constraint require --rules")
    db = parse_transaction_file(args.input.read_text(encoding="utf-8"), require_nonempty=True)
    threshold = (SupportThreshold(count=args.support_count) if args.support_count is not None
                 else SupportThreshold(fraction=args.support_frac))
    if args.attrs:
        result = iar(db, args.attrs, threshold)
        print(f"working database: {result.working_db_size}/{len(db)} transactions",
              file=sys.stderr)
    else:
        result = apriori(db, threshold)

    if want_rules:
        required = None if (not args.attrs or args.no_lhs_constraint) else args.attrs
        lines = [str(r) for r in generate_rules(result.frequent, args.min_conf, required)]
    else:
        lines = [f"{format_itemset(x)} supp={s}" for x, s in result.frequent]
    _write("".join(line + "\n" for line in lines), args.out)

    if args.metrics:
        m = result.metrics
        print(f"node_count={m.node_count} final_node_count={m.final_node_count} "
              f"update_count={m.update_count} storage_bytes={m.storage_bytes} "
              f"elapsed_ms={result.elapsed_ms:.3f}", file=sys.stderr)
    return 0


def _cmd_bench(args) -> int:
    config = bench.BenchConfig(
        sizes=args.sizes, support_fractions=args.supports, user_attrs=tuple(args.attrs),
        gen=GenConfig(0, args.m, args.density, 0), master_seed=args.seed,
        repetitions=args.reps)
    rows = bench.run_comparison(config)
    _write(bench.emit_report(rows, args.format), args.out)
    report = bench.assert_dominance(rows)
    for note in report.timing_notes:
        print(note, file=sys.stderr)
    for v in report.violations:
        print(f"violation: {v}", file=sys.stderr)
    if args.check and not report.ok:
        return 1
    return 0


COMMANDS = {"gen": _cmd_gen, "mine": _cmd_mine, "rules": _cmd_mine, "bench": _cmd_bench}


INTERNAL_ERRORS = (StructuralError, InvariantViolation, UndefinedConfidence)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except bench.BenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc.cause, INTERNAL_ERRORS) else 1
    except INTERNAL_ERRORS as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
