#!/usr/bin/env python3
"""Run the Apriori vs IAR comparison and write CSV + markdown under results/.

    python scripts/run_benchmark.py --attrs 1 --seed 42 --reps 3
"""

import argparse
import sys
from pathlib import Path

from iarmine.bench import (DEFAULT_SEED, DEFAULT_SIZES, DEFAULT_SUPPORTS, BenchConfig,
                           assert_dominance, emit_report, run_comparison)

RESULTS_DIR = Path(__file__).resolve().parent.parent / "results"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--attrs", type=int, nargs="+", default=[1])
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(DEFAULT_SIZES))
    ap.add_argument("--supports", type=float, nargs="+", default=list(DEFAULT_SUPPORTS))
    ap.add_argument("--out-dir", type=Path, default=RESULTS_DIR)
    args = ap.parse_args()

    config = BenchConfig(sizes=args.sizes, support_fractions=args.supports,
                         user_attrs=tuple(args.attrs), master_seed=args.seed,
                         repetitions=args.reps)
    rows = run_comparison(config)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "comparison.csv").write_text(emit_report(rows, "csv"))
    md = emit_report(rows, "markdown")
    (args.out_dir / "comparison.md").write_text(md)
    print(md)

    report = assert_dominance(rows)
    for note in report.timing_notes:
        print(note, file=sys.stderr)
    for v in report.violations:
        print("violation:", v, file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
