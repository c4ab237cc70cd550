"""Paired Apriori vs IAR benchmark.

Each size gets one generated database, and both algorithms mine that same
database at every support level. Reported columns match the usual comparison
tables: frequent itemsets, T-tree nodes, T-tree updates, storage bytes, and
the median wall time of the mining call.
"""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

import numpy as np

from .core import Itemset, SupportThreshold, TransactionDb, itemset
from .datagen import GenConfig, generate
from .miner import MiningResult, apriori, iar

DEFAULT_SIZES = (2000, 10000, 30000, 50000, 120000)
DEFAULT_SUPPORTS = (0.20, 0.30)
DEFAULT_SEED = 42
ALGORITHMS = ("apriori", "iar")
CSV_HEADER = ("size", "support", "algorithm", "frequent", "nodes", "updates",
              "storage_bytes", "elapsed_ms", "working_db_size")
DOMINANCE_COLUMNS = ("frequent_count", "node_count", "update_count", "storage_bytes")
TIMING_ASSERT_MIN_SIZE = 10000


class BenchError(RuntimeError):
    def __init__(self, size, support, cause: Exception):
        self.size, self.support, self.cause = size, support, cause
        super().__init__(f"size={size} support={support}: {cause}")


@dataclass
class BenchConfig:
    sizes: Sequence[int] = DEFAULT_SIZES
    support_fractions: Sequence = DEFAULT_SUPPORTS
    user_attrs: Itemset = (1,)
    gen: GenConfig = field(default_factory=lambda: GenConfig(0, 7, 0.5, 0))
    master_seed: int = DEFAULT_SEED
    repetitions: int = 3

    def __post_init__(self):
        self.sizes = tuple(self.sizes)
        if not self.sizes:
            raise ValueError("sizes must be non-empty")
        if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])):
            raise ValueError("sizes must be strictly increasing")
        self.support_fractions = tuple(SupportThreshold.of(s) for s in self.support_fractions)
        for s in self.support_fractions:
            if s.fraction is not None and s.fraction >= 1:
                raise ValueError("support fractions must be below 1")
        self.user_attrs = itemset(self.user_attrs)
        if not self.user_attrs:
            raise ValueError("user_attrs must be non-empty")
        if self.repetitions < 1:
            raise ValueError("repetitions must be positive")


@dataclass(frozen=True)
class BenchRow:
    size: int
    support: SupportThreshold
    algorithm: str
    frequent_count: int
    node_count: int
    update_count: int
    storage_bytes: int
    elapsed_ms: float
    working_db_size: int
    final_node_count: int = 0

    def deterministic(self) -> tuple:
        """Every column except timing."""
        return (self.size, str(self.support), self.algorithm, self.frequent_count,
                self.node_count, self.update_count, self.storage_bytes,
                self.working_db_size, self.final_node_count)


@dataclass
class DominanceReport:
    violations: list[str]
    timing_notes: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def size_seed(master_seed: int, size: int) -> int:
    """Per-size generator seed; a pure function of (master seed, size)."""
    state = np.random.SeedSequence([master_seed, size]).generate_state(1, np.uint64)
    return int(state[0])


def _support_key(s: SupportThreshold):
    return (0, s.count, 0) if s.count is not None else (1, 0, s.fraction)


def run_comparison(config: BenchConfig,
                   databases: Mapping[int, TransactionDb] | None = None) -> list[BenchRow]:
    """Mine every (size, support) cell with both algorithms on one shared database.

    ``databases`` overrides generation for the given sizes.
    """
    rows: list[BenchRow] = []
    for size in config.sizes:
        try:
            if databases is not None and size in databases:
                db = databases[size]
            else:
                gen = replace(config.gen, num_transactions=size,
                              seed=size_seed(config.master_seed, size))
                db = generate(gen)
        except Exception as exc:
            raise BenchError(size, None, exc) from exc
        for support in config.support_fractions:
            try:
                for algo in ALGORITHMS:
                    result, times = _timed(db, algo, support, config)
                    rows.append(_row(size, support, algo, result, times))
            except BenchError:
                raise
            except Exception as exc:
                raise BenchError(size, support, exc) from exc
    rows.sort(key=lambda r: (_support_key(r.support), r.size, ALGORITHMS.index(r.algorithm)))
    return rows


def _timed(db, algo, support, config) -> tuple[MiningResult, list[float]]:
    times = []
    result = None
    for _ in range(config.repetitions):
        if algo == "apriori":
            result = apriori(db, support)
        else:
            result = iar(db, config.user_attrs, support)
        times.append(result.elapsed_ms)
    return result, times


def _row(size, support, algo, result: MiningResult, times) -> BenchRow:
    return BenchRow(size=size, support=support, algorithm=algo,
                    frequent_count=len(result.frequent),
                    node_count=result.node_count,
                    update_count=result.update_count,
                    storage_bytes=result.storage_bytes,
                    elapsed_ms=statistics.median(times),
                    working_db_size=result.working_db_size,
                    final_node_count=result.metrics.final_node_count)


def _pairs(rows: Sequence[BenchRow]):
    cells: dict[tuple, dict[str, BenchRow]] = {}
    for r in rows:
        cell = cells.setdefault((r.size, r.support), {})
        if r.algorithm in cell:
            raise ValueError(f"duplicate {r.algorithm} row for size={r.size} support={r.support}")
        cell[r.algorithm] = r
    for key, cell in cells.items():
        if set(cell) != set(ALGORITHMS):
            raise ValueError(f"unpaired rows for size={key[0]} support={key[1]}")
        yield cell["apriori"], cell["iar"]


def assert_dominance(rows: Sequence[BenchRow]) -> DominanceReport:
    """Check IAR <= Apriori on every metric column of every paired cell.

    Timing is only reported: a slower IAR run becomes a note, not a violation.
    """
    violations, notes = [], []
    for ap, ia in _pairs(rows):
        for col in DOMINANCE_COLUMNS:
            a, i = getattr(ap, col), getattr(ia, col)
            if i > a:
                violations.append(
                    f"size={ap.size} support={ap.support}: iar {col}={i} > apriori {a}")
        if ia.elapsed_ms >= ap.elapsed_ms:
            tier = "advisory" if ap.size < TIMING_ASSERT_MIN_SIZE else "timing"
            notes.append(f"[{tier}] size={ap.size} support={ap.support}: "
                         f"iar {ia.elapsed_ms:.2f} ms >= apriori {ap.elapsed_ms:.2f} ms")
    return DominanceReport(violations, notes)


def emit_report(rows: Sequence[BenchRow], format: str = "csv") -> str:
    if not rows:
        raise ValueError("no rows to report")
    if format == "csv":
        return _csv(rows)
    if format == "markdown":
        return _markdown(rows)
    raise ValueError(f"unknown report format {format!r}")


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.size, str(r.support), r.algorithm, r.frequent_count, r.node_count,
                    r.update_count, r.storage_bytes, f"{r.elapsed_ms:.3f}", r.working_db_size])
    return buf.getvalue()


def _label(s: SupportThreshold) -> str:
    if s.count is not None:
        return f"absolute support {s.count}"
    pct = s.fraction * 100
    return f"support level {pct.numerator / pct.denominator:g} percent"


def _markdown(rows) -> str:
    by_support: dict[SupportThreshold, list[tuple[BenchRow, BenchRow]]] = {}
    for ap, ia in _pairs(rows):
        by_support.setdefault(ap.support, []).append((ap, ia))
    out = []
    for support in sorted(by_support, key=_support_key):
        pairs = sorted(by_support[support], key=lambda p: p[0].size)
        out.append(f"### Parameters with {_label(support)}\n")
        out.append("| Data size | Frequent itemsets (Apriori) | Frequent itemsets (IAR) "
                   "| T-tree nodes (Apriori) | T-tree nodes (IAR) "
                   "| T-tree updates (Apriori) | T-tree updates (IAR) "
                   "| Storage bytes (Apriori) | Storage bytes (IAR) |")
        out.append("|" + "---|" * 9)
        for ap, ia in pairs:
            out.append(f"| {ap.size} | {ap.frequent_count} | {ia.frequent_count} "
                       f"| {ap.node_count} | {ia.node_count} "
                       f"| {ap.update_count} | {ia.update_count} "
                       f"| {ap.storage_bytes} | {ia.storage_bytes} |")
        out.append("")
        out.append(f"Timing series ({_label(support)}):\n")
        out.append("```")
        out.append("size,apriori_ms,iar_ms")
        for ap, ia in pairs:
            out.append(f"{ap.size},{ap.elapsed_ms:.3f},{ia.elapsed_ms:.3f}")
        out.append("```")
        out.append("")
    return "\n".join(out)
