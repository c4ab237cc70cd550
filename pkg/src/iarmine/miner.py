"""Level-wise frequent itemset mining: Apriori and Interactive Apriori (IAR).

IAR filters the database down to the transactions holding every user
attribute and runs the same level-wise search over that working database.
Fractional thresholds are always resolved against the original database.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .core import (Itemset, SupportThreshold, TransactionDb, filter_database,
                   itemset)
from .ttree import TTree, TTreeMetrics


@dataclass(frozen=True)
class MiningConfig:
    threshold: SupportThreshold
    user_attrs: Itemset | None = None
    max_level: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "threshold", SupportThreshold.of(self.threshold))
        if self.user_attrs is not None:
            attrs = itemset(self.user_attrs)
            if not attrs:
                raise ValueError("IAR mode needs at least one user attribute")
            object.__setattr__(self, "user_attrs", attrs)
        if self.max_level is not None and self.max_level < 1:
            raise ValueError("max_level must be positive")

    @property
    def mode(self) -> str:
        return "apriori" if self.user_attrs is None else "iar"


@dataclass
class Level:
    """Candidates counted and frequent itemsets kept at one pass."""
    k: int
    candidates: list[Itemset]
    frequent: list[Itemset]


@dataclass
class MiningResult:
    frequent: list[tuple[Itemset, int]]
    metrics: TTreeMetrics
    mode: str
    working_db_size: int
    min_count: int
    elapsed_ms: float = 0.0
    levels: list[Level] = field(default_factory=list)

    def supports(self) -> dict[Itemset, int]:
        return dict(self.frequent)

    @property
    def node_count(self) -> int:
        return self.metrics.node_count

    @property
    def update_count(self) -> int:
        return self.metrics.update_count

    @property
    def storage_bytes(self) -> int:
        return self.metrics.storage_bytes


def generate_candidates(prev_frequent: Sequence[Itemset], k: int) -> list[Itemset]:
    """Apriori join + prune: size-``k`` candidates from sorted frequent (k-1)-itemsets."""
    if k < 2:
        raise ValueError("candidate generation starts at level 2")
    if any(len(x) != k - 1 for x in prev_frequent):
        raise ValueError(f"all previous frequent itemsets must have size {k - 1}")
    prev = sorted(prev_frequent)
    known = set(prev)
    out: list[Itemset] = []
    n = len(prev)
    i = 0
    # sorted input groups itemsets sharing a (k-2)-prefix into runs
    while i < n:
        prefix = prev[i][:-1]
        j = i
        while j < n and prev[j][:-1] == prefix:
            j += 1
        for a in range(i, j):
            for b in range(a + 1, j):
                cand = prev[a] + prev[b][-1:]
                if all(cand[:d] + cand[d + 1:] in known for d in range(k - 2)):
                    out.append(cand)
        i = j
    return out


def _mine(db: TransactionDb, min_count: int, max_level: int | None,
          mode: str, universe_size: int) -> MiningResult:
    start = time.perf_counter()
    if universe_size < 1 or not len(db):
        return MiningResult([], TTreeMetrics(), mode, len(db), min_count)
    tree = TTree(universe_size)
    cap = universe_size if max_level is None else min(max_level, universe_size)
    txs = db.transactions
    levels: list[Level] = []

    candidates: list[Itemset] = [(i,) for i in range(1, universe_size + 1)]
    k = 1
    while candidates and k <= cap:
        for c in candidates:
            tree.insert_candidate(c)
        for t in txs:
            tree.count_transaction(t, k)
        frequent = tree.prune_level(k, min_count)
        levels.append(Level(k, candidates, frequent))
        k += 1
        if not frequent or k > cap:
            break
        candidates = generate_candidates(frequent, k)

    elapsed = (time.perf_counter() - start) * 1000.0
    return MiningResult(tree.frequent_itemsets(), tree.metrics, mode, len(db),
                        min_count, elapsed, levels)


def apriori(db: TransactionDb, threshold, *, max_level: int | None = None) -> MiningResult:
    """Standard Apriori over the whole database."""
    threshold = SupportThreshold.of(threshold)
    if not len(db):
        raise ValueError("cannot mine an empty database")
    min_count = threshold.resolve(len(db))
    return _mine(db, min_count, max_level, "apriori", db.universe_size)


def iar(db: TransactionDb, user_attrs: Sequence[int], threshold, *,
        max_level: int | None = None) -> MiningResult:
    """Interactive Apriori: scan only transactions containing all ``user_attrs``.

    An empty working database is a valid, empty result.
    """
    threshold = SupportThreshold.of(threshold)
    working = filter_database(db, user_attrs)
    min_count = threshold.resolve(len(db))
    return _mine(working, min_count, max_level, "iar", db.universe_size)


def mine(db: TransactionDb, config: MiningConfig) -> MiningResult:
    if config.user_attrs is None:
        return apriori(db, config.threshold, max_level=config.max_level)
    return iar(db, config.user_attrs, config.threshold, max_level=config.max_level)
