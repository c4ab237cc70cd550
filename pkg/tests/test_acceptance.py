"""Exit criteria. Each test carries a ``criterion`` marker; the terminal summary
prints one PASS/FAIL line per criterion."""

import random
import time
from fractions import Fraction

import numpy as np
import pytest

from iarmine.bench import BenchConfig, run_comparison
from iarmine.core import SupportThreshold
from iarmine.miner import apriori, iar
from iarmine.rules import generate_rules

from oracles import (all_supports, brute_force_frequent, expected_run_metrics,
                     oracle_corpus)

A, B, C, D, E = 1, 2, 3, 4, 5


@pytest.fixture(scope="module")
def corpus():
    return oracle_corpus(240)


@pytest.fixture(scope="module")
def default_bench():
    start = time.perf_counter()
    rows = run_comparison(BenchConfig(repetitions=3))
    return rows, time.perf_counter() - start


def _bitmask(x):
    return sum(1 << (i - 1) for i in x)


@pytest.mark.criterion(1, "toy database golden: Apriori at support 2")
def test_toy_apriori_golden(toy_db):
    result = apriori(toy_db, SupportThreshold(count=2))
    assert result.supports() == {
        (A,): 3, (B,): 3, (C,): 2, (E,): 2,
        (A, B): 3, (A, E): 2, (B, E): 2, (A, B, E): 2}
    assert [lvl.frequent for lvl in result.levels if lvl.k == 3] == [[(A, B, E)]]
    best = min(apriori(toy_db, 2).elapsed_ms for _ in range(5))
    assert best < 1.0, best


@pytest.mark.criterion(2, "toy database golden: IAR with attrs={B}")
def test_toy_iar_golden(toy_db):
    result = iar(toy_db, (B,), SupportThreshold(count=2))
    assert result.supports() == {
        (A,): 3, (B,): 3, (E,): 2, (A, B): 3, (A, E): 2, (B, E): 2, (A, B, E): 2}
    assert (C,) not in result.supports()
    assert result.working_db_size == 3


@pytest.mark.criterion(3, "oracle equivalence on 240 random databases")
def test_oracle_equivalence(corpus):
    assert len(corpus) >= 200
    start = time.perf_counter()
    mismatches = 0
    for db, threshold, _ in corpus:
        mismatches += apriori(db, threshold).supports() != brute_force_frequent(db, threshold)
    elapsed = time.perf_counter() - start
    assert mismatches == 0
    assert elapsed < 30.0, elapsed


@pytest.mark.criterion(4, "constrained equivalence IAR vs Apriori on U-containing itemsets")
def test_constrained_equivalence(corpus):
    mismatches = 0
    for db, threshold, attr in corpus:
        full = {x: s for x, s in apriori(db, threshold).frequent if attr in x}
        part = {x: s for x, s in iar(db, (attr,), threshold).frequent if attr in x}
        mismatches += full != part
    assert mismatches == 0


@pytest.mark.criterion(5, "metric dominance on the default benchmark")
def test_metric_dominance(default_bench):
    rows, elapsed = default_bench
    assert len(rows) == 20
    cells = {}
    for r in rows:
        cells.setdefault((r.size, r.support), {})[r.algorithm] = r
    for (size, support), cell in cells.items():
        ap, ia = cell["apriori"], cell["iar"]
        for col in ("frequent_count", "node_count", "update_count", "storage_bytes"):
            assert getattr(ia, col) <= getattr(ap, col), (size, str(support), col)
    assert elapsed < 120.0, elapsed


@pytest.mark.criterion(5, "metric dominance on the default benchmark")
@pytest.mark.parametrize("attr", range(1, 8))
def test_metric_dominance_every_attribute(attr):
    rows = run_comparison(BenchConfig(user_attrs=(attr,), repetitions=1))
    pairs = {}
    for r in rows:
        pairs.setdefault((r.size, r.support), {})[r.algorithm] = r
    for cell in pairs.values():
        ap, ia = cell["apriori"], cell["iar"]
        assert ia.frequent_count <= ap.frequent_count
        assert ia.node_count <= ap.node_count
        assert ia.update_count <= ap.update_count
        assert ia.storage_bytes <= ap.storage_bytes


@pytest.mark.slow
@pytest.mark.criterion(6, "timing trend: median IAR < median Apriori for sizes >= 10K")
def test_timing_trend(default_bench):
    rows, _ = default_bench
    cells = {}
    for r in rows:
        cells.setdefault((r.size, r.support), {})[r.algorithm] = r
    checked = 0
    for (size, support), cell in cells.items():
        if size < 10_000:
            continue
        checked += 1
        assert cell["iar"].elapsed_ms < cell["apriori"].elapsed_ms, (size, str(support))
    assert checked == 8


@pytest.mark.criterion(7, "rule confidence equals oracle ratio; min_conf monotonicity")
def test_confidence_correctness(corpus):
    rng = random.Random(7)
    checked = 0
    for db, threshold, _ in corpus:
        sup = all_supports(db)
        frequent = apriori(db, threshold).frequent
        lo, hi = sorted(Fraction(rng.randint(0, 20), 20) for _ in range(2))
        low = generate_rules(frequent, lo)
        for rule in low:
            x = rule.antecedent + rule.consequent
            want = Fraction(int(sup[_bitmask(x)]), int(sup[_bitmask(rule.antecedent)]))
            assert rule.confidence == want
            assert rule.support == sup[_bitmask(x)]
            checked += 1
        assert set(generate_rules(frequent, hi)) <= set(low)
    assert checked > 0


@pytest.mark.criterion(8, "rules golden on the toy database")
def test_rules_golden(toy_db):
    frequent = apriori(toy_db, 2).frequent
    rules = generate_rules(frequent, Fraction(1))
    assert [(r.antecedent, r.consequent) for r in rules] == [
        ((A,), (B,)), ((A, E), (B,)), ((B,), (A,)), ((B, E), (A,)),
        ((E,), (A,)), ((E,), (A, B)), ((E,), (B,))]
    constrained = generate_rules(frequent, Fraction(1), required_antecedent=(B,))
    assert [(r.antecedent, r.consequent) for r in constrained] == [((B,), (A,)), ((B, E), (A,))]


@pytest.mark.criterion(9, "accounting: storage = 12 x peak nodes; update count recomputed")
def test_accounting(default_bench, corpus):
    rows, _ = default_bench
    assert all(r.storage_bytes == 12 * r.node_count for r in rows)
    small = [(db, t, a) for db, t, a in corpus if len(db) <= 200]
    assert small
    for db, threshold, attr in small:
        result = apriori(db, threshold)
        updates, peak = expected_run_metrics(db, threshold)
        assert result.update_count == updates
        assert result.node_count == peak
        assert result.storage_bytes == 12 * result.node_count
        constrained = iar(db, (attr,), threshold)
        assert constrained.storage_bytes == 12 * constrained.node_count
