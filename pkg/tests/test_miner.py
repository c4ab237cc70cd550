import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iarmine.core import SupportThreshold, TransactionDb, filter_database
from iarmine.miner import MiningConfig, apriori, generate_candidates, iar, mine

from oracles import brute_force_frequent, expected_run_metrics, random_db

TOY_FREQUENT = {(1,): 3, (2,): 3, (3,): 2, (5,): 2,
                   (1, 2): 3, (1, 5): 2, (2, 5): 2, (1, 2, 5): 2}


def test_generate_candidates_pairs():
    assert generate_candidates([(1,), (2,), (3,), (5,)], 2) == [
        (1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 5)]


def test_generate_candidates_join_and_prune():
    assert generate_candidates([(1, 2), (1, 5), (2, 5)], 3) == [(1, 2, 5)]
    # {1,2,3} joins from (1,2),(1,3) but (2,3) is missing
    assert generate_candidates([(1, 2), (1, 3)], 3) == []
    assert generate_candidates([], 4) == []


def test_generate_candidates_rejects_mixed_sizes():
    with pytest.raises(ValueError):
        generate_candidates([(1,), (1, 2)], 2)


def test_apriori_toy(toy_db):
    result = apriori(toy_db, 2)
    assert result.supports() == TOY_FREQUENT
    assert [lvl.frequent for lvl in result.levels][2] == [(1, 2, 5)]
    assert result.mode == "apriori"
    assert result.working_db_size == 4
    assert result.metrics.final_node_count == 8


def test_apriori_toy_levels(toy_db):
    levels = apriori(toy_db, 2).levels
    assert [len(lvl.candidates) for lvl in levels] == [5, 6, 1]
    assert [len(lvl.frequent) for lvl in levels] == [4, 3, 1]


def test_apriori_threshold_above_db(toy_db):
    assert apriori(toy_db, 5).frequent == []


def test_apriori_threshold_one(toy_db):
    got = apriori(toy_db, 1).supports()
    assert (3, 4) in got and (4,) in got
    assert got == brute_force_frequent(toy_db, 1)


def test_apriori_rejects_empty():
    with pytest.raises(ValueError):
        apriori(TransactionDb(3, ()), 1)


def test_iar_toy_by_b(toy_db):
    result = iar(toy_db, (2,), 2)
    assert result.supports() == {k: v for k, v in TOY_FREQUENT.items() if k != (3,)}
    assert result.working_db_size == 3
    assert result.mode == "iar"
    assert result.supports()[(1, 2)] == apriori(toy_db, 2).supports()[(1, 2)] == 3


def test_iar_empty_working_db(toy_db):
    result = iar(toy_db, (4,), 2)
    assert result.frequent == []
    assert result.working_db_size == 1
    missing = TransactionDb(5, ((1, 2),))
    empty = iar(missing, (3,), 1)
    assert empty.frequent == [] and empty.working_db_size == 0
    assert empty.metrics.node_count == empty.metrics.update_count == 0


def test_iar_fraction_resolves_against_original(toy_db):
    assert iar(toy_db, (2,), 0.5).min_count == 2
    assert iar(toy_db, (2,), 0.6).min_count == 3      # ceil(2.4); |D'| would give 2
    assert iar(toy_db, (2,), 0.6).supports() == {(1,): 3, (2,): 3, (1, 2): 3}


def test_max_level_caps(toy_db):
    result = apriori(toy_db, 2, max_level=2)
    assert max(len(x) for x, _ in result.frequent) == 2


def test_mine_dispatch(toy_db):
    assert mine(toy_db, MiningConfig(SupportThreshold.of(2))).mode == "apriori"
    assert mine(toy_db, MiningConfig(2, user_attrs=(2,))).working_db_size == 3
    with pytest.raises(ValueError):
        MiningConfig(2, user_attrs=())


def test_deterministic_metrics():
    db = random_db(random.Random(3), 8, 200, 0.5)
    a, b = apriori(db, 10), apriori(db, 10)
    assert a.frequent == b.frequent
    assert a.metrics == b.metrics


@st.composite
def db_and_threshold(draw):
    m = draw(st.integers(1, 8))
    txs = draw(st.lists(st.frozensets(st.integers(1, m)), min_size=1, max_size=60))
    db = TransactionDb.from_iterables(txs, universe_size=m)
    return db, draw(st.integers(1, 6)), draw(st.integers(1, m))


@settings(max_examples=150, deadline=None)
@given(db_and_threshold())
def test_apriori_matches_brute_force(case):
    db, threshold, _ = case
    result = apriori(db, threshold)
    assert result.supports() == brute_force_frequent(db, threshold)
    updates, peak = expected_run_metrics(db, threshold)
    assert result.metrics.update_count == updates
    assert result.metrics.node_count == peak


@settings(max_examples=150, deadline=None)
@given(db_and_threshold())
def test_iar_constrained_equivalence(case):
    db, threshold, attr = case
    full = {x: s for x, s in apriori(db, threshold).frequent if attr in x}
    constrained = {x: s for x, s in iar(db, (attr,), threshold).frequent if attr in x}
    assert full == constrained


@settings(max_examples=100, deadline=None)
@given(db_and_threshold())
def test_iar_work_never_exceeds_apriori(case):
    db, threshold, attr = case
    a, i = apriori(db, threshold), iar(db, (attr,), threshold)
    assert i.metrics.node_count <= a.metrics.node_count
    assert i.metrics.update_count <= a.metrics.update_count
    assert len(i.frequent) <= len(a.frequent)
    # IAR output is a plain Apriori run over the working database
    d2 = filter_database(db, (attr,))
    assert i.supports() == brute_force_frequent(d2, threshold)


@settings(max_examples=100, deadline=None)
@given(db_and_threshold())
def test_downward_closed(case):
    db, threshold, attr = case
    for result in (apriori(db, threshold), iar(db, (attr,), threshold)):
        found = result.supports()
        for x in found:
            for j in range(len(x)):
                sub = x[:j] + x[j + 1:]
                assert not sub or sub in found
        assert all(s >= result.min_count for s in found.values())
