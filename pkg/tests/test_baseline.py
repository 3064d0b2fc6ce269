import random

import pytest

from ttcbits.baseline import BPlusTreeIntervalSet
from ttcbits.intervals import IntervalSet
from ttcbits.oracles import OracleIntervalSet


def test_worked_insert_sequences_match_compact():
    for seq in ([(2, 6), (1, 6)], [(2, 6), (1, 5)], [(2, 6), (1, 5), (3, 4)]):
        tree = BPlusTreeIntervalSet()
        compact = IntervalSet("dense")
        for t1, t2 in seq:
            assert tree.insert(t1, t2) == compact.insert(t1, t2)
        assert tree.intervals() == compact.intervals()


def test_empty_set_queries():
    tree = BPlusTreeIntervalSet()
    assert tree.find_prev(100) is None
    assert tree.find_next(1) is None
    assert not tree.covers(1, 100)
    assert tree.intervals() == []
    with pytest.raises(ValueError):
        tree.find_next(0)


def test_rebalancing_under_heavy_churn():
    # small branching forces deep trees and every structural case
    rng = random.Random(31)
    tree = BPlusTreeIntervalSet(branching=4)
    oracle = OracleIntervalSet()
    for step in range(4000):
        t1 = rng.randint(1, 500)
        t2 = rng.randint(t1, min(500, t1 + rng.randint(0, 60)))
        assert tree.insert(t1, t2) == oracle.insert(t1, t2)
        if step % 200 == 0:
            tree.check()
            assert tree.intervals() == oracle.intervals()
    tree.check()
    assert tree.intervals() == oracle.intervals()


def test_full_cross_equivalence_with_compact():
    rng = random.Random(8)
    tree = BPlusTreeIntervalSet()
    dense = IntervalSet("dense")
    for step in range(6000):
        op = rng.randrange(3)
        if op == 0:
            t1 = rng.randint(1, 700)
            t2 = rng.randint(t1, min(700, t1 + 40))
            assert tree.insert(t1, t2) == dense.insert(t1, t2)
        elif op == 1:
            t = rng.randint(1, 710)
            a = tree.find_prev(t)
            b = dense.find_prev(t)
            assert (a[:2] if a else None) == (b[:2] if b else None)
        else:
            t = rng.randint(1, 710)
            a = tree.find_next(t)
            b = dense.find_next(t)
            assert (a[:2] if a else None) == (b[:2] if b else None)
    assert tree.intervals() == dense.intervals()


def test_successors_follow_keys():
    tree = BPlusTreeIntervalSet(branching=4, track_successors=True)
    rng = random.Random(2)
    mirror = IntervalSet("dense", track_successors=True)
    for k in range(500):
        t1 = rng.randint(1, 200)
        t2 = rng.randint(t1, min(200, t1 + 20))
        assert tree.insert(t1, t2, successor=k) == mirror.insert(t1, t2, successor=k)
    assert tree.intervals() == mirror.intervals()
    for t in range(1, 200, 3):
        a, b = tree.find_next(t), mirror.find_next(t)
        assert (a is None) == (b is None)
        if a is not None:
            assert a.successor == b.successor


def test_memory_accounting_hooks():
    tree = BPlusTreeIntervalSet()
    empty_bytes = tree.accounted_bytes()
    assert empty_bytes > 0
    for t in range(1, 2000, 2):
        tree.insert(t, t + 1)
    assert tree.accounted_bytes() > empty_bytes
    assert "bptree" in tree.dump().splitlines()[0]
