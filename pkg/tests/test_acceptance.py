"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s``.  The randomized
criteria use fixed seed lists, so every run exercises identical
operation streams.  Structural audits required by criterion 6 are
interleaved into the criterion 3-5 runs and tallied here.
"""

import csv
import math
import random
import subprocess
import sys
import time
from itertools import permutations
from multiprocessing import Pool

from ttcbits.baseline import BPlusTreeIntervalSet
from ttcbits.bench import run_repetition
from ttcbits.bitvector import DynBitVector
from ttcbits.closure import TTC, Contact
from ttcbits.intervals import IntervalSet
from ttcbits.oracles import (OracleIntervalSet, check_journey,
                             oracle_can_reach, oracle_minimal_intervals)

IMPLS = ("compact-dense", "compact-sparse", "bptree")

# audit walks performed with zero violations, tallied per criterion run
AUDITS = {"interval-layer": 0, "ttc-layer": 0, "saturation": 0}

FIG_CONTACTS = [Contact(0, 1, 1), Contact(0, 1, 2), Contact(1, 3, 3),
                Contact(2, 0, 4), Contact(2, 3, 5)]
FIG_EDGES = {(0, 1): [(1, 2), (2, 3)], (0, 3): [(2, 4)], (1, 3): [(3, 4)],
             (2, 0): [(4, 5)], (2, 3): [(5, 6)]}


def _report(num, name, elapsed, budget=None, detail=""):
    limit = f", budget {budget:.0f}s" if budget else ""
    print(f"\nACCEPTANCE {num} ({name}): PASS in {elapsed:.2f}s{limit}{detail}")


def test_criterion_01_figure_closure_all_permutations():
    start = time.perf_counter()
    for impl in IMPLS:
        for perm in permutations(FIG_CONTACTS):
            T = TTC(4, tau=6, delta=1, impl=impl)
            T.add_contacts(perm)
            assert T.edges() == FIG_EDGES, (impl, perm)
        assert T.can_reach(0, 3, 1, 4)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(1, "figure closure, 120 permutations x 3 impls", elapsed, 1)


def test_criterion_02_four_step_insertion_states():
    start = time.perf_counter()
    for mode in ("dense", "sparse"):
        s = IntervalSet(mode)
        s.insert(2, 6)
        assert s.departures.one_positions() == [2]
        assert s.arrivals.one_positions() == [6]
        assert s.insert(1, 6) is False
        assert s.departures.one_positions() == [2]
        assert s.arrivals.one_positions() == [6]
        s.insert(1, 5)
        assert s.departures.one_positions() == [1, 2]
        assert s.arrivals.one_positions() == [5, 6]
        s.insert(3, 4)
        assert s.departures.one_positions() == [3]
        assert s.arrivals.one_positions() == [4]
        assert s.intervals() == [(3, 4)]
    tree = BPlusTreeIntervalSet()
    for t1, t2 in ((2, 6), (1, 6), (1, 5), (3, 4)):
        tree.insert(t1, t2)
    assert tree.intervals() == [(3, 4)]
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(2, "four-step insertion states", elapsed, 1)


def test_criterion_03_interval_layer_oracle_equivalence():
    start = time.perf_counter()
    tau = 1 << 10
    ops_per_seed = 100_000
    for seed in range(20):
        rng = random.Random(1000 + seed)
        dense = IntervalSet("dense")
        sparse = IntervalSet("sparse")
        tree = BPlusTreeIntervalSet()
        oracle = OracleIntervalSet()
        impls = (dense, sparse, tree)
        for step in range(ops_per_seed):
            op = rng.randrange(3)
            if op == 0:
                t1 = rng.randint(1, tau)
                hi = min(tau, t1 + 64) if rng.random() < 0.7 else tau
                t2 = rng.randint(t1, hi)
                expect = oracle.insert(t1, t2)
                for s in impls:
                    assert s.insert(t1, t2) == expect, (seed, step)
            elif op == 1:
                t = rng.randint(1, tau + 8)
                expect = oracle.find_prev(t)
                for s in impls:
                    got = s.find_prev(t)
                    assert (got[:2] if got else None) == expect, (seed, step)
            else:
                t = rng.randint(1, tau + 8)
                expect = oracle.find_next(t)
                for s in impls:
                    got = s.find_next(t)
                    assert (got[:2] if got else None) == expect, (seed, step)
            if (step + 1) % 1000 == 0:
                dense.audit()
                sparse.audit()
                tree.check()
                AUDITS["interval-layer"] += 4  # two bit-vectors per set
        for s in impls:
            assert s.intervals() == oracle.intervals(), seed
    elapsed = time.perf_counter() - start
    assert elapsed < 120
    _report(3, "interval layer vs oracle, 20 seeds x 1e5 ops x 3 impls",
            elapsed, 120)


def test_criterion_04_ttc_layer_oracle_equivalence():
    start = time.perf_counter()
    instances = 0
    queries_per_instance = 1000
    for n in (4, 8, 16):
        for tau in (16, 64):
            for delta in (1, 2):
                universe = [(u, v, t) for u in range(n) for v in range(n)
                            if u != v for t in range(1, tau + 2 - delta)]
                for seed in range(30):
                    rng = random.Random(seed * 9973 + n * 131 + tau + delta)
                    impl = IMPLS[seed % 3]
                    count = rng.randint(1, min(len(universe), n * tau))
                    contacts = rng.sample(universe, count)
                    T = TTC(n, tau=tau, delta=delta, impl=impl)
                    for idx, c in enumerate(contacts, 1):
                        T.add_contact(c)
                        if idx % 1000 == 0:
                            T.audit()
                            AUDITS["ttc-layer"] += 1
                    T.audit()
                    AUDITS["ttc-layer"] += 1
                    om = oracle_minimal_intervals(contacts, n, delta)
                    expected = {(u, v): om[u][v] for u in range(n)
                                for v in range(n) if om[u][v]}
                    assert T.edges() == expected, (n, tau, delta, seed, impl)
                    by_time = sorted(contacts, key=lambda c: c[2])
                    for _ in range(queries_per_instance):
                        u, v = rng.randrange(n), rng.randrange(n)
                        t1 = rng.randint(1, tau)
                        t2 = rng.randint(t1, tau + delta)
                        reach = oracle_can_reach(by_time, n, delta, u, v, t1, t2)
                        assert T.can_reach(u, v, t1, t2) == reach
                        J = T.reconstruct_journey(u, v, t1, t2)
                        assert (J is not None) == reach
                        if J is not None:
                            assert check_journey(J, contacts, u, v, delta,
                                                 t1, t2)
                    instances += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 300
    _report(4, "closure vs oracle", elapsed, 300,
            f", {instances} instances x {queries_per_instance} queries")


def test_criterion_05_saturation_reaches_singletons():
    start = time.perf_counter()
    tau = 1 << 8
    expected = [(t, t) for t in range(1, tau + 1)]
    workload = [(t1, t2) for t1 in range(1, tau + 1)
                for t2 in range(t1, tau + 1)]
    for impl_idx, make in enumerate((lambda: IntervalSet("dense"),
                                     lambda: IntervalSet("sparse"),
                                     lambda: BPlusTreeIntervalSet())):
        rng = random.Random(500 + impl_idx)
        shuffled = list(workload)
        rng.shuffle(shuffled)
        s = make()
        for idx, (t1, t2) in enumerate(shuffled, 1):
            s.insert(t1, t2)
            if idx % 1000 == 0:
                if isinstance(s, IntervalSet):
                    s.audit()
                    AUDITS["saturation"] += 2
                else:
                    s.check()
        assert s.intervals() == expected
    elapsed = time.perf_counter() - start
    _report(5, "saturation endpoint: all-singleton antichain", elapsed,
            detail=f", {len(workload)} inserts x 3 impls")


def test_criterion_06_structural_audits_ran_clean():
    # the walks themselves run inside criteria 3-5 and raise on violation
    assert AUDITS["interval-layer"] >= 2000
    assert AUDITS["ttc-layer"] >= 360
    assert AUDITS["saturation"] >= 60
    total = sum(AUDITS.values())
    print(f"\nACCEPTANCE 6 (structural audits): PASS, "
          f"{total} audit walks, zero violations {AUDITS}")


def test_criterion_07_logarithmic_cost_proxy():
    start = time.perf_counter()
    m, l = 32, 4096
    rng = random.Random(7)
    for exp in range(8, 15):
        tau = 1 << exp
        b = DynBitVector(mode="dense", branching=m, leaf_cap=l)
        b.ensure_capacity(tau)
        for _ in range(min(tau, 4000)):
            b.update_bit(rng.randint(1, tau), 1)
        b.audit()
        # height counts levels (leaf level = 1), matching the bound's +1
        bound = max(1, math.ceil(math.log(tau / (l // 2), (m + 1) // 2)) + 1)
        assert b.height <= bound, (tau, b.height, bound)
        for _ in range(500):
            before = b.touches
            op = rng.randrange(4)
            if op == 0:
                b.access(rng.randint(1, tau))
            elif op == 1:
                b.rank1(rng.randint(0, tau - 1))
            elif op == 2:
                b.select1(rng.randint(1, b.ones_total))
            else:
                b.update_bit(rng.randint(1, tau), rng.randint(0, 1))
            assert b.touches - before <= 3 * b.height, (tau, op)
    # the same touch bound holds in sparse mode
    sb = DynBitVector(mode="sparse")
    sb.ensure_capacity(1 << 12)
    for _ in range(2000):
        sb.update_bit(rng.randint(1, 1 << 12), 1)
    sb.audit()
    for _ in range(500):
        before = sb.touches
        sb.update_bit(rng.randint(1, 1 << 12), rng.randint(0, 1))
        assert sb.touches - before <= 3 * sb.height
    elapsed = time.perf_counter() - start
    _report(7, "touch counters and depth bound", elapsed,
            detail=", tau in 2^8..2^14")


def _space_worker(impl):
    res = run_repetition(dict(rep=0, workload="contacts", tau=1 << 12, n=16,
                              delta=1, seed=0, impl=impl,
                              sample_every=10 ** 9))
    return impl, res["final_bytes"]


def test_criterion_08_space_at_desk_scale():
    start = time.perf_counter()
    with Pool(2) as pool:
        results = dict(pool.map(_space_worker, ["compact-dense", "bptree"]))
    compact, tree = results["compact-dense"], results["bptree"]
    elapsed = time.perf_counter() - start
    assert compact <= 0.5 * tree, results
    assert elapsed < 600
    _report(8, "space at desk scale", elapsed, 600,
            f", compact={compact:,}B vs bptree={tree:,}B "
            f"(ratio {compact / tree:.3f})")


def test_criterion_09_unset_range_equivalence():
    start = time.perf_counter()
    rng = random.Random(17)
    cases = 0
    roundtrips = 0
    while cases < 10_000:
        n = rng.randint(8, 512)
        density = rng.choice("0011" "01")
        s = "".join(rng.choice("01" if density == "0" else "011")
                    for _ in range(n))
        if s.count("1") < 2:
            continue
        base = DynBitVector.from01(s, mode="sparse", branching=4, leaf_cap=16)
        for _ in range(20):
            ones = base.ones_total
            j1 = rng.randint(1, ones)
            j2 = rng.randint(j1, ones)
            a = base.copy()
            b = base.copy()
            a.unset_range(j1, j2)
            for _ in range(j2 - j1 + 1):
                b.update_bit(b.select1(j1), 0)
            assert a.to01() == b.to01(), (s, j1, j2)
            assert a.length == len(s)
            a.audit()
            cases += 1
        c = base.copy()
        k = rng.randint(1, c.ones_total)
        left, right = c.split_at_jth_one(k)
        joined = DynBitVector.join(left, right)
        joined.audit()
        assert joined.to01() == s
        roundtrips += 1
    elapsed = time.perf_counter() - start
    _report(9, "unset_range equals iterative loop", elapsed,
            detail=f", {cases} cases, {roundtrips} split/join round-trips")


def _run_bench(tmp_path, tag, workload, extra):
    out = tmp_path / f"{tag}.csv"
    dump = tmp_path / f"{tag}.dump"
    cmd = [sys.executable, "-m", "ttcbits.bench", "--workload", workload,
           "--impl", "compact-dense", "--seed", "5", "--reps", "2",
           "--out", str(out), "--dump", str(dump), *extra]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    rows = list(csv.reader(ln for ln in out.read_text().splitlines()
                           if ln and not ln.startswith("#")))
    without_timing = [(r[0], r[1], r[3]) for r in rows[1:]]
    return without_timing, dump.read_text()


def test_criterion_10_benchmark_determinism(tmp_path):
    start = time.perf_counter()
    for workload, extra in (("intervals", ["--tau", "32"]),
                            ("contacts", ["--tau", "16", "--n", "4"])):
        rows1, dump1 = _run_bench(tmp_path, f"{workload}-a", workload, extra)
        rows2, dump2 = _run_bench(tmp_path, f"{workload}-b", workload, extra)
        assert rows1 == rows2, workload
        assert dump1 == dump2, workload
        assert len(rows1) > 0
    elapsed = time.perf_counter() - start
    _report(10, "benchmark determinism", elapsed)
