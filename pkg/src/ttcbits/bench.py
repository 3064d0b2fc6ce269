"""Benchmark harness: shuffled synthetic workloads over either implementation.

Two workload kinds mirror the evaluation setup: ``intervals`` inserts
every interval [t1, t2] with 1 <= t1 <= t2 <= tau into a single
interval set; ``contacts`` inserts every contact (u, v, t) with u != v
into a full closure.  Each repetition shuffles its workload with its
own seeded PRNG, drives the chosen implementation, and records the
cumulative wall-clock time plus the structure-owned byte count after
every insertion (subsampled on request; the final sample is always
written).

Repetitions are independent and may run as parallel processes; the
``TTC_BENCH_THREADS`` environment variable caps that parallelism
(default 1, keeping timing fidelity).
"""

from __future__ import annotations

import argparse
import csv
import gc
import os
import random
import sys
import time
from multiprocessing import Pool

from .baseline import BPlusTreeIntervalSet
from .closure import TTC
from .intervals import IntervalSet

WORKLOADS = ("intervals", "contacts")
IMPLEMENTATIONS = ("compact-dense", "compact-sparse", "bptree")
CSV_COLUMNS = ("rep", "op_index", "cumulative_ns", "accounted_bytes")


def generate_intervals(tau: int, seed: int) -> list[tuple[int, int]]:
    """Every [t1, t2] with 1 <= t1 <= t2 <= tau, shuffled deterministically."""
    ops = [(t1, t2) for t1 in range(1, tau + 1) for t2 in range(t1, tau + 1)]
    random.Random(seed).shuffle(ops)
    return ops


def generate_contacts(n: int, tau: int, delta: int, seed: int) -> list[tuple[int, int, int]]:
    """Every contact (u, v, t), u != v, with arrival inside the lifetime."""
    tmax = tau + 1 - delta
    ops = [(u, v, t) for u in range(n) for v in range(n) if u != v
           for t in range(1, tmax + 1)]
    random.Random(seed).shuffle(ops)
    return ops


def make_structure(impl: str, workload: str, n: int, tau: int, delta: int):
    if workload == "contacts":
        return TTC(n, tau=tau, delta=delta, impl=impl)
    if impl == "bptree":
        return BPlusTreeIntervalSet()
    mode = "dense" if impl == "compact-dense" else "sparse"
    return IntervalSet(mode=mode)


def run_repetition(cfg: dict) -> dict:
    """One full repetition; returns sampled rows, totals, optional dump."""
    rep = cfg["rep"]
    workload = cfg["workload"]
    if workload == "intervals":
        ops = generate_intervals(cfg["tau"], cfg["seed"] + rep)
    else:
        ops = generate_contacts(cfg["n"], cfg["tau"], cfg["delta"],
                                cfg["seed"] + rep)
    structure = make_structure(cfg["impl"], workload, cfg["n"], cfg["tau"],
                               cfg["delta"])
    sample = cfg["sample_every"]
    total = len(ops)
    rows = []
    cumulative = 0
    clock = time.perf_counter_ns
    if workload == "intervals":
        apply_op = structure.insert
    else:
        apply_op = structure.add_contact
    # the structures are acyclic and long-lived: cycle collection only adds
    # full-heap pauses to the timings, so it is parked during the run
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for idx, op in enumerate(ops, 1):
            t0 = clock()
            apply_op(*op)
            cumulative += clock() - t0
            if idx % sample == 0 or idx == total:
                rows.append((rep, idx, cumulative, structure.accounted_bytes()))
    finally:
        if gc_was_enabled:
            gc.enable()
    out = {
        "rep": rep,
        "rows": rows,
        "total_ops": total,
        "total_ns": cumulative,
        "final_bytes": structure.accounted_bytes() if total else 0,
    }
    if cfg.get("want_dump"):
        out["dump"] = structure.dump()
    if cfg.get("want_intervals"):
        out["intervals"] = (structure.intervals() if workload == "intervals"
                            else structure.edges())
    return out


def _gnuplot_script(csv_path: str) -> str:
    name = os.path.basename(csv_path)
    return "\n".join([
        "# cumulative insertion time and accounted bytes per operation",
        'set datafile separator ","',
        "set xlabel 'operation index'",
        "set ylabel 'cumulative wall-clock (ns)'",
        "set y2label 'accounted bytes'",
        "set ytics nomirror",
        "set y2tics",
        "set key left top",
        f"plot '{name}' every ::1 using 2:3 with lines title 'cumulative time', \\",
        f"     '{name}' every ::1 using 2:4 axes x1y2 with lines title 'accounted bytes'",
        "",
    ])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ttc-bench",
        description="Insert a shuffled synthetic workload and record "
                    "cumulative time and accounted memory per operation.")
    p.add_argument("--workload", choices=WORKLOADS, required=True)
    p.add_argument("--tau", type=int, required=True,
                   help="lifetime length (number of timestamps)")
    p.add_argument("--n", type=int, default=32,
                   help="vertex count for the contacts workload (default 32)")
    p.add_argument("--delta", type=int, default=1,
                   help="traversal latency (default 1)")
    p.add_argument("--seed", type=int, default=0,
                   help="base PRNG seed; repetition r uses seed+r (default 0)")
    p.add_argument("--reps", type=int, default=10,
                   help="number of repetitions (default 10)")
    p.add_argument("--impl", choices=IMPLEMENTATIONS, required=True)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--sample-every", type=int, default=1, metavar="K",
                   help="record every K-th operation (default 1); the final "
                        "operation is always recorded")
    p.add_argument("--dump", default=None, metavar="PATH",
                   help="also write the final structure dump of repetition 0")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.tau < 0 or args.reps < 1 or args.sample_every < 1:
        print("ttc-bench: tau must be >= 0, reps and sample-every >= 1",
              file=sys.stderr)
        return 2
    if args.workload == "contacts" and args.n < 2:
        print("ttc-bench: contacts workload needs n >= 2", file=sys.stderr)
        return 2
    cfgs = [{
        "rep": rep,
        "workload": args.workload,
        "tau": args.tau,
        "n": args.n,
        "delta": args.delta,
        "seed": args.seed,
        "impl": args.impl,
        "sample_every": args.sample_every,
        "want_dump": bool(args.dump) and rep == 0,
    } for rep in range(args.reps)]
    threads = int(os.environ.get("TTC_BENCH_THREADS", "1"))
    if threads > 1 and args.reps > 1:
        with Pool(min(threads, args.reps)) as pool:
            results = pool.map(run_repetition, cfgs)
    else:
        results = [run_repetition(c) for c in cfgs]
    try:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for res in results:
                writer.writerows(res["rows"])
            for res in results:
                fh.write(f"# summary rep={res['rep']} ops={res['total_ops']} "
                         f"total_ns={res['total_ns']} "
                         f"final_bytes={res['final_bytes']}\n")
        gp_path = os.path.splitext(args.out)[0] + ".gp"
        with open(gp_path, "w", encoding="utf-8") as fh:
            fh.write(_gnuplot_script(args.out))
        if args.dump:
            with open(args.dump, "w", encoding="utf-8") as fh:
                fh.write(results[0].get("dump", "") + "\n")
    except OSError as exc:
        print(f"ttc-bench: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
