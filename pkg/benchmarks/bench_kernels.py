"""Compare the compiled and pure-Python chip-firing kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 1]

Each workload runs on a fresh kernel per repetition so the rank memo does
not carry over; the best wall time is reported.
"""
from __future__ import annotations

import argparse
import random
import time

from chipbn import _backend
from chipbn.families import build

try:
    from chipbn._ckernel import Kernel as CKernel
except ImportError:
    CKernel = None


def make(cls, G):
    return cls(G.n, G.neighbors, [sum(m for _, m in a) for a in G.neighbors])


def w_reduce(cls, G, rng):
    divisors = [[rng.randint(-6, 6) for _ in range(G.n)] for _ in range(2000)]
    K = make(cls, G)
    return lambda: [K.reduce(D, 0) for D in divisors]


def w_superstables(cls, G, rng):
    K = make(cls, G)
    return lambda: K.superstables(0, 5)


def w_rank_scan(cls, G, rng):
    def run():
        K = make(cls, G)
        for c in K.superstables(0, 5):
            D = list(c)
            D[0] = 5 - sum(c)
            K.rank_at_least(D, 1)
    return run


WORKLOADS = [
    ("reduce x2000", "petersen", w_reduce),
    ("superstables d<=5", "petersen", w_superstables),
    ("rank>=1 scan d=5", "petersen", w_rank_scan),
    ("rank>=1 scan d=5", "graph_C_prime(12)", w_rank_scan),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    if CKernel is None:
        print("compiled kernel not built; only the pure-Python timings are shown")
    print(f"{'workload':<22} {'graph':<20} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, spec, make_workload in WORKLOADS:
        G = build(spec).graph
        py = best_of(make_workload(_backend.PyKernel, G, random.Random(args.seed)), args.repeat)
        if CKernel is None:
            print(f"{label:<22} {spec:<20} {py:>9.4f}s {'-':>10} {'-':>8}")
            continue
        cy = best_of(make_workload(CKernel, G, random.Random(args.seed)), args.repeat)
        print(f"{label:<22} {spec:<20} {py:>9.4f}s {cy:>9.4f}s {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
