#!/usr/bin/env python3
"""Compare the compiled cut kernels against the pure-Python fallback.

Runs the same workloads through both implementations and prints a small
table with per-call times and the speedup.  Results are asserted equal, so
this doubles as a smoke test of the twin contract.

Usage: python3 benchmarks/bench_kernels.py [--sizes 12,14,16] [--repeat 3]
"""

import argparse
import time
from statistics import median

from edge_expand import random_graph
from edge_expand._kernels import _pure

try:
    from edge_expand._kernels import _ccore
except ImportError:
    _ccore = None

from edge_expand.graph import min_degree


def _bench(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return median(times), result


def run(sizes, repeat, seed):
    impls = [("python", _pure)] + ([("c", _ccore)] if _ccore else [])
    if _ccore is None:
        print("compiled kernel unavailable; timing the fallback only")
    header = f"{'workload':<28}" + "".join(f"{name:>12}" for name, _ in impls)
    if _ccore:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        g = random_graph(n, 0.4, seed=seed)
        adj = list(g.adjacency_masks())
        bound = min_degree(g) + 1

        workloads = [
            (f"min_cut        n={n}", lambda m=None, i=None: i.min_cut(adj, n)),
            (f"cuts_below({bound:2d})  n={n}",
             lambda m=None, i=None: i.cuts_below(adj, n, 1, bound)),
        ]
        for label, call in workloads:
            row = f"{label:<28}"
            results = []
            timings = []
            for _, impl in impls:
                t, result = _bench(lambda: call(i=impl), repeat)
                timings.append(t)
                results.append(result)
                row += f"{t * 1e3:>10.2f}ms"
            assert all(r == results[0] for r in results), "kernel mismatch"
            if len(timings) == 2 and timings[1] > 0:
                row += f"{timings[0] / timings[1]:>9.1f}x"
            print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="12,14,16",
                        help="comma-separated vertex counts")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    run(sizes, args.repeat, args.seed)


if __name__ == "__main__":
    main()
