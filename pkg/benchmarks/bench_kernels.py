#!/usr/bin/env python3
"""Benchmark the compiled clique kernel against the pure-Python fallback.

Runs identical workloads through both implementations (they traverse the
same tree, so node counts match exactly) and reports wall time and speedup:

  * adjacency construction for the full compatibility graph
  * exhaustive maximum-clique runs with an unreachable target (no formula
    cutoff), over all root vertices

Usage:
    python benchmarks/bench_kernels.py [--heavy]
"""

from __future__ import annotations

import argparse
import sys
import time

from neighborly.search import build_graph
from neighborly.search._kernel import HAVE_COMPILED, get_kernel

BUILD_CASES = [(2, 4), (2, 5), (3, 6)]
SEARCH_CASES = [(2, 3), (2, 4), (3, 4), (2, 5)]
HEAVY_SEARCH_CASES = [(3, 5)]


def time_call(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def bench_build(kernels, cases):
    print(f"{'adjacency build':<24} {'n':>6} " + "".join(f"{name:>12}" for name in kernels)
          + ("   speedup" if len(kernels) == 2 else ""))
    for k, d in cases:
        graph = build_graph(k, d)
        values = [v.bits for v in graph.vectors]
        jokers = [v.jokers for v in graph.vectors]
        times = []
        rows = None
        for name in kernels:
            impl = get_kernel(name)
            got, elapsed = time_call(impl.build_adjacency, values, jokers, k)
            if rows is None:
                rows = got
            else:
                assert got == rows, "kernel adjacency mismatch"
            times.append(elapsed)
        line = f"{f'(k={k}, d={d})':<24} {graph.n:>6} " + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2:
            line += f"   {times[0] / times[1]:>6.1f}x"
        print(line)


def bench_search(kernels, cases, node_limit=None):
    print()
    print(f"{'exhaustive search':<24} {'nodes':>10} " + "".join(f"{name:>12}" for name in kernels)
          + ("   speedup" if len(kernels) == 2 else ""))
    for k, d in cases:
        graph = build_graph(k, d)
        n = graph.n
        # all-root full enumeration with an unreachable target: pure kernel work
        roots = [
            (i, graph.adjacency[i] & (((1 << n) - 1) << (i + 1))) for i in range(n)
        ]
        times = []
        reference = None
        for name in kernels:
            impl = get_kernel(name)
            result, elapsed = time_call(
                impl.solve_root, graph.adjacency, n, roots, 1, 0, n + 1,
                node_limit, None, n,
            )
            if reference is None:
                reference = result
            else:
                assert result == reference, "kernel results diverged"
            times.append(elapsed)
        size, _, nodes, _ = reference
        line = f"{f'(k={k}, d={d}) max={size}':<24} {nodes:>10} " + "".join(
            f"{t:>11.3f}s" for t in times
        )
        if len(times) == 2:
            line += f"   {times[0] / times[1]:>6.1f}x"
        print(line)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true",
                        help="include the (3,5) full enumeration (minutes in pure Python)")
    args = parser.parse_args(argv)

    kernels = ["python", "compiled"] if HAVE_COMPILED else ["python"]
    if not HAVE_COMPILED:
        print("compiled kernel not built; benchmarking the fallback alone\n")
    bench_build(kernels, BUILD_CASES)
    cases = SEARCH_CASES + (HEAVY_SEARCH_CASES if args.heavy else [])
    bench_search(kernels, cases)
    return 0


if __name__ == "__main__":
    sys.exit(main())
