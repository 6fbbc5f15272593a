#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same deterministic workloads through both backends and prints a
timing table. Both must return identical results; this script re-checks that
on every workload before reporting.

Usage:
    python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from clawchroma._kernels import pure
from clawchroma.generators import SplitMix64, line_graph, random_graph

try:
    from clawchroma._kernels import _fastcore as fast
except ImportError:
    fast = None


def _seeded_graphs(count, n, p, seed):
    stream = SplitMix64(seed)
    return [random_graph(n, p, stream) for _ in range(count)]


def _seeded_line_graphs(count, n_src, p, seed):
    # claw-free by construction, so recognition runs its full search
    stream = SplitMix64(seed)
    return [line_graph(random_graph(n_src, p, stream)) for _ in range(count)]


def bench_scan(backend, max_n):
    total = 0
    for n in range(1, max_n + 1):
        total += len(backend.scan_in_class(n, 0, 1 << (n * (n - 1) // 2)))
    return total


def bench_clique(backend, graphs):
    acc = 0
    for g in graphs:
        acc += backend.clique_number(g.adj, g.n, g.full_mask())
        acc += backend.lex_min_max_clique(g.adj, g.n, g.adj[0])
    return acc


def bench_recognition(backend, graphs):
    hits = 0
    for g in graphs:
        if backend.find_claw(g.adj, g.n) is not None:
            hits += 1
        if backend.find_k5_minus_p3(g.adj, g.n) is not None:
            hits += 1
    return hits


def bench_coloring(backend, graphs):
    acc = 0
    for g in graphs:
        adj, n, full = g.adj, g.n, g.full_mask()
        clique = backend.lex_min_max_clique(adj, n, full)
        lo = bin(clique).count("1")
        k = lo
        while backend.k_color(adj, n, full, k, clique) is None:
            k += 1
        acc += k
    return acc


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    scan_n = 5 if args.quick else 6
    scale = 1 if args.quick else 4
    workloads = [
        (f"recognition scan, all labeled n<={scan_n}", bench_scan, scan_n),
        (
            "recognition, claw-free line graphs n~45",
            bench_recognition,
            _seeded_line_graphs(25 * scale, 10, 1.0, 11),
        ),
        (
            "max clique, seeded graphs n=56",
            bench_clique,
            _seeded_graphs(25 * scale, 56, 0.6, 12),
        ),
        (
            "exact coloring, seeded graphs n=26",
            bench_coloring,
            _seeded_graphs(15 * scale, 26, 0.45, 13),
        ),
    ]

    print(f"{'workload':<44} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    for name, fn, payload in workloads:
        t0 = time.perf_counter()
        ref = fn(pure, payload)
        t_pure = time.perf_counter() - t0
        if fast is None:
            print(f"{name:<44} {t_pure:>8.3f}s {'n/a':>9} {'n/a':>8}")
            continue
        t0 = time.perf_counter()
        got = fn(fast, payload)
        t_fast = time.perf_counter() - t0
        if got != ref:
            raise SystemExit(f"backend mismatch on {name}: {ref} vs {got}")
        print(
            f"{name:<44} {t_pure:>8.3f}s {t_fast:>8.3f}s {t_pure / t_fast:>7.1f}x"
        )
    if fast is None:
        print("compiled extension not built; showing pure timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
