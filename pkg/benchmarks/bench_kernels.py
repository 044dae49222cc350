#!/usr/bin/env python3
"""Benchmark the numba kernels against their numpy fallbacks.

Runs each kernel through both implementations (the numba path is skipped
automatically when unavailable) and prints a small table.  Usage:

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from logirr import _kernels as K


def time_call(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_sieve(repeat):
    limit = 2_000_000
    rows = [("sieve numpy", time_call(K._sieve_numpy, limit, repeat=repeat))]
    if K.USING_NUMBA:
        K._sieve_numba(10)  # compile
        rows.append(("sieve numba", time_call(K._sieve_numba, limit, repeat=repeat)))
    return rows


def bench_varpi(repeat):
    L, M = 60, 240
    args = (7, L, M, 2, 2, 2, 3)
    rows = [("varpi numpy", time_call(K._varpi_min_numpy, *args, repeat=repeat))]
    if K.USING_NUMBA:
        K._varpi_min_numba(*args)
        rows.append(("varpi numba", time_call(K._varpi_min_numba, *args, repeat=repeat)))
    return rows


def bench_gstar(repeat):
    rng = np.random.default_rng(7)
    values = rng.normal(size=(4000, 33))
    powers = np.linspace(0, 0.17, 33) ** 3
    tail = np.full(33, 0.5)
    args = (values, powers, 10, tail, 2.0)
    rows = [("gstar numpy", time_call(K._gstar_expand_numpy, *args, repeat=repeat))]
    if K.USING_NUMBA:
        K._gstar_expand_numba(values[:4], powers, 10, tail, 2.0)
        rows.append(("gstar numba", time_call(K._gstar_expand_numba, *args, repeat=repeat)))
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"numba available and enabled: {K.USING_NUMBA}")
    rows = []
    rows += bench_sieve(args.repeat)
    rows += bench_varpi(args.repeat)
    rows += bench_gstar(args.repeat)
    width = max(len(name) for name, _ in rows)
    for name, t in rows:
        print(f"{name:<{width}}  {t * 1000:9.3f} ms")


if __name__ == "__main__":
    main()
