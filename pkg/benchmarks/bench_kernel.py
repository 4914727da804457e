#!/usr/bin/env python3
"""Benchmark the compiled eigensolver kernel against the pure-Python twin.

Run after building the extension (pip install -e . or
python setup.py build_ext --inplace):

    python benchmarks/bench_kernel.py [--sizes 20,50,100,200] [--repeats 5]

Times full eigensolves of random regular-graph-like symmetric matrices plus
one search-shaped workload (many small matrices), and reports the speedup.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from regspectra import kernel


def _sym(n: int, rng) -> np.ndarray:
    a = (rng.random((n, n)) < 0.5).astype(np.float64)
    a = np.triu(a, 1)
    return a + a.T


def time_solver(mats, force_python: bool, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in mats:
            kernel.sym_eigenvalues(m, force_python=force_python)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="20,50,100,200")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"active backend: {kernel.backend()}")
    if kernel.backend() != "compiled":
        print("compiled kernel unavailable; timing the fallback against itself")

    rng = np.random.default_rng(1)
    print(f"{'n':>6} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>9}")
    for n in sizes:
        mats = [_sym(n, rng) for _ in range(3)]
        t_py = time_solver(mats, True, args.repeats) / len(mats) * 1e3
        t_c = time_solver(mats, False, args.repeats) / len(mats) * 1e3
        print(f"{n:>6} {t_py:>12.3f} {t_c:>14.3f} {t_py / t_c:>9.1f}x")

    # search-shaped workload: thousands of small matrices
    small = [_sym(10, rng) for _ in range(2000)]
    t_py = time_solver(small, True, 1)
    t_c = time_solver(small, False, 1)
    print(f"2000 x n=10: pure {t_py * 1e3:.1f} ms, "
          f"compiled {t_c * 1e3:.1f} ms, speedup {t_py / t_c:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
