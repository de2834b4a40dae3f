"""Benchmark the compiled Jacobi rotation kernel against the pure-Python
fallback.

Runs full symmetric eigendecompositions at several matrix sizes with both
backends and prints per-size timings and the speedup ratio.

Usage::

    python benchmarks/bench_kernels.py [--sizes 8,16,32,64] [--repeats 5]
"""

import argparse
import time

import numpy as np

from skbmlfx._kernels import BACKEND, jacobi_sweeps as jacobi_selected
from skbmlfx._kernels.jacobi_py import jacobi_sweeps as jacobi_pure


def time_backend(fn, mats, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for a in mats:
            work = a.copy()
            vecs = np.eye(a.shape[0])
            fn(work, vecs, 1e-12 * max(1.0, np.linalg.norm(a)), 100)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="8,16,32,64",
                        help="comma-separated matrix sizes")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats; best of N is reported")
    parser.add_argument("--batch", type=int, default=10,
                        help="matrices per size per timing pass")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if BACKEND != "compiled":
        print("note: compiled backend unavailable; comparing python vs python")
    print(f"selected backend: {BACKEND}")
    print(f"{'n':>5} {'compiled (s)':>14} {'python (s)':>14} {'speedup':>9}")
    rng = np.random.default_rng(0)
    for n in sizes:
        mats = []
        for _ in range(args.batch):
            a = rng.normal(size=(n, n))
            mats.append(a + a.T)
        t_sel = time_backend(jacobi_selected, mats, args.repeats)
        t_pure = time_backend(jacobi_pure, mats, args.repeats)
        print(f"{n:>5} {t_sel:>14.6f} {t_pure:>14.6f} {t_pure / t_sel:>8.1f}x")


if __name__ == "__main__":
    main()
