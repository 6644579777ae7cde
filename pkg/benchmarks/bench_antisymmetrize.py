"""Benchmark the compiled permutation-sum kernel against the numpy fallback.

Usage: python benchmarks/bench_antisymmetrize.py [--repeats N]

The kernel dominates runtime for everything in this package (exclusion
verdicts, catalog cross-checks, factored builds), so this is the number that
matters when choosing a backend.
"""

import argparse
import time

import numpy as np

from fermiex import _kernels_py

try:
    from fermiex import _kernels as compiled
except ImportError:
    compiled = None

SIZES = [(2, 12), (3, 8), (3, 12), (4, 8), (4, 12), (5, 8), (5, 12)]


def best_time(func, arg, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        func(arg)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    print(f"{'n':>3} {'D':>4} {'elements':>10} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for n, dim in SIZES:
        a = rng.standard_normal((dim,) * n) + 1j * rng.standard_normal((dim,) * n)
        t_py = best_time(_kernels_py.signed_permutation_sum, a, args.repeats)
        if compiled is None:
            print(f"{n:>3} {dim:>4} {a.size:>10} {t_py * 1e3:>10.3f}ms {'n/a':>12} {'n/a':>8}")
            continue
        t_cy = best_time(compiled.signed_permutation_sum, a, args.repeats)
        same = np.array_equal(
            compiled.signed_permutation_sum(a), _kernels_py.signed_permutation_sum(a)
        )
        flag = "" if same else "  MISMATCH"
        print(
            f"{n:>3} {dim:>4} {a.size:>10} {t_py * 1e3:>10.3f}ms {t_cy * 1e3:>10.3f}ms "
            f"{t_py / t_cy:>7.2f}x{flag}"
        )


if __name__ == "__main__":
    main()
