"""Benchmark the accelerated census kernels against their pure twins.

Usage: python3 bench/bench_kernels.py [--n N] [--repeat R]

Runs each kernel on the same inputs with the jitted implementation (when
available) and the pure-python fallback, reporting wall times and the
speedup.  Results are checked for equality, so this doubles as a smoke
test of the dual implementations.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from permlab import kernels
from permlab.perms import parse_pair


def _time(fn, *args, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=9, help="permutation size")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    pair = parse_pair("1243,1423")
    pa = np.array(pair[0], dtype=np.int8)
    pb = np.array(pair[1], dtype=np.int8)

    print(f"numba available: {kernels.NUMBA_ENABLED}  (n={args.n}, best of {args.repeat})")
    rows = []

    if kernels.NUMBA_ENABLED:
        kernels.census_pair(4, pa, pb)  # trigger compilation outside timing
        kernels.active_census(4, pa, pb)
        kernels.inv021_census(4)

    fast_t, fast = _time(kernels.census_pair, args.n, pa, pb, repeat=args.repeat)
    pure_t, pure = _time(kernels.census_pair_pure, args.n, pa, pb, repeat=args.repeat)
    assert np.array_equal(fast[0], pure[0]) and np.array_equal(fast[1], pure[1])
    rows.append(("census_pair", fast_t, pure_t))

    fast_t, fast = _time(kernels.active_census, args.n - 1, pa, pb, repeat=args.repeat)
    pure_t, pure = _time(kernels.active_census_pure, args.n - 1, pa, pb, repeat=args.repeat)
    assert np.array_equal(fast, pure)
    rows.append((f"active_census (n={args.n - 1})", fast_t, pure_t))

    fast_t, fast = _time(kernels.inv021_census, args.n, repeat=args.repeat)
    pure_t, pure = _time(kernels.inv021_census_pure, args.n, repeat=args.repeat)
    assert np.array_equal(fast, pure)
    rows.append(("inv021_census", fast_t, pure_t))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel'.ljust(width)}  {'selected':>10}  {'pure':>10}  {'speedup':>8}")
    for name, fast_t, pure_t in rows:
        speed = pure_t / fast_t if fast_t > 0 else float("inf")
        print(f"{name.ljust(width)}  {fast_t:>9.4f}s  {pure_t:>9.4f}s  {speed:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
