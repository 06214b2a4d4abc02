"""Time the modular rank kernel with numba against the numpy fallback.

    python benchmarks/bench_rank.py [--sizes 100 200 400] [--repeat 3]

Also times a full certified rank of the n=8 Gram matrix of Delta(3,2,1) at
delta=1 with each backend.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from brauer_blocks._accel import numba_enabled, rank_mod_p
from brauer_blocks.cell import gram_matrix
from brauer_blocks.linalg import certified_rank

P = 2**31 - 1


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not numba_enabled():
        print("numba disabled by BRAUER_DISABLE_NUMBA; only the numpy path is timed")
    rng = np.random.default_rng(0)
    rank_mod_p(np.eye(4, dtype=np.int64), P, use_numba=True)  # compile outside the timing
    print(f"{'size':>6} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for n in args.sizes:
        a = rng.integers(0, P, size=(n, n), dtype=np.int64)
        t_nb = best_of(lambda: rank_mod_p(a, P, use_numba=True), args.repeat) if numba_enabled() else float("nan")
        t_np = best_of(lambda: rank_mod_p(a, P, use_numba=False), args.repeat)
        assert not numba_enabled() or rank_mod_p(a, P, True) == rank_mod_p(a, P, False)
        print(f"{n:>6} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>8.1f}")

    g = gram_matrix(8, (3, 2, 1), 1)
    for label, flag in (("numba", True), ("numpy", False)):
        if flag and not numba_enabled():
            continue
        t = time.perf_counter()
        r, used = certified_rank(g, use_numba=flag, return_primes=True)
        print(f"Gram n=8 (3,2,1) 448x448 {label}: rank {r} with {used} primes in {time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
