"""Exact rank of rational matrices.

Two routes are kept:

``bareiss_rank``
    fraction-free elimination on Python integers; exact and simple, used as
    the reference on small matrices.
``certified_rank``
    ranks modulo many 31-bit primes.  Each modular rank is a lower bound for
    the rational rank; once the product of the primes used exceeds the
    Hadamard bound on ``(r+1)``-minors, where ``r`` is the largest modular rank
    seen, no nonzero ``(r+1)``-minor can exist and ``r`` is exact.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Sequence

import numpy as np
from sympy import prevprime

from ._accel import rank_mod_p

PRIME_START = 2**31 - 1


def integer_rows(matrix: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank is unchanged)."""
    out = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(matrix: Sequence[Sequence]) -> int:
    rows = [r[:] for r in integer_rows(matrix)]
    if not rows:
        return 0
    n, m = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for c in range(m):
        piv = next((i for i in range(rank, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        for i in range(rank + 1, n):
            f = rows[i][c]
            ri = rows[i]
            rr = rows[rank]
            for k in range(c, m):
                ri[k] = (ri[k] * p - f * rr[k]) // prev
        prev = p
        rank += 1
        if rank == n:
            break
    return rank


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BRAUER_THREADS", "1")))
    except ValueError:
        return 1


def _reduce(rows: list[list[int]], fits: np.ndarray | None, p: int) -> np.ndarray:
    if fits is not None:
        return np.mod(fits, p)
    return np.array([[x % p for x in row] for row in rows], dtype=np.int64)


def certified_rank(matrix: Sequence[Sequence], use_numba: bool | None = None,
                   return_primes: bool = False):
    """Exact rank over Q by the multimodular method with a Hadamard certificate."""
    rows = [r for r in integer_rows(matrix) if any(r)]
    if not rows:
        return (0, 0) if return_primes else 0
    ncols = len(rows[0])
    full = min(len(rows), ncols)
    big = max(abs(x) for row in rows for x in row)
    fits = np.array(rows, dtype=np.int64) if big < 2**62 else None
    log_norms = sorted((0.5 * math.log(sum(x * x for x in row)) for row in rows), reverse=True)
    prefix = [0.0]
    for v in log_norms:
        prefix.append(prefix[-1] + v)

    best = 0
    log_prod = 0.0
    used = 0
    p = PRIME_START
    workers = _threads()
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        while True:
            batch = []
            for _ in range(workers):
                batch.append(p)
                p = prevprime(p)
            if pool is None:
                ranks = [rank_mod_p(_reduce(rows, fits, q), q, use_numba) for q in batch]
            else:
                ranks = list(pool.map(lambda q: rank_mod_p(_reduce(rows, fits, q), q, use_numba), batch))
            for q, r in zip(batch, ranks):
                used += 1
                log_prod += math.log(q)
                best = max(best, r)
            if best == full:
                break
            # any nonzero (best+1)-minor is bounded by the largest best+1 row norms
            if log_prod > prefix[best + 1] + 1e-9:
                break
    finally:
        if pool is not None:
            pool.shutdown()
    return (best, used) if return_primes else best


def rank(matrix: Sequence[Sequence], method: str = "auto") -> int:
    if method == "bareiss":
        return bareiss_rank(matrix)
    if method == "modular":
        return certified_rank(matrix)
    n = len(matrix)
    return bareiss_rank(matrix) if n <= 40 else certified_rank(matrix)
