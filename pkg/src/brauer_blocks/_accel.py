"""Rank of an integer matrix modulo a word-sized prime.

The numba kernel is used when numba imports and ``BRAUER_DISABLE_NUMBA`` is
unset (or ``0``); otherwise a vectorised numpy elimination runs instead.  Both
take an ``int64`` array with entries already reduced into ``[0, p)`` and
``p < 2**31`` so that every product fits in 63 bits.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def numba_enabled() -> bool:
    flag = os.environ.get("BRAUER_DISABLE_NUMBA", "").strip().lower()
    return numba is not None and flag in ("", "0", "false", "no")


def _rank_mod_p_py(a: np.ndarray, p: int) -> int:
    a = a.copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1:, c].copy()
        mask = below != 0
        if mask.any():
            sub = a[r + 1:][mask]
            sub = (sub - np.outer(below[mask], a[r]) % p) % p
            block = a[r + 1:]
            block[mask] = sub
            a[r + 1:] = block
        r += 1
    return r


if numba is not None:

    @numba.njit(cache=True, nogil=True)
    def _rank_mod_p_nb(a, p):  # pragma: no cover - exercised through rank_mod_p
        a = a.copy()
        rows, cols = a.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for k in range(cols):
                    tmp = a[r, k]
                    a[r, k] = a[piv, k]
                    a[piv, k] = tmp
            # inverse by Fermat
            base = a[r, c] % p
            e = p - 2
            inv = 1
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for k in range(c, cols):
                a[r, k] = (a[r, k] * inv) % p
            for i in range(r + 1, rows):
                f = a[i, c]
                if f != 0:
                    for k in range(c, cols):
                        a[i, k] = (a[i, k] - f * a[r, k]) % p
            r += 1
        return r

else:  # pragma: no cover
    _rank_mod_p_nb = None


def rank_mod_p(a: np.ndarray, p: int, use_numba: bool | None = None) -> int:
    """Rank over GF(p) of a reduced ``int64`` matrix."""
    if use_numba is None:
        use_numba = numba_enabled()
    a = np.ascontiguousarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    if use_numba and _rank_mod_p_nb is not None:
        return int(_rank_mod_p_nb(a, np.int64(p)))
    return _rank_mod_p_py(a, int(p))
