"""Specht modules of the symmetric group in Young's seminormal form.

Basis vectors are standard tableaux.  For the adjacent transposition
``s = (i, i+1)`` and a tableau ``T`` let ``r`` be the content of ``i+1``
minus the content of ``i`` and ``rho = 1/r``.  Then

    s v_T = rho v_T + a v_{sT}

where ``sT`` swaps ``i`` and ``i+1`` (dropped when not standard), ``a = 1``
when ``i+1`` lies in a lower row of ``T`` than ``i`` and ``a = 1 - rho^2``
otherwise.  A diagonal form ``f`` with ``f_{sT} = (1 - rho^2) f_T`` for the
first case makes every ``s`` self-adjoint.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import Partition


def standard_tableaux(shape) -> list[tuple]:
    """Standard tableaux as tuples of rows, in a fixed deterministic order."""
    shape = Partition(shape)
    n = shape.degree
    if n == 0:
        return [()]
    out = []

    def place(k, rows):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(k + 1, rows)
                rows[i].pop()

    place(1, [[] for _ in shape])
    return out


def _positions(tab) -> dict:
    return {x: (i, j) for i, row in enumerate(tab) for j, x in enumerate(row)}


def _swap(tab, a: int, b: int):
    return tuple(tuple(b if x == a else a if x == b else x for x in row) for row in tab)


class SpechtModule:
    def __init__(self, shape):
        self.shape = Partition(shape)
        self.tableaux = standard_tableaux(self.shape)
        self.index = {t: k for k, t in enumerate(self.tableaux)}
        self.dim = len(self.tableaux)
        self.degree = self.shape.degree
        self._pos = [_positions(t) for t in self.tableaux]
        self.form = self._invariant_form()

    def _content(self, k: int, x: int) -> int:
        i, j = self._pos[k][x]
        return j - i

    def generator_columns(self, i: int) -> list[dict]:
        """Sparse columns of ``s_i``: ``cols[k]`` maps row index to entry."""
        return _generator_columns(self.shape, i)

    def generator_matrix(self, i: int) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for k, col in enumerate(self.generator_columns(i)):
            for row, val in col.items():
                m[row][k] = val
        return m

    def _invariant_form(self) -> list[Fraction]:
        f: list = [None] * self.dim
        if self.dim == 0:
            return []
        f[0] = Fraction(1)
        stack = [0]
        while stack:
            k = stack.pop()
            for i in range(1, self.degree):
                for row, val in self.generator_columns(i)[k].items():
                    if row == k or f[row] is not None:
                        continue
                    # s v_k has coefficient val on v_row; the reverse coefficient
                    # is read from column row, and f_row * back == f_k * val
                    back = self.generator_columns(i)[row][k]
                    f[row] = f[k] * back / val
                    stack.append(row)
        return f

    def permutation_matrix(self, perm: tuple) -> list[list[Fraction]]:
        """Matrix of the permutation diagram joining north ``k`` to south ``perm[k]``."""
        return [list(r) for r in _perm_matrix(self.shape, tuple(perm))]


@lru_cache(maxsize=None)
def _generator_columns(shape: Partition, i: int) -> list[dict]:
    tabs = standard_tableaux(shape)
    index = {t: k for k, t in enumerate(tabs)}
    cols = []
    for t in tabs:
        pos = _positions(t)
        (ri, ci), (rj, cj) = pos[i], pos[i + 1]
        r = (cj - rj) - (ci - ri)
        rho = Fraction(1, r)
        col = {index[t]: rho}
        if ri != rj and ci != cj:
            other = _swap(t, i, i + 1)
            coeff = Fraction(1) if rj > ri else 1 - rho * rho
            col[index[other]] = coeff
        cols.append(col)
    return cols


def reduced_word(perm: tuple) -> list[int]:
    """Adjacent transpositions ``[i1, i2, ...]`` (1-indexed) with the diagram of
    ``perm`` equal to ``s_{i1} s_{i2} ...`` stacked top first."""
    g = list(perm)
    word = []
    while True:
        for k in range(len(g) - 1):
            if g[k] > g[k + 1]:
                # g = g' o s_k, s_k sits on top
                g[k], g[k + 1] = g[k + 1], g[k]
                word.append(k + 1)
                break
        else:
            return word


@lru_cache(maxsize=None)
def _perm_matrix(shape: Partition, perm: tuple) -> tuple:
    tabs = standard_tableaux(shape)
    dim = len(tabs)
    mat = [[Fraction(int(a == b)) for b in range(dim)] for a in range(dim)]
    # product of generators in stacking order: rho(s_i1) rho(s_i2) ... ; multiply on the right
    for i in reduced_word(perm):
        cols = _generator_columns(shape, i)
        new = [[Fraction(0)] * dim for _ in range(dim)]
        for k, col in enumerate(cols):
            for row, val in col.items():
                for a in range(dim):
                    x = mat[a][row]
                    if x:
                        new[a][k] += x * val
        mat = new
    return tuple(tuple(r) for r in mat)
