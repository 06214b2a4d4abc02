"""Cell (standard) modules of B_n(delta) and their Gram matrices.

``Delta_n(lam)`` for ``lam`` a partition of ``m = n - 2t`` has basis
``X_w (x) v_T`` where ``w`` runs over partial one-row diagrams (``t`` northern
arcs, the ``m`` free nodes joined in order to ``m`` southern nodes) and ``T``
over standard tableaux of shape ``lam``.  A diagram acts by stacking on top of
``X_w``; the result is zero unless all ``m`` lines still propagate, in which
case it equals ``delta^loops X_{w'} P_sigma`` and ``P_sigma`` acts on the
Specht factor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .diagrams import BrauerDiagram, as_permutation, compose
from .errors import BadDegree, SizeMismatch
from .linalg import certified_rank, rank as exact_rank
from .partitions import Partition, format_parts, num_standard_tableaux
from .specht import SpechtModule


@dataclass(frozen=True)
class PartialOneRow:
    n: int
    arcs: tuple  # sorted pairs (a, b), a < b, 0-indexed northern nodes

    @property
    def t(self) -> int:
        return len(self.arcs)

    @property
    def free(self) -> tuple:
        used = {x for arc in self.arcs for x in arc}
        return tuple(k for k in range(self.n) if k not in used)

    def diagram(self) -> BrauerDiagram:
        """The ``(n, n - 2t)`` diagram ``X_w``."""
        free = self.free
        pairs = list(self.arcs) + [(f, self.n + k) for k, f in enumerate(free)]
        return BrauerDiagram.from_pairs(self.n, len(free), pairs)

    def __str__(self) -> str:
        return "|".join(f"{a + 1}{b + 1}" for a, b in self.arcs) or "-"


def _matchings(nodes: tuple, t: int):
    if t == 0:
        yield ()
        return
    if len(nodes) < 2 * t:
        return
    first, rest = nodes[0], nodes[1:]
    # first node in an arc
    for k, other in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _matchings(remaining, t - 1):
            yield ((first, other),) + tail
    # first node free
    yield from _matchings(rest, t)


@lru_cache(maxsize=None)
def one_row_diagrams(n: int, t: int) -> tuple:
    """All of ``V_{n,t}``, in a deterministic order."""
    out = [PartialOneRow(n, tuple(sorted(m))) for m in _matchings(tuple(range(n)), t)]
    return tuple(sorted(out, key=lambda w: w.arcs))


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def cell_dimension(n: int, lam) -> int:
    lam = Partition(lam)
    m = lam.degree
    if m > n or (n - m) % 2:
        raise BadDegree(f"{lam} is not a label for n={n}")
    t = (n - m) // 2
    return comb(n, 2 * t) * _double_factorial(2 * t - 1) * num_standard_tableaux(lam)


@dataclass(frozen=True)
class CellBasisVector:
    w: PartialOneRow
    tab: tuple

    def __str__(self) -> str:
        return f"{self.w}(x){self.tab}"


class CellModule:
    """``Delta_n(lam)`` over the rationals at parameter ``delta``."""

    def __init__(self, n: int, lam, delta):
        lam = Partition(lam)
        m = lam.degree
        if m > n or (n - m) % 2:
            raise BadDegree(f"{lam} is not a label for n={n}")
        self.n, self.lam, self.delta = n, lam, Fraction(delta)
        self.t = (n - m) // 2
        self.m = m
        self.specht = SpechtModule(lam)
        self.rows = one_row_diagrams(n, self.t)
        self.row_index = {w.arcs: k for k, w in enumerate(self.rows)}
        self.basis = [CellBasisVector(w, T) for w in self.rows for T in self.specht.tableaux]
        self.dim = len(self.basis)
        self._fdim = self.specht.dim

    def index(self, vec: CellBasisVector) -> int:
        return self.row_index[vec.w.arcs] * self._fdim + self.specht.index[vec.tab]

    def _act_row(self, d: BrauerDiagram, w: PartialOneRow):
        """``d X_w = coeff * X_{w'} P_sigma`` as ``(coeff, w', sigma)`` or ``None``."""
        if d.p != d.q or d.q != self.n:
            raise SizeMismatch(f"diagram on {d.p} strands acting on n={self.n}")
        loops, prod = compose(d, w.diagram())
        if prod.propagating() < self.m:
            return None
        n = self.n
        arcs = tuple(sorted((a, b) for a, b in prod.pairs() if b < n))
        free = [k for k in range(n) if prod.partner[k] >= n]
        sigma = tuple(prod.partner[f] - n for f in free)
        return self.delta ** loops, PartialOneRow(n, arcs), sigma

    def act(self, d: BrauerDiagram, vec: dict) -> dict:
        """Act on a sparse vector ``{basis index: coefficient}``."""
        out: dict = {}
        f = self._fdim
        for idx, c in vec.items():
            w = self.rows[idx // f]
            k = idx % f
            res = self._act_row(d, w)
            if res is None:
                continue
            coeff, w2, sigma = res
            mat = self.specht.permutation_matrix(sigma)
            base = self.row_index[w2.arcs] * f
            for a in range(f):
                x = mat[a][k]
                if x:
                    out[base + a] = out.get(base + a, 0) + c * coeff * x
        return {k: v for k, v in out.items() if v}

    def act_basis(self, d: BrauerDiagram, vec: CellBasisVector) -> dict:
        return self.act(d, {self.index(vec): Fraction(1)})

    def _pairing(self, w1: PartialOneRow, w2: PartialOneRow):
        loops, prod = compose(w1.diagram().flip(), w2.diagram())
        perm = as_permutation(prod)
        if perm is None:
            return None
        return self.delta ** loops, perm

    def gram_matrix(self) -> list[list[Fraction]]:
        f = self._fdim
        form = self.specht.form
        size = self.dim
        g = [[Fraction(0)] * size for _ in range(size)]
        for i, w1 in enumerate(self.rows):
            for j, w2 in enumerate(self.rows):
                res = self._pairing(w1, w2)
                if res is None:
                    continue
                coeff, perm = res
                mat = self.specht.permutation_matrix(perm)
                for a in range(f):
                    scale = coeff * form[a]
                    row = g[i * f + a]
                    src = mat[a]
                    for b in range(f):
                        if src[b]:
                            row[j * f + b] = scale * src[b]
        return g

    def bilinear(self, x: dict, y: dict) -> Fraction:
        g = self.gram_matrix_cached()
        return sum((cx * cy * g[a][b] for a, cx in x.items() for b, cy in y.items()), Fraction(0))

    def gram_matrix_cached(self):
        if not hasattr(self, "_gram"):
            self._gram = self.gram_matrix()
        return self._gram


def cell_basis(n: int, lam) -> list[CellBasisVector]:
    return CellModule(n, lam, 1).basis


def gram_matrix(n: int, lam, delta) -> list[list[Fraction]]:
    return CellModule(n, lam, delta).gram_matrix()


@lru_cache(maxsize=None)
def simple_dim(n: int, lam, delta, method: str = "auto") -> int:
    """Dimension of the simple head ``L_n(lam)``: the rank of the Gram matrix."""
    g = gram_matrix(n, Partition(lam), Fraction(delta))
    if method == "auto":
        return certified_rank(g) if len(g) > 40 else exact_rank(g, "bareiss")
    return exact_rank(g, method)


@dataclass
class BlockReport:
    n: int
    delta: int
    lam: Partition
    dim_delta: int
    predicted_sum: int
    factors: dict

    @property
    def passed(self) -> bool:
        return self.dim_delta == self.predicted_sum

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "lambda": format_parts(self.lam),
            "dim_delta": self.dim_delta,
            "predicted_sum": self.predicted_sum,
            "factors": {format_parts(k): v for k, v in self.factors.items()},
            "pass": self.passed,
        }


def block_labels(n: int, block) -> list[Partition]:
    """Partition labels in ``Lambda_n`` whose weights lie in ``block``."""
    from .partitions import transpose

    return [transpose(w) for w in block.members if w.degree <= n and (n - w.degree) % 2 == 0]


def block_of_weight(n: int, delta: int, weight):
    from .blocks import enumerate_block

    return enumerate_block(Partition(weight), delta, n)


def verify_block(n: int, delta: int, block, predictions=None) -> list[BlockReport]:
    """Check ``dim Delta(lam) = sum_mu [Delta(lam):L(mu)] dim L(mu)`` over a block.

    ``block`` is a :class:`BlockSet` of weights or a list of partition labels.
    Multiplicities come from the KL table (``predictions``), simple dimensions
    from Gram ranks.
    """
    from .blocks import BlockSet
    from .kl import kl_polynomials, predict_decomposition
    from .partitions import transpose

    if isinstance(block, BlockSet):
        labels = block_labels(n, block)
    else:
        labels = [Partition(x) for x in block]
    if predictions is None and labels:
        predictions = kl_polynomials(delta, n, root=transpose(labels[0]))
    dims = {mu: simple_dim(n, mu, delta) for mu in labels}
    reports = []
    for lam in labels:
        factors = {}
        for mu in labels:
            mult = predict_decomposition(lam, mu, delta, predictions)
            if mult:
                factors[mu] = mult
        total = sum(mult * dims[mu] for mu, mult in factors.items())
        reports.append(BlockReport(n, delta, lam, cell_dimension(n, lam), total, factors))
    return reports


def reports_to_json(reports: Sequence[BlockReport]) -> str:
    return json.dumps([r.to_dict() for r in reports])
