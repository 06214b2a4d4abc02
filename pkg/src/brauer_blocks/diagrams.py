"""Brauer diagrams, their composition, and formal linear combinations.

A ``(p, q)`` diagram has ``p`` northern nodes (indices ``0 .. p-1``) and ``q``
southern nodes (indices ``p .. p+q-1``); ``partner[i]`` is the node joined to
``i``.  Products stack the left factor on top: in ``d1 * d2`` the southern
nodes of ``d1`` are glued to the northern nodes of ``d2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SizeMismatch, ZeroDelta


@dataclass(frozen=True)
class BrauerDiagram:
    p: int
    q: int
    partner: tuple

    def __post_init__(self):
        n = self.p + self.q
        if len(self.partner) != n:
            raise ValueError("partner array has the wrong length")
        for i, j in enumerate(self.partner):
            if not 0 <= j < n or j == i or self.partner[j] != i:
                raise ValueError(f"not a perfect matching: {self.partner}")

    @classmethod
    def from_pairs(cls, p: int, q: int, pairs: Iterable[tuple[int, int]]) -> "BrauerDiagram":
        partner = [-1] * (p + q)
        for a, b in pairs:
            partner[a], partner[b] = b, a
        return cls(p, q, tuple(partner))

    @property
    def n(self) -> int:
        if self.p != self.q:
            raise SizeMismatch("not a square diagram")
        return self.p

    def pairs(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i, j in enumerate(self.partner) if i < j)

    def is_north(self, i: int) -> bool:
        return i < self.p

    def propagating(self) -> int:
        return sum(1 for i in range(self.p) if self.partner[i] >= self.p)

    def flip(self) -> "BrauerDiagram":
        """Reflect top to bottom (the anti-involution ``*``)."""
        p, q = self.p, self.q

        def move(i):
            return i + q if i < p else i - p

        partner = [0] * (p + q)
        for i, j in enumerate(self.partner):
            partner[move(i)] = move(j)
        return BrauerDiagram(q, p, tuple(partner))

    def __mul__(self, other: "BrauerDiagram") -> "BrauerDiagram":
        return compose(self, other)[1]

    def __str__(self) -> str:
        def name(i):
            return str(i + 1) if i < self.p else f"{i - self.p + 1}'"

        return "{" + ", ".join(f"{name(a)}-{name(b)}" for a, b in self.pairs()) + "}"


def compose(top: BrauerDiagram, bottom: BrauerDiagram) -> tuple[int, BrauerDiagram]:
    """Stack ``top`` over ``bottom``; return the closed-loop count and product."""
    if top.q != bottom.p:
        raise SizeMismatch(f"cannot stack a ({top.p},{top.q}) over a ({bottom.p},{bottom.q}) diagram")
    p, m, r = top.p, top.q, bottom.q
    # node ids: ("t", i) in top, ("b", j) in bottom; middle = top south == bottom north
    visited_mid = [False] * m
    out = [-1] * (p + r)

    def walk(side: str, i: int) -> int:
        while True:
            if side == "t":
                j = top.partner[i]
                if j < p:
                    return j
                k = j - p
                visited_mid[k] = True
                side, i = "b", k
            else:
                j = bottom.partner[i]
                if j >= m:
                    return p + (j - m)
                visited_mid[j] = True
                side, i = "t", p + j

    for i in range(p):
        if out[i] < 0:
            j = walk("t", i)
            out[i], out[j] = j, i
    for k in range(r):
        node = p + k
        if out[node] < 0:
            j = walk("b", m + k)
            out[node], out[j] = j, node
    loops = 0
    for k in range(m):
        if visited_mid[k]:
            continue
        loops += 1
        side, i = "t", p + k
        while True:
            if side == "t":
                visited_mid[i - p] = True
                j = top.partner[i] - p  # stays in the middle
                side, i = "b", j
            else:
                visited_mid[i] = True
                j = bottom.partner[i]
                side, i = "t", p + j
            if side == "t" and i == p + k:
                break
    return loops, BrauerDiagram(p, r, tuple(out))


def identity(n: int) -> BrauerDiagram:
    return BrauerDiagram.from_pairs(n, n, [(i, n + i) for i in range(n)])


def permutation_diagram(perm: Sequence[int]) -> BrauerDiagram:
    """North node ``k`` joined to south node ``perm[k]``."""
    n = len(perm)
    return BrauerDiagram.from_pairs(n, n, [(k, n + perm[k]) for k in range(n)])


def transposition(n: int, i: int, j: int) -> BrauerDiagram:
    """The permutation diagram swapping strands ``i`` and ``j`` (1-indexed)."""
    perm = list(range(n))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return permutation_diagram(perm)


def arc_diagram(n: int, i: int, j: int) -> BrauerDiagram:
    """``X_{i,j}``: arcs ``i-j`` on both edges, all other strands vertical."""
    a, b = i - 1, j - 1
    pairs = [(a, b), (n + a, n + b)]
    pairs += [(k, n + k) for k in range(n) if k not in (a, b)]
    return BrauerDiagram.from_pairs(n, n, pairs)


def as_permutation(d: BrauerDiagram) -> tuple | None:
    """``perm`` with north ``k`` joined to south ``perm[k]``, or ``None``."""
    if d.propagating() != d.p or d.p != d.q:
        return None
    return tuple(d.partner[k] - d.p for k in range(d.p))


def random_diagram(n: int, rng: random.Random) -> BrauerDiagram:
    nodes = list(range(2 * n))
    rng.shuffle(nodes)
    return BrauerDiagram.from_pairs(n, n, zip(nodes[::2], nodes[1::2]))


class DiagramCombo:
    """Finite rational combination of ``(n, n)`` diagrams at a fixed ``delta``."""

    def __init__(self, terms: dict | None = None, delta=1):
        self.delta = Fraction(delta)
        self.terms = {d: Fraction(c) for d, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, d: BrauerDiagram, delta, coeff=1) -> "DiagramCombo":
        return cls({d: coeff}, delta)

    def __add__(self, other: "DiagramCombo") -> "DiagramCombo":
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return DiagramCombo(out, self.delta)

    def __sub__(self, other: "DiagramCombo") -> "DiagramCombo":
        return self + other.scale(-1)

    def scale(self, k) -> "DiagramCombo":
        return DiagramCombo({d: k * c for d, c in self.terms.items()}, self.delta)

    def __mul__(self, other: "DiagramCombo") -> "DiagramCombo":
        if not isinstance(other, DiagramCombo):
            return self.scale(other)
        out: dict = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                loops, d = compose(d1, d2)
                out[d] = out.get(d, 0) + c1 * c2 * self.delta ** loops
        return DiagramCombo(out, self.delta)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, DiagramCombo) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: kv[0].partner)
        return " + ".join(f"{c}*{d}" for d, c in items)


def b2_idempotents(delta) -> tuple[DiagramCombo, DiagramCombo, DiagramCombo]:
    """``(e, e_plus, e_minus)`` decomposing the identity of ``B_2(delta)``."""
    delta = Fraction(delta)
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    one = DiagramCombo.of(identity(2), delta)
    sigma = DiagramCombo.of(transposition(2, 1, 2), delta)
    x = DiagramCombo.of(arc_diagram(2, 1, 2), delta)
    e = x.scale(1 / delta)
    e_minus = (one - sigma).scale(Fraction(1, 2))
    e_plus = one - e - e_minus
    return e, e_plus, e_minus
