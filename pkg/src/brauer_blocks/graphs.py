"""Graded block graphs and isomorphisms between them.

Four constructions are provided, all truncated by a degree bound:

* :func:`mbs_graph`: partitions balanced with a given one, with an edge
  ``mu -> tau`` when ``mu`` is a maximal balanced subpartition of ``tau``;
* :func:`orbit_graph`: dominant members of a dot-orbit, with the cover
  relation of the entrywise order;
* :func:`par_e_graph`: strict partitions with an even number of parts and
  the explicit one-box / append-``(2, 1)`` edge rules;
* :func:`regularise`, which strips doubleton coordinates from a shifted point.

The vertex sets are built by two independent routes (balanced-pair test for
MBS, orbit key for the orbit graph), so comparing them is a real check.
"""

from __future__ import annotations

import hashlib
import json
import sys
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .blocks import enumerate_block, key_of_point, orbit_key
from .errors import NotAdjacent, WrongOrbit
from .geometry import ShiftedPoint, shift, unshift
from .partitions import (
    Partition,
    format_parts,
    is_balanced,
    partitions_up_to,
    sort_key,
    transpose,
)


@dataclass
class ColouredDigraph:
    """Finite directed graph with graded vertices and optional edge colours."""

    vertices: list
    edges: set = field(default_factory=set)  # (source, target, colour or None)
    root: Hashable | None = None
    grade: dict = field(default_factory=dict)

    def out_neighbours(self, v) -> list:
        return sorted((t for s, t, _ in self.edges if s == v), key=self._order)

    def in_neighbours(self, v) -> list:
        return sorted((s for s, t, _ in self.edges if t == v), key=self._order)

    def edge_pairs(self) -> set:
        return {(s, t) for s, t, _ in self.edges}

    def colour(self, s, t):
        for a, b, c in self.edges:
            if a == s and b == t:
                return c
        raise KeyError((s, t))

    def _order(self, v):
        return (self.grade.get(v, 0), _vertex_sort(v))

    def sources(self) -> list:
        targets = {t for _, t, _ in self.edges}
        return [v for v in self.vertices if v not in targets]

    def induced(self, keep: Iterable) -> "ColouredDigraph":
        keep = set(keep)
        verts = [v for v in self.vertices if v in keep]
        edges = {e for e in self.edges if e[0] in keep and e[1] in keep}
        root = self.root if self.root in keep else None
        return ColouredDigraph(verts, edges, root, {v: self.grade[v] for v in verts})

    def is_acyclic(self) -> bool:
        indeg = Counter(t for _, t, _ in self.edges)
        succ = defaultdict(list)
        for s, t, _ in self.edges:
            succ[s].append(t)
        ready = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for t in succ[v]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
        return seen == len(self.vertices)

    def to_dict(self) -> dict:
        label = _label
        edges = sorted(self.edges, key=lambda e: (self._order(e[0]), self._order(e[1])))
        palette = _palette_index(c for _, _, c in edges)
        return {
            "root": label(self.root) if self.root is not None else None,
            "vertices": [label(v) for v in self.vertices],
            "grades": [self.grade[v] for v in self.vertices],
            "edges": [
                {"source": label(s), "target": label(t),
                 "colour": palette.get(c) if c is not None else None}
                for s, t, c in edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "G") -> str:
        edges = sorted(self.edges, key=lambda e: (self._order(e[0]), self._order(e[1])))
        palette = _palette_index(c for _, _, c in edges)
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for v in self.vertices:
            lines.append(f'  "{_label(v)}";')
        for s, t, c in edges:
            attr = ""
            if c is not None:
                attr = f' [color="{PALETTE[palette[c] % len(PALETTE)]}"]'
            lines.append(f'  "{_label(s)}" -> "{_label(t)}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"


PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _palette_index(colours: Iterable) -> dict:
    # stable across runs: order colour keys by a digest of their repr
    uniq = {c for c in colours if c is not None}
    ordered = sorted(uniq, key=lambda c: hashlib.sha1(repr(c).encode()).hexdigest())
    return {c: i for i, c in enumerate(ordered)}


def _label(v) -> str:
    if isinstance(v, ShiftedPoint):
        return str(v)
    return format_parts(v)


def _vertex_sort(v):
    if isinstance(v, ShiftedPoint):
        return tuple(-d for d in v.doubled)
    return sort_key(v)


def _cover_edges(items: list, leq: Callable) -> list[tuple[int, int]]:
    """Cover pairs ``(a, b)`` of a finite poset given as a list and ``<=``."""
    n = len(items)
    if n == 0:
        return []
    lt = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            if a != b and leq(items[a], items[b]):
                lt[a, b] = True
    ltu = lt.astype(np.int64)
    through = (ltu @ ltu) > 0
    cover = lt & ~through
    return [(int(a), int(b)) for a, b in zip(*np.nonzero(cover))]


def _entrywise_leq(x, y) -> bool:
    n = max(len(x), len(y))
    return all((x[i] if i < len(x) else 0) <= (y[i] if i < len(y) else 0) for i in range(n))


def _contained(mu, tau) -> bool:
    return len(mu) <= len(tau) and all(m <= t for m, t in zip(mu, tau))


def _make_graph(verts: list, leq: Callable, colour: Callable | None = None) -> ColouredDigraph:
    verts = sorted(verts, key=sort_key)
    edges = set()
    for a, b in _cover_edges(verts, leq):
        c = colour(verts[a], verts[b]) if colour else None
        edges.add((verts[a], verts[b], c))
    g = ColouredDigraph(verts, edges, None, {v: sum(v) for v in verts})
    srcs = g.sources()
    if len(srcs) == 1:
        g.root = srcs[0]
    return g


def mbs_graph(lam: Sequence[int], delta: int, max_degree: int) -> ColouredDigraph:
    """Maximal-balanced-subpartition graph on the labels balanced with ``lam``.

    Vertices are found with the balanced-pair test, not the orbit key.
    """
    lam = Partition(lam)
    verts = [
        p for p in partitions_up_to(max_degree, parity=lam.degree % 2)
        if is_balanced(lam, p, delta)
    ]
    return _make_graph(verts, _contained)


def edge_colour_key(x: ShiftedPoint, y: ShiftedPoint):
    """Orbit invariant of the wall between two adjacent regular points.

    The midpoint is kept as ``x + y`` in doubled coordinates (so quadrupled
    relative to the midpoint itself); its tail is ``-(4 (i - 1) + 2 delta)``.
    """
    if x.delta != y.delta:
        raise NotAdjacent("points use different delta")
    n = max(x.window, y.window)
    x, y = x.extend(n), y.extend(n)
    diff = [k for k in range(n) if x.doubled[k] != y.doubled[k]]
    if len(diff) != 2:
        raise NotAdjacent(f"{x} and {y} differ in {len(diff)} coordinates")
    i, j = diff
    if not (y.doubled[i] == -x.doubled[j] and y.doubled[j] == -x.doubled[i]):
        raise NotAdjacent(f"{x} and {y} are not related by a reflection (ij)_-")
    return orbit_key([a + b for a, b in zip(x.doubled, y.doubled)], 2 * x.delta, step=4)


def sign_pattern(doubled: Sequence[int]) -> frozenset:
    """Pairs ``(i, j)`` with ``x_i + x_j > 0``: the alcove of a regular point."""
    d = doubled
    return frozenset((a + 1, b + 1) for a in range(len(d)) for b in range(a + 1, len(d))
                     if d[a] + d[b] > 0)


def adjacent(x: ShiftedPoint, y: ShiftedPoint) -> bool:
    n = max(x.window, y.window)
    return len(sign_pattern(x.extend(n).doubled) ^ sign_pattern(y.extend(n).doubled)) == 1


def orbit_graph(weight: Sequence[int], delta: int, max_degree: int,
                colours: bool = True) -> ColouredDigraph:
    """Dominant orbit members of degree ``<= max_degree`` with cover edges."""
    members = enumerate_block(weight, delta, max_degree).members
    return _orbit_graph_on(members, delta, colours)


def _orbit_graph_on(members: list, delta: int, colours: bool) -> ColouredDigraph:
    points = {m: shift(m, delta) for m in members}
    regular = {m: len(set(map(abs, p.doubled))) == len(p.doubled) for m, p in points.items()}

    def colour(a, b):
        if not (colours and regular[a] and regular[b]):
            return None
        pa, pb = points[a], points[b]
        if not adjacent(pa, pb):
            return None
        try:
            return edge_colour_key(pa, pb)
        except NotAdjacent:
            return None

    return _make_graph(list(members), _entrywise_leq, colour)


def regularise(point: ShiftedPoint | Sequence[int]) -> ShiftedPoint | tuple:
    """Keep only the singleton coordinates.

    A :class:`ShiftedPoint` comes back as a shifted point for the parameter
    ``delta + 4s`` (``s`` doubletons removed), since its tail moves up by
    ``2s`` places.  A raw finite vector is filtered as given.
    """
    if isinstance(point, ShiftedPoint):
        top = max((abs(d) for d in point.doubled), default=0)
        n = point.window
        while 2 * n + point.delta <= top:
            n += 1
        point = point.extend(n)
        counts = Counter(abs(d) for d in point.doubled)
        kept = tuple(d for d in point.doubled if counts[abs(d)] == 1)
        s = (len(point.doubled) - len(kept)) // 2
        return ShiftedPoint(kept, point.delta + 4 * s)
    values = tuple(point)
    counts = Counter(abs(v) for v in values)
    return tuple(v for v in values if counts[abs(v)] == 1)


def reg_graph_pair(weight: Sequence[int], delta: int, max_degree: int):
    """Orbit graph of ``weight`` and of its regularisation at a matching bound.

    Returns ``(G, H, vertex_map)`` where ``vertex_map`` sends each vertex of
    ``G`` to the weight of its regularised point.  The degree shift between the
    two orbits is constant, so the bound for ``H`` is ``max_degree + shift``.
    """
    members = enumerate_block(weight, delta, max_degree).members
    g = _orbit_graph_on(members, delta, colours=False)
    mapping = {}
    new_delta = None
    for m in members:
        r = regularise(shift(m, delta))
        new_delta = r.delta
        mapping[m] = Partition(unshift(r))
    offsets = {sum(mapping[m]) - sum(m) for m in members}
    if len(offsets) != 1:
        raise AssertionError(f"degree shift under Reg is not constant: {offsets}")
    offset = offsets.pop()
    image = enumerate_block(mapping[members[0]], new_delta, max_degree + offset).members
    h = _orbit_graph_on(image, new_delta, colours=False)
    return g, h, mapping


# ---- strict partitions with an even number of parts ----

def strict_even_partitions(max_degree: int) -> list[Partition]:
    out = []

    def gen(rest, cap, acc):
        if len(acc) % 2 == 0:
            out.append(Partition(acc))
        for first in range(min(rest, cap), 0, -1):
            gen(rest - first, first - 1, acc + [first])

    gen(max_degree, max_degree, [])
    return sorted(out, key=sort_key)


def par_e_successors(lam: Sequence[int]) -> list[Partition]:
    """Targets of the explicit edge rules out of ``lam``.

    Rule one raises a single part by one when the result stays strict; rule
    two appends ``(2, 1)`` when the last part is at least 3 (vacuously true for
    the empty partition).
    """
    lam = tuple(lam)
    out = []
    for i in range(len(lam)):
        if i == 0 or lam[i - 1] > lam[i] + 1:
            new = list(lam)
            new[i] += 1
            out.append(Partition(new))
    if not lam or lam[-1] >= 3:
        out.append(Partition(lam + (2, 1)))
    return sorted(out, key=sort_key)


def par_e_graph(max_degree: int) -> ColouredDigraph:
    verts = strict_even_partitions(max_degree)
    vset = set(verts)
    edges = {(v, t, None) for v in verts for t in par_e_successors(v) if t in vset}
    return ColouredDigraph(verts, edges, Partition(), {v: sum(v) for v in verts})


def par_e_cover_oracle(max_degree: int) -> set:
    """Cover pairs of inclusion on strict even-length partitions, brute force."""
    verts = strict_even_partitions(max_degree)
    return {(verts[a], verts[b]) for a, b in _cover_edges(verts, _contained)}


def phi(x: ShiftedPoint | Sequence[int]) -> Partition:
    """Positive entries of a point in the orbit of ``(-1, -2, -3, ...)``.

    Shifted points must carry ``delta = 2`` (that orbit in doubled form); raw
    sequences are read as plain coordinates continuing ``-(k+1), -(k+2), ...``.
    """
    if isinstance(x, ShiftedPoint):
        if x.delta != 2 or key_of_point(x) != key_of_point(shift((), 2)):
            raise WrongOrbit(f"{x} is not in the orbit of (-1,-2,-3,...)")
        vals = [d // 2 for d in x.doubled]
    else:
        vals = list(x)
        if any(a <= b for a, b in zip(vals, vals[1:])):
            raise WrongOrbit(f"{tuple(vals)} is not strictly decreasing")
        if sorted(abs(v) for v in vals) != list(range(1, len(vals) + 1)):
            raise WrongOrbit(f"{tuple(vals)} is not a signed rearrangement of 1..{len(vals)}")
        if sum(1 for v in vals if v > 0) % 2:
            raise WrongOrbit(f"{tuple(vals)} has an odd number of positive entries")
    return Partition(v for v in vals if v > 0)


def phi_inverse(p: Sequence[int]) -> ShiftedPoint:
    p = tuple(p)
    if len(p) % 2 or any(a <= b for a, b in zip(p, p[1:])):
        raise WrongOrbit(f"{p} is not strict with an even number of parts")
    n = max(p, default=0) + 1
    rest = sorted(set(range(1, n + 1)) - set(p))
    vals = list(p) + [-r for r in rest]
    return ShiftedPoint(tuple(2 * v for v in vals), 2)


def alcove_transport(x: ShiftedPoint) -> Partition:
    """Send a regular point to the ``Par_e`` vertex of the same alcove.

    Moduli are replaced by their ranks (1, 2, 3, ...) with signs kept; this
    preserves every sign of ``x_i + x_j`` and lands in the orbit of
    ``(-1, -2, -3, ...)`` whenever ``x`` has an even number of positive entries.
    """
    top = max((abs(d) for d in x.doubled), default=0)
    n = x.window
    while 2 * n + x.delta <= top:
        n += 1
    x = x.extend(n)
    mods = sorted(abs(d) for d in x.doubled)
    if len(set(mods)) != len(mods) or 0 in mods:
        raise WrongOrbit(f"{x} is not regular with non-zero entries")
    rank = {m: r for r, m in enumerate(mods, start=1)}
    vals = [rank[abs(d)] * (1 if d > 0 else -1) for d in x.doubled]
    return phi(vals)


# ---- isomorphism ----

@dataclass
class GraphIso:
    vertex_map: dict

    def __len__(self) -> int:
        return len(self.vertex_map)


def verify_iso(g: ColouredDigraph, h: ColouredDigraph, mapping: dict) -> bool:
    """Whether ``mapping`` is a bijection carrying edges onto edges exactly.

    When both graphs carry colours, equal colours must map to equal colours.
    """
    if set(mapping) != set(g.vertices) or set(mapping.values()) != set(h.vertices):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    image = {(mapping[s], mapping[t]) for s, t in g.edge_pairs()}
    if image != h.edge_pairs():
        return False
    if _both_coloured(g, h):
        hc = {(s, t): c for s, t, c in h.edges}
        pairing: dict = {}
        for s, t, c in g.edges:
            d = hc[(mapping[s], mapping[t])]
            if pairing.setdefault(c, d) != d:
                return False
        if len(set(pairing.values())) != len(pairing):
            return False
    return True


def _both_coloured(g, h) -> bool:
    return any(c is not None for *_, c in g.edges) and any(c is not None for *_, c in h.edges)


def _refine(graphs: Sequence[ColouredDigraph]) -> list[dict]:
    """Joint colour refinement, started from (depth, in-degree, out-degree).

    Running all graphs together keeps the integer labels comparable.
    """
    nodes = [(k, v) for k, g in enumerate(graphs) for v in g.vertices]
    succ = defaultdict(list)
    pred = defaultdict(list)
    for k, g in enumerate(graphs):
        for s, t, _ in g.edges:
            succ[(k, s)].append((k, t))
            pred[(k, t)].append((k, s))
    depth = {}
    for k, g in enumerate(graphs):
        for v in sorted(g.vertices, key=g._order):
            depth[(k, v)] = max((depth[p] + 1 for p in pred[(k, v)] if p in depth), default=0)
    raw = {x: (depth[x], len(pred[x]), len(succ[x])) for x in nodes}
    table = {lab: i for i, lab in enumerate(sorted(set(raw.values())))}
    label = {x: table[raw[x]] for x in nodes}
    while True:
        raw = {
            x: (label[x], tuple(sorted(label[t] for t in succ[x])),
                tuple(sorted(label[p] for p in pred[x])))
            for x in nodes
        }
        table = {lab: i for i, lab in enumerate(sorted(set(raw.values())))}
        new = {x: table[raw[x]] for x in nodes}
        if len(table) == len(set(label.values())):
            break
        label = new
    return [{v: label[(k, v)] for v in g.vertices} for k, g in enumerate(graphs)]


def check_isomorphism(g: ColouredDigraph, h: ColouredDigraph) -> GraphIso | None:
    """Find an explicit isomorphism, or return ``None``.

    Vertices are first split by iterated neighbourhood fingerprints; the
    remaining ambiguity is resolved by backtracking level by level.
    """
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    lg, lh = _refine([g, h])
    if Counter(lg.values()) != Counter(lh.values()):
        return None
    by_label = defaultdict(list)
    for v in h.vertices:
        by_label[lh[v]].append(v)
    g_succ = defaultdict(set)
    g_pred = defaultdict(set)
    for s, t, _ in g.edges:
        g_succ[s].add(t)
        g_pred[t].add(s)
    h_edges = h.edge_pairs()
    order = sorted(g.vertices, key=lambda v: (len(by_label[lg[v]]), g._order(v)))
    mapping: dict = {}
    used: set = set()

    def consistent(v, w) -> bool:
        for t in g_succ[v]:
            if t in mapping and (w, mapping[t]) not in h_edges:
                return False
        for s in g_pred[v]:
            if s in mapping and (mapping[s], w) not in h_edges:
                return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in by_label[lg[v]]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if search(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(order) + 100))
    try:
        found = search(0)
    finally:
        sys.setrecursionlimit(limit)
    if not found or not verify_iso(g, h, mapping):
        return None
    return GraphIso(dict(mapping))


def transpose_map(g: ColouredDigraph) -> dict:
    return {v: transpose(v) for v in g.vertices}


__all__ = [
    "ColouredDigraph",
    "GraphIso",
    "adjacent",
    "alcove_transport",
    "check_isomorphism",
    "edge_colour_key",
    "mbs_graph",
    "orbit_graph",
    "par_e_cover_oracle",
    "par_e_graph",
    "par_e_successors",
    "phi",
    "phi_inverse",
    "reg_graph_pair",
    "regularise",
    "sign_pattern",
    "strict_even_partitions",
    "transpose_map",
    "verify_iso",
]
