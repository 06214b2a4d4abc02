"""Blocks of B_n(delta) as orbits of the type-D affine Weyl group.

Two weights lie in the same block exactly when their rho-shifted points are
related by a finite permutation combined with an even number of sign changes.
:class:`BlockKey` is a complete invariant for that relation.

Everything here takes *weights* (transposed partition labels) except
:func:`same_block`, which accepts partition labels and transposes them.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DifferentFacet,
    NotAdjacent,
    NotInOrbit,
    NotRegular,
    TooSingular,
    ZeroDelta,
)
from .geometry import (
    ShiftedPoint,
    facet_signature,
    rho_doubled,
    same_facet,
    shift,
    singularity_degree,
    unshift,
)
from .partitions import (
    Partition,
    boxes_addable,
    boxes_removable,
    format_parts,
    partitions_of,
    partitions_up_to,
    sort_key,
    transpose,
)


@dataclass(frozen=True)
class BlockKey:
    """Orbit invariant of a shifted point.

    ``abs_multiset`` holds the sorted doubled moduli with the generic rho tail
    stripped off, so the key does not depend on the window.  ``neg_parity`` is
    the number of negative entries (tail included, counted relative to the
    stripped length) mod 2; it is forced to 0 when a zero entry lets an odd
    sign change happen for free.
    """

    delta: int
    abs_multiset: tuple
    neg_parity: int
    has_zero: bool


def key_of_point(point: ShiftedPoint) -> BlockKey:
    return orbit_key(point.doubled, point.delta)


def orbit_key(values: Sequence[int], delta: int, step: int = 2) -> BlockKey:
    """Key of a finite vector continued by the tail ``-(step * (i - 1) + delta)``.

    Shifted points use ``step = 2``; sums of two shifted points (wall
    midpoints, doubled) use ``step = 4`` with ``2 * delta``.
    """
    values = list(values)
    top = max((abs(d) for d in values), default=0)
    while step * len(values) + delta <= top or not values:
        values.append(-(step * len(values) + delta))
    moduli = sorted(abs(d) for d in values)
    negatives = sum(1 for d in values if d < 0)
    while moduli and moduli[-1] == step * (len(moduli) - 1) + delta:
        moduli.pop()
        negatives -= 1
    has_zero = 0 in moduli
    parity = 0 if has_zero else negatives % 2
    return BlockKey(delta, tuple(moduli), parity, has_zero)


def block_key(weight: Sequence[int], delta: int, window: int | None = None) -> BlockKey:
    """Key of a weight; ``window`` may be any size at or above the canonical one."""
    return key_of_point(shift(tuple(weight), delta, window))


def same_block(lam: Sequence[int], mu: Sequence[int], delta: int) -> bool:
    """Whether partition labels ``lam`` and ``mu`` index the same block."""
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    lam, mu = Partition(lam), Partition(mu)
    if (lam.degree - mu.degree) % 2:
        return False
    return block_key(transpose(lam), delta) == block_key(transpose(mu), delta)


def same_block_weights(lam: Sequence[int], mu: Sequence[int], delta: int) -> bool:
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    if (sum(lam) - sum(mu)) % 2:
        return False
    return block_key(lam, delta) == block_key(mu, delta)


@dataclass
class BlockSet:
    delta: int
    root_weight: tuple
    degree_bound: int
    members: list = field(default_factory=list)

    def __contains__(self, weight) -> bool:
        return tuple(weight) in set(map(tuple, self.members))

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "root_weight": format_parts(self.root_weight),
            "degree_bound": self.degree_bound,
            "members": [format_parts(m) for m in self.members],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def enumerate_block(weight: Sequence[int], delta: int, max_degree: int) -> BlockSet:
    """All dominant weights of degree ``<= max_degree`` in the block of ``weight``."""
    weight = Partition(weight)
    key = block_key(weight, delta)
    members = [
        p for p in partitions_up_to(max_degree, parity=weight.degree % 2)
        if block_key(p, delta) == key
    ]
    members.sort(key=sort_key)
    root = members[0] if members else weight
    return BlockSet(delta, tuple(root), max_degree, members)


def supp(weight: Sequence[int]) -> list[Partition]:
    """Labels one box away from ``weight``, sorted."""
    weight = Partition(weight)
    return sorted(boxes_addable(weight) | boxes_removable(weight), key=sort_key)


def supp2(weight: Sequence[int]) -> Counter:
    out: Counter = Counter()
    for mid in supp(weight):
        out.update(supp(mid))
    return out


def _block_hits(target: Sequence[int], candidates: Iterable, delta: int) -> list:
    key = block_key(target, delta)
    par = sum(target) % 2
    return [c for c in candidates if sum(c) % 2 == par and block_key(c, delta) == key]


def translation_equivalent(lam: Sequence[int], lam2: Sequence[int], delta: int) -> bool:
    """Conditions (i) and (ii) of translation equivalence.

    Condition (iii) ranges over a whole infinite block and is not checked; in
    this alcove geometry the first two already imply it.
    """
    lam, lam2 = Partition(lam), Partition(lam2)
    if lam2 not in supp(lam):
        raise NotAdjacent(f"{lam2} is not one box away from {lam}")
    return (_block_hits(lam2, supp(lam), delta) == [lam2]
            and _block_hits(lam, supp(lam2), delta) == [lam])


def separates(lam2: Sequence[int], lo: Sequence[int], hi: Sequence[int], delta: int) -> bool:
    """Whether ``lam2`` separates ``lo`` and ``hi`` (``lo`` of smaller degree)."""
    lam2, lo, hi = Partition(lam2), Partition(lo), Partition(hi)
    if lo == hi or lo.degree > hi.degree:
        return False
    if _block_hits(lam2, supp(lo), delta) != [lam2]:
        return False
    if _block_hits(lam2, supp(hi), delta) != [lam2]:
        return False
    return sorted(_block_hits(lo, supp(lam2), delta)) == sorted([lo, hi])


def translation_chain(lam: Sequence[int], mu: Sequence[int], delta: int,
                      slack: int | None = None) -> list[Partition]:
    """Shortest chain from ``lam`` to ``mu`` through one facet.

    Steps are single box moves or box-for-box swaps, and every intermediate
    weight must share the facet of ``lam``.  The search stays within degree
    ``max(|lam|, |mu|) + slack``, widening the slack until a chain appears.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not same_facet(lam, mu, delta):
        raise DifferentFacet(f"{lam} and {mu} are not in the same facet")
    if lam == mu:
        return [lam]
    top = max(lam.degree, mu.degree)
    slacks = [slack] if slack is not None else [2, 6, 12, 24]
    for s in slacks:
        chain = _facet_bfs(lam, mu, delta, top + s)
        if chain:
            return chain
    raise DifferentFacet(f"no chain from {lam} to {mu} found within the degree bound")


def _facet_bfs(lam: Partition, mu: Partition, delta: int, bound: int):
    def in_facet(p):
        return same_facet(p, lam, delta)

    prev = {lam: None}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        one = supp(cur)
        two = [p for p in supp2(cur) if p.degree == cur.degree and p != cur]
        for nxt in one + sorted(set(two), key=sort_key):
            if nxt in prev or nxt.degree > bound or not in_facet(nxt):
                continue
            prev[nxt] = cur
            if nxt == mu:
                out = [mu]
                while prev[out[-1]] is not None:
                    out.append(prev[out[-1]])
                return out[::-1]
            queue.append(nxt)
    return None


def _doubleton_moduli(weight: Sequence[int], delta: int) -> list[int]:
    point = shift(weight, delta)
    counts = Counter(abs(d) for d in point.doubled)
    return sorted((m for m, k in counts.items() if k >= 2), reverse=True)


def canonical_negative_rep(weight: Sequence[int], delta: int) -> Partition:
    """The block member with at most ``m`` parts (``delta = -2m``), or with at
    most ``m + 1`` parts and last part at most 1 (``delta = -2m + 1``).

    Only defined for weights whose singularity degree is exactly ``m``.
    """
    if delta >= 0:
        raise ValueError("canonical representatives are for delta < 0")
    m = (-delta + 1) // 2
    weight = Partition(weight)
    deg = singularity_degree(weight, delta)
    if deg > m:
        raise TooSingular(f"{weight} has singularity degree {deg} > {m}")
    if deg < m:
        raise NotRegular(f"{weight} has singularity degree {deg} < {m}")
    tops = _doubleton_moduli(weight, delta)
    key = block_key(weight, delta)
    candidates = [tuple(tops)]
    if delta % 2:
        candidates.append(tuple(tops) + (1,))
    for cand in candidates:
        n = len(cand)
        doubled = cand + tuple(rho_doubled(i, delta) for i in range(n + 1, n + 2))
        if any(a <= b for a, b in zip(doubled, doubled[1:])):
            continue
        rep = Partition(unshift(ShiftedPoint(doubled, delta)))
        if rep.degree % 2 == weight.degree % 2 and block_key(rep, delta) == key:
            return rep
    raise NotInOrbit(f"no representative found for {weight} at delta={delta}")


def in_small_set(weight: Sequence[int], delta: int) -> bool:
    """Membership of the representative set used by :func:`canonical_negative_rep`."""
    m = (-delta + 1) // 2
    w = Partition(weight)
    if delta % 2 == 0:
        return len(w) <= m
    return len(w) <= m + 1 and w.part(m + 1) <= 1


def fundamental_root(weight: Sequence[int], delta: int) -> Partition:
    """The orbit member in the fundamental alcove, for regular ``weight``."""
    if delta < 1:
        raise ValueError("the fundamental alcove needs delta >= 1")
    point = shift(weight, delta)
    moduli = sorted(abs(d) for d in point.doubled)
    if len(set(moduli)) != len(moduli):
        raise NotRegular(f"{tuple(weight)} is not {delta}-regular")
    negatives = sum(1 for d in point.doubled if d < 0)
    coords = [moduli[0]] + [-a for a in moduli[1:]]
    if (len(coords) - 1) % 2 != negatives % 2 and moduli[0] != 0:
        coords[0] = -coords[0]
    return Partition(unshift(ShiftedPoint(tuple(coords), delta)))


def facet_of(weight: Sequence[int], delta: int):
    return facet_signature(shift(weight, delta))


def weights_in_block(key: BlockKey, parity: int, max_degree: int) -> list[Partition]:
    return [p for p in partitions_up_to(max_degree, parity) if block_key(p, key.delta) == key]


__all__ = [
    "BlockKey",
    "BlockSet",
    "block_key",
    "canonical_negative_rep",
    "enumerate_block",
    "fundamental_root",
    "in_small_set",
    "same_block",
    "same_block_weights",
    "separates",
    "supp",
    "supp2",
    "translation_chain",
    "translation_equivalent",
    "partitions_of",
]
