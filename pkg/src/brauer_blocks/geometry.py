"""Weight space geometry: the rho-shift, type-D dot action, facets and alcoves.

Weights are finite-support integer sequences, stored as tuples with trailing
zeros trimmed.  Shifted points ``x = lambda + rho_delta`` are stored *doubled*
(``2 * x``) so that odd ``delta`` stays in integers:

    doubled[i] = 2 * lambda_i - 2 * (i - 1) - delta        (i = 1, 2, ...)

A shifted point keeps only a finite window; beyond it every coordinate equals
the rho tail ``-(2 * (i - 1) + delta)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotInDominantChamber, NotRegular, ParityMismatch, ZeroDelta

Weight = tuple  # tuple[int, ...], trailing zeros trimmed


def as_weight(entries: Iterable[int]) -> Weight:
    entries = tuple(int(e) for e in entries)
    end = len(entries)
    while end and entries[end - 1] == 0:
        end -= 1
    return entries[:end]


def is_dominant(w: Sequence[int]) -> bool:
    w = tuple(w)
    return all(a >= b for a, b in zip(w, w[1:])) and (not w or w[-1] >= 0)


def _check_delta(delta: int) -> None:
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")


def rho_doubled(i: int, delta: int) -> int:
    """Doubled rho_delta coordinate at 1-indexed position ``i``."""
    return -2 * (i - 1) - delta


def canonical_window(weight: Sequence[int], delta: int) -> int:
    """Smallest window holding every modulus coincidence of ``weight + rho``.

    This is the least ``N >= max(len(weight), 1)`` for which the first tail
    coordinate ``N + 1`` has modulus ``2N + delta`` exceeding every modulus in
    the window; later tail moduli are larger still and pairwise distinct.
    """
    weight = tuple(weight)
    n = max(len(weight), 1)
    top = 0
    for i in range(1, n + 1):
        top = max(top, abs(2 * (weight[i - 1] if i <= len(weight) else 0) - 2 * (i - 1) - delta))
    while 2 * n + delta <= top:
        n += 1
        top = max(top, abs(rho_doubled(n, delta)))
    return n


@dataclass(frozen=True)
class ShiftedPoint:
    """``lambda + rho_delta`` in doubled coordinates over a finite window."""

    doubled: tuple
    delta: int

    @property
    def window(self) -> int:
        return len(self.doubled)

    def at(self, i: int) -> int:
        """Doubled coordinate at 1-indexed ``i``, tail included."""
        if i <= len(self.doubled):
            return self.doubled[i - 1]
        return rho_doubled(i, self.delta)

    def extend(self, window: int) -> "ShiftedPoint":
        if window <= self.window:
            return self
        tail = tuple(rho_doubled(i, self.delta) for i in range(self.window + 1, window + 1))
        return ShiftedPoint(self.doubled + tail, self.delta)

    def halved(self) -> tuple:
        """Actual coordinates, for display only."""
        return tuple(Fraction(d, 2) for d in self.doubled)

    def is_dominant(self) -> bool:
        d = self.doubled
        return all(a > b for a, b in zip(d, d[1:]))

    def __str__(self) -> str:
        shown = ",".join(str(h.numerator) if h.denominator == 1 else f"{float(h):g}"
                         for h in self.halved())
        return f"({shown},...)"


def shift(weight: Sequence[int], delta: int, window: int | None = None) -> ShiftedPoint:
    _check_delta(delta)
    weight = tuple(weight)
    n = canonical_window(weight, delta)
    if window is not None:
        n = max(n, window)
    doubled = tuple(
        2 * (weight[i - 1] if i <= len(weight) else 0) - 2 * (i - 1) - delta
        for i in range(1, n + 1)
    )
    return ShiftedPoint(doubled, delta)


def unshift(point: ShiftedPoint) -> Weight:
    delta = point.delta
    out = []
    for i, d in enumerate(point.doubled, start=1):
        num = d + 2 * (i - 1) + delta
        if num % 2:
            raise ParityMismatch(f"coordinate {i} of {point.doubled} has the wrong parity for delta={delta}")
        out.append(num // 2)
    return as_weight(out)


@dataclass(frozen=True)
class Reflection:
    """``(i j)`` swaps coordinates; ``(i j)_-`` sends ``e_i`` to ``-e_j``."""

    kind: str  # "plain" or "minus"
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("reflection indices must differ")
        if self.kind not in ("plain", "minus"):
            raise ValueError(f"unknown reflection kind {self.kind!r}")

    @classmethod
    def minus(cls, i: int, j: int) -> "Reflection":
        return cls("minus", i, j)

    @classmethod
    def plain(cls, i: int, j: int) -> "Reflection":
        return cls("plain", i, j)

    def apply(self, coords: list) -> None:
        """Act in place on a (doubled or undoubled) coordinate list."""
        a, b = self.i - 1, self.j - 1
        if self.kind == "plain":
            coords[a], coords[b] = coords[b], coords[a]
        else:
            coords[a], coords[b] = -coords[b], -coords[a]

    def __str__(self) -> str:
        return f"({self.i},{self.j})" + ("_-" if self.kind == "minus" else "")


def apply_word(word: Sequence[Reflection], point: ShiftedPoint) -> ShiftedPoint:
    """Apply ``word[0] word[1] ... word[-1]`` to a shifted point (rightmost first)."""
    top = max((max(r.i, r.j) for r in word), default=0)
    point = point.extend(top)
    coords = list(point.doubled)
    for r in reversed(word):
        r.apply(coords)
    return ShiftedPoint(tuple(coords), point.delta)


def dot_action(word: Sequence[Reflection], weight: Sequence[int], delta: int) -> Weight:
    """``w ._delta weight = w(weight + rho_delta) - rho_delta``; may be non-dominant."""
    return unshift(apply_word(word, shift(weight, delta)))


def _moduli_pairs(doubled: Sequence[int]) -> int:
    seen: dict[int, int] = {}
    for d in doubled:
        seen[abs(d)] = seen.get(abs(d), 0) + 1
    return sum(k * (k - 1) // 2 for k in seen.values())


def singularity_degree(weight: Sequence[int], delta: int) -> int:
    """Number of unordered coordinate pairs of ``weight + rho`` with equal modulus."""
    return _moduli_pairs(shift(weight, delta).doubled)


def is_regular(weight: Sequence[int], delta: int) -> bool:
    return singularity_degree(weight, delta) == 0


@dataclass(frozen=True)
class FacetSignature:
    """Coordinates carrying the k-th smallest modulus, for k = 1, 2, ...

    Each slot is ``(i,)`` for a singleton or ``(i, j)`` with ``i < j`` for a
    doubleton.  The listing stops at the window; beyond it every slot is the
    next tail coordinate as a singleton.
    """

    slots: tuple

    @property
    def is_alcove(self) -> bool:
        return all(len(s) == 1 for s in self.slots)

    def doubletons(self) -> tuple:
        return tuple(s for s in self.slots if len(s) == 2)

    def __str__(self) -> str:
        return " ".join(
            str(s[0]) if len(s) == 1 else f"({s[0]},{s[1]})" for s in self.slots
        )


def signature_of(values: Sequence) -> FacetSignature:
    """Facet signature of an explicit strictly decreasing vector (any scale)."""
    values = tuple(values)
    if any(a <= b for a, b in zip(values, values[1:])):
        raise NotInDominantChamber(f"{values} is not strictly decreasing")
    groups: dict = {}
    for idx, v in enumerate(values, start=1):
        groups.setdefault(abs(v), []).append(idx)
    return FacetSignature(tuple(tuple(groups[m]) for m in sorted(groups)))


def facet_signature(point: ShiftedPoint | Sequence) -> FacetSignature:
    if isinstance(point, ShiftedPoint):
        return signature_of(point.doubled)
    return signature_of(point)


def same_facet(lam: Sequence[int], mu: Sequence[int], delta: int) -> bool:
    lam, mu = tuple(lam), tuple(mu)
    n = max(canonical_window(lam, delta), canonical_window(mu, delta))
    return facet_signature(shift(lam, delta, n)) == facet_signature(shift(mu, delta, n))


def in_fundamental_alcove(weight: Sequence[int], delta: int) -> bool:
    """Closed-form membership ``lambda_1 + lambda_2 <= delta`` (delta >= 1)."""
    if delta < 1:
        raise ValueError("the fundamental alcove needs delta >= 1")
    w = tuple(weight) + (0, 0)
    return w[0] + w[1] <= delta


def in_fundamental_alcove_by_signature(weight: Sequence[int], delta: int) -> bool:
    """Membership tested by comparing facet signatures with the zero weight."""
    return same_facet(weight, (), delta)


def weight_leq(x: Sequence[int], y: Sequence[int]) -> bool:
    """Entrywise order: ``x <= y`` iff every entry of ``y - x`` is non-negative."""
    x, y = tuple(x), tuple(y)
    n = max(len(x), len(y))
    x = x + (0,) * (n - len(x))
    y = y + (0,) * (n - len(y))
    return all(a <= b for a, b in zip(x, y))


def length(weight: Sequence[int], delta: int) -> int:
    """Number of ``(ij)_-`` walls between the fundamental alcove and ``weight``.

    Equals ``#{i < j : x_i + x_j > 0}`` for ``x = weight + rho``.  Defined for
    regular dominant weights with ``delta >= 1``.
    """
    if delta < 1:
        raise ValueError("lengths are defined for delta >= 1")
    point = shift(weight, delta)
    if _moduli_pairs(point.doubled):
        raise NotRegular(f"{weight} is not {delta}-regular")
    return _positive_pair_sums(point.doubled)


def _positive_pair_sums(doubled: Sequence[int]) -> int:
    d = doubled
    count = 0
    for a in range(len(d)):
        if d[a] <= 0:
            break
        for b in range(a + 1, len(d)):
            if d[a] + d[b] > 0:
                count += 1
    return count
