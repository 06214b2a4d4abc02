"""Partitions, Young-diagram combinatorics and the delta-balanced condition.

Partitions are stored as :class:`Partition`, an immutable tuple of weakly
decreasing positive integers with no trailing zeros, so they can key dicts and
sets directly.  Rows and columns are indexed from 1 and the content of the box
in row ``i``, column ``j`` is ``j - i``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import NotSubpartition, ParseError, ZeroDelta


class Partition(tuple):
    """A partition in canonical form (weakly decreasing, no zero parts)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        parts = parts[:end]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """Row length ``i`` (1-indexed), zero beyond the last part."""
        return self[i - 1] if i <= len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def __repr__(self) -> str:
        return f"Partition({format_parts(self)!r})"

    def __str__(self) -> str:
        return format_parts(self)


EMPTY = Partition()


def format_parts(parts: Iterable[int]) -> str:
    """Comma-joined serialization; the zero partition is ``"0"``."""
    parts = tuple(parts)
    return ",".join(str(p) for p in parts) if parts else "0"


def format_compact(parts: Iterable[int]) -> str:
    """Exponent notation as used in tables, e.g. ``(5,2,1,1,1) -> "521^3"``.

    Falls back to the comma-joined form when a part has more than one digit,
    and separates runs with commas when an exponent is followed by more parts
    (``"2^31^3"`` would be ambiguous).
    """
    parts = tuple(parts)
    if not parts:
        return "0"
    if any(abs(p) > 9 or p < 0 for p in parts):
        return format_parts(parts)
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        if run > 2:
            out.append(f"{parts[i]}^{run}")
        else:
            out.append(str(parts[i]) * run)
        i = j
    if any("^" in tok for tok in out[:-1]):
        return ",".join(tok if "^" in tok else ",".join(tok) for tok in out)
    return "".join(out)


_TOKEN = re.compile(r"^(-?\d+)(?:\^(\d+))?$")
_COMPACT = re.compile(r"(\d)(?:\^(\d+))?")


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse ``"5,2,1,1,1"``, ``"5,2,1^3"`` or compact ``"521^3"``.

    In compact form (no commas) every digit is one part, so parts of ten or
    more need the comma form.  ``"0"``, ``""`` and ``"∅"`` give the empty tuple.
    """
    text = text.strip().strip("()").replace(" ", "")
    if text in ("", "0", "∅", "empty"):
        return ()
    parts: list[int] = []
    if "," in text:
        for token in text.split(","):
            m = _TOKEN.match(token)
            if not m:
                raise ParseError(f"cannot parse part {token!r} in {text!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    else:
        pos = 0
        for m in _COMPACT.finditer(text):
            if m.start() != pos:
                break
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
            pos = m.end()
        if pos != len(text):
            raise ParseError(f"cannot parse {text!r}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return tuple(parts[:end])


def parse_partition(text: str) -> Partition:
    try:
        return Partition(parse_parts(text))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def transpose(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff ``mu`` is a subpartition of ``lam`` (diagram inclusion)."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def intersection(lam: Partition, mu: Partition) -> Partition:
    lam, mu = Partition(lam), Partition(mu)
    return Partition(min(a, b) for a, b in zip(lam, mu))


def union(lam: Partition, mu: Partition) -> Partition:
    lam, mu = Partition(lam), Partition(mu)
    n = max(len(lam), len(mu))
    return Partition(max(lam.part(i), mu.part(i)) for i in range(1, n + 1))


@dataclass(frozen=True)
class SkewBoxes:
    """Cells of ``outer / inner`` together with their contents."""

    outer: Partition
    inner: Partition
    boxes: frozenset

    @property
    def contents(self) -> Counter:
        return Counter(j - i for i, j in self.boxes)

    def __len__(self) -> int:
        return len(self.boxes)


def skew(lam: Partition, mu: Partition) -> SkewBoxes:
    lam, mu = Partition(lam), Partition(mu)
    if not contains(lam, mu):
        raise NotSubpartition(f"{mu} is not contained in {lam}")
    boxes = frozenset(
        (i, j)
        for i, row in enumerate(lam, start=1)
        for j in range(mu.part(i) + 1, row + 1)
    )
    return SkewBoxes(lam, mu, boxes)


def _contents_pair_up(contents: Counter, target: int) -> bool:
    for c, k in contents.items():
        partner = target - c
        if partner == c:
            if k % 2:
                return False
        elif contents.get(partner, 0) != k:
            return False
    return True


def is_balanced_pair(mu: Partition, lam: Partition, delta: int) -> bool:
    """Whether ``mu ⊆ lam`` is a delta-balanced pair.

    The skew boxes must pair off with contents summing to ``1 - delta``.  For
    even delta there is an extra parity rule on the boxes of content
    ``-delta/2`` and ``1 - delta/2``: when the lowest row of the skew holding
    such boxes holds exactly one of them, the number of those boxes must be a
    multiple of four (an even number of pairs).
    """
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    sk = skew(lam, mu)
    if len(sk) % 2:
        return False
    contents = sk.contents
    if not _contents_pair_up(contents, 1 - delta):
        return False
    if delta % 2 == 0:
        special = {-delta // 2, 1 - delta // 2}
        hits = [(i, j) for i, j in sk.boxes if j - i in special]
        if hits:
            bottom = max(i for i, _ in hits)
            in_bottom = sum(1 for i, _ in hits if i == bottom)
            if in_bottom == 1 and (len(hits) // 2) % 2:
                return False
    return True


def is_balanced(lam: Partition, mu: Partition, delta: int) -> bool:
    """Whether ``lam`` and ``mu`` are delta-balanced (same block for B_n(delta))."""
    lam, mu = Partition(lam), Partition(mu)
    common = intersection(lam, mu)
    return is_balanced_pair(common, lam, delta) and is_balanced_pair(common, mu, delta)


def boxes_addable(lam: Partition) -> set[Partition]:
    """All partitions obtained from ``lam`` by adding one box."""
    lam = Partition(lam)
    out = set()
    for i in range(1, len(lam) + 2):
        if i == 1 or lam.part(i - 1) > lam.part(i):
            parts = list(lam) + [0]
            parts[i - 1] += 1
            out.add(Partition(parts))
    return out


def boxes_removable(lam: Partition) -> set[Partition]:
    """All partitions obtained from ``lam`` by removing one box."""
    lam = Partition(lam)
    out = set()
    for i in range(1, len(lam) + 1):
        if lam.part(i) > lam.part(i + 1):
            parts = list(lam)
            parts[i - 1] -= 1
            out.add(Partition(parts))
    return out


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        return ()

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def partitions_up_to(max_degree: int, parity: int | None = None) -> Iterator[Partition]:
    """Partitions of degree ``<= max_degree``, ordered by (degree, lex decreasing)."""
    for n in range(max_degree + 1):
        if parity is None or n % 2 == parity % 2:
            yield from partitions_of(n)


def sort_key(p: Iterable[int]) -> tuple:
    """Ordering used for all listings: degree ascending, then parts descending."""
    p = tuple(p)
    return (sum(p), tuple(-x for x in p))


def hook_lengths(lam: Partition) -> list[int]:
    conj = transpose(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in Partition(lam).cells()]


def num_standard_tableaux(lam: Partition) -> int:
    """Dimension of the Specht module, by the hook length formula."""
    lam = Partition(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(lam.degree) // prod
