"""Colexicographic order on r-element sets of positive integers.

An r-set is a sorted tuple of distinct 1-based vertex labels. A < B in colex
iff the largest element of the symmetric difference lies in B. Ranks are
1-based: the first 3-sets are 123 < 124 < 134 < 234 < 125 < ...; the first
C(t, r) r-sets are exactly the r-subsets of {1, ..., t}.
"""

from __future__ import annotations

from math import comb
from typing import Iterable

RSet = tuple[int, ...]


def rset(elements: Iterable[int]) -> RSet:
    """Canonicalize an iterable of vertex labels into a sorted r-set tuple.

    Raises ValueError on duplicates, non-positive labels, or empty input.
    """
    out = tuple(sorted(elements))
    if not out:
        raise ValueError("an r-set needs at least one element")
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"vertex labels must be integers, got {v!r}")
    if out[0] < 1:
        raise ValueError(f"vertex labels are 1-based, got {out[0]}")
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate vertex in r-set: {out}")
    return out


def colex_compare(a: Iterable[int], b: Iterable[int]) -> int:
    """Return -1, 0, or 1 as a precedes, equals, or follows b in colex order."""
    sa, sb = rset(a), rset(b)
    if len(sa) != len(sb):
        raise ValueError(f"uniformity mismatch: |a| = {len(sa)}, |b| = {len(sb)}")
    if sa == sb:
        return 0
    return -1 if max(set(sa) ^ set(sb)) in sb else 1


def colex_rank(a: Iterable[int]) -> int:
    """1-based position of the r-set in the colex order of all r-sets."""
    sa = rset(a)
    return 1 + sum(comb(v - 1, i + 1) for i, v in enumerate(sa))


def colex_unrank(rank: int, r: int) -> RSet:
    """Inverse of colex_rank: the r-set at the given 1-based position."""
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if r < 1:
        raise ValueError(f"set size must be >= 1, got {r}")
    k = rank - 1
    out = []
    for size in range(r, 0, -1):
        c = size - 1
        while comb(c + 1, size) <= k:
            c += 1
        out.append(c + 1)
        k -= comb(c, size)
    return tuple(reversed(out))
