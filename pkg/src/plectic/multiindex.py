"""Lexicographic enumeration of strictly increasing index tuples.

Degree-d multi-indices on R^n label the basis elements
dq_{i1} ^ ... ^ dq_{id} of alternating d-forms.  This module provides the
rank/unrank bijection between those tuples and [0, C(n, d)), which fixes
the storage order used everywhere else in the package.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache


def validate_indices(indices, dim: int) -> tuple[int, ...]:
    """Check that ``indices`` is strictly increasing with entries in 1..dim."""
    idx = tuple(int(i) for i in indices)
    for a, b in zip(idx, idx[1:]):
        if a >= b:
            raise ValueError(f"indices must be strictly increasing, got {idx}")
    if idx and (idx[0] < 1 or idx[-1] > dim):
        raise ValueError(f"indices must lie in 1..{dim}, got {idx}")
    return idx


@dataclass(frozen=True)
class MultiIndex:
    """A strictly increasing tuple of coordinate indices in 1..dim."""

    indices: tuple[int, ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "indices", validate_indices(self.indices, self.dim))

    @property
    def degree(self) -> int:
        return len(self.indices)


def count(n: int, d: int) -> int:
    """Number of degree-d multi-indices on R^n."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return math.comb(n, d)


def tuple_rank(indices: tuple[int, ...], n: int) -> int:
    """Lexicographic rank of a validated index tuple among C(n, d) tuples."""
    d = len(indices)
    r = 0
    prev = 0
    for pos, i in enumerate(indices):
        for v in range(prev + 1, i):
            r += math.comb(n - v, d - pos - 1)
        prev = i
    return r


def tuple_at(n: int, d: int, r: int) -> tuple[int, ...]:
    """Inverse of :func:`tuple_rank`: the rank-r degree-d tuple on R^n."""
    total = math.comb(n, d)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total})")
    out = []
    prev = 0
    for pos in range(d):
        v = prev + 1
        while True:
            block = math.comb(n - v, d - pos - 1)
            if r < block:
                break
            r -= block
            v += 1
        out.append(v)
        prev = v
    return tuple(out)


def rank_of(mi: MultiIndex) -> int:
    """Lexicographic rank of a multi-index."""
    return tuple_rank(mi.indices, mi.dim)


def multiindex_at(n: int, d: int, r: int) -> MultiIndex:
    """The degree-d multi-index on R^n with lexicographic rank r."""
    return MultiIndex(tuple_at(n, d, r), n)


@lru_cache(maxsize=None)
def all_indices(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All degree-d index tuples on R^n in lexicographic (rank) order."""
    return tuple(itertools.combinations(range(1, n + 1), d))


@lru_cache(maxsize=None)
def rank_table(n: int, d: int) -> dict[tuple[int, ...], int]:
    """Mapping from index tuple to its lexicographic rank."""
    return {idx: r for r, idx in enumerate(all_indices(n, d))}


def merge_with_sign(left: tuple[int, ...], right: tuple[int, ...]):
    """Merge two disjoint increasing tuples, tracking the shuffle sign.

    Returns ``(merged, sign)``, or ``None`` when the tuples share an index
    (the corresponding wedge term vanishes).
    """
    merged = []
    sign = 1
    i = j = 0
    while i < len(left) and j < len(right):
        a, b = left[i], right[j]
        if a == b:
            return None
        if a < b:
            merged.append(a)
            i += 1
        else:
            merged.append(b)
            j += 1
            # b jumps over the remaining entries of `left`
            if (len(left) - i) % 2:
                sign = -sign
    merged.extend(left[i:])
    merged.extend(right[j:])
    return tuple(merged), sign
