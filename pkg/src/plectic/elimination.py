"""Exact linear algebra over the rationals.

Rank is decided by integer fraction-free row reduction (cross-multiplication
with gcd normalization after clearing denominators), so no tolerance enters
any decision.  The nullspace routine is an independent reduced-row-echelon
path over Fractions, kept separate so rank verdicts can be cross-checked.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _integer_row(row) -> list[int]:
    """Scale a row of exact numbers to coprime integers."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def rank(rows, ncols: int, stop_at: int | None = None) -> int:
    """Rank of a matrix given as an iterable of rows of exact numbers.

    Rows are consumed lazily; pass ``stop_at`` to return early once that many
    independent rows have been found (the rank is then reported as
    ``stop_at`` even if later rows would not change it, which is sound
    because rank never decreases).
    """
    pivots: list[tuple[int, list[int]]] = []  # (leading column, integer row)
    for row in rows:
        r = _integer_row(row)
        for lead, prow in pivots:
            if r[lead]:
                f = r[lead]
                p = prow[lead]
                r = [p * a - f * b for a, b in zip(r, prow)]
                g = 0
                for v in r:
                    g = math.gcd(g, v)
                if g > 1:
                    r = [v // g for v in r]
        lead = next((j for j in range(ncols) if r[j]), None)
        if lead is None:
            continue
        pivots.append((lead, r))
        pivots.sort(key=lambda p: p[0])
        if stop_at is not None and len(pivots) >= stop_at:
            break
    return len(pivots)


def det(matrix) -> Fraction:
    """Exact determinant of a square matrix of ints/Fractions."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pivot = m[col][col]
        result *= pivot
        for r in range(col + 1, n):
            factor = m[r][col] / pivot
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return sign * result


def rref(rows, ncols: int):
    """Reduced row echelon form over Fractions; returns (rows, pivot_cols)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivot_cols


def nullspace(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel, one vector per free column."""
    reduced, pivot_cols = rref(rows, ncols)
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(reduced, pivot_cols):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    return basis
