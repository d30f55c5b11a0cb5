"""Constant-coefficient alternating multilinear forms on R^n.

Coefficients are exact rationals; evaluation, wedge products and interior
products never round.  A form of degree d on R^n is stored densely as the
C(n, d) coefficients over lexicographically ordered multi-indices, so a
degree-0 form is a single scalar and any form of degree > n is the zero
form (its coefficient list is empty).
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import elimination
from .multiindex import all_indices, merge_with_sign, rank_table, tuple_rank


def as_exact(x):
    """Accept int/Fraction (or a string like '-1/2') as an exact scalar."""
    if isinstance(x, bool):
        raise TypeError("bool is not a form coefficient")
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _exact_vector(v, dim: int) -> tuple:
    vec = tuple(as_exact(x) for x in v)
    if len(vec) != dim:
        raise ValueError(f"vector has length {len(vec)}, expected {dim}")
    return vec


class ConstForm:
    """An alternating d-form on R^n with constant exact-rational coefficients."""

    def __init__(self, dim: int, degree: int, coeffs):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        if degree < 0:
            raise ValueError("degree must be >= 0")
        coeffs = tuple(as_exact(c) for c in coeffs)
        expected = math.comb(dim, degree)
        if len(coeffs) != expected:
            raise ValueError(
                f"need {expected} coefficients for degree {degree} on R^{dim}, "
                f"got {len(coeffs)}"
            )
        self.dim = dim
        self.degree = degree
        self.coeffs = coeffs
        self._nonzero = None

    @classmethod
    def zero(cls, dim: int, degree: int) -> "ConstForm":
        return cls(dim, degree, [0] * math.comb(dim, degree))

    @classmethod
    def from_terms(cls, dim: int, degree: int, terms) -> "ConstForm":
        """Build from a mapping {index tuple: coefficient}; omitted terms are 0."""
        coeffs = [0] * math.comb(dim, degree)
        table = rank_table(dim, degree)
        for idx, c in terms.items():
            idx = tuple(idx)
            if idx not in table:
                raise ValueError(f"invalid degree-{degree} multi-index {idx} on R^{dim}")
            coeffs[table[idx]] = as_exact(c)
        return cls(dim, degree, coeffs)

    @classmethod
    def basis(cls, dim: int, indices) -> "ConstForm":
        """The basis form dq_{i1} ^ ... ^ dq_{id}."""
        indices = tuple(indices)
        return cls.from_terms(dim, len(indices), {indices: 1})

    def coeff(self, indices):
        indices = tuple(indices)
        return self.coeffs[rank_table(self.dim, self.degree)[indices]]

    def nonzero_terms(self):
        """Cached list of (rank, index tuple, coefficient) for nonzero entries."""
        if self._nonzero is None:
            idx = all_indices(self.dim, self.degree)
            self._nonzero = tuple(
                (r, idx[r], c) for r, c in enumerate(self.coeffs) if c
            )
        return self._nonzero

    def is_zero(self) -> bool:
        return not self.nonzero_terms()

    def evaluate(self, vectors):
        """Evaluate on ``degree`` vectors: sum of coefficient * minor determinant."""
        vecs = [_exact_vector(v, self.dim) for v in vectors]
        if len(vecs) != self.degree:
            raise ValueError(f"expected {self.degree} vectors, got {len(vecs)}")
        total = Fraction(0)
        for _, idx, c in self.nonzero_terms():
            minor = [[vec[i - 1] for i in idx] for vec in vecs]
            total += c * elimination.det(minor)
        return total

    def wedge(self, other: "ConstForm") -> "ConstForm":
        if self.dim != other.dim:
            raise ValueError("wedge requires forms on the same space")
        if self.degree == 0:
            return other * self.coeffs[0]
        if other.degree == 0:
            return self * other.coeffs[0]
        dtot = self.degree + other.degree
        if dtot > self.dim:
            return ConstForm.zero(self.dim, dtot)
        coeffs = [0] * math.comb(self.dim, dtot)
        table = rank_table(self.dim, dtot)
        for _, idx1, c1 in self.nonzero_terms():
            for _, idx2, c2 in other.nonzero_terms():
                merged = merge_with_sign(idx1, idx2)
                if merged is None:
                    continue
                key, sign = merged
                coeffs[table[key]] += sign * c1 * c2
        return ConstForm(self.dim, dtot, coeffs)

    def contract(self, vector) -> "ConstForm":
        """Interior product: insert ``vector`` into the first argument slot."""
        if self.degree == 0:
            raise ValueError("cannot contract a degree-0 form")
        vec = _exact_vector(vector, self.dim)
        coeffs = [0] * math.comb(self.dim, self.degree - 1)
        table = rank_table(self.dim, self.degree - 1)
        for _, idx, c in self.nonzero_terms():
            for pos, i in enumerate(idx):
                if not vec[i - 1]:
                    continue
                reduced = idx[:pos] + idx[pos + 1 :]
                sign = -1 if pos % 2 else 1
                coeffs[table[reduced]] += sign * c * vec[i - 1]
        return ConstForm(self.dim, self.degree - 1, coeffs)

    def __add__(self, other):
        if not isinstance(other, ConstForm):
            return NotImplemented
        if (self.dim, self.degree) != (other.dim, other.degree):
            raise ValueError("can only add forms of the same shape")
        return ConstForm(self.dim, self.degree,
                         [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ConstForm(self.dim, self.degree, [-c for c in self.coeffs])

    def __mul__(self, scalar):
        scalar = as_exact(scalar)
        return ConstForm(self.dim, self.degree, [c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ConstForm):
            return NotImplemented
        return (self.dim, self.degree) == (other.dim, other.degree) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.dim, self.degree, tuple(Fraction(c) for c in self.coeffs)))

    def __repr__(self):
        terms = " + ".join(
            f"({c})dq{''.join(map(str, idx))}" for _, idx, c in self.nonzero_terms()
        )
        return f"ConstForm({self.dim}, {self.degree}: {terms or '0'})"


def evaluate(f: ConstForm, vectors):
    return f.evaluate(vectors)


def wedge(f: ConstForm, g: ConstForm) -> ConstForm:
    return f.wedge(g)


def contract(f: ConstForm, vector) -> ConstForm:
    return f.contract(vector)


def rank_of_indices(indices, dim: int) -> int:
    """Lexicographic rank of an index tuple (convenience re-export)."""
    return tuple_rank(tuple(indices), dim)
