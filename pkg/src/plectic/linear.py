"""R^m-valued alternating forms on a vector space and the nondegeneracy test.

A vector-valued form is nondegenerate when the only vector contracting to
zero against every component (for all argument choices) is zero; that holds
exactly when the stacked contraction matrix has full column rank, decided
here by exact integer row reduction.
"""

from __future__ import annotations

from fractions import Fraction

from . import elimination
from .exterior import ConstForm, as_exact
from .multiindex import all_indices, count, tuple_rank


class VectorValuedForm:
    """A sequence of m alternating (k+1)-forms on a common R^n.

    Degree k+1 must satisfy 1 <= k <= n-1; component i is exactly the i-th
    coordinate projection of the vector-valued map.
    """

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("need at least one component")
        if not all(isinstance(c, ConstForm) for c in components):
            raise TypeError("components must be ConstForm values")
        dim = components[0].dim
        degree = components[0].degree
        for c in components:
            if (c.dim, c.degree) != (dim, degree):
                raise ValueError("components must share dimension and degree")
        if not 2 <= degree <= dim:
            raise ValueError(
                f"degree k+1 = {degree} must satisfy 2 <= k+1 <= n = {dim}"
            )
        self.components = components
        self.dim = dim
        self.degree = degree

    @property
    def k(self) -> int:
        return self.degree - 1

    @property
    def m(self) -> int:
        return len(self.components)

    def evaluate(self, vectors) -> tuple:
        """Componentwise evaluation on k+1 vectors."""
        return tuple(c.evaluate(vectors) for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, VectorValuedForm):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"VectorValuedForm(m={self.m}, n={self.dim}, k={self.k})"


def _sparse_contraction_rows(w: VectorValuedForm):
    """Rows of the contraction matrix as {(component, k-rank): {column: value}}.

    Entry of row (i, J) at column a is omega_i(e_a, e_J); only nonzero rows
    appear.  Row keys sort in the documented component-major, lexicographic
    order.
    """
    n = w.dim
    k = w.k
    rows: dict[tuple[int, int], dict[int, object]] = {}
    for ci, comp in enumerate(w.components):
        for _, idx, c in comp.nonzero_terms():
            for pos, a in enumerate(idx):
                reduced = idx[:pos] + idx[pos + 1 :]
                sign = -1 if pos % 2 else 1
                key = (ci, tuple_rank(reduced, n))
                row = rows.setdefault(key, {})
                row[a - 1] = row.get(a - 1, 0) + sign * c
    return {key: {a: v for a, v in row.items() if v} for key, row in rows.items()}


def contraction_matrix(w: VectorValuedForm) -> list[list]:
    """Dense (m * C(n, k)) x n matrix whose kernel is the joint kernel.

    Rows run over components (all multi-indices of the first component, then
    the second, ...), multi-indices in lexicographic order; column a holds
    the contractions against the basis vector e_a.
    """
    n = w.dim
    per_comp = count(n, w.k)
    sparse = _sparse_contraction_rows(w)
    matrix = []
    for ci in range(w.m):
        for r in range(per_comp):
            row = [Fraction(0)] * n
            for a, v in sparse.get((ci, r), {}).items():
                row[a] = Fraction(v)
            matrix.append(row)
    return matrix


def is_nondegenerate(w: VectorValuedForm) -> bool:
    """Exact nondegeneracy decision: full column rank of the contraction matrix."""
    n = w.dim
    sparse = _sparse_contraction_rows(w)
    dense_rows = []
    for key in sorted(sparse):
        row = [0] * n
        for a, v in sparse[key].items():
            row[a] = v
        dense_rows.append(row)
    return elimination.rank(dense_rows, n, stop_at=n) == n


def joint_kernel(w: VectorValuedForm) -> list[tuple[Fraction, ...]]:
    """Exact basis of the intersection of the component kernels."""
    return elimination.nullspace(contraction_matrix(w), w.dim)


def cross_product_form() -> VectorValuedForm:
    """The R^3-valued 2-form on R^3 whose value is the cross product u x v."""
    return VectorValuedForm([
        ConstForm.from_terms(3, 2, {(2, 3): 1}),    # u2 v3 - u3 v2
        ConstForm.from_terms(3, 2, {(1, 3): -1}),   # -u1 v3 + u3 v1
        ConstForm.from_terms(3, 2, {(1, 2): 1}),    # u1 v2 - u2 v1
    ])


def direct_sum_form(forms) -> VectorValuedForm:
    """Stack degree-2 forms on a common even-dimensional space as components."""
    forms = list(forms)
    if not forms:
        raise ValueError("need at least one form")
    dim = forms[0].dim
    for f in forms:
        if f.degree != 2:
            raise ValueError("direct_sum_form expects degree-2 components")
        if f.dim != dim:
            raise ValueError("components must share the ambient dimension")
    if dim % 2:
        raise ValueError("symplectic components need an even-dimensional space")
    return VectorValuedForm(forms)


def standard_symplectic(dim: int) -> ConstForm:
    """dq1^dq2 + dq3^dq4 + ... on an even-dimensional space."""
    if dim % 2:
        raise ValueError("dim must be even")
    return ConstForm.from_terms(
        dim, 2, {(2 * i + 1, 2 * i + 2): 1 for i in range(dim // 2)}
    )


def constant_stack(component: ConstForm, m: int) -> VectorValuedForm:
    """m equal components; nondegenerate exactly when ``component`` is."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return VectorValuedForm([component] * m)


def apply_linear_map(w: VectorValuedForm, matrix) -> VectorValuedForm:
    """Precompose every argument with the linear map given by ``matrix``.

    ``matrix`` is n x n, row i holding the image coordinates of e_i under
    the transpose convention T(e_j) = column j, i.e. the new coefficient at
    the multi-index J is omega(T e_{j1}, ..., T e_{jd}).
    """
    n = w.dim
    rows = [tuple(as_exact(x) for x in row) for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"matrix must be {n}x{n}")
    columns = [tuple(rows[i][j] for i in range(n)) for j in range(n)]
    d = w.degree
    new_components = []
    for comp in w.components:
        coeffs = [comp.evaluate([columns[j - 1] for j in idx])
                  for idx in all_indices(n, d)]
        new_components.append(ConstForm(n, d, coeffs))
    return VectorValuedForm(new_components)
