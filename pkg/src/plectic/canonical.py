"""The canonical forms on the chart of k-covector fields and the local
presentation pipeline.

For a base chart R^n, fiber rank m and degree k, the total chart X has
coordinates q1..qn followed by the fiber coordinates p_{I,i}, ordered
component-major with multi-indices lexicographic.  The tautological form
has component i equal to sum_I p_{I,i} dq_I, its exterior derivative is the
canonical nondegenerate (k+1)-form, and every closed nondegenerate form on
the base pulls the latter back to itself along the graph of a potential.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartforms import (
    NotClosedError,
    PolyForm,
    PolyMap,
    VectorPolyForm,
    exterior_derivative,
    exterior_derivative_vector,
    poincare_potential_vector,
    pullback_vector,
)
from .exterior import as_exact
from .linear import VectorValuedForm, is_nondegenerate
from .multiindex import all_indices, count, tuple_rank
from .polynomial import Polynomial


@dataclass(frozen=True)
class CanonicalChart:
    """Coordinates on the space of R^m-valued k-covectors over an n-chart."""

    base_dim: int
    k: int
    m: int

    def __post_init__(self):
        if self.base_dim < 2:
            raise ValueError("base dimension must be >= 2")
        if not 1 <= self.k <= self.base_dim - 1:
            raise ValueError(f"k = {self.k} must satisfy 1 <= k <= n-1")
        if self.m < 1:
            raise ValueError("fiber rank m must be >= 1")

    @property
    def fiber_count(self) -> int:
        """Number of fiber coordinates per component."""
        return count(self.base_dim, self.k)

    @property
    def total_dim(self) -> int:
        return self.base_dim + self.m * self.fiber_count

    def fiber_index(self, indices, component: int) -> int:
        """1-based chart index of the coordinate p_{I, component}."""
        if not 1 <= component <= self.m:
            raise ValueError(f"component {component} out of range 1..{self.m}")
        r = tuple_rank(tuple(indices), self.base_dim)
        return self.base_dim + (component - 1) * self.fiber_count + r + 1

    def var_names(self) -> list[str]:
        names = [f"q{i}" for i in range(1, self.base_dim + 1)]
        for i in range(1, self.m + 1):
            for idx in all_indices(self.base_dim, self.k):
                label = "".join(str(j) for j in idx)
                names.append(f"p{label}_{i}" if self.m > 1 else f"p{label}")
        return names


def canonical_theta(chart: CanonicalChart) -> VectorPolyForm:
    """Component i is sum_I p_{I,i} dq_I on the total chart."""
    n_total = chart.total_dim
    comps = []
    for i in range(1, chart.m + 1):
        terms = {}
        for idx in all_indices(chart.base_dim, chart.k):
            terms[idx] = Polynomial.variable(n_total, chart.fiber_index(idx, i))
        comps.append(PolyForm(n_total, chart.k, terms))
    return VectorPolyForm(tuple(comps))


def canonical_omega(chart: CanonicalChart) -> VectorPolyForm:
    """Exterior derivative of the tautological form, componentwise."""
    return exterior_derivative_vector(canonical_theta(chart))


def omega_nondegenerate_at(chart: CanonicalChart, point) -> bool:
    """Nondegeneracy of the canonical (k+1)-form at a chart point.

    The coefficients are constant, so a single evaluation decides every
    point; constancy is asserted rather than assumed.
    """
    point = [as_exact(x) for x in point]
    if len(point) != chart.total_dim:
        raise ValueError(
            f"point has length {len(point)}, expected {chart.total_dim}"
        )
    omega = canonical_omega(chart)
    for comp in omega.components:
        for poly in comp.terms.values():
            if not poly.is_constant():
                raise AssertionError("canonical form has non-constant coefficients")
    frozen = VectorValuedForm(
        tuple(comp.evaluate_coefficients(point) for comp in omega.components)
    )
    return is_nondegenerate(frozen)


def build_embedding(potential: VectorPolyForm, chart: CanonicalChart) -> PolyMap:
    """The graph map x |-> (x, potential(x)) into the total chart."""
    n = chart.base_dim
    if potential.nvars != n or potential.degree != chart.k or potential.m != chart.m:
        raise ValueError("potential shape does not match the chart")
    components = [Polynomial.variable(n, i) for i in range(1, n + 1)]
    for i in range(1, chart.m + 1):
        comp = potential.components[i - 1]
        for idx in all_indices(n, chart.k):
            components.append(comp.terms.get(idx, Polynomial.zero(n)))
    return PolyMap(n, chart.total_dim, components)


@dataclass(frozen=True)
class PresentationRecord:
    """Outcome of presenting a closed form as a pullback of the canonical one."""

    chart: CanonicalChart
    center: tuple
    potential: VectorPolyForm
    embedding: PolyMap
    pulled_back: VectorPolyForm
    residual: VectorPolyForm
    exact_match: bool
    degenerate_at_center: bool
    potential_supplied: bool


def verify_local_presentation(
    omega: VectorPolyForm, center=None, potential: VectorPolyForm | None = None
) -> PresentationRecord:
    """Present a closed form on R^n as the pullback of the canonical form.

    Builds (or accepts) a potential, embeds the base chart as its graph, pulls
    the canonical form back and reports the exact difference from ``omega``,
    which must vanish.  Degeneracy of ``omega`` at the center is recorded as
    a warning flag; the construction itself only needs closedness.
    """
    n = omega.nvars
    k = omega.degree - 1
    if not 1 <= k <= n - 1:
        raise ValueError(f"degree {omega.degree} invalid on a {n}-dimensional chart")
    center = tuple(as_exact(c) for c in (center or [0] * n))
    if len(center) != n:
        raise ValueError("center has the wrong dimension")

    residue = exterior_derivative_vector(omega)
    if not residue.is_zero():
        raise NotClosedError(residue)

    frozen = VectorValuedForm(
        tuple(comp.evaluate_coefficients(center) for comp in omega.components)
    )
    degenerate = not is_nondegenerate(frozen)

    supplied = potential is not None
    if potential is None:
        potential = poincare_potential_vector(omega, center)
    elif (potential.nvars, potential.degree, potential.m) != (n, k, omega.m):
        raise ValueError("supplied potential shape does not match the form")

    chart = CanonicalChart(n, k, omega.m)
    embedding = build_embedding(potential, chart)
    pulled = pullback_vector(embedding, canonical_omega(chart))
    residual = pulled - omega
    return PresentationRecord(
        chart=chart,
        center=center,
        potential=potential,
        embedding=embedding,
        pulled_back=pulled,
        residual=residual,
        exact_match=residual.is_zero(),
        degenerate_at_center=degenerate,
        potential_supplied=supplied,
    )


def _const_vector_polyform(nvars, degree, component_terms) -> VectorPolyForm:
    comps = []
    for terms in component_terms:
        comps.append(PolyForm(nvars, degree, terms))
    return VectorPolyForm(tuple(comps))


def cross3_example():
    """The R^3-valued cross-product form with its classical linear potential.

    Returns (omega, potential): omega_1 = dq2^dq3, omega_2 = dq3^dq1,
    omega_3 = dq1^dq2 and alpha_1 = q2 dq3, alpha_2 = q3 dq1, alpha_3 = q1 dq2.
    """
    x = lambda i: Polynomial.variable(3, i)
    omega = _const_vector_polyform(3, 2, [
        {(2, 3): 1},
        {(1, 3): -1},
        {(1, 2): 1},
    ])
    potential = VectorPolyForm((
        PolyForm(3, 1, {(3,): x(2)}),
        PolyForm(3, 1, {(1,): x(3)}),
        PolyForm(3, 1, {(2,): x(1)}),
    ))
    return omega, potential


def plectic6_example():
    """A 2-plectic form on R^6 that is not of constant linear type.

    Returns (omega, potential) with
    omega = dx1^dx3^dx5 - dx1^dx4^dx6 - dx2^dx3^dx6 + x2 dx2^dx4^dx5 and
    potential = x1 dx3^dx5 - x1 dx4^dx6 - x2 dx3^dx6 + (1/2) x2^2 dx4^dx5.
    """
    x = lambda i: Polynomial.variable(6, i)
    omega = VectorPolyForm((
        PolyForm(6, 3, {
            (1, 3, 5): 1,
            (1, 4, 6): -1,
            (2, 3, 6): -1,
            (2, 4, 5): x(2),
        }),
    ))
    potential = VectorPolyForm((
        PolyForm(6, 2, {
            (3, 5): x(1),
            (4, 6): -x(1),
            (3, 6): -x(2),
            (4, 5): Fraction(1, 2) * x(2) ** 2,
        }),
    ))
    return omega, potential


BUILTIN_EXAMPLES = {
    "cross3": cross3_example,
    "plectic6": plectic6_example,
}
