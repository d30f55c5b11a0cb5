"""Differential forms with polynomial coefficients on a coordinate chart.

Everything here is exact: exterior derivative, wedge, pullback along
polynomial maps, and the radial homotopy operator that inverts d on closed
forms.  A chart is just R^N with coordinates x1..xN; no atlases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import ConstForm, as_exact
from .multiindex import merge_with_sign, validate_indices
from .polynomial import Polynomial


class NotClosedError(ValueError):
    """Raised when an operation needs d(form) = 0 but the residue is nonzero."""

    def __init__(self, residue):
        self.residue = residue
        super().__init__("form is not closed; d(form) != 0")


class PolyForm:
    """A degree-d differential form with Polynomial coefficients on R^N."""

    def __init__(self, nvars: int, degree: int, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        if degree < 0:
            raise ValueError("degree must be >= 0")
        self.nvars = nvars
        self.degree = degree
        clean: dict[tuple[int, ...], Polynomial] = {}
        for idx, poly in (terms or {}).items():
            idx = validate_indices(idx, nvars)
            if len(idx) != degree:
                raise ValueError(f"index {idx} does not have degree {degree}")
            if not isinstance(poly, Polynomial):
                poly = Polynomial.constant(nvars, poly)
            if poly.nvars != nvars:
                raise ValueError("coefficient lives on a different chart")
            if not poly.is_zero():
                existing = clean.get(idx)
                poly = existing + poly if existing is not None else poly
                if poly.is_zero():
                    clean.pop(idx, None)
                else:
                    clean[idx] = poly
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "PolyForm":
        return cls(nvars, degree)

    @classmethod
    def from_const(cls, f: ConstForm) -> "PolyForm":
        return cls(f.dim, f.degree,
                   {idx: Polynomial.constant(f.dim, c) for _, idx, c in f.nonzero_terms()})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices) -> Polynomial:
        idx = validate_indices(indices, self.nvars)
        return self.terms.get(idx, Polynomial.zero(self.nvars))

    def __add__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise ValueError("can only add forms of the same shape")
        terms = dict(self.terms)
        for idx, poly in other.terms.items():
            s = terms.get(idx, Polynomial.zero(self.nvars)) + poly
            if s.is_zero():
                terms.pop(idx, None)
            else:
                terms[idx] = s
        return PolyForm(self.nvars, self.degree, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyForm(self.nvars, self.degree,
                        {idx: -poly for idx, poly in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, Polynomial):
            return PolyForm(self.nvars, self.degree,
                            {idx: poly * scalar for idx, poly in self.terms.items()})
        c = as_exact(scalar)
        return PolyForm(self.nvars, self.degree,
                        {idx: poly * c for idx, poly in self.terms.items()})

    __rmul__ = __mul__

    def wedge(self, other: "PolyForm") -> "PolyForm":
        if self.nvars != other.nvars:
            raise ValueError("wedge requires forms on the same chart")
        dtot = self.degree + other.degree
        if dtot > self.nvars:
            return PolyForm.zero(self.nvars, dtot)
        terms: dict[tuple[int, ...], Polynomial] = {}
        for idx1, p1 in self.terms.items():
            for idx2, p2 in other.terms.items():
                merged = merge_with_sign(idx1, idx2)
                if merged is None:
                    continue
                key, sign = merged
                add = p1 * p2 if sign > 0 else -(p1 * p2)
                s = terms.get(key, Polynomial.zero(self.nvars)) + add
                if s.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = s
        return PolyForm(self.nvars, dtot, terms)

    def evaluate_coefficients(self, point) -> ConstForm:
        """Freeze the coefficients at a chart point."""
        frozen = ConstForm.from_terms(
            self.nvars, self.degree,
            {idx: poly.evaluate(point) for idx, poly in self.terms.items()},
        )
        return frozen

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.nvars, self.degree) == (other.nvars, other.degree) \
            and self.terms == other.terms

    def format(self, names=None) -> str:
        if self.is_zero():
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(1, self.nvars + 1)]
        parts = []
        for idx in sorted(self.terms):
            basis = "^".join(f"d{names[i - 1]}" for i in idx) or "1"
            parts.append(f"({self.terms[idx].format(names)}) {basis}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyForm({self.nvars}, {self.degree}: {self.format()})"


@dataclass(frozen=True)
class VectorPolyForm:
    """An m-tuple of PolyForm components with a common shape."""

    components: tuple[PolyForm, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("need at least one component")
        shape = (comps[0].nvars, comps[0].degree)
        if any((c.nvars, c.degree) != shape for c in comps):
            raise ValueError("components must share chart and degree")
        object.__setattr__(self, "components", comps)

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def nvars(self) -> int:
        return self.components[0].nvars

    @property
    def degree(self) -> int:
        return self.components[0].degree

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __sub__(self, other: "VectorPolyForm") -> "VectorPolyForm":
        return VectorPolyForm(tuple(a - b for a, b in
                                    zip(self.components, other.components)))


class PolyMap:
    """A polynomial map R^source -> R^target given by target-many components."""

    def __init__(self, source: int, target: int, components):
        components = tuple(components)
        if len(components) != target:
            raise ValueError(f"need {target} components, got {len(components)}")
        if any(not isinstance(p, Polynomial) or p.nvars != source for p in components):
            raise ValueError("components must be polynomials in the source variables")
        self.source = source
        self.target = target
        self.components = components

    @classmethod
    def identity(cls, nvars: int) -> "PolyMap":
        return cls(nvars, nvars,
                   [Polynomial.variable(nvars, i) for i in range(1, nvars + 1)])

    @classmethod
    def translation(cls, center) -> "PolyMap":
        """x |-> x + center on a chart of dimension len(center)."""
        center = [as_exact(c) for c in center]
        n = len(center)
        return cls(n, n, [Polynomial.variable(n, i) + center[i - 1]
                          for i in range(1, n + 1)])

    def after(self, inner: "PolyMap") -> "PolyMap":
        """Composite self o inner."""
        if inner.target != self.source:
            raise ValueError("maps do not compose")
        return PolyMap(inner.source, self.target,
                       [p.compose(inner.components) for p in self.components])

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return (self.source, self.target) == (other.source, other.target) \
            and self.components == other.components


def exterior_derivative(w: PolyForm) -> PolyForm:
    """d(c dx_I) = sum_a (dc/dx_a) dx_a ^ dx_I, with sort-sign normalization."""
    result_degree = w.degree + 1
    if result_degree > w.nvars:
        return PolyForm.zero(w.nvars, result_degree)
    terms: dict[tuple[int, ...], Polynomial] = {}
    for idx, poly in w.terms.items():
        for a in range(1, w.nvars + 1):
            if a in idx:
                continue
            dpoly = poly.derivative(a)
            if dpoly.is_zero():
                continue
            merged = merge_with_sign((a,), idx)
            key, sign = merged
            add = dpoly if sign > 0 else -dpoly
            s = terms.get(key, Polynomial.zero(w.nvars)) + add
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
    return PolyForm(w.nvars, result_degree, terms)


def exterior_derivative_vector(w: VectorPolyForm) -> VectorPolyForm:
    return VectorPolyForm(tuple(exterior_derivative(c) for c in w.components))


def pullback(F: PolyMap, w: PolyForm) -> PolyForm:
    """Pull a form back along F: substitute into coefficients and expand

    dx_j |-> sum_a (dF_j/dx_a) dx_a, wedging the one-form factors.
    """
    if w.nvars != F.target:
        raise ValueError("form does not live on the target chart of the map")
    s = F.source
    one_forms: dict[int, PolyForm] = {}

    def pulled_coordinate_differential(j: int) -> PolyForm:
        if j not in one_forms:
            terms = {}
            for a in range(1, s + 1):
                dpa = F.components[j - 1].derivative(a)
                if not dpa.is_zero():
                    terms[(a,)] = dpa
            one_forms[j] = PolyForm(s, 1, terms)
        return one_forms[j]

    result = PolyForm.zero(s, w.degree)
    for idx, poly in w.terms.items():
        piece = PolyForm(s, 0, {(): poly.compose(F.components)})
        for j in idx:
            piece = piece.wedge(pulled_coordinate_differential(j))
            if piece.is_zero():
                break
        if piece.degree == w.degree and not piece.is_zero():
            result = result + piece
    return result


def pullback_vector(F: PolyMap, w: VectorPolyForm) -> VectorPolyForm:
    return VectorPolyForm(tuple(pullback(F, c) for c in w.components))


def poincare_potential(w: PolyForm, center=None) -> PolyForm:
    """Radial homotopy potential: an exact K(w) with d(K(w)) = w for closed w.

    After translating ``center`` to the origin, each term
    c(x) dx_{j0}^...^dx_{j_{d-1}} contributes

        sum_a (-1)^a (int_0^1 t^{d-1} c(tx) dt) x_{j_a} dx_{j0}^...(omit a)...

    and a monomial of total degree D integrates to the exact factor
    1/(d + D).  Input must be closed; the nonzero residue is reported
    otherwise.
    """
    if w.degree < 1:
        raise ValueError("potential needs a form of degree >= 1")
    residue = exterior_derivative(w)
    if not residue.is_zero():
        raise NotClosedError(residue)
    n = w.nvars
    if center is not None and any(as_exact(c) for c in center):
        center = [as_exact(c) for c in center]
        if len(center) != n:
            raise ValueError("center has the wrong dimension")
        to_origin = PolyMap.translation(center)
        shifted = pullback(to_origin, w)
        potential = poincare_potential(shifted, None)
        back = PolyMap.translation([-c for c in center])
        return pullback(back, potential)
    d = w.degree
    terms: dict[tuple[int, ...], Polynomial] = {}
    for idx, poly in w.terms.items():
        for pos, j in enumerate(idx):
            sign = -1 if pos % 2 else 1
            reduced = idx[:pos] + idx[pos + 1 :]
            scaled = {}
            for exps, c in poly.terms.items():
                depth = sum(exps)
                lifted = exps[: j - 1] + (exps[j - 1] + 1,) + exps[j:]
                scaled[lifted] = sign * Fraction(c) / (d + depth)
            add = Polynomial(n, scaled)
            if add.is_zero():
                continue
            s = terms.get(reduced, Polynomial.zero(n)) + add
            if s.is_zero():
                terms.pop(reduced, None)
            else:
                terms[reduced] = s
    return PolyForm(n, d - 1, terms)


def poincare_potential_vector(w: VectorPolyForm, center=None) -> VectorPolyForm:
    return VectorPolyForm(tuple(poincare_potential(c, center) for c in w.components))
