"""Shannon entropy of evaluated vector-valued forms and its composition laws.

For a form of arity q evaluated on fixed vectors with component values c_j,
all nonzero, the entropy (in nats) is

    E = -sum_j (c_j^2 / A) ln(c_j^2 / A),     A = sum_i c_i^2,

and the disorder is D = E / ln(q).  Component values and their squares are
kept as exact rationals; floating point enters only at the logarithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exterior import ConstForm, as_exact
from .linear import VectorValuedForm, constant_stack, cross_product_form
from .operad import compose_at


class ZeroComponentError(ValueError):
    """A component value vanished where the entropy hypothesis requires not."""

    def __init__(self, component: int, what: str = "form"):
        self.component = component
        super().__init__(
            f"component {component} of {what} evaluates to 0; "
            "entropy requires all component values nonzero"
        )


class HypothesisViolatedError(ValueError):
    """The chain-rule normalization B_i = A fails as an exact rational identity."""

    def __init__(self, b_i: Fraction, a: Fraction):
        self.b_i = b_i
        self.a = a
        super().__init__(
            f"chain rule needs B_i = A exactly; got B_i = {b_i}, A = {a} "
            "(apply normalize_for_chain first)"
        )


@dataclass(frozen=True)
class ScaledForm:
    """A form times the square root of an exact positive rational.

    The radicand is kept symbolically so squared evaluations stay exact even
    when the scale itself is irrational.
    """

    form: VectorValuedForm
    scale_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "scale_sq", Fraction(self.scale_sq))
        if self.scale_sq <= 0:
            raise ValueError("scale_sq must be positive")

    @property
    def m(self) -> int:
        return self.form.m

    def evaluate_squared(self, vectors) -> tuple[Fraction, ...]:
        return tuple(
            self.scale_sq * Fraction(c) ** 2 for c in self.form.evaluate(vectors)
        )


@dataclass(frozen=True)
class EntropyReport:
    """Evaluated component data with its entropy and disorder.

    ``values`` holds exact rationals, except for a form carrying an
    irrational scale, where only the squares are exact and the values are
    floats; ``squared_values`` is always exact.
    """

    arity: int
    values: tuple
    squared_values: tuple[Fraction, ...]
    weights: tuple[float, ...]
    entropy: float
    disorder: float


def _values_and_squares(w, vectors, what: str = "form"):
    if isinstance(w, ScaledForm):
        raw = w.form.evaluate(vectors)
        squares = [w.scale_sq * Fraction(c) ** 2 for c in raw]
        root = math.sqrt(float(w.scale_sq))
        values = tuple(root * float(c) for c in raw)
    elif isinstance(w, VectorValuedForm):
        values = w.evaluate(vectors)
        squares = [Fraction(c) ** 2 for c in values]
    else:
        raise TypeError(f"{what} must be a VectorValuedForm or ScaledForm")
    for j, s in enumerate(squares, start=1):
        if not s:
            raise ZeroComponentError(j, what)
    return values, squares


def shannon_nats(squares) -> float:
    """Entropy of the distribution proportional to exact positive squares."""
    squares = [Fraction(s) for s in squares]
    total = sum(squares)
    if total <= 0 or any(s <= 0 for s in squares):
        raise ValueError("squares must be positive")
    e = 0.0
    for s in squares:
        wf = float(s / total)
        e -= wf * math.log(wf)
    return e


def entropy(w, vectors) -> EntropyReport:
    """Entropy report of an arity >= 2 form evaluated on k+1 vectors."""
    values, squares = _values_and_squares(w, vectors)
    arity = len(values)
    if arity < 2:
        raise ValueError("entropy needs arity >= 2")
    total = sum(squares)
    weights = tuple(float(s / total) for s in squares)
    e = 0.0
    for wf in weights:
        e -= wf * math.log(wf)
    return EntropyReport(
        arity=arity,
        values=tuple(values),
        squared_values=tuple(squares),
        weights=weights,
        entropy=e,
        disorder=e / math.log(arity),
    )


SLACK_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DoublingCheck:
    """Self-composition bound E(a o_i a) <= 2 E(a) + ln 2, with its slack."""

    holds: bool
    slack: float
    entropy_single: float
    entropy_composed: float


def check_entropy_doubling(alpha: VectorValuedForm, i: int, vectors) -> DoublingCheck:
    """Verify the self-composition entropy bound at the given vectors."""
    composed = compose_at(alpha, i, alpha)
    e_single = entropy(alpha, vectors).entropy
    e_comp = entropy(composed, vectors).entropy
    slack = 2 * e_single + math.log(2) - e_comp
    return DoublingCheck(
        holds=slack >= -SLACK_TOLERANCE,
        slack=slack,
        entropy_single=e_single,
        entropy_composed=e_comp,
    )


@dataclass(frozen=True)
class ChainCheck:
    """Chain rule E(b o_i a) = E(b) + (A/B) E(a) under B_i = A, with residual."""

    holds: bool
    residual: float
    entropy_composed: float
    entropy_beta: float
    entropy_alpha: float
    weight: float


def check_entropy_chain(beta: VectorValuedForm, i: int, alpha, vectors) -> ChainCheck:
    """Verify the chain rule; B_i = A is checked exactly on rationals."""
    _, b_squares = _values_and_squares(beta, vectors, "beta")
    _, a_squares = _values_and_squares(alpha, vectors, "alpha")
    if not 1 <= i <= len(b_squares):
        raise ValueError(f"slot {i} out of range 1..{len(b_squares)}")
    a_total = sum(a_squares)
    b_total = sum(b_squares)
    if b_squares[i - 1] != a_total:
        raise HypothesisViolatedError(b_squares[i - 1], a_total)
    # membership of the literal composition (a scalar factor does not move
    # a form off the nondegenerate locus, so compose the underlying form)
    underlying = alpha.form if isinstance(alpha, ScaledForm) else alpha
    compose_at(beta, i, underlying)
    composed_squares = (
        list(b_squares[: i - 1]) + list(a_squares) + list(b_squares[i:])
    )
    e_comp = shannon_nats(composed_squares)
    e_beta = shannon_nats(b_squares)
    e_alpha = shannon_nats(a_squares)
    weight = float(a_total / b_total)
    residual = abs(e_comp - e_beta - weight * e_alpha)
    return ChainCheck(
        holds=residual <= SLACK_TOLERANCE,
        residual=residual,
        entropy_composed=e_comp,
        entropy_beta=e_beta,
        entropy_alpha=e_alpha,
        weight=weight,
    )


def _exact_sqrt(x: Fraction):
    """The rational square root of x, or None when x is not a perfect square."""
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def normalize_for_chain(alpha: VectorValuedForm, beta: VectorValuedForm, i: int, vectors):
    """Scale alpha by sqrt(B_i / A) so the chain-rule hypothesis B_i = A holds.

    When the ratio is a perfect rational square the scale is folded into the
    coefficients and a plain form is returned; otherwise the exact radicand
    rides along in a :class:`ScaledForm` so squared evaluations stay exact.
    """
    _, b_squares = _values_and_squares(beta, vectors, "beta")
    _, a_squares = _values_and_squares(alpha, vectors, "alpha")
    if not 1 <= i <= len(b_squares):
        raise ValueError(f"slot {i} out of range 1..{len(b_squares)}")
    ratio = b_squares[i - 1] / sum(a_squares)
    if ratio == 1:
        return alpha
    root = _exact_sqrt(ratio)
    if root is not None:
        return VectorValuedForm([c * root for c in alpha.components])
    return ScaledForm(alpha, ratio)


def max_entropy_gap(q: int, value=1) -> float:
    """|E(constant stack of arity q) - ln q| for a nonzero common value."""
    gamma = ConstForm.from_terms(4, 2, {(1, 2): as_exact(value), (3, 4): as_exact(value)})
    stack = constant_stack(gamma, q)
    report = entropy(stack, [(1, 0, 0, 0), (0, 1, 0, 0)])
    return abs(report.entropy - math.log(q))


def iterated_cross_entropy(j: int, c_squared=(10, Fraction(1, 2), Fraction(1, 2))):
    """Entropy and disorder of the j-fold slot-1 self-stacking of a triple.

    Starting from an arity-3 element with squared component values
    (c1^2, c2^2, c3^2) and splicing the element into its own first slot j
    times yields arity 3 + 2j with squares (c1^2, then j+1 copies each of
    c2^2 and c3^2); the entropy is computed from those exact weights.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    c1, c2, c3 = (Fraction(str(c)) if isinstance(c, float) else Fraction(c)
                  for c in c_squared)
    if c1 <= 0 or c2 <= 0 or c3 <= 0:
        raise ValueError("squared component values must be positive")
    total = c1 + (j + 1) * (c2 + c3)
    e = 0.0
    for s, mult in ((c1, 1), (c2, j + 1), (c3, j + 1)):
        wf = float(s / total)
        e -= mult * wf * math.log(wf)
    return e, e / math.log(3 + 2 * j)


def iterated_cross_entropy_from_vectors(j: int, u, v):
    """Same as :func:`iterated_cross_entropy`, deriving the squares from u, v."""
    values = cross_product_form().evaluate([u, v])
    for idx, c in enumerate(values, start=1):
        if not c:
            raise ZeroComponentError(idx, "cross product")
    return iterated_cross_entropy(j, tuple(Fraction(c) ** 2 for c in values))


def entropy_curve_value(x: float) -> float:
    """Closed-form entropy curve through the default table values."""
    arg1 = 0.1 * x + 1.1
    arg2 = 2 * x + 22
    if arg1 <= 0 or arg2 <= 0:
        raise ValueError(f"x = {x} outside the entropy curve domain")
    return (10 * math.log(arg1) + (x + 1) * math.log(arg2)) / (x + 11)


def disorder_curve_value(x: float) -> float:
    """Entropy curve divided by its maximum ln(2x + 3)."""
    if 2 * x + 3 <= 1:
        raise ValueError(f"x = {x} outside the disorder curve domain")
    return entropy_curve_value(x) / math.log(2 * x + 3)


def curve_samples(x_values) -> list[tuple[float, float, float]]:
    """Sample (x, entropy, disorder) along the closed-form curves."""
    out = []
    for x in x_values:
        xf = float(x)
        if xf <= -1.1 or 2 * xf + 3 <= 1:
            raise ValueError(
                f"x = {xf} violates the curve domain (x > -1.1 and 2x+3 > 1)"
            )
        out.append((xf, entropy_curve_value(xf), disorder_curve_value(xf)))
    return out
