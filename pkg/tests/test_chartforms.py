import random
from fractions import Fraction

import pytest

from plectic.chartforms import (
    NotClosedError,
    PolyForm,
    PolyMap,
    exterior_derivative,
    poincare_potential,
    pullback,
)
from plectic.checks import random_closed_polyform, random_polyform
from plectic.polynomial import Polynomial


def x(i, nvars):
    return Polynomial.variable(nvars, i)


# --- exterior derivative -----------------------------------------------------

def test_d_of_linear_coefficient():
    # d(q2 dq3) = dq2 ^ dq3
    w = PolyForm(3, 1, {(3,): x(2, 3)})
    assert exterior_derivative(w) == PolyForm(3, 2, {(2, 3): 1})


def test_d_of_quadratic_coefficient():
    # d((1/2) x2^2 dx4^dx5) = x2 dx2^dx4^dx5
    w = PolyForm(6, 2, {(4, 5): Fraction(1, 2) * x(2, 6) ** 2})
    assert exterior_derivative(w) == PolyForm(6, 3, {(2, 4, 5): x(2, 6)})


def test_d_of_constant_form_vanishes():
    w = PolyForm(4, 2, {(1, 2): 3, (2, 4): Fraction(-1, 5)})
    assert exterior_derivative(w).is_zero()


def test_d_squared_is_zero():
    rng = random.Random(51)
    for _ in range(100):
        nvars = rng.randint(2, 6)
        degree = rng.randint(0, nvars - 2)
        w = random_polyform(rng, nvars, degree)
        assert exterior_derivative(exterior_derivative(w)).is_zero()


def test_d_at_top_degree_is_zero_form():
    w = PolyForm(2, 2, {(1, 2): x(1, 2)})
    dw = exterior_derivative(w)
    assert dw.degree == 3 and dw.is_zero()


# --- pullback ----------------------------------------------------------------

def test_pullback_along_identity():
    rng = random.Random(53)
    for _ in range(10):
        w = random_polyform(rng, 4, rng.randint(0, 3))
        assert pullback(PolyMap.identity(4), w) == w


def random_polynomialish(rng, nvars):
    from plectic.checks import random_polynomial

    return random_polynomial(rng, nvars, max_degree=2, terms=2, bound=2)


def test_pullback_linear_substitution():
    # on the graph where p12 = x3 (a 4-variable chart q1..q3, p12 = var 4):
    # pulling dp12 ^ dq1 back along (x1, x2, x3, x3) gives dx3 ^ dx1
    f = PolyMap(3, 4, [x(1, 3), x(2, 3), x(3, 3), x(3, 3)])
    w = PolyForm(4, 2, {(1, 4): -1})  # dp12 ^ dq1 = -(dq1 ^ dp12)
    pulled = pullback(f, w)
    assert pulled == PolyForm(3, 2, {(1, 3): -1})  # dx3 ^ dx1 = -(dx1 ^ dx3)


def test_pullback_quadratic_substitution():
    # with p45 = (1/2) x2^2: pullback of dp45 ^ dq4 ^ dq5 is x2 dx2^dx4^dx5
    comps = [x(i, 6) for i in range(1, 7)] + [Fraction(1, 2) * x(2, 6) ** 2]
    f = PolyMap(6, 7, comps)
    w = PolyForm(7, 3, {(4, 5, 7): 1})  # dq4 ^ dq5 ^ dp45 = dp45 ^ dq4 ^ dq5
    pulled = pullback(f, w)
    # pulls to dx4^dx5^(x2 dx2) = x2 dx2^dx4^dx5 (two swaps)
    assert pulled == PolyForm(6, 3, {(2, 4, 5): x(2, 6)})


def test_pullback_functorial():
    rng = random.Random(57)
    for _ in range(20):
        inner = PolyMap(2, 3, [random_polynomialish(rng, 2) for _ in range(3)])
        outer = PolyMap(3, 3, [random_polynomialish(rng, 3) for _ in range(3)])
        w = random_polyform(rng, 3, rng.randint(0, 2), terms=2)
        composite = outer.after(inner)
        assert pullback(composite, w) == pullback(inner, pullback(outer, w))


def test_pullback_commutes_with_d():
    rng = random.Random(59)
    for _ in range(50):
        s = rng.randint(2, 4)
        t = rng.randint(2, 4)
        f = PolyMap(s, t, [random_polynomialish(rng, s) for _ in range(t)])
        w = random_polyform(rng, t, rng.randint(0, t - 1), terms=2)
        assert pullback(f, exterior_derivative(w)) == \
            exterior_derivative(pullback(f, w))


def test_pullback_dimension_mismatch():
    f = PolyMap.identity(3)
    w = PolyForm(4, 1, {(1,): 1})
    with pytest.raises(ValueError):
        pullback(f, w)


# --- homotopy potential --------------------------------------------------------

def test_potential_of_constant_two_form():
    # K(dq2 ^ dq3) = (1/2)(q2 dq3 - q3 dq2), and d of that recovers the form
    w = PolyForm(3, 2, {(2, 3): 1})
    k = poincare_potential(w)
    expected = PolyForm(3, 1, {
        (3,): Fraction(1, 2) * x(2, 3),
        (2,): Fraction(-1, 2) * x(3, 3),
    })
    assert k == expected
    assert exterior_derivative(k) == w


def test_potential_of_zero_form():
    assert poincare_potential(PolyForm.zero(3, 2)).is_zero()


def test_potential_requires_closed_input():
    w = PolyForm(3, 2, {(1, 2): x(3, 3)})  # d = dx3^dx1^dx2 != 0
    with pytest.raises(NotClosedError) as err:
        poincare_potential(w)
    assert not err.value.residue.is_zero()


def test_potential_inverts_d_on_random_closed_forms():
    rng = random.Random(61)
    for _ in range(50):
        nvars = rng.randint(2, 6)
        w = random_closed_polyform(rng, nvars)
        k = poincare_potential(w)
        assert exterior_derivative(k) == w


def test_potential_with_shifted_center():
    rng = random.Random(67)
    for _ in range(20):
        nvars = rng.randint(2, 4)
        w = random_closed_polyform(rng, nvars)
        center = [Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                  for _ in range(nvars)]
        k = poincare_potential(w, center)
        assert exterior_derivative(k) == w


def test_wedge_of_polyforms():
    a = PolyForm(3, 1, {(1,): x(2, 3)})
    b = PolyForm(3, 1, {(2,): x(1, 3)})
    assert a.wedge(b) == PolyForm(3, 2, {(1, 2): x(1, 3) * x(2, 3)})
    assert b.wedge(a) == PolyForm(3, 2, {(1, 2): -(x(1, 3) * x(2, 3))})
    assert a.wedge(a).is_zero()
