import random
from fractions import Fraction

import pytest

from plectic.canonical import (
    cross3_example,
    plectic6_example,
    verify_local_presentation,
)
from plectic.chartforms import (
    NotClosedError,
    PolyForm,
    VectorPolyForm,
    exterior_derivative,
    exterior_derivative_vector,
)
from plectic.checks import random_polyform
from plectic.linear import VectorValuedForm, is_nondegenerate
from plectic.polynomial import Polynomial


def test_cross_example_with_preset_potential():
    omega, potential = cross3_example()
    record = verify_local_presentation(omega, potential=potential)
    assert record.potential_supplied
    assert record.chart.total_dim == 12
    assert record.exact_match
    assert record.residual.is_zero()
    assert not record.degenerate_at_center


def test_cross_example_with_homotopy_potential():
    omega, preset = cross3_example()
    record = verify_local_presentation(omega)
    assert not record.potential_supplied
    assert record.exact_match
    # the computed potential differs from the preset one but works equally
    assert record.potential != preset
    assert exterior_derivative_vector(record.potential).components == \
        omega.components


def test_two_plectic_example_with_preset_potential():
    omega, potential = plectic6_example()
    record = verify_local_presentation(omega, potential=potential)
    assert record.chart.total_dim == 21
    assert record.exact_match
    assert record.residual.is_zero()
    assert not record.degenerate_at_center


def test_two_plectic_example_with_homotopy_potential():
    omega, preset = plectic6_example()
    record = verify_local_presentation(omega)
    assert record.exact_match
    assert record.potential != preset


def test_presentation_rejects_non_closed_input():
    x3 = Polynomial.variable(3, 3)
    bad = VectorPolyForm((PolyForm(3, 2, {(1, 2): x3}),))
    with pytest.raises(NotClosedError):
        verify_local_presentation(bad)


def test_wrong_potential_yields_nonzero_residual():
    omega, potential = cross3_example()
    bumped = VectorPolyForm((
        potential.components[0] + PolyForm(3, 1, {(1,): Polynomial.variable(3, 3)}),
    ) + potential.components[1:])
    record = verify_local_presentation(omega, potential=bumped)
    assert not record.exact_match
    assert not record.residual.is_zero()


def test_degenerate_center_is_flagged_not_fatal():
    # q1 dq1^dq2 + q3 dq3^dq4 is exact (closed) but vanishes at the origin
    x1 = Polynomial.variable(4, 1)
    x3 = Polynomial.variable(4, 3)
    omega = VectorPolyForm((
        PolyForm(4, 2, {(1, 2): x1, (3, 4): x3}),
    ))
    record = verify_local_presentation(omega)
    assert record.degenerate_at_center
    assert record.exact_match  # the construction still succeeds exactly


def test_random_closed_nondegenerate_forms_present_exactly():
    rng = random.Random(73)
    done = 0
    while done < 20:
        n = rng.choice([3, 4])
        k = rng.randint(1, n - 1)
        m = rng.randint(1, 3)
        potential_guess = VectorPolyForm(tuple(
            random_polyform(rng, n, k, terms=2) for _ in range(m)
        ))
        omega = exterior_derivative_vector(potential_guess)
        if omega.is_zero():
            continue
        frozen = VectorValuedForm(tuple(
            c.evaluate_coefficients([0] * n) for c in omega.components
        ))
        if not is_nondegenerate(frozen):
            continue
        record = verify_local_presentation(omega)
        assert record.exact_match
        assert not record.degenerate_at_center
        done += 1


def test_presentation_with_offset_center():
    omega, potential = cross3_example()
    record = verify_local_presentation(omega, center=[1, Fraction(-1, 2), 3])
    assert record.exact_match


def test_supplied_potential_shape_checked():
    omega, _ = cross3_example()
    wrong = VectorPolyForm((PolyForm.zero(3, 1),))
    with pytest.raises(ValueError):
        verify_local_presentation(omega, potential=wrong)
