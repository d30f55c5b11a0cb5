import random
from fractions import Fraction

import pytest

from plectic import elimination
from plectic.checks import (
    GENERIC_SHAPES,
    random_const_form,
    random_invertible_matrix,
    random_member,
)
from plectic.exterior import ConstForm
from plectic.linear import (
    VectorValuedForm,
    apply_linear_map,
    constant_stack,
    contraction_matrix,
    cross_product_form,
    direct_sum_form,
    is_nondegenerate,
    joint_kernel,
    standard_symplectic,
)


def test_cross_product_evaluation():
    w = cross_product_form()
    assert w.evaluate([(1, 0, 0), (0, 1, 0)]) == (0, 0, 1)
    assert w.evaluate([(1, 2, 3), (4, 5, 6)]) == (-3, 6, -3)


def test_repeated_vector_gives_zero():
    w = cross_product_form()
    v = (2, -1, 5)
    assert w.evaluate([v, v]) == (0, 0, 0)


def test_cross_component_one_is_dq2_wedge_dq3():
    w = cross_product_form()
    assert w.components[0] == ConstForm.from_terms(3, 2, {(2, 3): 1})


def test_contraction_matrix_cross():
    w = cross_product_form()
    matrix = contraction_matrix(w)
    assert len(matrix) == 9 and all(len(row) == 3 for row in matrix)
    assert elimination.rank(matrix, 3) == 3
    assert is_nondegenerate(w)


def test_single_component_degenerate_with_zero_column():
    w1 = VectorValuedForm([cross_product_form().components[0]])
    matrix = contraction_matrix(w1)
    assert len(matrix) == 3
    assert all(row[0] == 0 for row in matrix)  # e1 contracts to nothing
    assert elimination.rank(matrix, 3) == 2
    assert not is_nondegenerate(w1)


def test_each_cross_component_alone_degenerate():
    for comp in cross_product_form().components:
        assert not is_nondegenerate(VectorValuedForm([comp]))


def test_zero_form_matrix():
    w = VectorValuedForm([ConstForm.zero(3, 2)])
    matrix = contraction_matrix(w)
    assert all(v == 0 for row in matrix for v in row)
    assert elimination.rank(matrix, 3) == 0


def test_standard_symplectic_nondegenerate():
    w = VectorValuedForm([standard_symplectic(4)])
    assert is_nondegenerate(w)


def test_direct_sum_of_degenerate_pieces():
    f = ConstForm.from_terms(4, 2, {(1, 2): 1})
    g = ConstForm.from_terms(4, 2, {(3, 4): 1})
    assert not is_nondegenerate(VectorValuedForm([f]))
    assert not is_nondegenerate(VectorValuedForm([g]))
    stacked = direct_sum_form([f, g])
    assert stacked.m == 2
    assert is_nondegenerate(stacked)
    assert elimination.rank(contraction_matrix(stacked), 4) == 4


def test_direct_sum_of_symplectic_copies():
    w = direct_sum_form([standard_symplectic(4)] * 3)
    assert is_nondegenerate(w)


def test_direct_sum_validation():
    with pytest.raises(ValueError):
        direct_sum_form([ConstForm.basis(3, (1, 2))])  # odd ambient dim
    with pytest.raises(ValueError):
        direct_sum_form([ConstForm.basis(4, (1, 2, 3))])  # wrong degree


def test_constant_stack_nondegeneracy_tracks_component():
    good = standard_symplectic(4)
    assert is_nondegenerate(constant_stack(good, 5))
    bad = ConstForm.from_terms(4, 2, {(1, 2): 1})
    assert not is_nondegenerate(constant_stack(bad, 5))


def test_degree_bounds_enforced():
    with pytest.raises(ValueError):
        VectorValuedForm([ConstForm.basis(3, (1,))])  # degree 1 means k = 0
    with pytest.raises(ValueError):
        VectorValuedForm([ConstForm.zero(3, 4)])  # degree > n


def test_kernel_oracle_agrees_with_rank_decision():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(2, 4)
        k = rng.randint(1, n - 1)
        m = rng.randint(1, 3)
        w = VectorValuedForm(
            [random_const_form(rng, n, k + 1, 2) for _ in range(m)]
        )
        kernel = joint_kernel(w)
        assert is_nondegenerate(w) == (not kernel)
        for v in kernel:
            assert any(x for x in v)
            for comp in w.components:
                assert comp.contract(v).is_zero()


def test_nondegeneracy_invariant_under_basis_change():
    rng = random.Random(11)
    for _ in range(40):
        n, k, m = GENERIC_SHAPES[rng.randrange(len(GENERIC_SHAPES))]
        w = random_member(rng, n, k, m)
        t = random_invertible_matrix(rng, n)
        assert is_nondegenerate(apply_linear_map(w, t))


def test_degenerate_stays_degenerate_under_basis_change():
    rng = random.Random(13)
    w = VectorValuedForm([cross_product_form().components[0]])
    for _ in range(10):
        t = random_invertible_matrix(rng, 3)
        assert not is_nondegenerate(apply_linear_map(w, t))


def test_appending_components_preserves_nondegeneracy():
    rng = random.Random(17)
    for _ in range(40):
        n, k, m = GENERIC_SHAPES[rng.randrange(len(GENERIC_SHAPES))]
        w = random_member(rng, n, k, m)
        extra = random_const_form(rng, n, k + 1)
        assert is_nondegenerate(VectorValuedForm(w.components + (extra,)))


def test_apply_linear_map_identity():
    w = cross_product_form()
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert apply_linear_map(w, eye) == w


def test_contraction_matrix_row_order_is_component_major():
    # row (i, J) holds omega_i(e_a, e_J); check one entry by hand:
    # omega_2 = dq3 ^ dq1, so omega_2(e_3, e_1) = 1 sits in row 3*1 + rank((1,)) = 3
    w = cross_product_form()
    matrix = contraction_matrix(w)
    assert matrix[3][2] == 1  # component 2, J = (1,), column a = 3
    assert matrix[5][0] == -1  # component 2, J = (3,), column a = 1


def test_fraction_coefficients_supported():
    w = VectorValuedForm([
        ConstForm.from_terms(4, 2, {(1, 2): Fraction(1, 3), (3, 4): Fraction(-2, 7)})
    ])
    assert is_nondegenerate(w)
