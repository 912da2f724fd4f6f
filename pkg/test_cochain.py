"""
Tests for cochains, the differentials d^1 and d^2 and their grading
"""
import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path
sys.path.append(str(Path(__file__).parent / "src"))

from algebra import make_m2, random_lambda, standard_lambda, zero_lambda
from cochain import (
    basis_cochain2,
    cochain1,
    cochain2_from_terms,
    crosscheck_differentials,
    d1_closed,
    d1_closed_matrix,
    d1_generic,
    d1_matrix,
    d2_closed,
    d2_closed_matrix,
    d2_generic,
    d2_matrix,
    describe_cochain,
    dim_c2,
    dim_c3,
    evaluate_cochain2,
    graded_matrix,
    grade_range,
    normalize_pair,
    normalize_triple,
    pair_basis,
    pair_index,
    phi_k,
    triple_index,
    xi,
)
from exceptions import GradeOutOfRange, IndexOutOfRange
from field import make_field
from linalg import in_span, kernel_basis, span

GF5 = make_field(5)
GF7 = make_field(7)
GF11 = make_field(11)
GF25 = make_field(5, (3, 0))


def _e3(field, p, s, t, u):
    return field.basis_vector(dim_c3(p), triple_index(p)[(s, t, u)])


def test_basis_sizes_and_order():
    assert dim_c2(5) == 10
    assert dim_c3(5) == 10
    assert pair_index(5)[(1, 2)] == 0
    assert pair_index(5)[(4, 5)] == 9
    assert triple_index(5)[(1, 2, 3)] == 0


def test_normalize_pair_conventions():
    assert normalize_pair(1, 2, 5) == (1, 0)
    assert normalize_pair(2, 1, 5) == (-1, 0)
    assert normalize_pair(2, 1, 5, convention="closed") is None
    assert normalize_pair(3, 3, 5) is None
    assert normalize_pair(0, 3, 5) is None
    assert normalize_pair(1, 6, 5) is None
    with pytest.raises(ValueError):
        normalize_pair(1, 2, 5, convention="other")


def test_normalize_triple_signs():
    pos = triple_index(5)[(2, 3, 4)]
    assert normalize_triple(2, 3, 4, 5) == (1, pos)
    assert normalize_triple(2, 4, 3, 5) == (-1, pos)
    assert normalize_triple(4, 2, 3, 5) == (1, pos)
    assert normalize_triple(2, 4, 3, 5, convention="closed") is None
    assert normalize_triple(2, 2, 3, 5) is None


def test_named_cochains():
    assert np.all(phi_k(GF7, 7, 3) == basis_cochain2(GF7, 7, 1, 2))
    assert np.all(phi_k(GF7, 7, 5) == basis_cochain2(GF7, 7, 1, 4) + basis_cochain2(GF7, 7, 2, 3))
    assert np.all(phi_k(GF7, 7, 9) == basis_cochain2(GF7, 7, 2, 7))
    assert np.all(xi(GF5, 5) == cochain2_from_terms(GF5, 5, {(2, 5): 1, (3, 4): -1}))
    with pytest.raises(IndexOutOfRange):
        basis_cochain2(GF5, 5, 3, 2)
    with pytest.raises(IndexOutOfRange):
        cochain1(GF5, 5, 6)


def test_evaluate_cochain2_is_antisymmetric():
    A = make_m2(GF5, zero_lambda(GF5))
    phi = basis_cochain2(GF5, 5, 1, 4)
    assert evaluate_cochain2(phi, A.basis(0), A.basis(3)) == 1
    assert evaluate_cochain2(phi, A.basis(3), A.basis(0)) == GF5.scalar(-1)
    assert evaluate_cochain2(phi, A.basis(1), A.basis(3)) == 0


def test_describe_cochain():
    assert describe_cochain(GF5, xi(GF5, 5), 2) == "e^{2,5} - e^{3,4}"
    assert describe_cochain(GF7, phi_k(GF7, 7, 8), 2) == "e^{1,7} + e^{2,6}"
    assert describe_cochain(GF5, GF5([0, 2, 0, 0, 0]), 1) == "2e^2"
    assert describe_cochain(GF5, GF5.zeros(10), 2) == "0"


def test_d1_examples():
    A = make_m2(GF7, zero_lambda(GF7))
    assert not np.any(d1_generic(A, cochain1(GF7, 7, 1)) != 0)
    assert not np.any(d1_generic(A, cochain1(GF7, 7, 2)) != 0)
    assert np.all(d1_generic(A, cochain1(GF7, 7, 3)) == basis_cochain2(GF7, 7, 1, 2))
    expected = basis_cochain2(GF7, 7, 1, 4) + basis_cochain2(GF7, 7, 2, 3)
    assert np.all(d1_generic(A, cochain1(GF7, 7, 5)) == expected)
    for k in range(3, 8):
        assert np.all(d1_generic(A, cochain1(GF7, 7, k)) == phi_k(GF7, 7, k))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_d2_on_first_row(p):
    field = make_field(p)
    A = make_m2(field, zero_lambda(field))
    for j in range(5, p + 1):
        value = d2_generic(A, basis_cochain2(field, p, 1, j))
        assert np.all(value == -_e3(field, p, 1, 2, j - 2))


def test_d2_example_in_grade_six():
    A = make_m2(GF7, zero_lambda(GF7))
    for s15 in range(7):
        for s24 in range(7):
            phi = cochain2_from_terms(GF7, 7, {(1, 5): s15, (2, 4): s24})
            assert np.all(d2_generic(A, phi) == GF7.scalar(s24 - s15) * _e3(GF7, 7, 1, 2, 3))


def test_d2_of_e45():
    A = make_m2(GF7, zero_lambda(GF7))
    expected = _e3(GF7, 7, 1, 3, 5) - _e3(GF7, 7, 2, 3, 4)
    assert np.all(d2_generic(A, basis_cochain2(GF7, 7, 4, 5)) == expected)
    assert np.all(d2_closed(7, basis_cochain2(GF7, 7, 4, 5)) == expected)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_phi_k_are_cocycles(p):
    field = make_field(p)
    A = make_m2(field, random_lambda(field, p))
    for k in range(3, p + 2):
        assert not np.any(d2_generic(A, phi_k(field, p, k)) != 0)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_closed_forms_match_structure_constants(p):
    field = make_field(p)
    A = make_m2(field, standard_lambda(field, 2))
    assert np.all(d1_closed_matrix(field, p) == d1_matrix(A))
    assert np.all(d2_closed_matrix(field, p) == d2_matrix(A))


def test_closed_forms_over_gf25():
    A = make_m2(GF25, random_lambda(GF25, 1))
    assert np.all(d1_closed_matrix(GF25, 5) == d1_matrix(A))
    assert np.all(d2_closed_matrix(GF25, 5) == d2_matrix(A))
    psi = GF25.random(5, np.random.default_rng(0))
    assert np.all(d1_closed(5, psi) == d1_generic(A, psi))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_d2_after_d1_vanishes(p):
    field = make_field(p)
    A = make_m2(field, zero_lambda(field))
    assert not np.any(d2_matrix(A) @ d1_matrix(A) != 0)


def test_grade_range():
    A = make_m2(GF7, zero_lambda(GF7))
    assert grade_range(A, 2) == range(3, 14)
    with pytest.raises(GradeOutOfRange):
        graded_matrix(A, 2, 2)
    with pytest.raises(GradeOutOfRange):
        graded_matrix(A, 2, 14)


def test_graded_kernels_p7():
    A = make_m2(GF7, zero_lambda(GF7))
    assert kernel_basis(graded_matrix(A, 2, 5), GF7).dim == 2
    assert kernel_basis(graded_matrix(A, 2, 7), GF7).dim == 2
    for k in range(10, 14):
        assert kernel_basis(graded_matrix(A, 2, k), GF7).dim == 0


def test_graded_kernel_p5_grade7():
    A = make_m2(GF5, zero_lambda(GF5))
    assert kernel_basis(graded_matrix(A, 2, 7), GF5).dim == 1


def test_top_grade_kernels_are_phi_k():
    p = 11
    A = make_m2(GF11, zero_lambda(GF11))
    for k in range(8, p + 2):
        block = graded_matrix(A, 2, k)
        kernel = kernel_basis(block, GF11)
        assert kernel.dim == 1
        columns = [idx for idx, (i, j) in enumerate(pair_basis(p)) if i + j == k]
        restricted_phi = phi_k(GF11, p, k)[columns]
        assert in_span(restricted_phi, span(GF11, kernel.vectors(), len(columns))) is not None


@pytest.mark.parametrize("p", [5, 7])
def test_crosscheck_report(p):
    field = make_field(p)
    report = crosscheck_differentials(make_m2(field, random_lambda(field, 2)))
    assert report.passed, report.failures()
    names = {check.name for check in report.checks}
    assert {"d1_closed_equals_generic", "d2_closed_equals_generic", "d2_d1_zero", "graded_kernel_sum"} <= names
