"""
Tests for restricted cochains: maps with the *-property, ind^1, ind^2 and the restricted differentials
"""
import itertools
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add src to path
sys.path.append(str(Path(__file__).parent / "src"))

from algebra import make_m2, random_lambda, standard_lambda, zero_lambda
from cochain import basis_cochain2, cochain1, dim_c2, evaluate_cochain2, pair_basis, phi_k, xi
from cohomology import h2
from exceptions import DimensionMismatch, FiliformError, IndexOutOfRange
from field import make_field
from restricted import (
    OmegaMap,
    RestrictedCochain2,
    bar_e,
    complex_property,
    d1_star,
    d1_star_matrix,
    d2_star,
    eval_omega,
    eval_omega_batch,
    frobenius_cochain,
    from_coordinates,
    ind1,
    ind2,
    is_restricted_cocycle,
    restricted_cochain,
    restricted_coordinates,
    star_correction,
    tilde,
)

GF5 = make_field(5)
GF7 = make_field(7)
GF11 = make_field(11)
GF25 = make_field(5, (3, 0))

A5 = make_m2(GF5, zero_lambda(GF5))
A7 = make_m2(GF7, zero_lambda(GF7))
A11 = make_m2(GF11, zero_lambda(GF11))


def _all_elements(field, n):
    for coeffs in itertools.product(range(field.order), repeat=n):
        yield field.array(coeffs)


def test_tilde_vanishes_on_basis():
    omega = tilde(A7, phi_k(GF7, 7, 8))
    for k in range(7):
        assert eval_omega(A7, omega, A7.basis(k)) == 0


@pytest.mark.parametrize("A", [A5, A7], ids=["p5", "p7"])
def test_tilde_e1p_on_e1_plus_e2(A):
    p = A.p
    omega = tilde(A, basis_cochain2(A.field, p, 1, p))
    g = A.basis(0) + A.basis(1)
    assert eval_omega(A, omega, g) == 1
    assert eval_omega(A, omega, g, method="enumerate") == 1


def test_tilde_e25_at_p5():
    omega = tilde(A5, basis_cochain2(GF5, 5, 2, 5))
    g = GF5([2, 1, 0, 0, 0])
    assert eval_omega(A5, omega, g) == 4
    assert eval_omega(A5, omega, g, method="enumerate") == 4


def test_tilde_phi6_exhaustive_p5():
    omega = tilde(A5, phi_k(GF5, 5, 6))
    for g in _all_elements(GF5, 5):
        assert eval_omega(A5, omega, g) == g[0] ** 4 * g[1]


def test_tilde_xi_exhaustive_p5():
    omega = tilde(A5, xi(GF5, 5))
    half = GF5(2) ** -1
    for g in _all_elements(GF5, 5):
        assert eval_omega(A5, omega, g) == half * g[0] ** 3 * g[1] ** 2


def test_tilde_xi_by_enumeration():
    omega = tilde(A5, xi(GF5, 5))
    rng = np.random.default_rng(9)
    for _ in range(300):
        g = A5.random_element(rng)
        assert eval_omega(A5, omega, g, method="enumerate") == GF5(3) * g[0] ** 3 * g[1] ** 2


@pytest.mark.parametrize("A", [A7, A11], ids=["p7", "p11"])
def test_tilde_phi_p_plus_1_sampled(A):
    p = A.p
    omega = tilde(A, phi_k(A.field, p, p + 1))
    rng = np.random.default_rng(p)
    for _ in range(4):
        elements = A.field.random((2500, p), rng)
        values = eval_omega_batch(A, omega, elements)
        assert (values == elements[:, 0] ** (p - 1) * elements[:, 1]).all()


@pytest.mark.parametrize("A", [A5, A7, make_m2(GF25, random_lambda(GF25, 1))], ids=["p5", "p7", "gf25"])
def test_batch_agrees_with_single_evaluation(A):
    rng = np.random.default_rng(11)
    omega = OmegaMap(A.field.random(dim_c2(A.dim), rng), A.random_element(rng))
    elements = A.field.random((12, A.dim), rng)
    values = eval_omega_batch(A, omega, elements)
    for row, value in zip(elements, values):
        assert eval_omega(A, omega, row) == value
    with pytest.raises(DimensionMismatch):
        eval_omega_batch(A, omega, elements[:, :-1])


def test_tilde_of_early_columns_vanishes():
    rng = np.random.default_rng(2)
    for A in (A5, A7):
        p = A.p
        elements = [A.random_element(rng) for _ in range(10)]
        for i, j in pair_basis(p):
            if j == p:
                continue
            omega = tilde(A, basis_cochain2(A.field, p, i, j))
            for g in elements:
                assert eval_omega(A, omega, g, method="enumerate") == 0
        for k in range(3, p + 1):
            omega = tilde(A, phi_k(A.field, p, k))
            assert all(eval_omega(A, omega, g) == 0 for g in elements)


@settings(deadline=None, max_examples=15)
@given(st.integers(0, 10_000))
def test_enumerate_and_collected_agree(seed):
    rng = np.random.default_rng(seed)
    phi = GF7.random(dim_c2(7), rng)
    values = A7.random_element(rng)
    omega = OmegaMap(phi, values)
    g = A7.random_element(rng)
    assert eval_omega(A7, omega, g, method="enumerate") == eval_omega(A7, omega, g, method="collected")


def _random_cocycle(A, rng):
    kernel = h2(A).kernel
    return A.field.random(kernel.dim, rng) @ kernel.basis


@settings(deadline=None, max_examples=15)
@given(st.integers(0, 10_000), st.sampled_from([A5, A7]))
def test_fold_order_does_not_matter_for_cocycles(seed, A):
    rng = np.random.default_rng(seed)
    omega = OmegaMap(_random_cocycle(A, rng), A.random_element(rng))
    g = A.random_element(rng)
    order = [int(i) for i in rng.permutation(A.dim)]
    assert eval_omega(A, omega, g) == eval_omega(A, omega, g, order=order)


@settings(deadline=None, max_examples=15)
@given(st.integers(0, 10_000), st.sampled_from([A5, A7]))
def test_star_property_additivity(seed, A):
    rng = np.random.default_rng(seed)
    omega = OmegaMap(_random_cocycle(A, rng), A.random_element(rng))
    g = A.random_element(rng)
    h = A.random_element(rng)
    lhs = eval_omega(A, omega, g + h)
    rhs = eval_omega(A, omega, g) + eval_omega(A, omega, h) + star_correction(A, omega.reference, g, h)
    assert lhs == rhs


def test_fold_order_matters_off_the_cocycles():
    omega = tilde(A5, basis_cochain2(GF5, 5, 3, 5))
    g = A5.basis(0) + A5.basis(1) + A5.basis(2)
    assert eval_omega(A5, omega, g) != eval_omega(A5, omega, g, order=[0, 2, 1, 3, 4])

    rng = np.random.default_rng(21)
    for A in (A5, A7):
        p = A.p
        for i in range(3, p):
            omega = tilde(A, basis_cochain2(A.field, p, i, p))
            differs = False
            for _ in range(60):
                g = A.random_element(rng)
                order = [int(k) for k in rng.permutation(p)]
                if eval_omega(A, omega, g) != eval_omega(A, omega, g, order=order):
                    differs = True
                    break
            assert differs, (p, i)


def test_scalar_rule_over_gf25():
    A = make_m2(GF25, random_lambda(GF25, 4))
    rng = np.random.default_rng(5)
    t = GF25.generator()
    assert t ** 5 != t
    for _ in range(10):
        omega = OmegaMap(GF25.random(dim_c2(5), rng), A.random_element(rng))
        g = A.random_element(rng)
        assert eval_omega(A, omega, t * g) == t ** 5 * eval_omega(A, omega, g)


def test_coordinates_determine_omega():
    rng = np.random.default_rng(8)
    phi = _random_cocycle(A5, rng)
    values = A5.random_element(rng)
    omega = OmegaMap(phi, values)
    tildes = [tilde(A5, basis_cochain2(GF5, 5, i, j)) for i, j in pair_basis(5)]
    for _ in range(20):
        g = A5.random_element(rng)
        expected = np.sum(values * g ** 5)
        for idx, part in enumerate(tildes):
            expected = expected + phi[idx] * eval_omega(A5, part, g)
        assert eval_omega(A5, omega, g) == expected


def test_bar_e():
    A = make_m2(GF7, zero_lambda(GF7))
    assert eval_omega(A, bar_e(GF7, 7, 1), GF7(2) * A.basis(0)) == 2
    rng = np.random.default_rng(0)
    g, h = A.random_element(rng), A.random_element(rng)
    omega = bar_e(GF7, 7, 3)
    assert eval_omega(A, omega, g + h) == eval_omega(A, omega, g) + eval_omega(A, omega, h)
    with pytest.raises(IndexOutOfRange):
        bar_e(GF7, 7, 0)
    with pytest.raises(IndexOutOfRange):
        bar_e(GF7, 7, 8)


def test_ind1_is_psi_of_p_power():
    for field in (GF7, GF25):
        p = field.characteristic
        A = make_m2(field, random_lambda(field, 6))
        rng = np.random.default_rng(1)
        for _ in range(5):
            psi = A.random_element(rng)
            g = A.random_element(rng)
            assert eval_omega(A, ind1(A, psi), g) == psi @ A.p_power(g)
        assert np.all(ind1(A, cochain1(field, p, p)).basis_values == A.lam)
        assert not np.any(ind1(A, cochain1(field, p, 1)).basis_values != 0)


def test_ind1_vanishes_for_zero_lambda():
    assert not np.any(ind1(A5, cochain1(GF5, 5, 5)).basis_values != 0)


def test_ind2_grid():
    lam = GF7([1, 2, 3, 4, 5, 6, 1])
    A = make_m2(GF7, lam)
    phi = GF7.random(dim_c2(7), np.random.default_rng(3))
    grid = ind2(A, phi).grid
    sigma_last = [phi[idx] for idx, (_, j) in enumerate(pair_basis(7)) if j == 7]
    for j in range(6):
        for i in range(7):
            assert grid[j, i] == lam[i] * sigma_last[j]
    assert not np.any(grid[6] != 0)


def test_ind2_evaluates_phi_against_p_power():
    A = make_m2(GF25, random_lambda(GF25, 2))
    rng = np.random.default_rng(6)
    phi = GF25.random(dim_c2(5), rng)
    for _ in range(5):
        g, h = A.random_element(rng), A.random_element(rng)
        assert ind2(A, phi).evaluate(g, h) == evaluate_cochain2(phi, g, A.p_power(h))


def test_ind2_zero_cases():
    assert ind2(A5, xi(GF5, 5)).is_zero()
    A = make_m2(GF5, standard_lambda(GF5, 1))
    assert ind2(A, basis_cochain2(GF5, 5, 1, 4)).is_zero()
    assert not ind2(A, xi(GF5, 5)).is_zero()


def test_restricted_cocycle_condition():
    A = make_m2(GF5, standard_lambda(GF5, 1))
    assert not is_restricted_cocycle(A, restricted_cochain(A, xi(GF5, 5)))
    assert is_restricted_cocycle(A, restricted_cochain(A, basis_cochain2(GF5, 5, 1, 4)))
    assert is_restricted_cocycle(A5, restricted_cochain(A5, xi(GF5, 5)))
    for k in range(1, 6):
        assert is_restricted_cocycle(A, frobenius_cochain(A, k))
    d2_part, ind_part = d2_star(A, restricted_cochain(A, basis_cochain2(GF5, 5, 1, 5)))
    assert np.any(d2_part != 0)
    assert not ind_part.is_zero()


def test_d1_star():
    A = make_m2(GF7, standard_lambda(GF7, 3))
    c = d1_star(A, cochain1(GF7, 7, 7))
    assert np.all(c.phi == phi_k(GF7, 7, 7))
    assert np.all(c.omega.basis_values == A.lam)
    psi = A.random_element(np.random.default_rng(4))
    assert np.all(d1_star_matrix(A) @ psi == restricted_coordinates(d1_star(A, psi)))


@pytest.mark.parametrize(
    "field, lam",
    [(GF5, "zero"), (GF5, "random"), (GF7, "random"), (GF25, "random")],
)
def test_complex_property(field, lam):
    vector = zero_lambda(field) if lam == "zero" else random_lambda(field, 3)
    report = complex_property(make_m2(field, vector))
    assert report.passed, report.failures()


def test_coordinates_roundtrip():
    rng = np.random.default_rng(10)
    coords = GF7.random(dim_c2(7) + 7, rng)
    c = from_coordinates(A7, coords)
    assert np.all(restricted_coordinates(c) == coords)
    assert np.all(c.coordinates() == coords)
    with pytest.raises(DimensionMismatch):
        from_coordinates(A7, coords[:-1])


def test_cochain_requires_matching_reference():
    phi = xi(GF5, 5)
    with pytest.raises(FiliformError):
        RestrictedCochain2(phi, OmegaMap(GF5.zeros(10), GF5.zeros(5)))


def test_unknown_method():
    g = A5.basis(0)
    with pytest.raises(ValueError):
        star_correction(A5, xi(GF5, 5), g, A5.basis(1), method="other")
    with pytest.raises(DimensionMismatch):
        eval_omega(A5, OmegaMap(xi(GF5, 5), GF5.zeros(4)), g)
