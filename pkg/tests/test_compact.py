import math

import numpy as np
import pytest
import sympy as sp

from wehrl_lab.compact import (CartanProjector, GridTooCoarse, HaarGrid,
                               Su2Irrep, TensorState, cartan_mass_exact,
                               cartan_projection, casimir_tensor_check,
                               group_element, haar_moment, haar_moment_closed,
                               random_unit_vector, reduction_consistency,
                               translate_fit_distance, translate_vector,
                               wehrl_compact_check, wehrl_integral_numeric)


def test_irrep_relations():
    rep = Su2Irrep(3)
    Jp, Jm, J3 = rep.raising_matrix(), rep.lowering_matrix(), rep.j3_matrix()
    assert np.allclose(Jp @ Jm - Jm @ Jp, 2 * J3)
    assert np.allclose(J3 @ Jp - Jp @ J3, Jp)
    assert rep.dim == 4 and rep.weight(0) == 3 and rep.weight(3) == -3


def test_group_element_unitary():
    U = group_element(4, 0.7, 1.2, -2.1)
    assert np.allclose(U.conj().T @ U, np.eye(5), atol=1e-12)


def test_cartan_projection_ranks_and_projector_axioms():
    P = cartan_projection(2, 1)
    M = P.matrix()
    assert P.rank == 3
    assert np.allclose(M, M.conj().T)
    assert np.allclose(M @ M, M, atol=1e-13)
    # n=2, m=1 top component is the symmetrizer on C^2 (x) C^2
    swap = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            swap[2 * j + i, 2 * i + j] = 1
    assert np.allclose(M, (np.eye(4) + swap) / 2)
    assert cartan_projection(3, 1).rank == 4


def test_cartan_mass_example_two_thirds():
    v = np.array([1.0, 0.0, 1.0]) / math.sqrt(2)
    mass = cartan_projection(2, 2).mass(TensorState.pure_power(v, 2))
    assert mass == pytest.approx(2 / 3, abs=1e-13)
    exact = cartan_mass_exact([sp.sqrt(2) / 2, 0, sp.sqrt(2) / 2], 2, 2)
    assert exact == sp.Rational(2, 3)


def test_casimir_identity_on_translates_only():
    top = casimir_tensor_check([1, 0, 0, 0], 3)
    assert top.equality and top.residual < 1e-13
    assert top.casimir_constant == pytest.approx(top.casimir_expected)
    moved = casimir_tensor_check(translate_vector(3, 1.0, 0.4, 2.2), 3)
    assert moved.residual < 1e-12
    mixed = casimir_tensor_check(np.array([1, 0, 1]) / math.sqrt(2), 2)
    assert not mixed.equality
    assert mixed.top_mass == pytest.approx(2 / 3)


def test_wehrl_compact_schur_case():
    rep = wehrl_compact_check([1, 0], 1, 2)
    assert rep.integral_exact == pytest.approx(1 / 3, abs=1e-14)
    assert rep.integral_numeric == pytest.approx(1 / 3, abs=1e-10)


def test_wehrl_compact_equality_orbit_and_m1_transitivity():
    t = translate_vector(4, 0.3, 0.8, -1.0)
    rep = wehrl_compact_check(t, 4, 2)
    assert abs(rep.slack) < 1e-10
    assert translate_fit_distance(t, 4) < 1e-6
    # m = 1: every unit vector is a translate of the top vector.
    rng = np.random.default_rng(2)
    for _ in range(5):
        v = random_unit_vector(1, rng)
        r = wehrl_compact_check(v, 1, 3)
        assert abs(r.slack) < 1e-10


def test_route_agreement_random():
    rng = np.random.default_rng(5)
    for m in (2, 3):
        for n in (2, 3):
            v = random_unit_vector(m, rng)
            r = wehrl_compact_check(v, m, n)
            assert r.slack >= -1e-10
            assert abs(r.integral_numeric - r.integral_exact) < 1e-8


def test_reduction_consistency():
    rng = np.random.default_rng(9)
    for m in (1, 2, 3):
        v = random_unit_vector(m, rng)
        assert reduction_consistency(v, m, 3) < 1e-12


def test_haar_moments_closed_form():
    grid = HaarGrid(12)
    for p in range(5):
        for q in range(5):
            assert haar_moment(p, q, grid) \
                == pytest.approx(float(haar_moment_closed(p, q)), abs=1e-13)


def test_grid_too_coarse():
    with pytest.raises(GridTooCoarse):
        haar_moment(4, 4, HaarGrid(3))
    with pytest.raises(GridTooCoarse):
        wehrl_integral_numeric([1, 0, 0], 2, 3, HaarGrid(2))


def test_unit_vector_required():
    with pytest.raises(ValueError):
        wehrl_compact_check([1.0, 1.0], 1, 2)
