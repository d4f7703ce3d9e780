import math
from fractions import Fraction

import pytest

from wehrl_lab.domains import PRESETS, NotAdmissible
from wehrl_lab.selberg import (MethodUnsupported, NonIntegrable, SelbergSpec,
                               laguerre_constant_C, ordered_sector_quadrature,
                               selberg_closed, selberg_closed_hp,
                               selberg_numeric, verify_degree_integral)
from wehrl_lab.exactnum import PiScaledRational


def test_closed_form_rank_one_is_beta():
    # r = 1 reduces to the Beta integral B(b+1, gamma+1).
    assert selberg_closed(SelbergSpec(1, 0, 0, 2)) == Fraction(1, 3)
    assert selberg_closed(SelbergSpec(1, 0, 2, 3)) == Fraction(1, 60)


def test_closed_form_rank_two_values():
    assert selberg_closed(SelbergSpec(2, 1, 0, 0)) == Fraction(1, 3)
    v = selberg_closed(SelbergSpec(2, 2, 0, 1))
    assert isinstance(v, Fraction)


def test_closed_form_high_precision_agrees():
    spec = SelbergSpec(2, 3, 1, Fraction(5, 2))
    assert float(selberg_closed_hp(spec, dps=30)) \
        == pytest.approx(float(selberg_closed(spec)), rel=1e-12)


def test_zero_interaction_factorizes_into_beta_product():
    # a = 0 decouples the coordinates into r one-dimensional Beta integrals.
    for r in (2, 3):
        b, g = Fraction(1), Fraction(3, 2)
        beta = selberg_closed(SelbergSpec(1, 0, b, g))
        assert selberg_closed(SelbergSpec(r, 0, b, g)) == beta ** r


def test_non_integrable_exponents():
    with pytest.raises(NonIntegrable):
        SelbergSpec(2, 1, 0, Fraction(-3, 2))
    with pytest.raises(NonIntegrable):
        SelbergSpec(2, 1, -1, 0)


def test_gauss_jacobi_even_a_matches_closed_form():
    spec = SelbergSpec(2, 2, 0, 1)
    est = selberg_numeric(spec, "gauss_jacobi", 60)
    assert est.value == pytest.approx(float(selberg_closed(spec)), rel=1e-12)
    assert est.abs_err_bound < 1e-10


def test_gauss_jacobi_rejects_odd_a():
    with pytest.raises(MethodUnsupported):
        selberg_numeric(SelbergSpec(2, 1, 0, 0), "gauss_jacobi", 40)
    with pytest.raises(MethodUnsupported):
        selberg_numeric(SelbergSpec(2, 1, 0, 0), "simpson", 40)


def test_ordered_sector_handles_odd_a():
    for spec in (SelbergSpec(2, 1, 0, 0), SelbergSpec(2, 3, 0, Fraction(1, 2)),
                 SelbergSpec(3, 1, 0, 2)):
        got = ordered_sector_quadrature(spec, 90)
        assert got == pytest.approx(float(selberg_closed(spec)), rel=1e-11)


def test_monte_carlo_within_three_sigma_and_scaling():
    spec = SelbergSpec(2, 1, 0, 2)
    est = selberg_numeric(spec, "monte_carlo", 200_000, seed=11)
    truth = float(selberg_closed(spec))
    assert abs(est.value - truth) <= 3 * est.stderr
    est2 = selberg_numeric(spec, "monte_carlo", 400_000, seed=11)
    # doubling the budget shrinks the standard error by about sqrt(2)
    assert 1.3 <= est.stderr / est2.stderr <= 1.5


def test_monte_carlo_deterministic_in_seed():
    spec = SelbergSpec(2, 1, 0, 0)
    a = selberg_numeric(spec, "monte_carlo", 50_000, seed=3)
    b = selberg_numeric(spec, "monte_carlo", 50_000, seed=3)
    assert a.value == b.value and a.stderr == b.stderr


def test_laguerre_constant_values():
    assert laguerre_constant_C(PRESETS["disc"]) \
        == PiScaledRational(Fraction(1), 1)
    assert laguerre_constant_C(PRESETS["SU(2,1)"]) \
        == PiScaledRational(Fraction(1), 2)
    assert laguerre_constant_C(PRESETS["Sp(2,R)"]) \
        == PiScaledRational(Fraction(1), 3)


def test_laguerre_constant_consistency_with_degree():
    # 1/d_lambda = C * S(r, a, b, lambda - p) numerically.
    from wehrl_lab.degrees import scalar_formal_degree
    d = PRESETS["SU(2,2)"]
    lam = Fraction(6)
    S = float(selberg_closed(SelbergSpec(d.r, d.a, d.b, lam - d.p)))
    C = float(laguerre_constant_C(d))
    assert C * S == pytest.approx(1.0 / float(scalar_formal_degree(d, lam)),
                                  rel=1e-12)


def test_verify_degree_integral_quadrature():
    rep = verify_degree_integral(PRESETS["Sp(2,R)"], Fraction(9, 2))
    assert rep["deviation"] < 1e-10
    assert rep["method"] == "ordered_quadrature"
    rep = verify_degree_integral(PRESETS["SU(2,2)"], 5)
    assert rep["deviation"] < 1e-10
    assert rep["method"] == "gauss_jacobi"


def test_verify_degree_integral_monte_carlo_consistent():
    rep = verify_degree_integral(PRESETS["Sp(2,R)"], 4, budget=400_000,
                                 seed=5, method="monte_carlo")
    assert rep["deviation"] <= 3 * rep["stderr_product"] + 1e-12


def test_verify_degree_integral_inadmissible():
    with pytest.raises(NotAdmissible):
        verify_degree_integral(PRESETS["Sp(2,R)"], 2)
