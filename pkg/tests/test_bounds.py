import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import minimize_scalar

from fszego import bounds as bd
from fszego.bounds import FunctionClass, Side
from fszego.errors import DomainError, ParameterError
from fszego.families import Family, convex_alpha, koebe_rotation, lower_extremal, zero_a2
from fszego.functional import FunctionalParams as P, fekete_szego_gen

TOL = 1e-12


def families_of(report):
    return {e.family for e in report.extremal}


# --- upper bound, univalent class --------------------------------------------

def test_upper_S_flat_branch():
    r = bd.upper_S(P(1, 0.5))
    assert r.value == 1 and r.attainable and families_of(r) == {Family.ZERO_A2}
    assert fekete_szego_gen(zero_a2(1).pair, P(1, 0.5)) == pytest.approx(1, abs=TOL)


def test_upper_S_koebe_branch():
    r = bd.upper_S(P(2, 0.4))
    assert r.value == pytest.approx(4.2, abs=TOL)
    assert r.attainable and families_of(r) == {Family.KOEBE_ROTATION}
    assert fekete_szego_gen(koebe_rotation(0).pair, P(2, 0.4)) == pytest.approx(4.2, abs=TOL)


def test_upper_S_complex_lambda_not_attainable():
    r = bd.upper_S(P(1 + 0.2j, 0.1))
    assert r.value == pytest.approx(1.6, abs=TOL)
    assert not r.attainable


def test_upper_S_both_families_on_boundary():
    r = bd.upper_S(P(1.25, 0.5))
    assert r.value == 1 and families_of(r) == {Family.ZERO_A2, Family.KOEBE_ROTATION}


def test_mu_must_be_positive():
    for f in (bd.upper_S, bd.lower_S, bd.upper_K, bd.lower_K, bd.remark2_lower):
        with pytest.raises(ParameterError):
            f(P(0.5, 0))


# --- lower bound, univalent class --------------------------------------------

def test_lower_S_examples():
    r = bd.lower_S(P(0, 1))
    assert r.value == pytest.approx(-1, abs=TOL) and r.attainable
    assert families_of(r) == {Family.LOWER_EXTREMAL}
    assert fekete_szego_gen(lower_extremal(0, 1).pair, P(0, 1)) == pytest.approx(-1, abs=TOL)

    r = bd.lower_S(P(0.75, 1))
    assert r.value == -2 and r.attainable and families_of(r) == {Family.KOEBE_ROTATION}

    r = bd.lower_S(P(1, 0.3))
    assert r.value == pytest.approx(-0.6, abs=TOL) and not r.attainable


def test_lower_S_attainability_conditions():
    # branch one needs lam <= 3/4 and lam < 1 - mu^2/4
    assert bd.lower_S(P(0.5, 0.5)).attainable
    assert not bd.lower_S(P(0.8, 0.1)).attainable  # lam > 3/4
    assert not bd.lower_S(P(-1 + 0.1j, 0.5)).attainable  # non-real lam
    # branch two needs lam = 3/4 and mu >= 1
    assert not bd.lower_S(P(0.9, 1)).attainable
    assert bd.lower_S(P(0.75, 3)).attainable


def test_lower_S_boundary_assignment():
    # |1 - lam| = mu^2/4 belongs to the -2mu branch
    mu = 1.5
    r = bd.lower_S(P(1 - mu * mu / 4, mu))
    assert r.regime == "|1-lam| <= mu^2/4" and r.value == -2 * mu


# --- convex class --------------------------------------------------------------

def test_upper_K_examples():
    r = bd.upper_K(P(1, 0.2))
    assert r.value == pytest.approx(1 / 3, abs=TOL) and r.extremal[0].fixed["alpha"] == 0
    r = bd.upper_K(P(3, 0.5))
    assert r.value == pytest.approx(1.5, abs=TOL) and r.extremal[0].fixed["alpha"] == 1
    assert fekete_szego_gen(convex_alpha(1).pair, P(3, 0.5)) == pytest.approx(1.5, abs=TOL)
    mu = 0.4
    d = 1 / 3 + mu
    assert bd.upper_K_f0(d, mu) == pytest.approx(bd.upper_K_f1(d, mu), abs=TOL)


def test_lower_K_interior_example():
    lam, mu = Fraction(5, 4), Fraction(1)
    t0 = mu / (2 * (abs(1 - lam) + Fraction(1, 3)))
    assert t0 == Fraction(6, 7)
    # exact oracle: F(f_{6/7}) at lam = 5/4, mu = 1
    a2, a3 = t0, (2 * t0**2 + 1) / 3
    exact = abs(a3 - lam * a2**2) - mu * a2
    assert exact == Fraction(-16, 21)
    r = bd.lower_K(P(1.25, 1))
    assert r.value == pytest.approx(float(exact), abs=TOL)
    assert r.attainable and r.extremal[0].fixed["alpha"] == pytest.approx(6 / 7, abs=TOL)


def test_lower_K_second_branch_and_trivial():
    r = bd.lower_K(P(1, 1))
    assert r.value == -1 and r.attainable and r.extremal[0].fixed["alpha"] == 1
    r = bd.lower_K(P(2, 0.5))
    assert r.regime == "trivial" and r.value == -0.5 and not r.attainable
    assert bd.lower_K(P(1, 0.5)).attainable


def test_lower_K_boundary_continuity():
    for mu in (0.7, 1.0, 2.5, 9.0):
        d = mu / 2 - 1 / 3
        assert bd.lower_K_interior(d, mu) == pytest.approx(-mu / 2 - 1 / 3, abs=TOL)
        assert bd.lower_K_f1(d, mu) == pytest.approx(-mu / 2 - 1 / 3, abs=TOL)


def test_lower_K_interior_branch_outside_band_not_attainable():
    # lam < 1 real: interior branch active, band condition fails
    r = bd.lower_K(P(0, 1))
    assert r.regime == "|1-lam| >= mu/2 - 1/3" and not r.attainable


# --- remarks -------------------------------------------------------------------

def test_remark1_upper():
    assert bd.remark1_upper(-0.25, 0.5) == 3
    assert bd.remark1_upper(0.5, 1.0) == 1
    assert bd.remark1_upper(0.3, 0.4) == pytest.approx(1 + 2 * math.exp(-2), abs=TOL)
    with pytest.raises(DomainError):
        bd.remark1_upper(0.9, 0.4)
    with pytest.raises(DomainError):
        bd.remark1_upper(0.1, 0)


def test_remark2_lower():
    assert bd.remark2_lower(P(0, 1)) == pytest.approx(-1, abs=TOL)
    assert bd.remark2_lower(P(1, 0.7)) == pytest.approx(-1.4, abs=TOL)
    assert bd.remark2_lower(P(0.9, 0.1)) == pytest.approx(-0.2, abs=TOL)


# --- envelopes -------------------------------------------------------------------

def test_envelopes():
    p = P(2 + 1j, 0.7)
    d = abs(1 - p.lam)
    assert bd.envelope_phi(0, p) == 1
    assert bd.envelope_phi(2, p) == pytest.approx(4 * d - 2 * 0.7 + 1, abs=TOL)
    assert bd.envelope_phi(1.5, P(1, 0.7)) == pytest.approx(1 - 0.7 * 1.5, abs=TOL)
    assert bd.envelope_psi1(0, p) == pytest.approx(1 / 3, abs=TOL)
    assert bd.envelope_psi1(1, p) == pytest.approx(d - 0.7, abs=TOL)
    assert bd.envelope_psi1(0.5, P(4 / 3, 1)) == pytest.approx(-1 / 6, abs=TOL)
    assert bd.envelope_psi2(0, p) == pytest.approx(-1 / 3, abs=TOL)
    assert bd.envelope_psi2(1, p) == pytest.approx(d - 0.7, abs=TOL)
    assert bd.envelope_psi2(6 / 7, P(1.25, 1)) == pytest.approx(-16 / 21, abs=TOL)
    with pytest.raises(DomainError):
        bd.envelope_phi(2.1, p)
    with pytest.raises(DomainError):
        bd.envelope_psi1(-0.1, p)
    with pytest.raises(DomainError):
        bd.envelope_psi2(1.5, p)


# --- properties -------------------------------------------------------------------

rng = np.random.default_rng(20261015)


def random_params(n):
    lam = rng.uniform(-4, 6, n) + 1j * np.where(rng.random(n) < 0.5, 0, rng.uniform(-3, 3, n))
    mu = rng.uniform(1e-3, 6, n)
    return [P(complex(l), float(m)) for l, m in zip(lam, mu)]


def test_upper_S_is_max_of_phi_endpoints():
    for p in random_params(10_000):
        if p.lam == 1:
            continue
        expected = max(bd.envelope_phi(0, p), bd.envelope_phi(2, p))
        assert abs(bd.upper_S(p).value - expected) <= TOL


def test_upper_K_is_max_of_psi1_endpoints():
    for p in random_params(5_000):
        expected = max(bd.envelope_psi1(0, p), bd.envelope_psi1(1, p))
        assert abs(bd.upper_K(p).value - expected) <= TOL


def test_lower_K_matches_numerical_minimum_of_psi2():
    # oracle: scipy's bounded scalar minimizer, independent of the closed form
    for p in random_params(1_000):
        if p.mu <= 2 / 3:
            continue
        res = minimize_scalar(lambda t: bd.envelope_psi2(t, p), bounds=(0, 1), method="bounded",
                              options={"xatol": 1e-12})
        brute = min(res.fun, bd.envelope_psi2(0, p), bd.envelope_psi2(1, p))
        assert abs(bd.lower_K(p).value - brute) <= 1e-9


def test_remark2_dominates_lower_S():
    for p in random_params(5_000):
        r2 = bd.remark2_lower(p)
        assert r2 >= bd.lower_S(p).value - TOL
        d, mu = p.dist, p.mu
        if d >= mu * mu / 4 and d > 0:
            assert r2 == pytest.approx(max(-2 * mu, -mu / math.sqrt(d)), abs=TOL)


def test_remark1_dominates_upper_S():
    for lam in np.linspace(-2, 0.99, 60):
        for mu in np.linspace(0.01, 6, 60):
            if 0 <= lam + mu / 2 < 1:
                assert bd.remark1_upper(lam, mu) < bd.upper_S(P(lam, mu)).value


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(1e-3, 10), st.floats(-7, 7))
def test_values_depend_on_lambda_only_through_distance(re, im, mu, theta):
    lam = complex(re, im)
    turned = 1 + cmath.exp(1j * theta) * (lam - 1)
    for f in bd.BOUNDS.values():
        assert f(P(lam, mu)).value == pytest.approx(f(P(turned, mu)).value, abs=1e-9)


@given(st.floats(1e-3, 10))
def test_upper_S_continuous_at_boundary(mu):
    d = mu / 2
    assert bd.upper_S_constant(d, mu) == pytest.approx(bd.upper_S_koebe(d, mu), abs=TOL)


def test_bound_dispatch():
    assert bd.bound(P(2, 0.4), "upper", "S") == bd.upper_S(P(2, 0.4))
    assert bd.bound(P(2, 0.4), Side.LOWER, FunctionClass.K) == bd.lower_K(P(2, 0.4))
