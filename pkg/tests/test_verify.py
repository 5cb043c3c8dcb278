import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fszego import bounds as bd
from fszego import verify as vf
from fszego.bounds import BoundReport, FunctionClass, Side
from fszego.errors import NotApplicableError, ParameterError
from fszego.families import koebe_rotation
from fszego.functional import FunctionalParams as P


def small_config(**kw):
    return vf.ScanConfig([2.0], [0.4], **kw)


def test_scan_config_validation():
    with pytest.raises(ParameterError):
        vf.ScanConfig([], [1.0])
    with pytest.raises(ParameterError):
        vf.ScanConfig([1.0], [1.0], family_resolution=1)
    with pytest.raises(ParameterError):
        vf.ScanConfig([1.0], [1.0], tolerance=0)
    with pytest.raises(ParameterError):
        vf.ScanConfig([1.0], [0.0])
    assert small_config().tolerance == 1e-9


def test_scan_report_violations_iff_over_tolerance():
    r = vf.ScanReport("x", tolerance=1e-9)
    r.record(0.5, {"i": 0})
    r.record(-5e-10, {"i": 1})
    assert r.passed and r.min_gap == -5e-10 and r.witness == {"i": 1}
    r.record(-2e-9, {"i": 2})
    assert not r.passed and r.max_violation == 2e-9
    strict = vf.ScanReport("s", tolerance=0.0)
    strict.record(0.0, {}, strict=True)
    assert not strict.passed


def test_consistency_single_point_koebe_only():
    k = koebe_rotation(0.0)
    sample = vf.FamilySample(np.array([k.a2]), np.array([k.a3]), [{"family": "KoebeRotation"}])
    r = vf.check_bound_consistency(small_config(), "upper", "S", sample)
    assert r.passed and r.checked == 1
    assert r.min_gap == pytest.approx(0, abs=1e-12)


def test_consistency_default_families_small_grid():
    cfg = vf.ScanConfig(vf.default_lambda_grid(8), [0.3, 1.0, 2.5], family_resolution=8)
    for side in Side:
        for cls in FunctionClass:
            r = vf.check_bound_consistency(cfg, side, cls)
            assert r.passed, r.violations[:3]
            assert r.min_gap >= -1e-9


def test_consistency_catches_a_false_bound(monkeypatch):
    # shrink upper_S by 1 and the sweep must flag the Koebe points
    real = bd.upper_S
    fake = lambda p: BoundReport(real(p).value - 1, Side.UPPER, FunctionClass.S, "fake", False, ())
    monkeypatch.setitem(bd.BOUNDS, (Side.UPPER, FunctionClass.S), fake)
    r = vf.check_bound_consistency(small_config(family_resolution=4), "upper", "S")
    assert not r.passed and r.max_violation == pytest.approx(1, abs=1e-9)


def test_golden_min():
    x, fx = vf.golden_min(lambda t: (t - 0.3) ** 2, 0, 1)
    assert x == pytest.approx(0.3, abs=1e-6) and fx <= 1e-12
    x, fx = vf.grid_then_golden(lambda t: math.cos(t), 0, 2 * math.pi, 16, periodic=True)
    assert fx == pytest.approx(-1, abs=1e-12)


@pytest.mark.parametrize("side,cls,lam,mu", vf.DESIGNATED_POINTS)
def test_sharpness_at_designated_points(side, cls, lam, mu):
    p = P(lam, mu)
    rep = bd.bound(p, side, cls)
    assert rep.attainable
    assert vf.sharpness_gap(p, rep, small_config()) <= 1e-9


def test_sharpness_lower_K_argmin_is_six_sevenths():
    p = P(1.25, 1)
    found = vf.sharpness_search(p, bd.lower_K(p), small_config())
    assert found["family"] == "ConvexAlpha"
    assert found["alpha"] == pytest.approx(6 / 7, abs=1e-6)


def test_sharpness_complex_lambda_has_positive_gap():
    p = P(1 + 0.2j, 0.1)
    rep = bd.upper_S(p)
    assert not rep.attainable
    assert vf.sharpness_gap(p, rep, small_config()) > 1e-3


def test_sharpness_without_extremal_raises():
    rep = BoundReport(1.0, Side.UPPER, FunctionClass.S, "none", False, ())
    with pytest.raises(NotApplicableError):
        vf.sharpness_gap(P(1, 1), rep, small_config())


def test_check_sharpness_default_grid():
    cfg = vf.ScanConfig(vf.default_lambda_grid(10), [0.2, 1.0, 3.0], family_resolution=16)
    r = vf.check_sharpness(cfg)
    assert r.passed and r.checked >= len(vf.DESIGNATED_POINTS)
    assert r.extras["skipped_not_attainable"] > 0


def test_remark1_dominance_examples():
    r = vf.remark1_dominance([0.0], [0.5])
    assert r.passed and r.checked == 1
    assert r.min_gap == pytest.approx(4 - (1 + 2 * math.exp(-2 / 3)), abs=1e-12)
    # near lam + mu/2 = 1 the classical bound tends to 1 and upper_S stays above it
    r = vf.remark1_dominance([0.5 - 1e-9], [1.0])
    assert r.passed and r.min_gap > 0


def test_remark1_dominance_skips_outside_region():
    r = vf.remark1_dominance([0.9, -2.0, 0.1], [0.5])
    assert r.checked == 1 and r.extras["skipped_outside_region"] == 2


def test_aux_inequality():
    r = vf.aux_inequality_check(1.0 + 1e-12, 2)
    assert r.witness["t"] == 1.0 and r.min_gap == pytest.approx(1, abs=1e-12)
    r = vf.aux_inequality_check(2.0, 2)
    assert r.passed and r.checked == 2
    r = vf.aux_inequality_check(50, 10_000)
    assert r.passed and r.witness["t"] == 1.0 and r.min_gap == pytest.approx(1, abs=1e-12)
    with pytest.raises(ParameterError):
        vf.aux_inequality_check(0.5, 10)


def test_boundary_continuity():
    mus = [0.1, 0.5, 1.0, 2.0, 7.5]
    r = vf.boundary_continuity_check(mus)
    assert r.passed and r.max_violation <= 1e-12
    for j in r.extras["lower_S_jumps"]:
        assert j["jump"] == pytest.approx(abs(2 * j["mu"] - 2), abs=1e-12)
    assert r.extras["lower_S_jumps"][2]["jump"] == 0


def test_envelope_cross_check_examples():
    cfg = vf.ScanConfig([2.0, 1.25, 1.0], [0.4, 1.0])
    r = vf.envelope_cross_check(cfg, [P(2, 0.4), P(1.25, 1), P(1, 1)])
    assert r.passed and r.max_violation <= 1e-9
    assert r.extras["skipped_lower_K_mu_le_2_3"] == 1


@given(st.floats(-3, 5), st.floats(-3, 3), st.floats(0.01, 6))
def test_envelope_agrees_at_random_points(re, im, mu):
    cfg = vf.ScanConfig([complex(re, im)], [mu])
    assert vf.envelope_cross_check(cfg).passed


def test_report_to_dict():
    d = vf.aux_inequality_check(3, 10).to_dict()
    assert d["passed"] and d["violation_count"] == 0 and d["witness"]["t"] == 1.0
