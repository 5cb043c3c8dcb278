"""Numerical certification of the bounds on explicit families.

Exhaustive search over the univalent class is impossible, so every check runs
on the parametric families the bounds are built from. Violations are
collected into a :class:`ScanReport`; nothing here raises on a failed check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import bounds as bd
from .bounds import BoundReport, Extremal, FunctionClass, Side
from .errors import NotApplicableError, ParameterError
from .families import Family, build
from .functional import CoeffPair, FunctionalParams, fekete_szego_gen

DEFAULT_TOLERANCE = 1e-9
DEFAULT_T_RESOLUTION = 10_000
INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass
class ScanConfig:
    lambda_grid: list
    mu_grid: list
    family_resolution: int = 32
    tolerance: float = DEFAULT_TOLERANCE
    t_resolution: int = DEFAULT_T_RESOLUTION

    def __post_init__(self):
        self.lambda_grid = [complex(x) for x in self.lambda_grid]
        self.mu_grid = [float(x) for x in self.mu_grid]
        if not self.lambda_grid or not self.mu_grid:
            raise ParameterError("scan grids must be non-empty")
        if self.family_resolution < 2:
            raise ParameterError("family_resolution must be at least 2")
        if not self.tolerance > 0:
            raise ParameterError("tolerance must be positive")
        if any(not m > 0 for m in self.mu_grid):
            raise ParameterError("mu grid entries must be positive")

    def params(self):
        for mu in self.mu_grid:
            for lam in self.lambda_grid:
                yield FunctionalParams(lam, mu)


@dataclass
class ScanReport:
    """Outcome of one certification sweep.

    Every recorded point carries a slack: bound minus value for upper
    bounds, value minus bound for lower ones, and minus the disagreement for
    checks that two quantities coincide. ``min_gap`` is the smallest slack
    and ``max_violation`` the largest negative slack (floored at 0). A point
    is a violation when its slack is below ``-tolerance``; strict checks
    instead flag any slack <= 0.
    """

    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    max_violation: float = 0.0
    min_gap: float = math.inf
    witness: dict | None = None
    tolerance: float = DEFAULT_TOLERANCE
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, gap: float, where: dict, strict: bool = False) -> None:
        self.checked += 1
        if gap < self.min_gap:
            self.min_gap = gap
            self.witness = where
        self.max_violation = max(self.max_violation, -gap)
        if gap <= 0 if strict else -gap > self.tolerance:
            self.violations.append({**where, "excess": -gap})

    def to_dict(self, max_violations: int = 20) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violation_count": len(self.violations),
            "violations": self.violations[:max_violations],
            "max_violation": self.max_violation,
            "min_gap": None if math.isinf(self.min_gap) else self.min_gap,
            "witness": self.witness,
            "tolerance": self.tolerance,
            "extras": self.extras,
        }


# --- grids -------------------------------------------------------------------

def default_lambda_grid(steps: int = 40) -> list:
    """Real points on [-3, 5] plus rings of non-real points around lambda = 1."""
    real = np.linspace(-3.0, 5.0, steps)
    radii = np.linspace(0.1, 4.0, max(steps // 4, 2))
    angles = np.array([1, 2, 3, 5, 6, 7]) * np.pi / 4
    ring = (1 + radii[:, None] * np.exp(1j * angles[None, :])).ravel()
    return [complex(x) for x in real] + [complex(x) for x in ring]


def default_mu_grid(steps: int = 13) -> list:
    base = set(np.geomspace(0.05, 10.0, steps).tolist()) | {0.5, 1.0, 2.0}
    return sorted(base)


def default_config(lambda_steps: int = 40, mu_steps: int = 13, family_resolution: int = 32,
                   tolerance: float = DEFAULT_TOLERANCE) -> ScanConfig:
    return ScanConfig(default_lambda_grid(lambda_steps), default_mu_grid(mu_steps),
                      family_resolution, tolerance)


def random_params(rng: np.random.Generator, n: int, mu_max: float = 4.0) -> list:
    """Random (lambda, mu) with lambda in a box around 1, about half on the real axis."""
    re = rng.uniform(-3.0, 5.0, n)
    im = np.where(rng.random(n) < 0.5, 0.0, rng.uniform(-3.0, 3.0, n))
    mu = rng.uniform(0.01, mu_max, n)
    return [FunctionalParams(complex(a, b), float(m)) for a, b, m in zip(re, im, mu)]


@dataclass
class FamilySample:
    """Coefficient arrays for a batch of family members plus their parameters."""

    a2: np.ndarray
    a3: np.ndarray
    labels: list

    def __len__(self):
        return len(self.a2)

    def __add__(self, other: "FamilySample") -> "FamilySample":
        return FamilySample(np.concatenate([self.a2, other.a2]), np.concatenate([self.a3, other.a3]),
                            self.labels + other.labels)


def _angles(n: int) -> np.ndarray:
    return np.linspace(0.0, 2 * np.pi, n, endpoint=False)


def _from_members(members) -> FamilySample:
    return FamilySample(np.array([complex(m.a2) for m in members]),
                        np.array([complex(m.a3) for m in members]),
                        [{"family": m.family.value, **{k: _jsonable(v) for k, v in m.params.items()}}
                         for m in members])


def _jsonable(v):
    return {"re": v.real, "im": v.imag} if isinstance(v, complex) else float(v)


def sample_convex(resolution: int) -> FamilySample:
    """f_alpha on an alpha grid, each at ``resolution`` rotations."""
    members = [build(Family.CONVEX_ALPHA, alpha=float(a)) for a in np.linspace(0.0, 1.0, resolution)]
    out = []
    for m in members:
        for th in _angles(resolution):
            p = m.pair.rotated(th)
            out.append((p, {"family": m.family.value, "alpha": m.params["alpha"], "theta": float(th)}))
    return FamilySample(np.array([p.a2 for p, _ in out]), np.array([p.a3 for p, _ in out]),
                        [lab for _, lab in out])


def sample_univalent(resolution: int) -> FamilySample:
    """Koebe rotations, odd maps z/(1+zeta^2 z^2), the two-parameter family on a
    polar b-grid filling |b| <= 2, and the convex family (a subclass)."""
    th = _angles(resolution)
    koebe = [build(Family.KOEBE_ROTATION, theta=float(t)) for t in th]
    zetas = np.exp(1j * th)
    odd = [build(Family.ZERO_A2, zeta=complex(z)) for z in zetas]
    bs = (np.linspace(0.0, 2.0, resolution)[:, None] * np.exp(1j * th)[None, :]).ravel()
    two = [build(Family.TWO_PARAM, b=complex(b), zeta=complex(z)) for b in bs for z in zetas]
    return _from_members(koebe + odd + two) + sample_convex(max(resolution // 2, 2))


# --- consistency -------------------------------------------------------------

def check_bound_consistency(cfg: ScanConfig, side: Side | str, function_class: FunctionClass | str,
                            sample: FamilySample | None = None) -> ScanReport:
    side, function_class = Side(side), FunctionClass(function_class)
    if sample is None:
        if function_class is FunctionClass.S:
            sample = sample_univalent(cfg.family_resolution)
        else:
            sample = sample_convex(cfg.family_resolution)
    pair = CoeffPair(sample.a2, sample.a3)
    report = ScanReport(f"consistency:{side.value}_{function_class.value}", tolerance=cfg.tolerance)
    for params in cfg.params():
        b = bd.bound(params, side, function_class).value
        F = fekete_szego_gen(pair, params)
        gaps = (b - F) if side is Side.UPPER else (F - b)
        i = int(np.argmin(gaps))
        where = lambda j: {"lambda": _jsonable(params.lam), "mu": params.mu, "member": sample.labels[j],
                           "F": float(F[j]), "bound": b}
        if gaps[i] < report.min_gap:
            report.min_gap = float(gaps[i])
            report.witness = where(i)
        report.max_violation = max(report.max_violation, float(-gaps[i]))
        for j in np.flatnonzero(-gaps > cfg.tolerance):
            report.violations.append({**where(int(j)), "excess": float(-gaps[j])})
        report.checked += len(sample)
    report.extras["family_samples"] = len(sample)
    report.extras["parameter_points"] = len(cfg.lambda_grid) * len(cfg.mu_grid)
    return report


# --- sharpness ---------------------------------------------------------------

def golden_min(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-13,
               max_iter: int = 200) -> tuple[float, float]:
    """Golden-section search for a minimum of a unimodal ``f`` on [lo, hi]."""
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def grid_then_golden(f: Callable[[float], float], lo: float, hi: float, n: int,
                     periodic: bool = False) -> tuple[float, float]:
    """Minimize ``f`` on a uniform grid, then refine inside the neighbouring cells."""
    xs = np.linspace(lo, hi, n, endpoint=not periodic)
    vals = [f(float(x)) for x in xs]
    i = int(np.argmin(vals))
    h = (hi - lo) / (n if periodic else n - 1)
    a, b = xs[i] - h, xs[i] + h
    if not periodic:
        a, b = max(a, lo), min(b, hi)
    x, fx = golden_min(f, float(a), float(b))
    # keep the grid optimum if refinement drifted to a worse point
    if vals[i] <= fx:
        return float(xs[i]), vals[i]
    return x, fx


def _family_search(ext: Extremal, params: FunctionalParams, n: int):
    """(objective builder, lo, hi, periodic) for the family's continuous parameter."""
    fam = ext.family
    if fam is Family.KOEBE_ROTATION:
        return (lambda x: build(fam, theta=x)), 0.0, 2 * math.pi, True, "theta"
    if fam is Family.ZERO_A2:
        return (lambda x: build(fam, zeta=complex(math.cos(x), math.sin(x)))), 0.0, 2 * math.pi, True, "zeta_arg"
    if fam is Family.LOWER_EXTREMAL:
        lam = ext.fixed.get("lam", params.lam)
        return ((lambda x: build(fam, lam=lam, zeta=complex(math.cos(x), math.sin(x)))),
                0.0, 2 * math.pi, True, "zeta_arg")
    if fam is Family.CONVEX_ALPHA:
        return (lambda x: build(fam, alpha=min(max(x, 0.0), 1.0))), 0.0, 1.0, False, "alpha"
    raise NotApplicableError(f"no sharpness search for family {fam.value}")


def sharpness_search(params: FunctionalParams, report: BoundReport, cfg: ScanConfig) -> dict:
    """Smallest |bound - F| over each family named in the report, with the argmin."""
    if not report.extremal:
        raise NotApplicableError("bound report names no extremal family")
    best = None
    for ext in report.extremal:
        make, lo, hi, periodic, name = _family_search(ext, params, cfg.family_resolution)
        gap_at = lambda x: abs(report.value - fekete_szego_gen(make(x).pair, params))
        x, g = grid_then_golden(gap_at, lo, hi, cfg.family_resolution, periodic)
        if best is None or g < best["gap"]:
            best = {"gap": float(g), "family": ext.family.value, name: x}
    return best


def sharpness_gap(params: FunctionalParams, report: BoundReport, cfg: ScanConfig) -> float:
    return sharpness_search(params, report, cfg)["gap"]


# Attainable points singled out in the theorems: (side, class, lambda, mu).
DESIGNATED_POINTS = [
    (Side.UPPER, FunctionClass.S, 1.0, 0.5),
    (Side.UPPER, FunctionClass.S, 2.0, 0.4),
    (Side.LOWER, FunctionClass.S, 0.0, 1.0),
    (Side.LOWER, FunctionClass.S, 0.75, 1.0),
    (Side.UPPER, FunctionClass.K, 1.0, 0.2),
    (Side.UPPER, FunctionClass.K, 3.0, 0.5),
    (Side.LOWER, FunctionClass.K, 1.25, 1.0),
]


def check_sharpness(cfg: ScanConfig, points=None) -> ScanReport:
    """Gap at every attainable (side, class, lambda, mu) among ``points``.

    Default points are the designated ones plus every grid point of ``cfg``
    whose report is attainable. Positive gaps at non-attainable points are
    tallied in ``extras`` but not treated as violations.
    """
    if points is None:
        points = list(DESIGNATED_POINTS)
        for params in cfg.params():
            for side, cls in bd.BOUNDS:
                points.append((side, cls, params.lam, params.mu))
    report = ScanReport("sharpness", tolerance=cfg.tolerance)
    not_attainable = 0
    for side, cls, lam, mu in points:
        params = FunctionalParams(lam, mu)
        rep = bd.bound(params, side, cls)
        if not rep.attainable:
            not_attainable += 1
            continue
        found = sharpness_search(params, rep, cfg)
        report.record(-found["gap"], {"side": Side(side).value, "class": FunctionClass(cls).value,
                                      "lambda": _jsonable(params.lam), "mu": mu, "bound": rep.value,
                                      "argmin": found})
    report.extras["skipped_not_attainable"] = not_attainable
    report.extras["note"] = "max_violation is the largest sharpness gap over attainable points"
    return report


# --- remarks and auxiliary inequality ---------------------------------------

def remark1_dominance(lambda_grid: Sequence[float], mu_grid: Sequence[float]) -> ScanReport:
    """The folded classical bound strictly beats 4|1-lam| - 2mu + 1 where it applies."""
    report = ScanReport("dominance", tolerance=0.0)
    skipped = 0
    for mu in mu_grid:
        for lam in lambda_grid:
            lam, mu = float(lam), float(mu)
            if not (mu > 0 and 0 <= lam + mu / 2 < 1):
                skipped += 1
                continue
            upper = bd.upper_S(FunctionalParams(lam, mu))
            margin = upper.value - bd.remark1_upper(lam, mu)
            report.record(margin, {"lambda": lam, "mu": mu, "upper_S": upper.value}, strict=True)
    report.extras["skipped_outside_region"] = skipped
    return report


def aux_inequality_check(t_max: float = 50.0, resolution: int = 10_000) -> ScanReport:
    """2 e^{2t-2} - t > 0 on a grid over [1, t_max]."""
    if t_max < 1 or resolution < 2:
        raise ParameterError("need t_max >= 1 and resolution >= 2")
    t = np.linspace(1.0, t_max, resolution)
    vals = 2 * np.exp(2 * t - 2) - t
    report = ScanReport("aux", tolerance=0.0)
    report.checked = resolution
    i = int(np.argmin(vals))
    report.min_gap = float(vals[i])
    report.witness = {"t": float(t[i]), "value": float(vals[i])}
    report.max_violation = max(0.0, float(-vals[i]))
    for j in np.flatnonzero(vals <= 0):
        report.violations.append({"t": float(t[j]), "value": float(vals[j])})
    return report


def boundary_continuity_check(mu_grid: Sequence[float], tolerance: float = 1e-12) -> ScanReport:
    """Both branch formulas agree on the branch boundaries (lower_S jump is recorded only)."""
    report = ScanReport("boundary", tolerance=tolerance)
    jumps = []
    for mu in map(float, mu_grid):
        if not mu > 0:
            raise ParameterError("mu grid entries must be positive")
        cases = [("upper_S", mu / 2, bd.upper_S_constant, bd.upper_S_koebe),
                 ("upper_K", bd.THIRD + mu, bd.upper_K_f0, bd.upper_K_f1)]
        if mu / 2 - bd.THIRD > 0:
            cases.append(("lower_K", mu / 2 - bd.THIRD, bd.lower_K_interior, bd.lower_K_f1))
        for name, d, f, g in cases:
            a, b = f(d, mu), g(d, mu)
            report.record(-abs(a - b),
                          {"bound": name, "mu": mu, "dist": d, "branch_one": a, "branch_two": b})
        d = mu * mu / 4
        j = abs(bd.lower_S_sqrt(d, mu) - bd.lower_S_flat(d, mu))
        jumps.append({"mu": mu, "jump": j, "expected": abs(2 * mu - 2)})
    report.extras["lower_S_jumps"] = jumps
    return report


# --- envelope cross-check ----------------------------------------------------

def _grid_extremum(f: Callable, lo: float, hi: float, n: int, maximize: bool) -> float:
    """Brute-force extremum of a vectorized ``f`` over n grid points, then
    golden refinement around the best grid point."""
    sign = -1.0 if maximize else 1.0
    t = np.linspace(lo, hi, n)
    v = sign * f(t)
    i = int(np.argmin(v))
    h = (hi - lo) / (n - 1)
    a, b = max(lo, t[i] - h), min(hi, t[i] + h)
    _, fv = golden_min(lambda x: sign * f(x), float(a), float(b))
    return sign * min(float(v[i]), fv)


def envelope_cross_check(cfg: ScanConfig, param_list=None) -> ScanReport:
    """Direct extremization of the quadratic envelopes against the piecewise bounds."""
    report = ScanReport("envelope", tolerance=cfg.tolerance)
    n = max(cfg.t_resolution, 10_000)
    skipped_lower_K = 0
    for params in (param_list if param_list is not None else cfg.params()):
        checks = [
            ("upper_S", bd.upper_S(params).value,
             _grid_extremum(lambda t: bd.envelope_phi(t, params), 0.0, 2.0, n, True)),
            ("upper_K", bd.upper_K(params).value,
             _grid_extremum(lambda t: bd.envelope_psi1(t, params), 0.0, 1.0, n, True)),
        ]
        if params.mu > 2 / 3:
            checks.append(("lower_K", bd.lower_K(params).value,
                           _grid_extremum(lambda t: bd.envelope_psi2(t, params), 0.0, 1.0, n, False)))
        else:
            skipped_lower_K += 1
        for name, closed, brute in checks:
            report.record(-abs(closed - brute),
                          {"bound": name, "lambda": _jsonable(params.lam), "mu": params.mu,
                           "closed_form": closed, "brute_force": brute})
    report.extras["skipped_lower_K_mu_le_2_3"] = skipped_lower_K
    report.extras["t_resolution"] = n
    return report
