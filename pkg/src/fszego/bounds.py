"""Sharp upper and lower bounds of the functional, piecewise in (lambda, mu).

Each bound function returns a :class:`BoundReport` carrying the value, a label
for the active branch, whether equality is attained in the class, and the
family on which equality occurs (or, when it is not attained, the family that
the equality analysis singles out as the closest candidate).

The quadratic envelopes ``envelope_phi`` / ``envelope_psi1`` /
``envelope_psi2`` in t = |a2| are exposed for cross-checking the piecewise
formulas against direct extremization.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ParameterError
from .families import Family
from .functional import FunctionalParams

THIRD = 1.0 / 3.0
# t0 within this of 1 sits on the boundary shared with the f_1 branch
T0_BOUNDARY_TOL = 1e-12


class Side(str, enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


class FunctionClass(str, enum.Enum):
    S = "S"
    K = "K"


@dataclass(frozen=True)
class Extremal:
    """A family on which a bound is (or is expected to be) attained.

    ``fixed`` holds parameters pinned by the bound (for instance alpha = t0);
    ``free`` names parameters that the bound value does not depend on, such
    as rotation angles.
    """

    family: Family
    fixed: dict = field(default_factory=dict)
    free: tuple = ()

    def describe(self) -> str:
        parts = [self.family.value]
        parts += [f"{k}={_fmt(v)}" for k, v in self.fixed.items()]
        if self.free:
            parts.append("any " + ", ".join(self.free))
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {"family": self.family.value, "fixed": dict(self.fixed), "free": list(self.free)}


def _fmt(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.17g}{v.imag:+.17g}j" if v.imag else f"{v.real:.17g}"
    return f"{v:.17g}" if isinstance(v, float) else str(v)


@dataclass(frozen=True)
class BoundReport:
    value: float
    side: Side
    function_class: FunctionClass
    regime: str
    attainable: bool
    extremal: tuple = ()

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"bound value must be finite, got {self.value}")
        if self.attainable and not self.extremal:
            raise ValueError("an attainable bound needs an extremal descriptor")

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "side": self.side.value,
            "class": self.function_class.value,
            "regime": self.regime,
            "attainable": self.attainable,
            "extremal": [e.to_dict() for e in self.extremal],
            "extremal_recipe": "; ".join(e.describe() for e in self.extremal),
        }


def _require_mu(params: FunctionalParams) -> None:
    if not params.mu > 0:
        raise ParameterError(f"mu must be positive, got {params.mu}")


# Branch formulas as functions of d = |1 - lambda| and mu. The piecewise
# bounds pick one of each pair; the boundary checks evaluate both.

def upper_S_constant(d, mu):
    return 1.0


def upper_S_koebe(d, mu):
    return 4 * d - 2 * mu + 1


def lower_S_sqrt(d, mu):
    return -mu / math.sqrt(d)


def lower_S_flat(d, mu):
    return -2 * mu


def upper_K_f0(d, mu):
    return THIRD


def upper_K_f1(d, mu):
    return d - mu


def lower_K_interior(d, mu):
    return -THIRD - mu * mu / (4 * (d + THIRD))


def lower_K_f1(d, mu):
    return d - mu


KOEBE = Extremal(Family.KOEBE_ROTATION, free=("theta",))
ZERO_A2 = Extremal(Family.ZERO_A2, free=("zeta",))
F1 = Extremal(Family.CONVEX_ALPHA, {"alpha": 1.0}, free=("rotation",))
F0 = Extremal(Family.CONVEX_ALPHA, {"alpha": 0.0}, free=("rotation",))


def upper_S(params: FunctionalParams) -> BoundReport:
    _require_mu(params)
    d, mu, lam = params.dist, params.mu, params.lam
    koebe_ok = params.is_real and lam.real >= 1 + mu / 2
    if d <= mu / 2:
        ext = (ZERO_A2, KOEBE) if koebe_ok else (ZERO_A2,)
        return BoundReport(upper_S_constant(d, mu), Side.UPPER, FunctionClass.S,
                           "|1-lam| <= mu/2", True, ext)
    return BoundReport(upper_S_koebe(d, mu), Side.UPPER, FunctionClass.S,
                       "|1-lam| > mu/2", koebe_ok, (KOEBE,))


def lower_S(params: FunctionalParams) -> BoundReport:
    _require_mu(params)
    d, mu, lam = params.dist, params.mu, params.lam
    if d == 0:
        # only the universal estimate -mu|a2| >= -2mu applies
        return BoundReport(lower_S_flat(d, mu), Side.LOWER, FunctionClass.S,
                           "lam = 1", False, (KOEBE,))
    if d > mu * mu / 4:
        attained = params.is_real and lam.real <= 0.75 and lam.real < 1 - mu * mu / 4
        ext = (Extremal(Family.LOWER_EXTREMAL, {"lam": lam}, free=("zeta",)),) if d >= 0.25 else ()
        return BoundReport(lower_S_sqrt(d, mu), Side.LOWER, FunctionClass.S,
                           "|1-lam| > mu^2/4", attained, ext)
    attained = lam == 0.75 and mu >= 1
    return BoundReport(lower_S_flat(d, mu), Side.LOWER, FunctionClass.S,
                       "|1-lam| <= mu^2/4", attained, (KOEBE,))


def upper_K(params: FunctionalParams) -> BoundReport:
    _require_mu(params)
    d, mu = params.dist, params.mu
    if d <= THIRD + mu:
        return BoundReport(upper_K_f0(d, mu), Side.UPPER, FunctionClass.K,
                           "|1-lam| <= 1/3 + mu", True, (F0,))
    return BoundReport(upper_K_f1(d, mu), Side.UPPER, FunctionClass.K,
                       "|1-lam| > 1/3 + mu", True, (F1,))


def lower_K_t0(d: float, mu: float) -> float:
    """Minimizer of psi2 over t >= 0."""
    return mu / (2 * (d + THIRD))


def lower_K_band(lam: float, mu: float) -> bool:
    """Real-lambda conditions under which f_{t0} attains the interior-branch bound."""
    one_minus = 1 - lam
    return THIRD - 0.75 * mu * mu <= one_minus <= THIRD - mu / 2 and mu > 2 / 3


def lower_K(params: FunctionalParams) -> BoundReport:
    _require_mu(params)
    d, mu, lam = params.dist, params.mu, params.lam
    if mu <= 2 / 3:
        # outside the theorem's hypothesis; |a2| <= 1 still gives F >= -mu
        return BoundReport(-mu, Side.LOWER, FunctionClass.K, "trivial", lam == 1, (F1,))
    if d >= mu / 2 - THIRD:
        t0 = lower_K_t0(d, mu)
        if math.isclose(t0, 1.0, rel_tol=0, abs_tol=T0_BOUNDARY_TOL):
            attained, ext = True, (F1,)
        else:
            attained = params.is_real and lower_K_band(lam.real, mu)
            ext = (Extremal(Family.CONVEX_ALPHA, {"alpha": t0}, free=("rotation",)),)
        return BoundReport(lower_K_interior(d, mu), Side.LOWER, FunctionClass.K,
                           "|1-lam| >= mu/2 - 1/3", attained, ext)
    return BoundReport(lower_K_f1(d, mu), Side.LOWER, FunctionClass.K,
                       "|1-lam| < mu/2 - 1/3", True, (F1,))


BOUNDS = {
    (Side.UPPER, FunctionClass.S): upper_S,
    (Side.LOWER, FunctionClass.S): lower_S,
    (Side.UPPER, FunctionClass.K): upper_K,
    (Side.LOWER, FunctionClass.K): lower_K,
}


def bound(params: FunctionalParams, side: Side | str, function_class: FunctionClass | str) -> BoundReport:
    return BOUNDS[Side(side), FunctionClass(function_class)](params)


def remark1_upper(lam: float, mu: float) -> float:
    """Upper bound obtained by folding mu|a2| into the classical inequality.

    Valid for real lambda with 0 <= lambda + mu/2 <= 1.
    """
    if not mu > 0:
        raise DomainError(f"mu must be positive, got {mu}")
    s = lam + mu / 2
    if not 0 <= s <= 1:
        raise DomainError(f"needs 0 <= lambda + mu/2 <= 1, got {s}")
    if s == 1:
        return 1.0
    return 1 + 2 * math.exp(-2 * s / (1 - s))


def remark2_lower(params: FunctionalParams) -> float:
    """Best of -2mu and -mu/sqrt|1-lam| wherever the latter is valid."""
    _require_mu(params)
    d, mu = params.dist, params.mu
    if d > 0 and d >= max(mu * mu / 4, 0.25):
        return lower_S_sqrt(d, mu)
    return lower_S_flat(d, mu)


def _check_t(t, hi: float):
    arr = np.asarray(t, dtype=float)
    if arr.size and (np.min(arr) < 0 or np.max(arr) > hi):
        raise DomainError(f"t must lie in [0, {hi}]")
    return arr


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def envelope_phi(t, params: FunctionalParams):
    """|1-lam| t^2 - mu t + 1 on t in [0, 2]; accepts scalars or arrays."""
    t = _check_t(t, 2.0)
    return _scalar_or_array(params.dist * t * t - params.mu * t + 1)


def envelope_psi1(t, params: FunctionalParams):
    t = _check_t(t, 1.0)
    return _scalar_or_array((params.dist - THIRD) * t * t - params.mu * t + THIRD)


def envelope_psi2(t, params: FunctionalParams):
    t = _check_t(t, 1.0)
    return _scalar_or_array((params.dist + THIRD) * t * t - params.mu * t - THIRD)
