"""Explicit extremal functions and their second and third Taylor coefficients.

Every constructor stores the closed-form (a2, a3). :func:`expand` rebuilds the
Taylor series from the defining formula with the series algebra, so the two
routes can be checked against each other.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

from . import series as ts
from .errors import NotUnivalentError, ParameterError, UndefinedFamilyError
from .functional import CoeffPair

UNIT_TOL = 1e-12


class Family(str, enum.Enum):
    KOEBE_ROTATION = "KoebeRotation"
    TWO_PARAM = "TwoParam"
    ZERO_A2 = "ZeroA2"
    LOWER_EXTREMAL = "LowerExtremal"
    CONVEX_ALPHA = "ConvexAlpha"


@dataclass(frozen=True)
class FamilyMember:
    family: Family
    params: dict = field(compare=True)
    a2: complex
    a3: complex

    @property
    def pair(self) -> CoeffPair:
        return CoeffPair(self.a2, self.a3)


def _check_unit(zeta: complex) -> complex:
    zeta = complex(zeta)
    if abs(abs(zeta) - 1) > UNIT_TOL:
        raise ParameterError(f"zeta must have unit modulus, |zeta| = {abs(zeta)!r}")
    return zeta


def koebe_rotation(theta: float) -> FamilyMember:
    """k_theta(z) = z / (1 - e^{i theta} z)^2."""
    w = cmath.exp(1j * theta)
    return FamilyMember(Family.KOEBE_ROTATION, {"theta": theta}, 2 * w, 3 * w * w)


def two_param(b: complex, zeta: complex) -> FamilyMember:
    """z / (1 - b zeta z + zeta^2 z^2), the equality family of |a3 - a2^2| <= 1."""
    zeta = _check_unit(zeta)
    if abs(b) > 2:
        raise NotUnivalentError(f"|b| = {abs(b)!r} > 2 puts a pole inside the disk")
    return FamilyMember(Family.TWO_PARAM, {"b": b, "zeta": zeta}, b * zeta, (b * b - 1) * zeta * zeta)


def zero_a2(zeta: complex) -> FamilyMember:
    """z / (1 + zeta^2 z^2)."""
    zeta = _check_unit(zeta)
    return FamilyMember(Family.ZERO_A2, {"zeta": zeta}, 0j, -zeta * zeta)


def lower_extremal(lam: complex, zeta: complex) -> FamilyMember:
    """The two-parameter map with b = 1/sqrt|1 - lam|."""
    zeta = _check_unit(zeta)
    dist = abs(1 - complex(lam))
    if dist == 0:
        raise UndefinedFamilyError("lower extremal family is undefined at lambda = 1")
    if dist < 0.25:
        raise NotUnivalentError(f"|1 - lambda| = {dist!r} < 1/4 gives b > 2")
    base = two_param(1 / math.sqrt(dist), zeta)
    return FamilyMember(Family.LOWER_EXTREMAL, {"lam": complex(lam), "zeta": zeta}, base.a2, base.a3)


def convex_alpha(alpha) -> FamilyMember:
    """f_alpha = integral of ((1+t)/(1-t))^alpha / (1 - t^2), 0 <= alpha <= 1.

    ``alpha`` may be a Fraction, in which case the coefficients are exact.
    """
    if not 0 <= alpha <= 1:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha}")
    return FamilyMember(Family.CONVEX_ALPHA, {"alpha": alpha}, alpha, (2 * alpha * alpha + 1) / 3)


def _quotient_by(denominator_coeffs, order: int) -> ts.TruncatedSeries:
    """z / p(z) for a polynomial p with p(0) = 1."""
    return ts.variable(order) * ts.ts_recip(ts.polynomial(denominator_coeffs, order))


def expand(member: FamilyMember, order: int = ts.DEFAULT_ORDER) -> ts.TruncatedSeries:
    """Taylor series of ``member`` up to z**order, computed from its defining formula."""
    if order < 3:
        raise ParameterError("expansion order must be at least 3")
    p = member.params
    fam = member.family
    if fam is Family.KOEBE_ROTATION:
        w = cmath.exp(1j * p["theta"])
        root = ts.polynomial([1, -w], order)
        return ts.variable(order) * ts.ts_recip(root * root)
    if fam is Family.TWO_PARAM:
        b, zeta = p["b"], p["zeta"]
        return _quotient_by([1, -b * zeta, zeta * zeta], order)
    if fam is Family.ZERO_A2:
        zeta = p["zeta"]
        return _quotient_by([1, 0, zeta * zeta], order)
    if fam is Family.LOWER_EXTREMAL:
        b = 1 / math.sqrt(abs(1 - p["lam"]))
        zeta = p["zeta"]
        return _quotient_by([1, -b * zeta, zeta * zeta], order)
    if fam is Family.CONVEX_ALPHA:
        n = order - 1
        ratio = ts.polynomial([1, 1], n) * ts.ts_recip(ts.polynomial([1, -1], n))
        integrand = ts.ts_binomial_pow(ratio, p["alpha"]) * ts.ts_recip(ts.polynomial([1, 0, -1], n))
        return ts.ts_integrate(integrand)
    raise ParameterError(f"unknown family {fam!r}")


def rotate(member: FamilyMember, theta: float) -> CoeffPair:
    return member.pair.rotated(theta)


def build(family: Family | str, **params) -> FamilyMember:
    """Construct a member from a family tag and keyword parameters."""
    fam = Family(family)
    if fam is Family.KOEBE_ROTATION:
        return koebe_rotation(params["theta"])
    if fam is Family.TWO_PARAM:
        return two_param(params["b"], params["zeta"])
    if fam is Family.ZERO_A2:
        return zero_a2(params["zeta"])
    if fam is Family.LOWER_EXTREMAL:
        return lower_extremal(params["lam"], params["zeta"])
    return convex_alpha(params["alpha"])
