"""The generalized Fekete-Szego functional and the coefficient-lemma quantities."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError


@dataclass(frozen=True)
class CoeffPair:
    a2: complex
    a3: complex

    def rotated(self, theta: float) -> "CoeffPair":
        """Coefficients of exp(-i theta) f(exp(i theta) z)."""
        w = complex(math.cos(theta), math.sin(theta))
        return CoeffPair(w * self.a2, w * w * self.a3)


@dataclass(frozen=True)
class FunctionalParams:
    lam: complex
    mu: float

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "mu", float(self.mu))
        if not (math.isfinite(self.mu) and math.isfinite(abs(self.lam))):
            raise ParameterError("lambda and mu must be finite")

    @property
    def dist(self) -> float:
        """|1 - lambda|, the only way lambda enters the bound values."""
        return abs(1 - self.lam)

    @property
    def is_real(self) -> bool:
        return self.lam.imag == 0


def _require_positive_mu(params: FunctionalParams) -> None:
    if not params.mu > 0:
        raise ParameterError(f"mu must be positive, got {params.mu}")


def fekete_szego_gen(pair: CoeffPair, params: FunctionalParams) -> float:
    """|a3 - lam a2^2| - mu |a2|."""
    _require_positive_mu(params)
    return abs(pair.a3 - params.lam * pair.a2 * pair.a2) - params.mu * abs(pair.a2)


def lemma1_residual(pair: CoeffPair) -> float:
    return abs(pair.a3 - pair.a2 * pair.a2)


def trimble_slack(pair: CoeffPair) -> float:
    """(1 - |a2|^2)/3 - |a3 - a2^2|; nonnegative on convex maps, zero on f_alpha."""
    return (1 - abs(pair.a2) ** 2) / 3 - abs(pair.a3 - pair.a2 * pair.a2)


def classical_fs_bound(lam: float) -> float:
    """Sharp bound on |a3 - lam a2^2| over the univalent class, 0 <= lam <= 1."""
    if not 0 <= lam <= 1:
        raise DomainError(f"classical bound is stated for 0 <= lambda <= 1, got {lam}")
    if lam == 1:
        return 1.0
    return 1 + 2 * math.exp(-2 * lam / (1 - lam))
