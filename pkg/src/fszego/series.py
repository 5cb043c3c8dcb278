"""Truncated power series with complex (or exact rational) coefficients.

Coefficients are stored as a plain tuple, index k holding the coefficient of
z**k. All arithmetic is written with ``+``, ``*`` and ``/`` only, so series
built from :class:`fractions.Fraction` inputs stay exact, while float/complex
inputs give ordinary double precision results.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Number, Rational
from typing import Iterable, Sequence

from .errors import ReciprocalUndefinedError, UnsupportedBranchError

DEFAULT_ORDER = 16


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], order: int | None = None) -> "TruncatedSeries":
        """Build a series, zero-padding (or truncating) to ``order`` if given."""
        c = list(coeffs)
        if order is not None:
            c = (c + [0] * (order + 1))[: order + 1]
        return cls(tuple(c))

    def is_normalized(self, tol: float = 0.0) -> bool:
        return self.order >= 1 and abs(self.coeffs[0]) <= tol and abs(self.coeffs[1] - 1) <= tol

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries((0 * self.coeffs[0],))
        return TruncatedSeries(tuple(k * self.coeffs[k] for k in range(1, self.order + 1)))

    def __getitem__(self, k: int):
        return ts_coeff(self, k)

    def __add__(self, other):
        return ts_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return ts_add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return ts_add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, other)
        return TruncatedSeries(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, ts_recip(other))
        return TruncatedSeries(tuple(c / other for c in self.coeffs))

    def __rtruediv__(self, other):
        return ts_mul(_coerce(other, self.order), ts_recip(self))


def _coerce(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return constant(x, order)


def _div(x, y):
    """x / y, exact when both are rational (ints stay exact as Fractions)."""
    if isinstance(x, Rational) and isinstance(y, Rational):
        return Fraction(x) / y
    return x / y


def zero(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries((0,) * (order + 1))


def constant(c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries((c,) + (0,) * order)


def unit(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return constant(1, order)


def variable(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The identity map z, truncated at ``order`` (order >= 1)."""
    return TruncatedSeries.from_coeffs([0, 1], order)


def polynomial(coeffs: Sequence[Number], order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs(coeffs, order)


def ts_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[k] + b.coeffs[k] for k in range(n + 1)))


def ts_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the smaller operand order."""
    n = min(a.order, b.order)
    ca, cb = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = ca[0] * cb[k]
        for j in range(1, k + 1):
            s = s + ca[j] * cb[k - j]
        out.append(s)
    return TruncatedSeries(tuple(out))


def ts_recip(a: TruncatedSeries) -> TruncatedSeries:
    c0 = a.coeffs[0]
    if c0 == 0:
        raise ReciprocalUndefinedError("series reciprocal needs a nonzero constant term")
    inv = _div(1, c0)
    r = [inv]
    for n in range(1, a.order + 1):
        s = a.coeffs[1] * r[n - 1]
        for k in range(2, n + 1):
            s = s + a.coeffs[k] * r[n - k]
        r.append(-inv * s)
    return TruncatedSeries(tuple(r))


def ts_integrate(a: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative vanishing at 0; the result has order ``a.order + 1``."""
    return TruncatedSeries((0 * a.coeffs[0],) + tuple(_div(c, k + 1) for k, c in enumerate(a.coeffs)))


def ts_binomial_pow(a: TruncatedSeries, exponent) -> TruncatedSeries:
    """Principal power ``a**exponent`` for a series with constant term 1.

    Uses the recurrence that follows from a * (a^p)' = p * a' * a^p:

        n b_n = sum_{k=1..n} (p k - (n - k)) a_k b_{n-k}

    which only multiplies and divides, so rational inputs give rational output.
    """
    if a.coeffs[0] != 1:
        raise UnsupportedBranchError("binomial power is anchored at constant term 1")
    c = a.coeffs
    b = [c[0]]
    for n in range(1, a.order + 1):
        s = 0 * c[0]
        for k in range(1, n + 1):
            s = s + (exponent * k - (n - k)) * c[k] * b[n - k]
        b.append(_div(s, n))
    return TruncatedSeries(tuple(b))


def ts_coeff(a: TruncatedSeries, k: int):
    if not 0 <= k <= a.order:
        raise IndexError(f"coefficient index {k} outside 0..{a.order}")
    return a.coeffs[k]
