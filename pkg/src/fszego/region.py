"""The (lambda, mu) region where f_{t0} attains the convex-class lower bound.

D_rho is the set of real (lambda, mu) with

    1/3 - (3/4) mu^2 <= 1 - lambda <= 1/3 - mu/2,   2/3 < mu < rho.

The lambda-band bounds are closed and the mu bounds open.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .bounds import lower_K_band
from .errors import ParameterError

MU_MIN = 2 / 3


@dataclass(frozen=True)
class RegionSpec:
    rho: float
    lambda_range: tuple
    mu_range: tuple
    resolution: int

    def __post_init__(self):
        if not self.rho > MU_MIN:
            raise ParameterError(f"rho must exceed 2/3, got {self.rho}")
        if self.resolution < 2:
            raise ParameterError("resolution must be at least 2")
        for lo, hi in (self.lambda_range, self.mu_range):
            if not lo < hi:
                raise ParameterError(f"empty range [{lo}, {hi}]")

    @classmethod
    def default(cls, rho: float, resolution: int = 400, pad: float = 0.1) -> "RegionSpec":
        """Window holding the whole band for this rho, padded by ``pad`` of each span."""
        if not rho > MU_MIN:
            raise ParameterError(f"rho must exceed 2/3, got {rho}")
        lam_lo, lam_hi = band(MU_MIN)[0], band(rho)[1]
        mu_lo, mu_hi = MU_MIN, rho
        dl, dm = pad * (lam_hi - lam_lo), pad * (mu_hi - mu_lo)
        return cls(rho, (lam_lo - dl, lam_hi + dl), (max(mu_lo - dm, 0.0), mu_hi + dm), resolution)


def band(mu: float) -> tuple[float, float]:
    """Closed lambda interval of D_rho at a given mu (empty when lo > hi)."""
    return 2 / 3 + mu / 2, 2 / 3 + 0.75 * mu * mu


def band_width(mu: float) -> float:
    lo, hi = band(mu)
    return hi - lo


def in_D_rho(lam: float, mu: float, rho: float) -> bool:
    if not rho > MU_MIN:
        raise ParameterError(f"rho must exceed 2/3, got {rho}")
    return MU_MIN < mu < rho and lower_K_band(lam, mu)


@dataclass
class RegionGrid:
    spec: RegionSpec
    lambdas: np.ndarray
    mus: np.ndarray
    member: np.ndarray  # shape (len(mus), len(lambdas)), row-major with lambda fastest

    @property
    def member_count(self) -> int:
        return int(self.member.sum())

    @property
    def bounding_box(self):
        """(lambda_min, lambda_max, mu_min, mu_max) over member samples, or None."""
        if not self.member.any():
            return None
        rows, cols = np.nonzero(self.member)
        return (float(self.lambdas[cols].min()), float(self.lambdas[cols].max()),
                float(self.mus[rows].min()), float(self.mus[rows].max()))

    def samples(self):
        for i, mu in enumerate(self.mus):
            for j, lam in enumerate(self.lambdas):
                yield float(lam), float(mu), bool(self.member[i, j])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", "mu", "member"])
        for lam, mu, m in self.samples():
            w.writerow([f"{lam:.17g}", f"{mu:.17g}", int(m)])
        return buf.getvalue()


def grid_region(spec: RegionSpec) -> RegionGrid:
    lambdas = np.linspace(*spec.lambda_range, spec.resolution)
    mus = np.linspace(*spec.mu_range, spec.resolution)
    member = np.array([[in_D_rho(float(l), float(m), spec.rho) for l in lambdas] for m in mus], dtype=bool)
    return RegionGrid(spec, lambdas, mus, member)


def read_csv(text: str) -> list:
    rows = csv.DictReader(io.StringIO(text))
    return [(float(r["lambda"]), float(r["mu"]), r["member"] == "1") for r in rows]


# --- SVG ---------------------------------------------------------------------

SVG_W, SVG_H = 800, 600
_MARGIN = dict(left=80, right=30, top=30, bottom=70)
FILL = "#3a6fd8"


def _ticks(lo: float, hi: float, n: int = 6):
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def to_svg(grid: RegionGrid) -> str:
    """Self-contained SVG: one rect per horizontal run of member cells, plus axes."""
    left, top = _MARGIN["left"], _MARGIN["top"]
    pw = SVG_W - left - _MARGIN["right"]
    ph = SVG_H - top - _MARGIN["bottom"]
    nl, nm = len(grid.lambdas), len(grid.mus)
    cw, chh = pw / nl, ph / nm
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_W}" height="{SVG_H}" '
        f'viewBox="0 0 {SVG_W} {SVG_H}">',
        f'<rect x="0" y="0" width="{SVG_W}" height="{SVG_H}" fill="white"/>',
        f'<g fill="{FILL}" stroke="none" shape-rendering="crispEdges">',
    ]
    for i in range(nm):
        row = grid.member[i]
        y = top + ph - (i + 1) * chh
        j = 0
        while j < nl:
            if not row[j]:
                j += 1
                continue
            k = j
            while k < nl and row[k]:
                k += 1
            out.append(f'<rect x="{left + j * cw:.3f}" y="{y:.3f}" width="{(k - j) * cw:.3f}" '
                       f'height="{chh:.3f}"/>')
            j = k
    out.append("</g>")
    x0, y0 = left, top + ph
    out.append(f'<g stroke="black" stroke-width="1" fill="none">'
               f'<line x1="{x0}" y1="{y0}" x2="{x0 + pw}" y2="{y0}"/>'
               f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{top}"/></g>')
    out.append('<g font-family="sans-serif" font-size="12" fill="black">')
    (l_lo, l_hi), (m_lo, m_hi) = grid.spec.lambda_range, grid.spec.mu_range
    for v in _ticks(l_lo, l_hi):
        x = left + (v - l_lo) / (l_hi - l_lo) * pw
        out.append(f'<line x1="{x:.3f}" y1="{y0}" x2="{x:.3f}" y2="{y0 + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.3f}" y="{y0 + 20}" text-anchor="middle">{v:.3g}</text>')
    for v in _ticks(m_lo, m_hi):
        y = y0 - (v - m_lo) / (m_hi - m_lo) * ph
        out.append(f'<line x1="{x0 - 5}" y1="{y:.3f}" x2="{x0}" y2="{y:.3f}" stroke="black"/>')
        out.append(f'<text x="{x0 - 8}" y="{y + 4:.3f}" text-anchor="end">{v:.3g}</text>')
    out.append(f'<text x="{left + pw / 2}" y="{SVG_H - 20}" text-anchor="middle" font-size="16">λ</text>')
    out.append(f'<text x="25" y="{top + ph / 2}" text-anchor="middle" font-size="16">μ</text>')
    out.append(f'<text x="{left + pw / 2}" y="{top - 10}" text-anchor="middle">'
               f'D_rho, rho = {grid.spec.rho:.6g}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
