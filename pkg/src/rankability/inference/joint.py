"""Pooled posterior of ``p`` over several independent observation matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from ..core.types import SlaterSpectrum
from ..exceptions import DomainError, InvalidArgumentError
from .posterior import (
    BRACKET_EPS,
    DEFAULT_GRID_POINTS,
    ROOT_TOL,
    ModeStatus,
    PdfGrid,
    _is_flat,
    _log_phi_closed,
    dlog_phi,
    log_phi,
    sigma,
)
from .quadrature import integrate


@dataclass(frozen=True)
class JointPosterior:
    grid: PdfGrid
    mode: float
    mode_status: ModeStatus
    mean: float


def _curvature_at_half(spectra) -> float:
    # phi_l'(0.5) = 0, so (log prod phi_l)'' at 0.5 is sum phi_l''/phi_l
    return sum(sigma(s) * np.exp(-log_phi(s, 0.5)) for s in spectra if s.t > 0)


def joint_posterior(spectra: Sequence[SlaterSpectrum], n_points: int = DEFAULT_GRID_POINTS,
                    ) -> JointPosterior:
    """Posterior proportional to ``prod_l phi(p | W_l)``.

    The density on the grid is normalized by the trapezoidal rule on that
    grid. The mode is the grid argmax refined by Brent's method on the summed
    derivative of ``log phi_l``; the mean uses adaptive Simpson quadrature.
    """
    spectra = list(spectra)
    if not spectra:
        raise InvalidArgumentError("joint_posterior needs at least one spectrum")
    if n_points < 3:
        raise DomainError("joint_posterior needs at least 3 grid points")
    p = np.linspace(0.5, 1.0, n_points)
    lp = sum(_log_phi_closed(s, p) for s in spectra)
    top = float(np.max(lp))
    density = np.exp(lp - top)
    density /= np.trapezoid(density, p) if hasattr(np, "trapezoid") else np.trapz(density, p)
    grid = PdfGrid(p, density, lp)

    def unnorm(x):
        return np.exp(sum(_log_phi_closed(s, x) for s in spectra) - top)

    mass = integrate(unnorm, 0.5, 1.0)
    mean = integrate(lambda x: x * unnorm(x), 0.5, 1.0) / mass

    if _is_flat(lp):
        return JointPosterior(grid, 0.5, ModeStatus.FLAT, mean)

    def slope(x):
        return sum(dlog_phi(s, x) for s in spectra)

    i = int(np.argmax(lp))
    if i == n_points - 1:
        if slope(1.0 - BRACKET_EPS) >= 0:
            return JointPosterior(grid, 1.0, ModeStatus.AT_ONE, mean)
        a, b = p[i - 1], 1.0 - BRACKET_EPS
    elif i == 0:
        if _curvature_at_half(spectra) <= 0:
            return JointPosterior(grid, 0.5, ModeStatus.AT_HALF, mean)
        a, b = 0.5 + BRACKET_EPS, p[1]
    else:
        a, b = p[i - 1], p[i + 1]
    if slope(a) > 0 > slope(b):
        return JointPosterior(grid, float(brentq(slope, a, b, xtol=ROOT_TOL)), ModeStatus.INTERIOR, mean)
    if i == 0:
        return JointPosterior(grid, 0.5, ModeStatus.AT_HALF, mean)
    return JointPosterior(grid, float(p[i]), ModeStatus.INTERIOR, mean)
