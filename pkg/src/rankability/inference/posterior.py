"""Posterior of the Bernoulli consistency parameter given a Slater spectrum.

With a uniform prior on ``[0.5, 1]`` the posterior is proportional to::

    phi(p) = sum_t a_t * p**(T - t) * (1 - p)**t

All evaluation happens in the log domain: ``a_t`` can be as large as ``M!``
and ``p**T`` underflows long before realistic ``T``.
"""

from __future__ import annotations

import enum
import logging
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln, logsumexp, xlogy

from ..core.types import SlaterSpectrum
from ..exceptions import DomainError, InternalAssertionError
from .betainc import reg_inc_beta

log = logging.getLogger(__name__)

GRID_CHECK_POINTS = 10_000
DEFAULT_GRID_POINTS = 2001
ROOT_TOL = 1e-9
BRACKET_EPS = 1e-9
GRID_DISAGREEMENT = 1e-3


class ModeStatus(str, enum.Enum):
    INTERIOR = "interior"
    AT_HALF = "at-half"
    AT_ONE = "at-one"
    INDETERMINATE = "indeterminate-sigma-zero"
    FLAT = "flat"


class ModeDisagreementWarning(RuntimeWarning):
    """The root of phi' and the grid argmax of phi disagree (multimodal phi)."""


class ModeEstimate(NamedTuple):
    mode: float
    status: ModeStatus


@dataclass(frozen=True)
class PdfGrid:
    p_values: np.ndarray
    density: np.ndarray
    log_phi: np.ndarray


@dataclass(frozen=True)
class PosteriorSummary:
    z: float
    mode: float
    mode_status: ModeStatus
    mean: float
    sigma: Optional[float]
    lambda_: Optional[float]
    s_hat: int
    t: int
    diagnostics: tuple = field(default=())


def _log_binom(n, k):
    return gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)


def _terms(spectrum: SlaterSpectrum):
    """Indices and log-coefficients of the nonzero part of the spectrum."""
    idx = [t for t in spectrum.support() if spectrum.a[t]]
    # math.log is exact-to-double on arbitrarily large ints
    return np.array(idx, dtype=np.float64), np.array([math.log(spectrum.a[t]) for t in idx])


def _log_phi_closed(spectrum: SlaterSpectrum, p) -> np.ndarray:
    """``log phi`` on ``[0, 1]``; the endpoints are finite or ``-inf``."""
    t, la = _terms(spectrum)
    p = np.atleast_1d(np.asarray(p, dtype=np.float64))
    T = spectrum.t
    expo = la[None, :] + xlogy(T - t[None, :], p[:, None]) + xlogy(t[None, :], 1.0 - p[:, None])
    return logsumexp(expo, axis=1)


def log_phi(spectrum: SlaterSpectrum, p):
    """``log phi(p)`` for ``0 < p < 1``; scalar in, scalar out."""
    arr = np.asarray(p, dtype=np.float64)
    if np.any(~((arr > 0) & (arr < 1))):
        raise DomainError("log_phi needs 0 < p < 1")
    out = _log_phi_closed(spectrum, arr)
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def dlog_phi(spectrum: SlaterSpectrum, p):
    """Derivative of ``log phi`` at ``0 < p < 1``.

    ``d/dp log phi = (T (1 - p) - E[t]) / (p (1 - p))`` with ``E[t]`` the
    mean of ``t`` under weights proportional to the terms of ``phi(p)``.
    """
    arr = np.asarray(p, dtype=np.float64)
    if np.any(~((arr > 0) & (arr < 1))):
        raise DomainError("dlog_phi needs 0 < p < 1")
    t, la = _terms(spectrum)
    q = np.atleast_1d(arr)
    T = spectrum.t
    expo = la[None, :] + (T - t[None, :]) * np.log(q[:, None]) + t[None, :] * np.log1p(-q[:, None])
    wts = np.exp(expo - expo.max(axis=1, keepdims=True))
    mean_t = (wts * t[None, :]).sum(axis=1) / wts.sum(axis=1)
    out = (T * (1.0 - q) - mean_t) / (q * (1.0 - q))
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def log_normalizer_z(spectrum: SlaterSpectrum) -> float:
    t, la = _terms(spectrum)
    T = spectrum.t
    return math.log(0.5) - math.log(T + 1) + float(logsumexp(la - _log_binom(T, t)))


def normalizer_z(spectrum: SlaterSpectrum) -> float:
    """``Z = integral of phi over [0.5, 1] = 0.5/(T+1) * sum_t a_t / C(T, t)``."""
    return math.exp(log_normalizer_z(spectrum))


def posterior_mean(spectrum: SlaterSpectrum) -> float:
    """Posterior mean of ``p`` from incomplete beta integrals of each term."""
    t, la = _terms(spectrum)
    T = spectrum.t
    with np.errstate(divide="ignore"):
        log_i = np.log([reg_inc_beta(0.5, ti + 1.0, T - ti + 2.0) for ti in t])
    log_sum = float(logsumexp(la - _log_binom(T + 1, t) + log_i))
    return math.exp(log_sum - log_normalizer_z(spectrum) - math.log(T + 2))


def _sigma_parts(spectrum: SlaterSpectrum):
    """Exact integer numerator of phi''(0.5) and its absolute scale."""
    T = spectrum.t
    first = sum(a * (2 * t - T) for t, a in enumerate(spectrum.a))
    if first != 0:
        raise InternalAssertionError("phi'(0.5) != 0: spectrum is not symmetric")
    num = sum(a * ((2 * t - T) ** 2 - T) for t, a in enumerate(spectrum.a))
    scale = sum(a * abs((2 * t - T) ** 2 - T) for t, a in enumerate(spectrum.a))
    return num, scale


def sigma(spectrum: SlaterSpectrum) -> float:
    """Second derivative of ``phi`` at ``p = 0.5``.

    ``phi''(0.5) = 2**(2 - T) * sum_t a_t ((2t - T)**2 - T)``; the sum is
    formed exactly in integers, so its sign is reliable even when the float
    result underflows.
    """
    if spectrum.t == 0:
        raise DomainError("sigma is undefined for T = 0")
    num, _ = _sigma_parts(spectrum)
    return float(Fraction(num, 2 ** (spectrum.t - 2)) if spectrum.t >= 2 else num * 2 ** (2 - spectrum.t))


def _grid_argmax(spectrum, n_points):
    grid = np.linspace(0.5, 1.0, n_points)
    lp = _log_phi_closed(spectrum, grid)
    return grid, lp, int(np.argmax(lp))


def _is_flat(lp) -> bool:
    top = float(np.max(lp))
    return top - float(np.min(lp)) <= 1e-12 * max(1.0, abs(top))


def _mode_root(spectrum, grid, i_best):
    """Root of ``dlog_phi`` on ``(0.5, 1)``, or ``None`` if it cannot be bracketed."""
    f = lambda p: dlog_phi(spectrum, p)  # noqa: E731
    lo, hi = 0.5 + BRACKET_EPS, 1.0 - BRACKET_EPS
    f_lo, f_hi = f(lo), f(hi)
    if f_lo > 0 > f_hi:
        return brentq(f, lo, hi, xtol=ROOT_TOL)
    # near 0.5 the derivative is a tiny difference of large terms; bracket
    # around the grid maximum instead
    a = grid[max(i_best - 1, 0)] if i_best > 0 else lo
    b = grid[min(i_best + 1, grid.size - 1)]
    b = min(b, hi)
    if f(a) > 0 > f(b):
        return brentq(f, a, b, xtol=ROOT_TOL)
    return None


def mode_estimate(spectrum: SlaterSpectrum, *, grid_points: int = GRID_CHECK_POINTS,
                  diagnostics: Optional[list] = None) -> ModeEstimate:
    """Mode of the posterior on ``[0.5, 1]``.

    The sign of ``phi''(0.5)`` decides whether ``0.5`` is a local maximum.
    Otherwise the mode is the root of ``d log phi / dp`` (Brent), checked
    against the argmax of ``log phi`` on ``grid_points`` equispaced points; a
    disagreement beyond 1e-3 means ``phi`` is not unimodal on the interval, in
    which case the grid value is returned and a diagnostic is recorded.
    """
    notes = diagnostics if diagnostics is not None else []
    if spectrum.t == 0:
        return ModeEstimate(0.5, ModeStatus.FLAT)
    num, scale = _sigma_parts(spectrum)
    grid, lp, i_best = _grid_argmax(spectrum, grid_points)
    if abs(num) <= 1e-12 * scale:
        if _is_flat(lp):
            return ModeEstimate(0.5, ModeStatus.FLAT)
        return ModeEstimate(float(grid[i_best]), ModeStatus.INDETERMINATE)
    if num < 0:
        if lp[i_best] - lp[0] > 1e-12 * max(1.0, abs(lp[0])):
            _note(notes, f"phi''(0.5) < 0 but the grid maximum is at p={grid[i_best]:.6f}")
        return ModeEstimate(0.5, ModeStatus.AT_HALF)
    if i_best == grid.size - 1 and dlog_phi(spectrum, 1.0 - BRACKET_EPS) >= 0:
        return ModeEstimate(1.0, ModeStatus.AT_ONE)
    root = _mode_root(spectrum, grid, i_best)
    if root is None or abs(root - grid[i_best]) > GRID_DISAGREEMENT:
        _note(notes, f"root of phi' ({root}) disagrees with grid argmax p={grid[i_best]:.6f}")
        return ModeEstimate(float(grid[i_best]), ModeStatus.INTERIOR)
    return ModeEstimate(float(root), ModeStatus.INTERIOR)


def _note(notes, message):
    notes.append(message)
    log.warning(message)
    warnings.warn(message, ModeDisagreementWarning, stacklevel=3)


def posterior_grid(spectrum: SlaterSpectrum, n_points: int = DEFAULT_GRID_POINTS) -> PdfGrid:
    """Normalized posterior density on ``n_points`` equispaced points of ``[0.5, 1]``."""
    if n_points < 2:
        raise DomainError("posterior_grid needs at least 2 points")
    p = np.linspace(0.5, 1.0, n_points)
    lp = _log_phi_closed(spectrum, p)
    density = np.exp(lp - log_normalizer_z(spectrum))
    return PdfGrid(p, density, lp)


def summarize(spectrum: SlaterSpectrum, *, grid_points: int = GRID_CHECK_POINTS) -> PosteriorSummary:
    """Normalizer, mode, mean, curvature at 0.5 and degree of linearity."""
    notes: list = []
    mode, status = mode_estimate(spectrum, grid_points=grid_points, diagnostics=notes)
    T, s = spectrum.t, spectrum.s_hat
    return PosteriorSummary(
        z=normalizer_z(spectrum),
        mode=mode,
        mode_status=status,
        mean=posterior_mean(spectrum),
        sigma=sigma(spectrum) if T > 0 else None,
        lambda_=1.0 - s / T if T > 0 else None,
        s_hat=s,
        t=T,
        diagnostics=tuple(notes),
    )
