"""Slater-index-only approximations: degree of linearity, thresholds and the
two-term ("degenerate") posterior that keeps just ``a_{S}`` and ``a_{T-S}``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import logsumexp

from ..core.types import SlaterSpectrum
from ..exceptions import DomainError, InvalidArgumentError
from .betainc import reg_inc_beta
from .posterior import _log_binom, sigma


@dataclass(frozen=True)
class DegenerateSummary:
    mean_tilde: float
    sigma_tilde: float
    s_th: float
    lambda_th: float
    z_tilde: float


def degree_of_linearity(s_hat: int, t: int) -> float:
    """Fraction of comparisons consistent with an optimal ranking, ``1 - S/T``."""
    if t < 1:
        raise DomainError("degree of linearity needs T >= 1")
    if not 0 <= s_hat <= t:
        raise DomainError(f"need 0 <= s_hat <= T, got s_hat={s_hat}, T={t}")
    return 1.0 - s_hat / t


def thresholds(t: int):
    """``(S_th, lambda_th)``: below ``S_th`` the two-term posterior peaks above 0.5.

    ``S_th = (T - sqrt(T)) / 2`` and ``lambda_th = (1 + 1/sqrt(T)) / 2``; the
    latter is evaluated as ``1 - S_th/T`` so the identity holds bit for bit.
    """
    if t < 1:
        raise DomainError("thresholds need T >= 1")
    s_th = 0.5 * (t - math.sqrt(t))
    return s_th, 1.0 - s_th / t


def lambda_joint(s_hats: Sequence[int], ts: Sequence[int]) -> float:
    """Pooled linearity ``1 - mean(S_l) / mean(T_l)``.

    Not the average of the per-matrix values unless all ``T_l`` are equal.
    """
    if len(s_hats) != len(ts):
        raise InvalidArgumentError(f"length mismatch: {len(s_hats)} Slater indices, {len(ts)} totals")
    if not s_hats:
        raise InvalidArgumentError("lambda_joint needs at least one matrix")
    if any(t < 1 for t in ts):
        raise DomainError("every T_l must be >= 1")
    return 1.0 - (sum(s_hats) / len(s_hats)) / (sum(ts) / len(ts))


def degenerate_mean(s_hat: int, t: int, a_s: int = 1) -> float:
    """Posterior mean under the two-term spectrum.

    ``a_s`` cancels against the normalizer and does not enter the result;
    it is accepted (and checked) for symmetry with the full computation.
    """
    if a_s < 1:
        raise InvalidArgumentError("a_s must be a positive count")
    if not 0 <= 2 * s_hat <= t:
        raise DomainError(f"need 0 <= s_hat <= T/2, got s_hat={s_hat}, T={t}")
    idx = np.array([s_hat, t - s_hat], dtype=np.float64)
    log_i = np.log([reg_inc_beta(0.5, k + 1.0, t - k + 2.0) for k in idx])
    log_sum = float(logsumexp(log_i - _log_binom(t + 1, idx)))
    return math.exp(math.log(t + 1) + float(_log_binom(t, s_hat)) - math.log(t + 2) + log_sum)


def degenerate_summary(spectrum: SlaterSpectrum) -> DegenerateSummary:
    T, s = spectrum.t, spectrum.s_hat
    if T < 1:
        raise DomainError("degenerate summary needs T >= 1")
    s_th, lam_th = thresholds(T)
    return DegenerateSummary(
        mean_tilde=degenerate_mean(s, T, spectrum.a_s_hat),
        sigma_tilde=sigma(spectrum.degenerate()),
        s_th=s_th,
        lambda_th=lam_th,
        z_tilde=math.exp(math.log(spectrum.a_s_hat) - math.log(T + 1) - float(_log_binom(T, s))),
    )
