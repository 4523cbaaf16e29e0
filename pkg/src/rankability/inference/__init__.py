"""Posterior analysis of the Bernoulli consistency parameter."""

from .betainc import reg_inc_beta
from .degenerate import (
    DegenerateSummary,
    degenerate_mean,
    degenerate_summary,
    degree_of_linearity,
    lambda_joint,
    thresholds,
)
from .joint import JointPosterior, joint_posterior
from .posterior import (
    ModeDisagreementWarning,
    ModeEstimate,
    ModeStatus,
    PdfGrid,
    PosteriorSummary,
    dlog_phi,
    log_normalizer_z,
    log_phi,
    mode_estimate,
    normalizer_z,
    posterior_grid,
    posterior_mean,
    sigma,
    summarize,
)
from .quadrature import integrate

__all__ = [
    "DegenerateSummary",
    "JointPosterior",
    "ModeDisagreementWarning",
    "ModeEstimate",
    "ModeStatus",
    "PdfGrid",
    "PosteriorSummary",
    "degenerate_mean",
    "degenerate_summary",
    "degree_of_linearity",
    "dlog_phi",
    "integrate",
    "joint_posterior",
    "lambda_joint",
    "log_normalizer_z",
    "log_phi",
    "mode_estimate",
    "normalizer_z",
    "posterior_grid",
    "posterior_mean",
    "reg_inc_beta",
    "sigma",
    "summarize",
    "thresholds",
]
