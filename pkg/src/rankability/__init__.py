"""Rankability analysis of pairwise comparisons via the Slater spectrum."""

__version__ = "0.1.0"

from .core import (
    RankingSet,
    ResultMatrix,
    SlaterSpectrum,
    all_optimal_rankings,
    brute_force_optimal_rankings,
    brute_force_spectrum,
    consistency_index,
    inconsistency_index,
    slater_index,
    slater_spectrum,
)
from .estimators import RankabilityEstimator, SlaterFeatures
from .exceptions import (
    DomainError,
    InternalAssertionError,
    InvalidArgumentError,
    RankabilityError,
    ResourceLimitError,
)
from .inference import (
    degenerate_summary,
    degree_of_linearity,
    joint_posterior,
    lambda_joint,
    posterior_grid,
    summarize,
    thresholds,
)
from .io import MatrixFile, read_matrix_file, write_matrix_file
from .sim import GeneratorConfig, generate_league, generate_matrix, slater_mc_test

__all__ = [
    "DomainError",
    "GeneratorConfig",
    "InternalAssertionError",
    "InvalidArgumentError",
    "MatrixFile",
    "RankabilityError",
    "RankabilityEstimator",
    "RankingSet",
    "ResourceLimitError",
    "ResultMatrix",
    "SlaterFeatures",
    "SlaterSpectrum",
    "all_optimal_rankings",
    "brute_force_optimal_rankings",
    "brute_force_spectrum",
    "consistency_index",
    "degenerate_summary",
    "degree_of_linearity",
    "generate_league",
    "generate_matrix",
    "inconsistency_index",
    "joint_posterior",
    "lambda_joint",
    "posterior_grid",
    "read_matrix_file",
    "slater_index",
    "slater_mc_test",
    "slater_spectrum",
    "summarize",
    "thresholds",
    "write_matrix_file",
]
