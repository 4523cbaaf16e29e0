"""Exact combinatorial engine: consistency, Slater spectrum and all optimal rankings."""

from .indices import consistency_index, cross_weight, cross_weights_incremental, inconsistency_index
from .oracle import MAX_BRUTE_FORCE_OBJECTS, brute_force_optimal_rankings, brute_force_spectrum
from .rankings import MAX_INDEX_OBJECTS, all_optimal_rankings, forward_degrees, slater_index
from .spectrum import (
    MAX_SPECTRUM_OBJECTS,
    SubsetLayer,
    estimate_spectrum_memory,
    iter_subset_layers,
    slater_spectrum,
)
from .types import Ranking, RankingSet, ResultMatrix, SlaterSpectrum

__all__ = [
    "MAX_BRUTE_FORCE_OBJECTS",
    "MAX_INDEX_OBJECTS",
    "MAX_SPECTRUM_OBJECTS",
    "Ranking",
    "RankingSet",
    "ResultMatrix",
    "SlaterSpectrum",
    "SubsetLayer",
    "all_optimal_rankings",
    "brute_force_optimal_rankings",
    "brute_force_spectrum",
    "consistency_index",
    "cross_weight",
    "cross_weights_incremental",
    "estimate_spectrum_memory",
    "forward_degrees",
    "inconsistency_index",
    "iter_subset_layers",
    "slater_index",
    "slater_spectrum",
]
