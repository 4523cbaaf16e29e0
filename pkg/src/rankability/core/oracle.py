"""Brute-force enumeration over all ``M!`` orders, used as a test oracle."""

from __future__ import annotations

import itertools

from ..exceptions import ResourceLimitError
from .types import RankingSet, ResultMatrix, SlaterSpectrum

MAX_BRUTE_FORCE_OBJECTS = 10


def _consistencies(w: ResultMatrix):
    if w.m > MAX_BRUTE_FORCE_OBJECTS:
        raise ResourceLimitError(
            f"brute force over {w.m}! orders refused (limit M <= {MAX_BRUTE_FORCE_OBJECTS})"
        )
    wins = w.w.tolist()
    for rho in itertools.permutations(range(w.m)):
        c = 0
        for i, a in enumerate(rho):
            row = wins[a]
            for b in rho[i + 1:]:
                c += row[b]
        yield rho, c


def brute_force_spectrum(w) -> SlaterSpectrum:
    w = ResultMatrix.coerce(w)
    a = [0] * (w.t + 1)
    for _, c in _consistencies(w):
        a[c] += 1
    return SlaterSpectrum(w.t, tuple(a), w.m)


def brute_force_optimal_rankings(w) -> RankingSet:
    w = ResultMatrix.coerce(w)
    best, found = -1, []
    for rho, c in _consistencies(w):
        if c > best:
            best, found = c, [rho]
        elif c == best:
            found.append(rho)
    return RankingSet(tuple(found), w.t - best)
