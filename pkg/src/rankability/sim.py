"""Synthetic observation matrices under the common-Bernoulli model and the
Monte-Carlo version of Slater's test of ``p = 0.5``.

Random numbers come from numpy's PCG64 seeded through ``SeedSequence``.
Every pair ``(m, n)`` of :func:`generate_matrix` draws from its own stream
``SeedSequence(seed, spawn_key=(m, n))`` and every Monte-Carlo replica ``r``
from ``SeedSequence(seed, spawn_key=(r,))``, so results do not depend on the
order or the threads in which pairs and replicas are processed.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core.rankings import slater_index
from .core.types import ResultMatrix
from .exceptions import DomainError, InvalidArgumentError
from .validation import check_positive_int, check_ranking


def _stream(seed: int, *key: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


@dataclass(frozen=True)
class GeneratorConfig:
    """Protocol knobs for synthetic leagues.

    ``schedule`` is either an int (the same number of comparisons for every
    pair) or a symmetric ``(m, m)`` matrix of per-pair counts.
    ``true_order[0]`` is the strongest object; default is ``0..m-1``.
    """

    m: int
    p_bar: float
    schedule: object = 2
    true_order: Optional[Sequence[int]] = None
    seed: int = 0

    def __post_init__(self):
        check_positive_int(self.m, "m")
        if not 0.5 <= self.p_bar <= 1.0:
            raise InvalidArgumentError(f"p_bar must lie in [0.5, 1], got {self.p_bar}")
        object.__setattr__(self, "schedule", _check_schedule(self.schedule, self.m))
        order = range(self.m) if self.true_order is None else self.true_order
        object.__setattr__(self, "true_order", check_ranking(order, self.m))
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidArgumentError("seed must be a 64-bit unsigned integer")


def _check_schedule(schedule, m) -> np.ndarray:
    if np.isscalar(schedule):
        k = check_positive_int(int(schedule), "schedule", minimum=0)
        out = np.full((m, m), k, dtype=np.int64)
        np.fill_diagonal(out, 0)
    else:
        out = np.array(schedule, dtype=np.int64)
        if out.shape != (m, m):
            raise InvalidArgumentError(f"schedule must have shape ({m}, {m})")
        if np.any(out < 0) or not np.array_equal(out, out.T):
            raise InvalidArgumentError("schedule must be symmetric and nonnegative")
        if np.any(np.diag(out)):
            raise InvalidArgumentError("schedule diagonal must be zero")
    out.setflags(write=False)
    return out


def generate_matrix(config: GeneratorConfig) -> ResultMatrix:
    """Draw one observation matrix.

    For each pair the object placed earlier in ``true_order`` wins each of
    the ``K_mn`` comparisons independently with probability ``p_bar``.
    """
    m, k = config.m, config.schedule
    pos = np.empty(m, dtype=np.int64)
    pos[list(config.true_order)] = np.arange(m)
    w = np.zeros((m, m), dtype=np.int64)
    for a in range(m):
        for b in range(a + 1, m):
            if not k[a, b]:
                continue
            fav, dog = (a, b) if pos[a] < pos[b] else (b, a)
            wins = int(_stream(config.seed, a, b).binomial(k[a, b], config.p_bar))
            w[fav, dog] = wins
            w[dog, fav] = k[a, b] - wins
    return ResultMatrix(w)


def _null_replica(schedule_upper, iu, m, seed, r) -> ResultMatrix:
    wins = _stream(seed, r).binomial(schedule_upper, 0.5)
    w = np.zeros((m, m), dtype=np.int64)
    w[iu] = wins
    w[iu[1], iu[0]] = schedule_upper - wins
    return ResultMatrix(w)


class Decision(str, enum.Enum):
    REJECT = "reject-H0"
    RETAIN = "retain-H0"


@dataclass(frozen=True)
class SlaterTestResult:
    p_val: float
    s_hat_observed: int
    n_mc: int
    count_le: int
    epsilon: float
    decision: Decision


def null_slater_indices(schedule, n_mc: int, seed: int, *, n_jobs: int = 1) -> np.ndarray:
    """Slater indices of ``n_mc`` matrices drawn with ``p = 0.5`` on ``schedule``."""
    k = np.asarray(schedule, dtype=np.int64)
    m = k.shape[0]
    iu = np.triu_indices(m, 1)
    upper = k[iu]

    def one(r):
        return slater_index(_null_replica(upper, iu, m, seed, r))

    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            return np.fromiter(pool.map(one, range(n_mc)), dtype=np.int64, count=n_mc)
    return np.fromiter((one(r) for r in range(n_mc)), dtype=np.int64, count=n_mc)


def slater_mc_test(w, n_mc: int = 1000, epsilon: float = 0.05, seed: int = 0, *,
                   n_jobs: int = 1) -> SlaterTestResult:
    """Monte-Carlo test of "comparisons are coin flips".

    Resamples matrices with the observed per-pair counts and ``p = 0.5`` and
    reports the fraction whose Slater index is at most the observed one. The
    null is rejected (data deemed rankable) when that fraction is ``<= epsilon``.
    """
    w = ResultMatrix.coerce(w)
    n_mc = check_positive_int(n_mc, "n_mc")
    if not 0.0 < epsilon < 1.0:
        raise InvalidArgumentError("epsilon must lie in (0, 1)")
    if w.t == 0:
        raise DomainError("the comparison schedule is empty (T = 0)")
    observed = slater_index(w)
    null = null_slater_indices(w.k, n_mc, seed, n_jobs=n_jobs)
    count = int(np.count_nonzero(null <= observed))
    p_val = count / n_mc
    return SlaterTestResult(
        p_val=p_val,
        s_hat_observed=observed,
        n_mc=n_mc,
        count_le=count,
        epsilon=epsilon,
        decision=Decision.REJECT if p_val <= epsilon else Decision.RETAIN,
    )


def derive_seed(seed: int, index: int) -> int:
    """64-bit seed of the ``index``-th matrix in a league drawn from ``seed``."""
    return int(np.random.SeedSequence([int(seed), int(index)]).generate_state(1, np.uint64)[0])


def generate_league(m: int, p_bar: float, n: int, schedule=2, seed: int = 0) -> list:
    """``n`` independent matrices sharing ``m``, ``p_bar`` and ``schedule``."""
    n = check_positive_int(n, "n")
    return [generate_matrix(GeneratorConfig(m, p_bar, schedule, seed=derive_seed(seed, i))) for i in range(n)]
