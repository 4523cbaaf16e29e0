"""Immutable value types for observation matrices, spectra and ranking sets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InvalidArgumentError
from ..validation import check_win_matrix

Ranking = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ResultMatrix:
    """Pairwise comparison outcomes among ``m`` objects.

    ``w[a, b]`` counts wins of object ``a`` over object ``b``. Objects are
    dense indices ``0..m-1``; human-readable labels live in the I/O layer.
    """

    w: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "w", check_win_matrix(self.w))

    @classmethod
    def coerce(cls, obj) -> "ResultMatrix":
        return obj if isinstance(obj, ResultMatrix) else cls(obj)

    @property
    def m(self) -> int:
        return self.w.shape[0]

    @property
    def t(self) -> int:
        """Total number of comparisons."""
        return int(self.w.sum())

    @property
    def k(self) -> np.ndarray:
        """Symmetric per-pair comparison counts."""
        return self.w + self.w.T

    def __eq__(self, other):
        if not isinstance(other, ResultMatrix):
            return NotImplemented
        return np.array_equal(self.w, other.w)

    def __hash__(self):
        return hash(self.w.tobytes()) ^ self.m

    def __repr__(self):
        return f"ResultMatrix(m={self.m}, t={self.t})"


@dataclass(frozen=True)
class SlaterSpectrum:
    """Number of orders ``a[t]`` having inconsistency (equivalently consistency) ``t``.

    Coefficients are Python ints so they stay exact past 64 bits. ``m`` is the
    number of objects when known; it enables the ``sum(a) == m!`` check.
    """

    t: int
    a: Tuple[int, ...]
    m: Optional[int] = None

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if self.t < 0 or len(a) != self.t + 1:
            raise InvalidArgumentError(f"spectrum needs t+1={self.t + 1} coefficients, got {len(a)}")
        if any(x < 0 for x in a):
            raise InvalidArgumentError("spectrum coefficients must be nonnegative")
        if not any(a):
            raise InvalidArgumentError("spectrum must have at least one nonzero coefficient")
        if a != a[::-1]:
            raise InvalidArgumentError("spectrum is not symmetric (a[t] != a[T-t])")
        if self.m is not None and sum(a) != math.factorial(self.m):
            raise InvalidArgumentError(f"spectrum mass {sum(a)} != {self.m}!")

    @property
    def s_hat(self) -> int:
        """Slater index: the smallest ``t`` with ``a[t] > 0``."""
        return next(i for i, x in enumerate(self.a) if x)

    @property
    def a_s_hat(self) -> int:
        """Number of optimal orders."""
        return self.a[self.s_hat]

    @property
    def total(self) -> int:
        return sum(self.a)

    def support(self) -> range:
        return range(self.s_hat, self.t - self.s_hat + 1)

    def degenerate(self) -> "SlaterSpectrum":
        """Keep only the two end coefficients at ``s_hat`` and ``t - s_hat``."""
        s = self.s_hat
        a = [0] * (self.t + 1)
        a[s] = a[self.t - s] = self.a[s]
        return SlaterSpectrum(self.t, tuple(a))

    def to_string(self) -> str:
        return ",".join(str(x) for x in self.a)

    @classmethod
    def from_string(cls, text: str, m: Optional[int] = None) -> "SlaterSpectrum":
        a = tuple(int(tok) for tok in text.split(","))
        return cls(len(a) - 1, a, m)


@dataclass(frozen=True)
class RankingSet:
    """All optimal rankings of a matrix, sharing inconsistency ``s_hat``."""

    rankings: Tuple[Ranking, ...]
    s_hat: int
    _lookup: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rankings = tuple(tuple(int(x) for x in r) for r in self.rankings)
        object.__setattr__(self, "rankings", rankings)
        object.__setattr__(self, "_lookup", frozenset(rankings))

    def __len__(self) -> int:
        return len(self.rankings)

    def __iter__(self) -> Iterator[Ranking]:
        return iter(self.rankings)

    def __contains__(self, rho: Sequence[int]) -> bool:
        return tuple(rho) in self._lookup

    def as_set(self) -> frozenset:
        return self._lookup
