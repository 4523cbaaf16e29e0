"""Consistency/inconsistency of a single order and subset cross weights."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from ..exceptions import InvalidArgumentError
from ..validation import check_ranking
from .types import ResultMatrix


def consistency_index(w, rho) -> int:
    """Number of observed comparisons that agree with the order ``rho``.

    ``rho[0]`` is the top-ranked object. This is the sum of the strictly upper
    triangle of ``w`` after permuting rows and columns by ``rho``.
    """
    w = ResultMatrix.coerce(w)
    rho = np.asarray(check_ranking(rho, w.m), dtype=np.intp)
    permuted = w.w[np.ix_(rho, rho)]
    return int(np.triu(permuted, k=1).sum())


def inconsistency_index(w, rho) -> int:
    """Number of comparisons in which a lower-ranked object beat a higher one."""
    w = ResultMatrix.coerce(w)
    return w.t - consistency_index(w, rho)


def _as_members(subset, m) -> list:
    if isinstance(subset, (int, np.integer)) and not isinstance(subset, bool):
        members = [i for i in range(m) if (int(subset) >> i) & 1]
    else:
        members = sorted({int(i) for i in subset})
    for i in members:
        if not 0 <= i < m:
            raise InvalidArgumentError(f"object {i} outside 0..{m - 1}")
    return members


def cross_weight(w, e: int, subset) -> int:
    """Total wins of object ``e`` against the members of ``subset``.

    ``subset`` is either an iterable of object indices or an int bitmask.
    ``e`` must belong to it; ``w[e, e] == 0`` makes its own inclusion harmless.
    """
    w = ResultMatrix.coerce(w)
    if not 0 <= int(e) < w.m:
        raise InvalidArgumentError(f"object {e} outside 0..{w.m - 1}")
    members = _as_members(subset, w.m)
    if e not in members:
        raise InvalidArgumentError(f"object {e} is not in the subset {members}")
    return int(w.w[e, members].sum())


def cross_weights_incremental(w, subset: Iterable[int]) -> dict:
    """Cross weights of every member of ``subset`` using the one-entry updates.

    For sorted members ``e1 < e2 < ... < ek``::

        d_{e1}(I) = d_{e1}(I minus e2) + w[e1, e2]
        d_{ej}(I) = d_{ej}(I minus e1) + w[ej, e1],  j >= 2

    applied recursively down to singletons (where every cross weight is 0).
    Returns ``{e: d_e(I)}``; values equal :func:`cross_weight`.
    """
    w = ResultMatrix.coerce(w)
    members = tuple(_as_members(subset, w.m))
    cache: dict = {}

    def d(e, sub):
        if len(sub) == 1:
            return 0
        key = (e, sub)
        if key not in cache:
            first = sub[0]
            if e == first:
                second = sub[1]
                rest = tuple(x for x in sub if x != second)
                cache[key] = d(e, rest) + int(w.w[e, second])
            else:
                rest = sub[1:]
                cache[key] = d(e, rest) + int(w.w[e, first])
        return cache[key]

    return {e: d(e, members) for e in members}
