"""Slater index and all optimal rankings from subset degrees.

Only the degree ``q(I)`` (largest attainable consistency of subset ``I``) is
propagated forward::

    q(I) = max_{e in I} d_e(I) + q(I minus e)

Object ``e`` can lead an optimal order of ``I`` exactly when
``q(I minus e) == q(I) - d_e(I)``; the backward pass follows only those
degree-compatible edges from the full set down to the empty set, appending
``e`` to every partial ranking it carries.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..exceptions import InternalAssertionError, ResourceLimitError
from .subsets import cross_weight_table, member_matrix, members_of, subset_index
from .types import RankingSet, ResultMatrix

MAX_INDEX_OBJECTS = 28
_CHUNK_ROWS = 1 << 16


def forward_degrees(w, *, max_objects: int = MAX_INDEX_OBJECTS) -> np.ndarray:
    """Flat array ``q[mask]`` of the largest consistency inside each subset."""
    w = ResultMatrix.coerce(w)
    m = w.m
    if m > max_objects:
        raise ResourceLimitError(
            f"slater_index: M={m} exceeds the limit of {max_objects} objects "
            f"(needs {(4 << m) / 2**30:.1f} GiB for the degree table)"
        )
    dtype = np.int32 if w.t < 2**31 else np.int64
    q = np.zeros(1 << m, dtype=dtype)
    index = subset_index(m)
    for k in range(2, m + 1):
        masks = index.layers[k]
        for lo in range(0, masks.size, _CHUNK_ROWS):
            chunk = masks[lo:lo + _CHUNK_ROWS]
            bits = member_matrix(chunk, m)
            elems = members_of(bits, k)
            d = np.take_along_axis(cross_weight_table(bits, w.w), elems, axis=1)
            parents = chunk[:, None] ^ (np.int64(1) << elems)
            q[chunk] = (d + q[parents]).max(axis=1)
    return q


def slater_index(w, *, max_objects: int = MAX_INDEX_OBJECTS) -> int:
    """Smallest number of comparisons any order must contradict."""
    w = ResultMatrix.coerce(w)
    q = forward_degrees(w, max_objects=max_objects)
    return w.t - int(q[-1])


def all_optimal_rankings(w, *, max_objects: int = MAX_INDEX_OBJECTS,
                         max_rankings: Optional[int] = None) -> RankingSet:
    """Every order attaining the Slater index, each exactly once.

    Parameters
    ----------
    w : array-like of shape (M, M) or ResultMatrix
    max_objects : int, default=28
    max_rankings : int, optional
        Abort with :class:`ResourceLimitError` once more partial rankings than
        this would be materialised (the count of optima can reach ``M!``).
    """
    w = ResultMatrix.coerce(w)
    m = w.m
    q = forward_degrees(w, max_objects=max_objects)
    wins = w.w
    full = (1 << m) - 1
    frontier = {full: [()]}
    for _ in range(m):
        nxt: dict = {}
        for mask, prefixes in frontier.items():
            members = [e for e in range(m) if (mask >> e) & 1]
            for e in members:
                parent = mask ^ (1 << e)
                d_e = int(wins[e, members].sum())
                if q[mask] - d_e == q[parent]:
                    nxt.setdefault(parent, []).extend(r + (e,) for r in prefixes)
        frontier = nxt
        if max_rankings is not None:
            live = sum(len(v) for v in frontier.values())
            if live > max_rankings:
                raise ResourceLimitError(f"more than {max_rankings} optimal partial rankings")
    rankings = frontier.get(0, [])
    if __debug__ and len(set(rankings)) != len(rankings):
        raise InternalAssertionError("duplicate rankings produced by the backward pass")
    return RankingSet(tuple(rankings), w.t - int(q[full]))
