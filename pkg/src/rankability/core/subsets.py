"""Bitmask subset bookkeeping shared by the spectrum and ranking recursions.

Subsets of ``{0..M-1}`` are int bitmasks. Within a cardinality layer ``k`` the
subsets are kept in increasing mask order (colex order of the member sets), and
``rank[mask]`` gives the position of a mask inside its own layer, so a layer's
data can live in a dense array indexed by that rank.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def popcount(x: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(x)
    x = x.astype(np.uint64)
    out = np.zeros(x.shape, dtype=np.uint8)
    while np.any(x):
        out += (x & 1).astype(np.uint8)
        x >>= np.uint64(1)
    return out


class SubsetIndex:
    """Per-layer mask lists and within-layer ranks for ``m`` objects."""

    def __init__(self, m: int):
        self.m = m
        masks = np.arange(1 << m, dtype=np.int64)
        pc = popcount(masks)
        order = np.argsort(pc, kind="stable")
        counts = np.bincount(pc, minlength=m + 1)
        starts = np.concatenate(([0], np.cumsum(counts)))
        rank = np.empty(1 << m, dtype=np.int64)
        self.layers = []
        for k in range(m + 1):
            layer = order[starts[k]:starts[k + 1]]
            layer.setflags(write=False)
            rank[layer] = np.arange(layer.size)
            self.layers.append(layer)
        rank.setflags(write=False)
        self.rank = rank


@lru_cache(maxsize=4)
def subset_index(m: int) -> SubsetIndex:
    return SubsetIndex(m)


def layer_masks(m: int, k: int) -> np.ndarray:
    """Masks of all ``k``-subsets of ``range(m)``, ascending."""
    return subset_index(m).layers[k]


def member_matrix(masks: np.ndarray, m: int) -> np.ndarray:
    """0/1 membership matrix of shape ``(len(masks), m)``."""
    return ((masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(np.int8)


def members_of(bits: np.ndarray, k: int) -> np.ndarray:
    """Sorted member indices per row, shape ``(rows, k)``."""
    return np.nonzero(bits)[1].reshape(bits.shape[0], k)


def cross_weight_table(bits: np.ndarray, w: np.ndarray) -> np.ndarray:
    """``D[r, e] = sum_{n in subset r} w[e, n]`` for every object ``e``.

    Computed in float64 through BLAS; exact while sums stay below 2**53.
    """
    return np.rint(bits.astype(np.float64) @ w.T.astype(np.float64)).astype(np.int64)
