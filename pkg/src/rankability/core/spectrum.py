"""Exact Slater spectrum by a layered dynamic program over object subsets.

For a subset ``I`` the generating polynomial ``G(u; I) = sum_rho u**C(rho)``
over all orders of ``I`` satisfies::

    G(u; I) = sum_{e in I} u**d_e(I) * G(u; I minus e)

where ``d_e(I)`` is the number of wins of ``e`` against the rest of ``I`` (the
comparisons ``e`` wins by being placed first). Layers are built for
``k = 1..M``; only layers ``k-1`` and ``k`` are alive at any time.

Each subset's polynomial is stored as an offset plus a dense coefficient run.
The offset is the smallest attainable consistency ``T_I - q(I)`` (``T_I``
being the comparisons inside ``I`` and ``q(I)`` the largest consistency), which
follows from the reversal symmetry of every sub-spectrum.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from ..exceptions import InternalAssertionError, InvalidArgumentError, ResourceLimitError
from .subsets import cross_weight_table, member_matrix, members_of, subset_index
from .types import ResultMatrix, SlaterSpectrum

MAX_SPECTRUM_OBJECTS = 22
_WORD_SAFE_OBJECTS = 20  # 20! < 2**64 <= 21!
_PRIME = (1 << 61) - 1
_CHUNK_ROWS = 1 << 14


@dataclass(frozen=True)
class SubsetLayer:
    """Spectra of every ``k``-subset, in ascending mask order.

    ``coeffs[r, j]`` is the number of orders of subset ``masks[r]`` whose
    consistency is ``offsets[r] + j``; rows are zero-padded to a common width.
    When ``modulus`` is set the coefficients are residues modulo it.
    """

    k: int
    masks: np.ndarray
    offsets: np.ndarray
    degrees: np.ndarray
    coeffs: np.ndarray
    modulus: Optional[int] = None

    def polynomial(self, mask: int) -> list:
        """Coefficients ``[a_0, ..., a_q]`` of ``G(u; mask)`` as Python ints."""
        r = int(np.searchsorted(self.masks, mask))
        if r >= self.masks.size or self.masks[r] != mask:
            raise KeyError(mask)
        off, q = int(self.offsets[r]), int(self.degrees[r])
        run = [int(x) for x in self.coeffs[r, : q - off + 1]]
        return [0] * off + run


def estimate_spectrum_memory(m: int, t: int) -> int:
    """Rough peak bytes held by two adjacent layers of the recursion."""
    half = m // 2
    rows = math.comb(m, half) + math.comb(m, min(half + 1, m))
    passes = 1 if m <= _WORD_SAFE_OBJECTS else 2
    return rows * (t + 1) * 8 * passes


def _check_limit(w: ResultMatrix, max_objects: int):
    if w.m > max_objects:
        est = estimate_spectrum_memory(w.m, w.t)
        raise ResourceLimitError(
            f"slater_spectrum: M={w.m} exceeds the limit of {max_objects} objects "
            f"(estimated peak memory {est / 2**30:.1f} GiB)"
        )


def _resolve_jobs(n_jobs: Optional[int]) -> int:
    if n_jobs is None:
        env = os.environ.get("RANKABILITY_THREADS")
        return max(1, int(env)) if env else 1
    if n_jobs < 0:
        return os.cpu_count() or 1
    return max(1, n_jobs)


def _build_layer(w, m, k, prev: SubsetLayer, rank, n_jobs) -> SubsetLayer:
    masks = subset_index(m).layers[k]
    n = masks.size
    bits = member_matrix(masks, m)
    elems = members_of(bits, k)
    d = np.take_along_axis(cross_weight_table(bits, w), elems, axis=1)
    parents = rank[masks[:, None] ^ (np.int64(1) << elems)]
    q = (d + prev.degrees[parents]).max(axis=1)
    inner = d.sum(axis=1)
    offsets = inner - q
    width = int((q - offsets).max()) + 1
    pw = prev.coeffs.shape[1]
    coeffs = np.zeros((n, width + pw), dtype=np.uint64)
    span = np.arange(pw)
    modulus = prev.modulus

    def fill(lo, hi):
        rows = np.arange(lo, hi)[:, None]
        for j in range(k):
            par = parents[lo:hi, j]
            shift = d[lo:hi, j] + prev.offsets[par] - offsets[lo:hi]
            cols = shift[:, None] + span
            # one parent per row per pass, so the fancy-indexed add never collides
            if modulus is None:
                coeffs[rows, cols] += prev.coeffs[par]
            else:
                acc = coeffs[rows, cols] + prev.coeffs[par]
                acc[acc >= modulus] -= np.uint64(modulus)
                coeffs[rows, cols] = acc

    bounds = [(lo, min(lo + _CHUNK_ROWS, n)) for lo in range(0, n, _CHUNK_ROWS)]
    if n_jobs > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            list(pool.map(lambda b: fill(*b), bounds))
    else:
        for b in bounds:
            fill(*b)
    if np.any(coeffs[:, width:] != 0):
        raise InternalAssertionError(f"spectrum support overflow in layer {k}")
    return SubsetLayer(k, masks, offsets, q, coeffs[:, :width], modulus)


def iter_subset_layers(w, *, max_objects: int = MAX_SPECTRUM_OBJECTS, n_jobs: Optional[int] = None,
                       modulus: Optional[int] = None) -> Iterator[SubsetLayer]:
    """Yield the subset spectra layer by layer, ``k = 1..M``.

    Coefficients are uint64. They are exact while ``M <= 20``; beyond that
    plain uint64 addition wraps (i.e. works modulo ``2**64``), or pass a
    ``modulus`` below ``2**63`` to get residues modulo it.

    Rows within a layer are independent given the previous layer; with
    ``n_jobs > 1`` chunks of rows are filled by a thread pool, each chunk
    writing only its own rows.
    """
    w = ResultMatrix.coerce(w)
    _check_limit(w, max_objects)
    if modulus is not None and not 1 < modulus < 2**63:
        raise InvalidArgumentError("modulus must lie in (1, 2**63)")
    m = w.m
    jobs = _resolve_jobs(n_jobs)
    rank = subset_index(m).rank
    masks = subset_index(m).layers[1]
    zeros = np.zeros(m, dtype=np.int64)
    layer = SubsetLayer(1, masks, zeros, zeros, np.ones((m, 1), dtype=np.uint64), modulus)
    yield layer
    for k in range(2, m + 1):
        layer = _build_layer(w.w, m, k, layer, rank, jobs)
        yield layer


def _top_run(w, modulus, **kw):
    *_, top = iter_subset_layers(w, modulus=modulus, **kw)
    return int(top.offsets[0]), [int(x) for x in top.coeffs[0]]


def slater_spectrum(w, *, max_objects: int = MAX_SPECTRUM_OBJECTS, n_jobs: Optional[int] = None,
                    ) -> SlaterSpectrum:
    """Exact Slater spectrum of ``w``.

    Parameters
    ----------
    w : array-like of shape (M, M) or ResultMatrix
        Win counts.
    max_objects : int, default=22
        Refuse larger problems with :class:`ResourceLimitError`.
    n_jobs : int, optional
        Worker threads for the per-layer fill; ``None`` reads
        ``RANKABILITY_THREADS`` and falls back to 1.

    Returns
    -------
    SlaterSpectrum
    """
    w = ResultMatrix.coerce(w)
    if w.m < 1:
        raise InvalidArgumentError("need at least one object")
    kw = dict(max_objects=max_objects, n_jobs=n_jobs)
    off, run = _top_run(w, None, **kw)
    if w.m > _WORD_SAFE_OBJECTS:
        # counts exceed 64 bits: recombine residues mod 2**64 and mod a prime
        if math.factorial(w.m) >= _PRIME << 64:
            raise ResourceLimitError(f"M={w.m} exceeds the exact residue range")
        off_p, run_p = _top_run(w, _PRIME, **kw)
        if off_p != off:
            raise InternalAssertionError("residue passes disagree on the support")
        inv = pow(1 << 64, -1, _PRIME)
        run = [lo + (((hi - lo) * inv) % _PRIME << 64) for lo, hi in zip(run, run_p)]
    a = [0] * (w.t + 1)
    a[off:off + len(run)] = run
    return SlaterSpectrum(w.t, tuple(a), w.m)
