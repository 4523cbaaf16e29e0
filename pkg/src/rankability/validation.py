"""Input validation helpers.

These mirror the ``sklearn.utils.validation`` helpers: they accept loosely
typed input (nested lists, numpy arrays, :class:`ResultMatrix`) and return a
canonical, validated object or raise :class:`InvalidArgumentError`.
"""

from __future__ import annotations

import numbers

import numpy as np

from .exceptions import InvalidArgumentError


def check_win_matrix(w, *, name="w"):
    """Validate a pairwise win-count matrix and return it as read-only int64.

    Parameters
    ----------
    w : array-like of shape (M, M)
        ``w[m, n]`` is the number of times object ``m`` beat object ``n``.
    name : str
        Used in error messages.

    Returns
    -------
    ndarray of shape (M, M), dtype int64, not writeable.
    """
    try:
        arr = np.asarray(w)
    except Exception as exc:  # ragged nested sequences
        raise InvalidArgumentError(f"{name} is not a matrix: {exc}") from exc
    if arr.dtype == object:
        raise InvalidArgumentError(f"{name} must be a rectangular numeric matrix")
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidArgumentError(f"{name} must be a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise InvalidArgumentError(f"{name} must have at least one object")
    if arr.dtype.kind == "b":
        arr = arr.astype(np.int64)
    elif arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or np.any(arr != np.round(arr)):
            raise InvalidArgumentError(f"{name} entries must be integers")
        arr = arr.astype(np.int64)
    elif arr.dtype.kind not in "iu":
        raise InvalidArgumentError(f"{name} entries must be integers, got dtype {arr.dtype}")
    arr = np.array(arr, dtype=np.int64, copy=True)
    if np.any(arr < 0):
        r, c = np.argwhere(arr < 0)[0]
        raise InvalidArgumentError(f"{name}[{r}, {c}] is negative")
    diag = np.flatnonzero(np.diag(arr))
    if diag.size:
        raise InvalidArgumentError(f"{name}[{diag[0]}, {diag[0]}] is nonzero; the diagonal must be zero")
    arr.setflags(write=False)
    return arr


def check_ranking(rho, m):
    """Return ``rho`` as a tuple of ints after checking it permutes ``range(m)``."""
    try:
        ranking = tuple(int(x) for x in rho)
    except (TypeError, ValueError) as exc:
        raise InvalidArgumentError(f"ranking must be a sequence of integers: {exc}") from exc
    if len(ranking) != m:
        raise InvalidArgumentError(f"ranking has length {len(ranking)} but the matrix has {m} objects")
    if sorted(ranking) != list(range(m)):
        raise InvalidArgumentError(f"ranking {list(ranking)} is not a permutation of 0..{m - 1}")
    return ranking


def check_positive_int(value, name, *, minimum=1):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise InvalidArgumentError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidArgumentError(f"{name} must be >= {minimum}, got {value}")
    return int(value)
