"""scikit-learn style wrappers.

``X`` is always a sequence of square observation matrices, one per sample,
so a league history reads as a dataset with one row per season. A single 2-D
matrix is accepted as a dataset of one.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import MAX_SPECTRUM_OBJECTS, all_optimal_rankings, slater_spectrum
from .core.types import ResultMatrix
from .exceptions import InvalidArgumentError
from .inference import degenerate_summary, joint_posterior, lambda_joint, summarize
from .inference.posterior import DEFAULT_GRID_POINTS
from .validation import check_win_matrix


def check_matrices(X) -> list:
    """Validate ``X`` into a list of :class:`ResultMatrix`."""
    if isinstance(X, ResultMatrix):
        return [X]
    if isinstance(X, np.ndarray) and X.ndim == 2:
        return [ResultMatrix(check_win_matrix(X, name="X"))]
    if isinstance(X, np.ndarray) and X.ndim == 3:
        X = list(X)
    try:
        items = list(X)
    except TypeError:
        raise InvalidArgumentError("X must be a matrix or a sequence of matrices") from None
    if not items:
        raise InvalidArgumentError("X contains no matrices")
    if np.ndim(items[0]) == 1:
        return [ResultMatrix(check_win_matrix(np.asarray(items), name="X"))]
    return [m if isinstance(m, ResultMatrix) else ResultMatrix(check_win_matrix(m, name=f"X[{i}]"))
            for i, m in enumerate(items)]


class RankabilityEstimator(BaseEstimator):
    """Per-matrix and pooled posterior of the consistency parameter ``p``.

    Parameters
    ----------
    find_rankings : bool
        Also enumerate every optimal ranking of each matrix.
    grid_points : int
        Resolution of the pooled posterior grid on ``[0.5, 1]``.
    max_objects : int
        Largest matrix accepted by the spectrum computation.
    n_jobs : int or None
        Worker threads for the spectrum; ``None`` reads ``RANKABILITY_THREADS``.

    Attributes
    ----------
    spectra_ : list of SlaterSpectrum
    summaries_ : list of PosteriorSummary
    rankings_ : list of RankingSet or None
    mode_, mean_ : float
        Pooled posterior mode and mean.
    lambda_joint_ : float
    """

    def __init__(self, find_rankings=False, grid_points=DEFAULT_GRID_POINTS,
                 max_objects=MAX_SPECTRUM_OBJECTS, n_jobs=None):
        self.find_rankings = find_rankings
        self.grid_points = grid_points
        self.max_objects = max_objects
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        mats = check_matrices(X)
        if any(w.t == 0 for w in mats):
            raise InvalidArgumentError("every matrix needs at least one comparison")
        self.spectra_ = [slater_spectrum(w, max_objects=self.max_objects, n_jobs=self.n_jobs) for w in mats]
        self.summaries_ = [summarize(s) for s in self.spectra_]
        self.degenerate_ = [degenerate_summary(s) for s in self.spectra_]
        self.rankings_ = [all_optimal_rankings(w) for w in mats] if self.find_rankings else None
        self.s_hat_ = np.array([s.s_hat for s in self.spectra_])
        self.t_ = np.array([s.t for s in self.spectra_])
        jp = joint_posterior(self.spectra_, self.grid_points)
        self.joint_ = jp
        self.mode_, self.mode_status_, self.mean_ = jp.mode, jp.mode_status, jp.mean
        self.lambda_joint_ = lambda_joint(list(self.s_hat_), list(self.t_))
        self.n_matrices_ = len(mats)
        return self

    def predict(self, X):
        """Per-matrix rankability flag: posterior mode above 0.5."""
        check_is_fitted(self, "spectra_")
        mats = check_matrices(X)
        return np.array([summarize(slater_spectrum(w, max_objects=self.max_objects, n_jobs=self.n_jobs)).mode > 0.5
                         if w.t else False for w in mats])

    def is_rankable(self) -> bool:
        """Whether the pooled posterior peaks above 0.5."""
        check_is_fitted(self, "spectra_")
        return self.mode_ > 0.5


class SlaterFeatures(TransformerMixin, BaseEstimator):
    """Map each observation matrix to a fixed row of rankability features.

    Columns are listed by :meth:`get_feature_names_out`. Stateless: ``fit``
    only records the feature count.
    """

    _names = ("t", "s_hat", "lambda", "mode", "mean", "sigma_sign", "lambda_th")

    def __init__(self, max_objects=MAX_SPECTRUM_OBJECTS, n_jobs=None):
        self.max_objects = max_objects
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        check_matrices(X)
        self.n_features_out_ = len(self._names)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        rows = []
        for w in check_matrices(X):
            if w.t == 0:
                rows.append([0, 0, np.nan, 0.5, 0.75, 0, np.nan])
                continue
            s = slater_spectrum(w, max_objects=self.max_objects, n_jobs=self.n_jobs)
            summ = summarize(s)
            deg = degenerate_summary(s)
            rows.append([s.t, s.s_hat, summ.lambda_, summ.mode, summ.mean, np.sign(summ.sigma), deg.lambda_th])
        return np.array(rows, dtype=np.float64)

    def get_feature_names_out(self, input_features=None):
        return np.array(self._names, dtype=object)
