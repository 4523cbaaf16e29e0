import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from conftest import EX1
from rankability import RankabilityEstimator, SlaterFeatures
from rankability.exceptions import InvalidArgumentError
from rankability.sim import generate_league


def test_single_matrix_fit():
    est = RankabilityEstimator(find_rankings=True).fit(EX1)
    assert est.spectra_[0].a == (0, 3, 6, 6, 6, 3, 0)
    assert len(est.rankings_[0]) == 3
    assert est.lambda_joint_ == pytest.approx(5 / 6)
    assert est.n_matrices_ == 1


def test_params_and_clone():
    est = RankabilityEstimator(grid_points=501)
    assert est.get_params()["grid_points"] == 501
    assert clone(est).set_params(n_jobs=2).n_jobs == 2


def test_predict_and_not_fitted():
    league = generate_league(8, 0.95, 3, seed=2)
    est = RankabilityEstimator()
    with pytest.raises(NotFittedError):
        est.predict(league)
    est.fit(league)
    assert est.predict(league).all()
    assert est.is_rankable()


def test_rejects_bad_input():
    with pytest.raises(InvalidArgumentError):
        RankabilityEstimator().fit([])
    with pytest.raises(InvalidArgumentError):
        RankabilityEstimator().fit(np.zeros((3, 3), int))


def test_features_in_pipeline():
    league = generate_league(7, 0.8, 4, seed=3)
    feats = SlaterFeatures().fit_transform(league)
    assert feats.shape == (4, 7)
    assert list(SlaterFeatures().fit(league).get_feature_names_out())[:2] == ["t", "s_hat"]
    assert np.all(feats[:, 0] == 42)
    out = make_pipeline(SlaterFeatures(), StandardScaler()).fit_transform(league)
    assert out.shape == (4, 7)
