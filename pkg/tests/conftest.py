import numpy as np
import pytest
from hypothesis import strategies as st

# four objects, one comparison per pair; rankings below are 1-based
EX1 = np.array([
    [0, 1, 1, 0],
    [0, 0, 1, 1],
    [0, 0, 0, 0],
    [1, 0, 1, 0],
])
EX1_SPECTRUM = (0, 3, 6, 6, 6, 3, 0)
EX1_RANKINGS = {(1, 2, 4, 3), (2, 4, 1, 3), (4, 1, 2, 3)}


def to_zero_based(rankings):
    return {tuple(x - 1 for x in r) for r in rankings}


def random_matrix(rng, m, high=3):
    w = rng.integers(0, high + 1, size=(m, m))
    np.fill_diagonal(w, 0)
    return w


def random_schedule_matrix(rng, m, k=1):
    """Every pair compared ``k`` times with fair coin outcomes."""
    w = np.zeros((m, m), dtype=np.int64)
    iu = np.triu_indices(m, 1)
    wins = rng.binomial(k, 0.5, size=iu[0].size)
    w[iu] = wins
    w[iu[1], iu[0]] = k - wins
    return w


@st.composite
def win_matrices(draw, min_m=1, max_m=6, high=3):
    m = draw(st.integers(min_m, max_m))
    vals = draw(st.lists(st.integers(0, high), min_size=m * m, max_size=m * m))
    w = np.array(vals, dtype=np.int64).reshape(m, m)
    np.fill_diagonal(w, 0)
    return w


@pytest.fixture
def ex1():
    return EX1.copy()


@pytest.fixture
def ex1_file(tmp_path):
    path = tmp_path / "ex1.csv"
    path.write_text("# small example\n" + "\n".join(",".join(map(str, r)) for r in EX1) + "\n")
    return path
