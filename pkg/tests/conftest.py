import numpy as np
import pytest

from powertour.geometry import point_set


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def square_corners():
    return point_set([[0, 0], [1, 0], [1, 1], [0, 1]])


def random_points(seed: int, n: int, k: int):
    gen = np.random.default_rng(np.random.SeedSequence([seed, n, k]))
    return point_set(gen.uniform(size=(n, k)))
