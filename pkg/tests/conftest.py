import numpy as np
import pytest

from maoea_igd import RandomSource


@pytest.fixture
def rng():
    return RandomSource(12345)


def random_front(rng: np.random.Generator, count: int, m: int) -> np.ndarray:
    """Points on the positive unit sphere, a convenient mutually non-dominated set."""
    Y = np.abs(rng.standard_normal((count, m)))
    return Y / np.linalg.norm(Y, axis=1, keepdims=True)
