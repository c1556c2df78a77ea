import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maoea_igd import ConfigError, DimensionError, RandomSource, hv_exact, hv_monte_carlo, hv_normalized, igd, igd_plus
from maoea_igd.metrics import IndicatorResult, UseMonteCarlo, hv_reference_point, rank_sum_test

from conftest import random_front

CORNERS = [[0.0, 1.0], [1.0, 0.0]]


def test_igd_examples():
    assert igd(CORNERS, CORNERS) == 0 and igd_plus(CORNERS, CORNERS) == 0
    assert igd(CORNERS, [[1.0, 1.0]]) == pytest.approx(1.0)
    assert igd(CORNERS, [[0.5, 0.5]], plus=True) == pytest.approx(0.5)


def test_igd_errors():
    with pytest.raises(ValueError):
        igd(CORNERS, np.empty((0, 2)))
    with pytest.raises(DimensionError):
        igd(CORNERS, [[1.0, 1.0, 1.0]])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 5))
def test_igd_plus_never_exceeds_igd(seed, m):
    rng = np.random.default_rng(seed)
    R = rng.random((int(rng.integers(1, 30)), m))
    F = rng.random((int(rng.integers(1, 30)), m)) * 1.5
    assert igd_plus(R, F) <= igd(R, F) + 1e-12


def inclusion_exclusion(front: np.ndarray, ref: np.ndarray) -> float:
    pts = [p for p in front if np.all(p < ref)]
    total = 0.0
    for r in range(1, len(pts) + 1):
        for combo in itertools.combinations(pts, r):
            corner = np.max(combo, axis=0)
            total += (-1) ** (r + 1) * np.prod(ref - corner)
    return total


def test_hv_examples():
    assert hv_exact([[1, 1]], [2, 2]) == pytest.approx(1.0)
    assert hv_exact([[1, 1], [1.5, 1.5]], [2, 2]) == pytest.approx(1.0)
    assert hv_exact([[3, 3]], [2, 2]) == 0


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_hv_matches_inclusion_exclusion(m, rng):
    for _ in range(8):
        front = rng.integers(0, 5, size=(int(rng.integers(1, 9)), m)) / 4
        ref = np.full(m, 1.1)
        assert hv_exact(front, ref) == pytest.approx(inclusion_exclusion(front, ref), rel=1e-12, abs=1e-12)


def test_dominated_point_leaves_hv_unchanged(rng):
    front = random_front(rng, 20, 4)
    ref = np.full(4, 2.0)
    extra = np.vstack([front, front[3] + 0.1])
    assert hv_exact(extra, ref) == pytest.approx(hv_exact(front, ref), rel=1e-12)


def test_exact_hv_refuses_many_objectives():
    with pytest.raises(UseMonteCarlo):
        hv_exact(np.zeros((1, 9)), np.ones(9))


def test_monte_carlo_examples():
    rng = RandomSource(0)
    assert hv_monte_carlo(np.empty((0, 3)), np.ones(3), rng, samples=1000) == 0
    assert hv_monte_carlo([[0, 0, 0]], [2, 3, 4], rng, samples=1000) == pytest.approx(24.0)


def test_monte_carlo_converges(rng):
    front = random_front(rng, 30, 3)
    exact = hv_exact(front, np.full(3, 1.5))
    estimate = hv_monte_carlo(front, np.full(3, 1.5), RandomSource(1), samples=400_000)
    assert abs(estimate - exact) / exact < 0.02


def test_normalized_hv():
    assert hv_normalized([[0, 0]], "dtlz2", 2) == pytest.approx(1.0)
    assert hv_reference_point("dtlz7", 3).tolist() == [3, 5, 7]
    assert hv_reference_point("dtlz1", 3).tolist() == [1, 1, 1]
    front = random_front(np.random.default_rng(0), 40, 3)
    assert 0 < hv_normalized(front, "dtlz2", 3) <= 1
    with pytest.raises(ConfigError):
        hv_normalized(front, "zdt1", 3)


def test_indicator_result_validation():
    IndicatorResult("igd", 0.2)
    with pytest.raises(ValueError):
        IndicatorResult("hv_normalized", 1.5)
    with pytest.raises(ValueError):
        IndicatorResult("spread", 0.1)


def brute_rank_sum(a, b):
    pooled = np.concatenate([a, b])
    order = np.argsort(pooled, kind="stable")
    ranks = np.empty(len(pooled))
    sorted_vals = pooled[order]
    i = 0
    while i < len(pooled):
        j = i
        while j + 1 < len(pooled) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2 + 1
        i = j + 1
    n1 = len(a)
    centre = n1 * (len(pooled) + 1) / 2
    observed = ranks[:n1].sum()
    sums = [ranks[list(c)].sum() for c in itertools.combinations(range(len(pooled)), n1)]
    hits = sum(abs(s - centre) >= abs(observed - centre) - 1e-9 for s in sums)
    return observed - n1 * (n1 + 1) / 2, min(1.0, hits / len(sums))


def test_rank_sum_examples():
    u, p = rank_sum_test([1, 2], [3, 4])
    assert u == 0 and p == pytest.approx(1 / 3, abs=1e-12)
    assert rank_sum_test([5, 5, 5], [5, 5, 5])[1] == 1
    assert rank_sum_test(np.arange(1, 31), np.arange(31, 61))[1] < 0.001


def test_rank_sum_matches_enumeration(rng):
    for n1, n2 in [(2, 3), (4, 4), (5, 3), (6, 6)]:
        for _ in range(5):
            a = rng.integers(0, 5, n1).astype(float)
            b = rng.integers(0, 5, n2).astype(float)
            u, p = rank_sum_test(a, b)
            eu, ep = brute_rank_sum(a, b)
            assert u == pytest.approx(eu, abs=1e-12) and p == pytest.approx(ep, abs=1e-12)


def test_rank_sum_rejects_tiny_or_nonfinite_samples():
    with pytest.raises(ConfigError):
        rank_sum_test([1.0], [2.0, 3.0])
    with pytest.raises(ConfigError):
        rank_sum_test([1.0, np.nan], [2.0, 3.0])
