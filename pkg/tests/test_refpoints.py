from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maoea_igd import DegenerateRangeError, LayerConfig, das_dennis, from_utopian, to_utopian, two_layer
from maoea_igd.core import ConfigError
from maoea_igd.refpoints import UTOPIAN, default_layers


def test_das_dennis_examples():
    assert das_dennis(3, 1).points.tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    pts = das_dennis(3, 2).points
    assert len(pts) == 6 and [0.5, 0.5, 0] in pts.tolist()
    assert len(das_dennis(8, 3)) == 120


@pytest.mark.parametrize("m", range(2, 21))
@pytest.mark.parametrize("h", range(1, 7))
def test_das_dennis_count_and_simplex(m, h):
    if comb(h + m - 1, m - 1) > 60_000:
        pytest.skip("lattice too large for a unit test")
    pts = das_dennis(m, h).points
    assert len(pts) == comb(h + m - 1, m - 1)
    assert np.all(pts >= 0)
    np.testing.assert_allclose(pts.sum(axis=1), 1.0, atol=1e-9)
    assert len(np.unique(pts, axis=0)) == len(pts)


def test_das_dennis_order_is_fixed():
    pts = das_dennis(4, 3).points
    keys = [tuple(-v for v in row) for row in pts]
    assert keys == sorted(keys)


@pytest.mark.parametrize("m,layers,count", [(8, (3, 3), 240), (15, (2, 2), 240), (20, (2, 1), 230)])
def test_two_layer_counts(m, layers, count):
    cfg = LayerConfig(*layers)
    assert len(two_layer(m, cfg)) == count == cfg.count(m)
    assert default_layers(m) == cfg


def test_inner_layer_is_strictly_interior():
    cfg = LayerConfig(3, 3)
    pts = two_layer(8, cfg).points
    inner = pts[len(das_dennis(8, 3)) :]
    assert np.all(inner > 0)
    np.testing.assert_allclose(pts.sum(axis=1), 1.0, atol=1e-9)


def test_layer_parse():
    assert LayerConfig.parse("3,2") == LayerConfig(3, 2)
    assert LayerConfig.parse("12") == LayerConfig(12)
    for bad in ("", "a", "1,2,3"):
        with pytest.raises(ConfigError):
            LayerConfig.parse(bad)


def test_to_utopian_examples():
    from maoea_igd.refpoints import ReferencePointSet

    def one(p, ideal, nadir):
        return to_utopian(ReferencePointSet(np.array([p], dtype=float)), ideal, nadir).points[0].tolist()

    assert one([0.5, 0.5], [0, 0], [2, 4]) == [1, 2]
    assert one([1, 0, 0], [0, 0, 0], [1, 1, 1]) == [1, 0, 0]
    assert one([0, 1], [1, 2], [3, 6]) == [1, 6]


def test_to_utopian_rejects_degenerate_range():
    with pytest.raises(DegenerateRangeError, match="objective 1"):
        to_utopian(das_dennis(3, 2), [0, 1, 0], [1, 1, 1])


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_utopian_map_is_invertible_and_bounded(m, h, seed):
    rng = np.random.default_rng(seed)
    ideal = rng.normal(size=m)
    nadir = ideal + rng.uniform(0.1, 5.0, size=m)
    base = das_dennis(m, h)
    mapped = to_utopian(base, ideal, nadir)
    assert mapped.source == UTOPIAN
    assert np.all(mapped.points >= ideal - 1e-12) and np.all(mapped.points <= nadir + 1e-12)
    np.testing.assert_allclose(from_utopian(mapped, ideal, nadir).points, base.points, atol=1e-12)
