"""Hypervolume: exact computation for few objectives, Monte Carlo otherwise."""

from __future__ import annotations

import numpy as np

from ..core import ConfigError, DimensionError
from ..problems import parse_problem_id

MAX_EXACT_OBJECTIVES = 8
# hv_normalized switches to sampling above this; exact cost grows steeply with m
NORMALIZED_EXACT_OBJECTIVES = 5
DEFAULT_SAMPLES = 1_000_000
_CHUNK = 100_000


class UseMonteCarlo(ConfigError):
    """Exact hypervolume requested for too many objectives."""


def _prepare(front, ref_point) -> tuple[np.ndarray, np.ndarray]:
    ref = np.asarray(ref_point, dtype=float)
    Y = np.asarray(front, dtype=float)
    if Y.size == 0:
        return np.empty((0, len(ref))), ref
    if Y.ndim == 1:
        Y = Y[None, :]
    if Y.shape[1] != len(ref):
        raise DimensionError(f"front dimension {Y.shape[1]} != reference point dimension {len(ref)}")
    # only points strictly better than the reference point in every objective add volume
    return Y[np.all(Y < ref, axis=1)], ref


def _sweep_2d(P: np.ndarray, ref: np.ndarray) -> float:
    # strips between consecutive x values, each as tall as the best y so far
    P = P[np.argsort(P[:, 0], kind="stable")]
    x = np.append(P[:, 0], ref[0])
    best_y = np.minimum.accumulate(P[:, 1])
    return float(np.sum(np.diff(x) * (ref[1] - best_y)))


def _sweep_3d(P: np.ndarray, ref: np.ndarray) -> float:
    # slabs between consecutive first-objective values, each with the 2-D
    # area of the points already passed
    P = P[np.argsort(P[:, 0], kind="stable")]
    z = np.append(P[:, 0], ref[0])
    total = 0.0
    for k in range(len(P)):
        depth = z[k + 1] - z[k]
        if depth > 0:
            total += depth * _sweep_2d(P[: k + 1, 1:], ref[1:])
    return total


def _nondominated(P: np.ndarray) -> np.ndarray:
    # one pairwise pass; of several identical points only the first is kept
    if len(P) < 2:
        return P
    le = np.all(P[:, None, :] <= P[None, :, :], axis=2)  # le[j, i]: P[j] weakly dominates P[i]
    same = le & le.T
    beaten = np.any(le & ~same, axis=0) | np.any(np.triu(same, k=1), axis=0)
    return P[~beaten]


def _volume(P: np.ndarray, ref: np.ndarray) -> float:
    # P is a non-dominated set strictly inside the reference box
    n, d = P.shape
    if n == 0:
        return 0.0
    if n == 1:
        return float(np.prod(ref - P[0]))
    if d == 1:
        return float(ref[0] - P[:, 0].min())
    if d == 2:
        return _sweep_2d(P, ref)
    if d == 3:
        return _sweep_3d(P, ref)
    # Sum exclusive contributions in descending order of the first objective.
    # Every later point is no worse there, so the part of a point's box not
    # covered by later points is a slab of width ref_0 - p_0 over a (d-1)-D
    # exclusive region, computed from the limit set of the later points.
    P = P[np.argsort(-P[:, 0], kind="stable")]
    total = 0.0
    for k in range(n):
        p = P[k]
        inner = float(np.prod(ref[1:] - p[1:]))
        later = P[k + 1 :, 1:]
        if len(later):
            limit = _nondominated(np.maximum(later, p[1:]))
            inner -= _volume(limit, ref[1:])
        total += (ref[0] - p[0]) * inner
    return total


def hv_exact(front, ref_point) -> float:
    """Volume dominated by ``front`` and bounded by ``ref_point`` (minimization).

    Points that do not strictly dominate the reference point are discarded.
    Limited to ``MAX_EXACT_OBJECTIVES`` objectives.
    """
    Y, ref = _prepare(front, ref_point)
    if len(ref) > MAX_EXACT_OBJECTIVES:
        raise UseMonteCarlo(
            f"exact hypervolume supports at most {MAX_EXACT_OBJECTIVES} objectives, got {len(ref)}; use hv_monte_carlo"
        )
    if len(Y) == 0:
        return 0.0
    return _volume(_nondominated(Y), ref)


def hv_monte_carlo(
    front,
    ref_point,
    rng: np.random.Generator,
    lower=None,
    samples: int = DEFAULT_SAMPLES,
) -> float:
    """Estimate hypervolume from uniform samples in the box ``[lower, ref_point]``.

    ``lower`` defaults to the origin.
    """
    Y, ref = _prepare(front, ref_point)
    lo = np.zeros_like(ref) if lower is None else np.asarray(lower, dtype=float)
    if lo.shape != ref.shape:
        raise DimensionError("lower corner and reference point must share one length")
    if not np.all(lo < ref):
        raise ConfigError("lower corner must lie strictly below the reference point")
    if samples < 1:
        raise ConfigError("need at least one sample")
    if len(Y) == 0:
        return 0.0
    Y = _nondominated(Y)
    width = ref - lo
    hits = 0
    for start in range(0, samples, _CHUNK):
        size = min(_CHUNK, samples - start)
        S = lo + rng.random((size, len(ref))) * width
        covered = np.zeros(size, dtype=bool)
        for y in Y:
            covered |= np.all(y <= S, axis=1)
        hits += int(covered.sum())
    return hits / samples * float(np.prod(width))


def hv_reference_point(problem_id: str, m: int) -> np.ndarray:
    """Reference point of the normalized-hypervolume protocol for a benchmark."""
    family, index = parse_problem_id(problem_id)
    if family == "DTLZ" and index == 1:
        return np.ones(m)
    if family == "DTLZ" and index <= 6:
        return np.full(m, 2.0)
    return 2.0 * np.arange(1, m + 1) + 1.0


def hv_normalized(
    front,
    problem_id: str,
    m: int,
    rng: np.random.Generator | None = None,
    samples: int = DEFAULT_SAMPLES,
) -> float:
    """Hypervolume divided by the volume of the box between the origin and the reference point.

    Exact for ``m <= NORMALIZED_EXACT_OBJECTIVES``, Monte Carlo above (seeded with 0
    when no generator is passed, so the value is repeatable).
    """
    ref = hv_reference_point(problem_id, m)
    if m <= NORMALIZED_EXACT_OBJECTIVES:
        volume = hv_exact(front, ref)
    else:
        if rng is None:
            rng = np.random.Generator(np.random.Philox(0))
        volume = hv_monte_carlo(front, ref, rng, samples=samples)
    return float(min(max(volume / np.prod(ref), 0.0), 1.0))
