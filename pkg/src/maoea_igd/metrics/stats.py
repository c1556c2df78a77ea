"""Wilcoxon rank-sum (Mann-Whitney U) test."""

from __future__ import annotations

from math import comb, erfc, sqrt

import numpy as np

from ..core import ConfigError

# both samples at most this large use the exact null distribution
EXACT_MAX_SIZE = 20


def _midranks(values: np.ndarray) -> np.ndarray:
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values))
    sorted_vals = values[order]
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _exact_p(doubled: np.ndarray, n1: int, observed: int) -> float:
    # count size-n1 subsets of the pooled (doubled) midranks by their sum
    top = int(doubled.sum())
    counts = np.zeros((n1 + 1, top + 1), dtype=np.int64)
    counts[0, 0] = 1
    for r in doubled:
        r = int(r)
        counts[1:, r:] += counts[:-1, : top + 1 - r].copy()
    dist = counts[n1]
    N = len(doubled)
    centre = n1 * (N + 1)  # twice the null mean of the rank sum
    sums = np.arange(top + 1)
    extreme = np.abs(sums - centre) >= abs(observed - centre)
    return min(1.0, int(dist[extreme].sum()) / comb(N, n1))


def rank_sum_test(sample_a, sample_b) -> tuple[float, float]:
    """U statistic of ``sample_a`` and the two-sided p-value.

    ``U`` counts pairs where the ``a`` value is larger, ties as one half.
    The p-value is exact (tie-aware enumeration of the null distribution)
    when both samples have at most ``EXACT_MAX_SIZE`` values, otherwise a
    normal approximation with tie and continuity correction.
    """
    a = np.asarray(sample_a, dtype=float).ravel()
    b = np.asarray(sample_b, dtype=float).ravel()
    n1, n2 = len(a), len(b)
    if n1 < 2 or n2 < 2:
        raise ConfigError("rank-sum test needs at least two values per sample")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ConfigError("rank-sum test needs finite values")
    pooled = np.concatenate([a, b])
    ranks = _midranks(pooled)
    rank_sum = float(ranks[:n1].sum())
    u = rank_sum - n1 * (n1 + 1) / 2.0
    if np.all(pooled == pooled[0]):
        return u, 1.0
    N = n1 + n2
    if n1 <= EXACT_MAX_SIZE and n2 <= EXACT_MAX_SIZE:
        doubled = np.rint(2.0 * ranks).astype(np.int64)
        return u, _exact_p(doubled, n1, int(doubled[:n1].sum()))
    _, ties = np.unique(pooled, return_counts=True)
    tie_term = float(np.sum(ties**3 - ties)) / (N * (N - 1))
    var = n1 * n2 / 12.0 * ((N + 1) - tie_term)
    if var <= 0:
        return u, 1.0
    z = max(abs(u - n1 * n2 / 2.0) - 0.5, 0.0) / sqrt(var)
    return u, min(1.0, erfc(z / sqrt(2.0)))
