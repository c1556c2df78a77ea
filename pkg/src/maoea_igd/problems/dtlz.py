"""DTLZ1-DTLZ7 scalable test problems (Deb, Thiele, Laumanns, Zitzler 2005).

Each problem has ``n = k + m - 1`` variables in ``[0, 1]``; the last ``k``
form the distance vector fed to ``g``.
"""

from __future__ import annotations

import numpy as np

from ..core import ConfigError, Problem

DEFAULT_K = {1: 5, 2: 10, 3: 10, 4: 10, 5: 10, 6: 10, 7: 20}


def _g_multimodal(xm: np.ndarray) -> np.ndarray:
    k = xm.shape[1]
    return 100.0 * (k + np.sum((xm - 0.5) ** 2 - np.cos(20.0 * np.pi * (xm - 0.5)), axis=1))


def _g_sphere(xm: np.ndarray) -> np.ndarray:
    return np.sum((xm - 0.5) ** 2, axis=1)


def _spherical(theta: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Map ``m - 1`` angles (radians) and ``g`` onto a scaled unit-sphere point."""
    q, m1 = theta.shape
    m = m1 + 1
    cos = np.cos(theta)
    sin = np.sin(theta)
    F = np.empty((q, m))
    for i in range(m):
        # objective i uses cos of the first m-1-i angles, then sin of the next
        f = np.prod(cos[:, : m - 1 - i], axis=1)
        if i > 0:
            f = f * sin[:, m - 1 - i]
        F[:, i] = f
    return (1.0 + g)[:, None] * F


def _linear(x: np.ndarray, g: np.ndarray) -> np.ndarray:
    q, m1 = x.shape
    m = m1 + 1
    F = np.empty((q, m))
    for i in range(m):
        f = np.prod(x[:, : m - 1 - i], axis=1)
        if i > 0:
            f = f * (1.0 - x[:, m - 1 - i])
        F[:, i] = f
    return 0.5 * (1.0 + g)[:, None] * F


class DTLZ(Problem):
    index: int = 0

    def __init__(self, m: int, k: int | None = None):
        k = DEFAULT_K[self.index] if k is None else int(k)
        if k < 1:
            raise ConfigError("DTLZ needs at least one distance variable")
        self.k = k
        n = k + m - 1
        super().__init__(m, np.zeros(n), np.ones(n), **self._known_points(m))
        self.name = f"dtlz{self.index}"

    def _known_points(self, m: int) -> dict:
        return {}

    def _split(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return X[:, : self.m - 1], X[:, self.m - 1 :]


class DTLZ1(DTLZ):
    index = 1

    def _known_points(self, m):
        return {"known_ideal": np.zeros(m), "known_nadir": np.full(m, 0.5)}

    def _evaluate(self, X):
        xp, xm = self._split(X)
        return _linear(xp, _g_multimodal(xm))


class DTLZ2(DTLZ):
    index = 2

    def _known_points(self, m):
        return {"known_ideal": np.zeros(m), "known_nadir": np.ones(m)}

    def _evaluate(self, X):
        xp, xm = self._split(X)
        return _spherical(xp * (np.pi / 2), _g_sphere(xm))


class DTLZ3(DTLZ):
    index = 3

    def _evaluate(self, X):
        xp, xm = self._split(X)
        return _spherical(xp * (np.pi / 2), _g_multimodal(xm))


class DTLZ4(DTLZ):
    index = 4
    alpha = 100.0

    def _evaluate(self, X):
        xp, xm = self._split(X)
        return _spherical(xp**self.alpha * (np.pi / 2), _g_sphere(xm))


class DTLZ5(DTLZ):
    index = 5

    def _g(self, xm):
        return _g_sphere(xm)

    def _evaluate(self, X):
        xp, xm = self._split(X)
        g = self._g(xm)
        theta = np.empty_like(xp)
        theta[:, 0] = xp[:, 0] * (np.pi / 2)
        theta[:, 1:] = (np.pi / (4.0 * (1.0 + g)))[:, None] * (1.0 + 2.0 * g[:, None] * xp[:, 1:])
        return _spherical(theta, g)


class DTLZ6(DTLZ5):
    index = 6

    def _g(self, xm):
        return np.sum(xm**0.1, axis=1)


class DTLZ7(DTLZ):
    index = 7

    def _evaluate(self, X):
        xp, xm = self._split(X)
        g = 1.0 + 9.0 / self.k * np.sum(xm, axis=1)
        h = self.m - np.sum(xp / (1.0 + g)[:, None] * (1.0 + np.sin(3.0 * np.pi * xp)), axis=1)
        return np.column_stack([xp, (1.0 + g) * h])


DTLZ_CLASSES = {cls.index: cls for cls in (DTLZ1, DTLZ2, DTLZ3, DTLZ4, DTLZ5, DTLZ6, DTLZ7)}
