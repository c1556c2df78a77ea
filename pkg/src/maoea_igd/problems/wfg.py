"""WFG1-WFG9 test problems (Huband, Hingston, Barone, While 2006).

Variable ``i`` (0-based) ranges over ``[0, 2(i+1)]``. ``k`` position and
``l`` distance parameters; defaults are ``k = m - 1`` and ``l = 20``.
"""

from __future__ import annotations

import numpy as np

from ..core import ConfigError, Problem

_EPS = 1e-12


def _clamp01(y: np.ndarray) -> np.ndarray:
    # only absorbs round-off; anything further out is left visible
    y = np.where((y < 0.0) & (y >= -_EPS), 0.0, y)
    return np.where((y > 1.0) & (y <= 1.0 + _EPS), 1.0, y)


# -- transformations ---------------------------------------------------------


def s_linear(y, A):
    return _clamp01(np.abs(y - A) / np.abs(np.floor(A - y) + A))


def s_decept(y, A, B, C):
    tmp1 = np.floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B)
    tmp2 = np.floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B)
    return _clamp01(1.0 + (np.abs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B))


def s_multi(y, A, B, C):
    tmp1 = np.abs(y - C) / (2.0 * (np.floor(C - y) + C))
    tmp2 = (4.0 * A + 2.0) * np.pi * (0.5 - tmp1)
    return _clamp01((1.0 + np.cos(tmp2) + 4.0 * B * tmp1**2) / (B + 2.0))


def b_poly(y, alpha):
    return _clamp01(y**alpha)


def b_flat(y, A, B, C):
    out = (
        A
        + np.minimum(0.0, np.floor(y - B)) * A * (B - y) / B
        - np.minimum(0.0, np.floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C)
    )
    return _clamp01(out)


def b_param(y, u, A, B, C):
    exponent = B + (C - B) * (A - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + A))
    return _clamp01(y**exponent)


def r_sum(y, w):
    # elementwise sum, not a matmul: BLAS results can vary with the batch shape
    w = np.asarray(w, dtype=float)
    return _clamp01(np.sum(y * w, axis=1) / w.sum())


def r_nonsep(y, A):
    s = y.shape[1]
    A = int(A)
    total = np.zeros(len(y))
    for j in range(s):
        total += y[:, j]
        for k in range(A - 1):
            total += np.abs(y[:, j] - y[:, (j + k + 1) % s])
    half = int(np.ceil(A / 2.0))
    return _clamp01(total / (s / A * half * (1.0 + 2.0 * A - 2.0 * half)))


# -- shapes --------------------------------------------------------------------
# ``x`` holds the m-1 position values after the final mapping; each function
# returns the (q, m) matrix of shape values h_1..h_m.


def _shape_products(x, first, second, last):
    q, m1 = x.shape
    m = m1 + 1
    H = np.empty((q, m))
    for i in range(m - 1):
        h = np.prod(first(x[:, : m - 1 - i]), axis=1)
        if i > 0:
            h = h * second(x[:, m - 1 - i])
        H[:, i] = h
    H[:, m - 1] = last(x)
    return H


def shape_linear(x):
    return _shape_products(x, lambda a: a, lambda a: 1.0 - a, lambda a: 1.0 - a[:, 0])


def shape_convex(x):
    return _shape_products(
        x,
        lambda a: 1.0 - np.cos(a * np.pi / 2),
        lambda a: 1.0 - np.sin(a * np.pi / 2),
        lambda a: 1.0 - np.sin(a[:, 0] * np.pi / 2),
    )


def shape_concave(x):
    return _shape_products(
        x,
        lambda a: np.sin(a * np.pi / 2),
        lambda a: np.cos(a * np.pi / 2),
        lambda a: np.cos(a[:, 0] * np.pi / 2),
    )


def shape_mixed(x1, alpha=1.0, A=5.0):
    return (1.0 - x1 - np.cos(2.0 * A * np.pi * x1 + np.pi / 2) / (2.0 * A * np.pi)) ** alpha


def shape_disc(x1, alpha=1.0, beta=1.0, A=5.0):
    return 1.0 - x1**alpha * np.cos(A * x1**beta * np.pi) ** 2


# -- problems ------------------------------------------------------------------


class WFG(Problem):
    index: int = 0

    def __init__(self, m: int, k: int | None = None, l: int = 20):
        k = m - 1 if k is None else int(k)
        if m < 2:
            raise ConfigError("WFG needs at least two objectives")
        if k < 1 or k % (m - 1) != 0:
            raise ConfigError(f"position count k={k} must be a positive multiple of m-1={m - 1}")
        if l < 1:
            raise ConfigError("WFG needs at least one distance parameter")
        self.k = k
        self.l = int(l)
        n = k + self.l
        self.S = 2.0 * np.arange(1, m + 1)
        self.A = np.ones(m - 1)
        super().__init__(m, np.zeros(n), 2.0 * np.arange(1, n + 1), **self._known_points(m))
        self.name = f"wfg{self.index}"

    def _known_points(self, m: int) -> dict:
        return {}

    def _position_groups(self, y):
        gap = self.k // (self.m - 1)
        return [y[:, i * gap : (i + 1) * gap] for i in range(self.m - 1)]

    def _sum_reduce(self, y):
        distance = y[:, self.k :]
        cols = [r_sum(g, np.ones(g.shape[1])) for g in self._position_groups(y)]
        cols.append(r_sum(distance, np.ones(distance.shape[1])))
        return np.column_stack(cols)

    def _nonsep_reduce(self, y):
        gap = self.k // (self.m - 1)
        cols = [r_nonsep(g, gap) for g in self._position_groups(y)]
        cols.append(r_nonsep(y[:, self.k :], self.l))
        return np.column_stack(cols)

    def _finish(self, t, shapes):
        # t holds m underlying parameters; the last is the distance parameter
        xm = t[:, -1]
        x = np.maximum(xm[:, None], self.A) * (t[:, :-1] - 0.5) + 0.5
        H = shapes(x)
        return xm[:, None] + self.S * H

    def _normalise(self, X):
        return _clamp01(X / self.upper)


class WFG1(WFG):
    index = 1

    def _evaluate(self, X):
        y = self._normalise(X)
        k = self.k
        y[:, k:] = s_linear(y[:, k:], 0.35)
        y[:, k:] = b_flat(y[:, k:], 0.8, 0.75, 0.85)
        y = b_poly(y, 0.02)
        w = 2.0 * np.arange(1, self.n + 1)
        gap = k // (self.m - 1)
        cols = [r_sum(y[:, i * gap : (i + 1) * gap], w[i * gap : (i + 1) * gap]) for i in range(self.m - 1)]
        cols.append(r_sum(y[:, k:], w[k:]))
        t = np.column_stack(cols)

        def shapes(x):
            H = shape_convex(x)
            H[:, -1] = shape_mixed(x[:, 0], alpha=1.0, A=5.0)
            return H

        return self._finish(t, shapes)


class WFG2(WFG):
    index = 2

    def __init__(self, m: int, k: int | None = None, l: int = 20):
        if l % 2:
            raise ConfigError(f"{type(self).__name__} needs an even number of distance parameters")
        super().__init__(m, k, l)

    def _known_points(self, m):
        if type(self) is WFG2:
            return {"known_ideal": np.zeros(m), "known_nadir": 2.0 * np.arange(1, m + 1)}
        return {}

    def _transform(self, X):
        y = self._normalise(X)
        k = self.k
        y[:, k:] = s_linear(y[:, k:], 0.35)
        pairs = [r_nonsep(y[:, k + 2 * j : k + 2 * j + 2], 2) for j in range(self.l // 2)]
        y = np.column_stack([y[:, :k]] + pairs)
        return self._sum_reduce(y)

    def _evaluate(self, X):
        def shapes(x):
            H = shape_convex(x)
            H[:, -1] = shape_disc(x[:, 0], alpha=1.0, beta=1.0, A=5.0)
            return H

        return self._finish(self._transform(X), shapes)


class WFG3(WFG2):
    index = 3

    def __init__(self, m: int, k: int | None = None, l: int = 20):
        super().__init__(m, k, l)
        self.A[1:] = 0.0

    def _evaluate(self, X):
        return self._finish(self._transform(X), shape_linear)


class WFG4(WFG):
    index = 4

    def _evaluate(self, X):
        y = s_multi(self._normalise(X), 30.0, 10.0, 0.35)
        return self._finish(self._sum_reduce(y), shape_concave)


class WFG5(WFG):
    index = 5

    def _evaluate(self, X):
        y = s_decept(self._normalise(X), 0.35, 0.001, 0.05)
        return self._finish(self._sum_reduce(y), shape_concave)


class WFG6(WFG):
    index = 6

    def _evaluate(self, X):
        y = self._normalise(X)
        y[:, self.k :] = s_linear(y[:, self.k :], 0.35)
        return self._finish(self._nonsep_reduce(y), shape_concave)


_PARAM = (0.98 / 49.98, 0.02, 50.0)


class WFG7(WFG):
    index = 7

    def _evaluate(self, X):
        y0 = self._normalise(X)
        y = y0.copy()
        for i in range(self.k):
            rest = y0[:, i + 1 :]
            y[:, i] = b_param(y0[:, i], r_sum(rest, np.ones(rest.shape[1])), *_PARAM)
        y[:, self.k :] = s_linear(y[:, self.k :], 0.35)
        return self._finish(self._sum_reduce(y), shape_concave)


class WFG8(WFG):
    index = 8

    def _evaluate(self, X):
        y0 = self._normalise(X)
        y = y0.copy()
        for i in range(self.k, self.n):
            head = y0[:, :i]
            y[:, i] = b_param(y0[:, i], r_sum(head, np.ones(i)), *_PARAM)
        y[:, self.k :] = s_linear(y[:, self.k :], 0.35)
        return self._finish(self._sum_reduce(y), shape_concave)


class WFG9(WFG):
    index = 9

    def _evaluate(self, X):
        y0 = self._normalise(X)
        y = y0.copy()
        for i in range(self.n - 1):
            rest = y0[:, i + 1 :]
            y[:, i] = b_param(y0[:, i], r_sum(rest, np.ones(rest.shape[1])), *_PARAM)
        k = self.k
        y[:, :k] = s_decept(y[:, :k], 0.35, 0.001, 0.05)
        y[:, k:] = s_multi(y[:, k:], 30.0, 95.0, 0.35)
        return self._finish(self._nonsep_reduce(y), shape_concave)


WFG_CLASSES = {cls.index: cls for cls in (WFG1, WFG2, WFG3, WFG4, WFG5, WFG6, WFG7, WFG8, WFG9)}
