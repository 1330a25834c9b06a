"""Brute-force reference computations for the test suite.

These share nothing with the algebra they check beyond the input arrays, and
may use ordinary arithmetic including subtraction.  All are exponential or
cubic and refuse inputs above small sizes.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .semiring import Semiring, as_semiring

__all__ = [
    "OracleRefused",
    "brute_cycle_mean",
    "classical_star_solve",
    "enumerate_paths_star",
    "elementary_cycles",
]


class OracleRefused(ValueError):
    pass


def _values(A) -> np.ndarray:
    return np.asarray(getattr(A, "values", A), dtype=float)


def elementary_cycles(vals: np.ndarray):
    """Yield each elementary cycle once, as a node tuple starting at its smallest node."""
    n = vals.shape[0]
    for start in range(n):
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            for w in range(start, n):
                if vals[v, w] == 0:
                    continue
                if w == start:
                    yield path
                elif w not in path:
                    stack.append((w, path + (w,)))


def brute_cycle_mean(A, max_n: int = 8) -> float:
    """Max over elementary cycles of the geometric mean of arc weights."""
    vals = _values(A)
    if vals.shape[0] > max_n:
        raise OracleRefused(f"cycle enumeration refused for n > {max_n}")
    best = 0.0
    for cyc in elementary_cycles(vals):
        weight = 1.0
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            weight *= vals[a, b]
        best = max(best, weight ** (1.0 / len(cyc)))
    return best


def classical_star_solve(A, b) -> np.ndarray:
    """Solve ``(I - A) x = b`` by LU with partial pivoting (nonnegative, rho < 1)."""
    vals = _values(A)
    b = np.asarray(getattr(b, "values", b), dtype=float)
    n = vals.shape[0]
    if n == 0:
        return np.zeros(0)
    radius = max(abs(np.linalg.eigvals(vals))) if n else 0.0
    if radius >= 1.0:
        raise OracleRefused(f"spectral radius {radius:.6g} >= 1; (I - A)^-1 b is not the star")
    return np.linalg.solve(np.eye(n) - vals, b)


def enumerate_paths_star(A, maxlen: int, semiring="max-times", max_n: int = 6) -> np.ndarray:
    """Best weight over elementary paths of length <= maxlen, for each (i, j).

    The diagonal also considers elementary cycles through ``i``.  Weights are
    products along the path in the given idempotent semiring, so a path weight
    is always computed left to right.
    """
    sr = as_semiring(semiring)
    if not sr.idempotent:
        raise OracleRefused("path enumeration is for idempotent semirings")
    vals = _values(A)
    n = vals.shape[0]
    if n > max_n:
        raise OracleRefused(f"path enumeration refused for n > {max_n}")
    best = np.eye(n)

    def weight(path):
        w = 1.0
        for a, b in zip(path, path[1:]):
            w = _scalar_mul(sr, w, vals[a, b])
        return w

    for i in range(n):
        stack = [(i,)]
        while stack:
            path = stack.pop()
            if len(path) - 1 >= maxlen:
                continue
            for j in range(n):
                if vals[path[-1], j] == 0:
                    continue
                if j == i:
                    best[i, i] = max(best[i, i], weight(path + (j,)))
                elif j not in path:
                    ext = path + (j,)
                    best[i, j] = max(best[i, j], weight(ext))
                    stack.append(ext)
    return best


def _scalar_mul(sr: Semiring, a: float, b: float) -> float:
    if sr is Semiring.MAX_TIMES:
        return a * b
    if sr is Semiring.MAX_MIN:
        return min(a, b)
    if a == 1.0:
        return b
    if b == 1.0:
        return a
    return max(0.0, a + b - 1.0)


def walks_cycle_mean(A, maxlen: int) -> float:
    """Geometric mean over all closed walks up to `maxlen`, via itertools (tiny n only)."""
    vals = _values(A)
    n = vals.shape[0]
    best = 0.0
    for k in range(1, maxlen + 1):
        for walk in itertools.product(range(n), repeat=k):
            w = math.prod(vals[walk[t], walk[(t + 1) % k]] for t in range(k))
            best = max(best, w ** (1.0 / k))
    return best
