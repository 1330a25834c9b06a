"""Dense matrices and vectors over a semiring, powers and the Kleene star.

``kleene_star`` computes ``A* = I + A + A^2 + ...`` and ``star_apply`` the
least solution ``A*b`` of ``x = Ax + b`` as the supremum of the partial sums
``b + Ab + ... + A^(k-1) b``.  The latter may be finite although ``A*`` is not.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import structure
from .errors import ContextError, DivergenceError
from .semiring import Semiring, as_semiring

__all__ = [
    "Matrix",
    "Vector",
    "StarResult",
    "identity",
    "zeros",
    "unit_vector",
    "mat_add",
    "mat_mul",
    "mat_vec",
    "vec_add",
    "scale",
    "mat_power",
    "kleene_star",
    "star_apply",
    "DEFAULT_TOL",
    "OVERFLOW_GUARD",
]

DEFAULT_TOL = 1e-12
OVERFLOW_GUARD = 1e150
# relative slack when comparing products that are equal in exact arithmetic
ROUNDOFF = 1e-12
# doubling steps for the nonnegative series, i.e. up to 2**64 summed terms
MAX_DOUBLINGS = 64


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


class Matrix:
    """Square matrix over a semiring.  Entries are stored read-only."""

    __slots__ = ("values", "semiring")

    def __init__(self, values, semiring="max-times"):
        sr = as_semiring(semiring)
        arr = sr.check(values, "matrix entries")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ContextError(f"matrix must be square, got shape {arr.shape}")
        self.values = _frozen(arr)
        self.semiring = sr

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def __repr__(self):
        return f"Matrix({self.values.tolist()!r}, {self.semiring.value!r})"

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return mat_vec(self, other)
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def __pow__(self, k: int):
        return mat_power(self, k)

    def submatrix(self, rows, cols=None) -> "Matrix":
        rows = np.asarray(rows, dtype=int)
        cols = rows if cols is None else np.asarray(cols, dtype=int)
        if len(rows) != len(cols):
            raise ContextError("submatrix must be square")
        return Matrix(self.values[np.ix_(rows, cols)], self.semiring)

    def column(self, j: int) -> "Vector":
        return Vector(self.values[:, j], self.semiring)


class Vector:
    __slots__ = ("values", "semiring")

    def __init__(self, values, semiring="max-times"):
        sr = as_semiring(semiring)
        arr = sr.check(values, "vector entries")
        if arr.ndim != 1:
            raise ContextError(f"vector must be one-dimensional, got shape {arr.shape}")
        self.values = _frozen(arr)
        self.semiring = sr

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Vector({self.values.tolist()!r}, {self.semiring.value!r})"

    def __add__(self, other):
        return vec_add(self, other)

    def __rmul__(self, alpha):
        return scale(alpha, self)

    def support(self) -> frozenset:
        return frozenset(int(i) for i in np.flatnonzero(self.values))

    def leq(self, other: "Vector") -> bool:
        _check_pair(self, other)
        return bool(np.all(self.values <= other.values))

    def tolist(self):
        return self.values.tolist()


def _check_pair(x, y):
    if x.semiring is not y.semiring:
        raise ContextError(f"cannot mix {x.semiring.value} and {y.semiring.value}")
    if x.n != y.n:
        raise ContextError(f"dimension mismatch: {x.n} vs {y.n}")


def identity(n: int, semiring="max-times") -> Matrix:
    return Matrix(np.eye(n), semiring)


def zeros(n: int, semiring="max-times") -> Matrix:
    return Matrix(np.zeros((n, n)), semiring)


def unit_vector(n: int, k: int, semiring="max-times") -> Vector:
    e = np.zeros(n)
    e[k] = 1.0
    return Vector(e, semiring)


# -- raw array kernels -------------------------------------------------------


def _matmul(sr: Semiring, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if sr is Semiring.NONNEGATIVE:
        return A @ B
    out = np.zeros((A.shape[0], B.shape[1]))
    for k in range(A.shape[1]):
        np.maximum(out, sr.mul(A[:, k : k + 1], B[k : k + 1, :]), out=out)
    return out


def _matvec(sr: Semiring, A: np.ndarray, x: np.ndarray) -> np.ndarray:
    if sr is Semiring.NONNEGATIVE:
        return A @ x
    if A.shape[1] == 0:
        return np.zeros(A.shape[0])
    return sr.mul(A, x[None, :]).max(axis=1)


# -- public operations -------------------------------------------------------


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    _check_pair(A, B)
    return Matrix(A.semiring.add(A.values, B.values), A.semiring)


def vec_add(x: Vector, y: Vector) -> Vector:
    _check_pair(x, y)
    return Vector(x.semiring.add(x.values, y.values), x.semiring)


def scale(alpha, x: Vector) -> Vector:
    """Scalar multiple ``alpha * x`` in the semiring of `x`."""
    alpha = float(alpha)
    x.semiring.check(alpha, "scalar")
    return Vector(x.semiring.mul(alpha, x.values), x.semiring)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _check_pair(A, B)
    return Matrix(_matmul(A.semiring, A.values, B.values), A.semiring)


def mat_vec(A: Matrix, x: Vector) -> Vector:
    """``(Ax)_i = sum_j a_ij x_j`` in the semiring."""
    _check_pair(A, x)
    return Vector(_matvec(A.semiring, A.values, x.values), A.semiring)


def mat_power(A: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("matrix power must be nonnegative")
    sr = A.semiring
    result = np.eye(A.n)
    base = A.values
    while k:
        if k & 1:
            result = _matmul(sr, result, base)
        k >>= 1
        if k:
            base = _matmul(sr, base, base)
    return Matrix(result, sr)


@dataclass(frozen=True)
class StarResult:
    closure: Matrix | None
    converged: bool
    iterations: int

    def __bool__(self):
        return self.converged


def _truncated_star(sr: Semiring, A: np.ndarray) -> np.ndarray:
    """``I + A + ... + A^(n-1)`` by repeated ``S <- I + A S``."""
    n = A.shape[0]
    S = np.eye(n)
    for _ in range(n - 1):
        S_next = np.maximum(np.eye(n), _matmul(sr, A, S))
        if np.array_equal(S_next, S):
            break
        S = S_next
    return S


def _doubling_star(A: np.ndarray, tol: float):
    """Nonnegative series ``S_2m = S_m + A^m S_m``; returns (S or None, steps)."""
    n = A.shape[0]
    S = np.eye(n)
    P = A.copy()
    for step in range(1, MAX_DOUBLINGS + 1):
        inc = P @ S
        S = S + inc
        if not np.all(np.isfinite(S)) or S.max(initial=0.0) > OVERFLOW_GUARD:
            return None, step
        if inc.max(initial=0.0) < tol:
            return S, step
        P = P @ P
        if not np.all(np.isfinite(P)):
            return None, step
    return None, MAX_DOUBLINGS


def kleene_star(A: Matrix, tol: float = DEFAULT_TOL) -> StarResult:
    """Kleene star ``I + A + A^2 + ...``, or a non-converged result.

    Max-times: the star is finite iff every cycle weighs at most 1, in which
    case it equals the truncated sum ``S = I + ... + A^(n-1)``.  The test used
    is ``A S <= S``, which holds iff no cycle exceeds 1.
    Nonnegative: the series is summed by doubling until the increment drops
    below `tol`; growth past the overflow guard or no convergence after
    ``2**64`` terms means divergence.
    Max-min and Lukasiewicz: always the truncated sum.
    """
    sr, n = A.semiring, A.n
    if n == 0:
        return StarResult(Matrix(np.zeros((0, 0)), sr), True, 0)
    if sr is Semiring.NONNEGATIVE:
        S, steps = _doubling_star(A.values, tol)
        if S is None:
            return StarResult(None, False, steps)
        return StarResult(Matrix(S, sr), True, steps)
    S = _truncated_star(sr, A.values)
    if sr is Semiring.MAX_TIMES:
        AS = _matmul(sr, A.values, S)
        if np.any(AS > S * (1.0 + ROUNDOFF)):
            return StarResult(None, False, n - 1)
    return StarResult(Matrix(S, sr), True, max(n - 1, 0))


def star_apply(A: Matrix, b: Vector, tol: float = DEFAULT_TOL) -> Vector:
    """Least solution ``A*b`` of ``x = Ax + b``; raises DivergenceError if unbounded."""
    _check_pair(A, b)
    sr, n = A.semiring, A.n
    if not np.any(b.values):
        return Vector(np.zeros(n), sr)
    if sr is Semiring.NONNEGATIVE:
        return Vector(_nonneg_star_apply(A.values, b.values, tol), sr)

    Av, z = A.values, b.values.copy()
    for _ in range(n - 1):
        z_next = np.maximum(_matvec(sr, Av, z), b.values)
        if np.array_equal(z_next, z):
            return Vector(z, sr)
        z = z_next
    if sr is Semiring.MAX_TIMES:
        # finite sups are reached by paths of length < n; later growth is a cycle > 1
        z_next = np.maximum(_matvec(sr, Av, z), b.values)
        if np.any(z_next > z * (1.0 + ROUNDOFF)):
            raise DivergenceError("A*b diverges: a cycle of weight > 1 reaches supp(b)")
    return Vector(z, sr)


def _nonneg_star_apply(A: np.ndarray, b: np.ndarray, tol: float) -> np.ndarray:
    # only nodes with access to supp(b) can become nonzero
    rows = structure.nodes_accessing(A, np.flatnonzero(b))
    idx = np.array(sorted(rows), dtype=int)
    P = A[np.ix_(idx, idx)]
    z = b[idx].copy()
    for _ in range(MAX_DOUBLINGS):
        inc = P @ z
        z = z + inc
        if not np.all(np.isfinite(z)) or z.max() > OVERFLOW_GUARD:
            raise DivergenceError("A*b diverges: partial sums exceed the overflow guard")
        if inc.max(initial=0.0) < tol:
            out = np.zeros(A.shape[0])
            out[idx] = z
            return out
        P = P @ P
        if not np.all(np.isfinite(P)):
            raise DivergenceError("A*b diverges: powers of the accessing block overflow")
    raise DivergenceError("A*b did not converge")
