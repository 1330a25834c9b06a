"""Z-matrix equations ``lam x = A x + b``.

Solvability is decided from the classes that access ``supp(b)``: with
``rho_bar`` the largest Perron root among them, a solution exists iff
``rho_bar <= lam`` (max-times) or ``rho_bar < lam`` (nonnegative).  The least
solution is built class by class along the Frobenius normal form, and every
solution is the least one plus an eigenvector of eigenvalue ``lam``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import spectral, structure
from .errors import (
    ContextError,
    DivergenceError,
    NotASolutionError,
    UnsupportedSemiringError,
)
from .linalg import (
    DEFAULT_TOL,
    MAX_DOUBLINGS,
    OVERFLOW_GUARD,
    Matrix,
    Vector,
    _matvec,
    kleene_star,
    star_apply,
)
from .semiring import Semiring, as_semiring
from .spectral import EigenBasis

__all__ = [
    "ZProblem",
    "Solvability",
    "SolveReport",
    "solvability",
    "least_solution_tracedown",
    "combine",
    "decompose",
    "krivulin_residual",
    "krivulin_eigenvector",
    "is_solution",
    "solve_report",
]

# tolerances for "is a solution"; max-min never rounds
SOLUTION_RTOL = {
    Semiring.MAX_TIMES: 1e-12,
    Semiring.NONNEGATIVE: 1e-9,
    Semiring.MAX_MIN: 0.0,
    Semiring.LUKASIEWICZ: 0.0,
}
SOLUTION_ATOL = {
    Semiring.MAX_TIMES: 0.0,
    Semiring.NONNEGATIVE: 1e-9,
    Semiring.MAX_MIN: 0.0,
    Semiring.LUKASIEWICZ: 1e-12,
}


@dataclass(frozen=True)
class ZProblem:
    A: Matrix
    b: Vector
    lam: float = 1.0

    def __post_init__(self):
        if self.A.semiring is not self.b.semiring:
            raise ContextError("A and b belong to different semirings")
        if self.A.n != self.b.n:
            raise ContextError(f"dimension mismatch: A is {self.A.n}x{self.A.n}, b has {self.b.n}")
        lam = float(self.semiring.check(self.lam, "lambda"))
        if self.semiring.is_lattice and lam != 1.0:
            raise UnsupportedSemiringError(
                f"{self.semiring.value} has no inverses; only lambda = 1 is supported"
            )
        object.__setattr__(self, "lam", lam)

    @classmethod
    def from_arrays(cls, A, b=None, lam=1.0, semiring="max-times") -> "ZProblem":
        sr = as_semiring(semiring)
        A = Matrix(A, sr)
        b = Vector(np.zeros(A.n) if b is None else b, sr)
        return cls(A, b, lam)

    @property
    def semiring(self) -> Semiring:
        return self.A.semiring

    @property
    def n(self) -> int:
        return self.A.n

    def normalized(self) -> tuple[Matrix, Vector]:
        """``(A/lam, b/lam)``; requires ``lam > 0``."""
        sr = self.semiring
        return (
            Matrix(sr.try_div(self.A.values, self.lam), sr),
            Vector(sr.try_div(self.b.values, self.lam), sr),
        )


@dataclass(frozen=True)
class Solvability:
    """Verdict of :func:`solvability`.

    ``borderline`` is set in nonnegative algebra when ``rho_bar`` and ``lam``
    agree to the comparison margin; such problems are reported unsolvable.
    """

    solvable: bool
    rho_bar: float
    classes: frozenset
    nodes: tuple
    borderline: bool = False

    def __iter__(self):
        return iter((self.solvable, self.rho_bar, self.classes))


def _require_spectral(p: ZProblem):
    if p.semiring.is_lattice:
        raise UnsupportedSemiringError(
            f"spectral analysis unsupported for this semiring ({p.semiring.value})"
        )


def solvability(p: ZProblem, F: structure.FrobeniusForm | None = None, roots=None) -> Solvability:
    """Existence test from the classes accessing ``supp(b)``.

    Lattice semirings are always solvable (their stars converge).
    """
    F = structure.frobenius_normal_form(p.A) if F is None else F
    J = structure.classes_accessing_support(F, p.A, p.b.support())
    nodes = tuple(F.nodes(J))
    if not J:
        return Solvability(True, 0.0, J, nodes)
    if p.semiring.is_lattice:
        return Solvability(True, 0.0, J, nodes)
    if p.lam == 0.0:
        return Solvability(False, _rho_bar(p, F, J, roots), J, nodes)
    rho_bar = _rho_bar(p, F, J, roots)
    if p.semiring is Semiring.MAX_TIMES:
        ok = rho_bar <= p.lam * (1.0 + spectral.MAXTIMES_RTOL)
        return Solvability(ok, rho_bar, J, nodes)
    margin = spectral.NONNEG_RTOL * max(rho_bar, p.lam)
    borderline = abs(rho_bar - p.lam) <= margin
    return Solvability(rho_bar < p.lam - margin, rho_bar, J, nodes, borderline)


def _rho_bar(p, F, J, roots) -> float:
    roots = spectral.class_roots(p.A, F, p.semiring) if roots is None else roots
    return max((roots[j] for j in J), default=0.0)


def least_solution_tracedown(
    p: ZProblem, F: structure.FrobeniusForm | None = None, tol: float = DEFAULT_TOL
) -> Vector:
    """Least solution by block forward substitution over the Frobenius classes.

    With ``A, b`` divided by ``lam``, the classes accessing ``supp(b)`` are
    visited in Frobenius order and
    ``x_{N_l} = (A_ll)* (sum_{k<l} A_lk x_{N_k} + b_{N_l})``.  All other
    components are zero.  Raises DivergenceError on an unsolvable problem.
    """
    sr, n = p.semiring, p.n
    F = structure.frobenius_normal_form(p.A) if F is None else F
    J = structure.classes_accessing_support(F, p.A, p.b.support())
    x = np.zeros(n)
    if not J:
        return Vector(x, sr)
    if p.lam == 0.0:
        raise DivergenceError("lambda = 0 with b != 0 has no solution")
    A, b = p.normalized()
    done: list[int] = []
    for l in sorted(J):
        idx = list(F.classes[l])
        rhs = b.values[idx]
        if done:
            rhs = sr.add(rhs, _matvec(sr, A.values[np.ix_(idx, done)], x[done]))
        star = kleene_star(Matrix(A.values[np.ix_(idx, idx)], sr), tol)
        if not star.converged:
            raise DivergenceError(f"star of diagonal block {l} diverges; the problem is unsolvable")
        x[idx] = _matvec(sr, star.closure.values, rhs)
        done.extend(idx)
    return Vector(x, sr)


def is_solution(p: ZProblem, x: Vector) -> bool:
    """Whether ``lam x = A x + b`` holds up to the semiring's round-off tolerance."""
    if x.semiring is not p.semiring or x.n != p.n:
        return False
    sr = p.semiring
    lhs = sr.mul(p.lam, x.values)
    rhs = sr.add(_matvec(sr, p.A.values, x.values), p.b.values)
    return bool(np.allclose(lhs, rhs, rtol=SOLUTION_RTOL[sr], atol=SOLUTION_ATOL[sr]))


def combine(x0: Vector, coeffs, basis: EigenBasis) -> Vector:
    """``x0 + sum_j coeffs[j] * basis.columns[j]`` in the semiring of `x0`."""
    coeffs = [float(c) for c in coeffs]
    if len(coeffs) != len(basis.columns):
        raise ContextError(f"{len(coeffs)} coefficients for a basis of width {len(basis.columns)}")
    sr = x0.semiring
    out = x0.values.copy()
    for alpha, col in zip(coeffs, basis.columns):
        if col.semiring is not sr or col.n != x0.n:
            raise ContextError("basis column does not match x0")
        out = sr.add(out, sr.mul(sr.check(alpha, "coefficient"), col.values))
    return Vector(out, sr)


def decompose(p: ZProblem, x: Vector, tol: float = DEFAULT_TOL) -> tuple[Vector, Vector]:
    """Split a solution as ``x = x0 + v`` with ``x0`` least and ``A v = lam v``.

    Max-times uses the critical nodes ``C`` of eigenvalue 1 of ``A/lam``:
    ``v_C = x_C`` and ``v_N = (A_NN)* A_NC x_C`` on the remaining nodes.
    Nonnegative takes ``v = lim_k (A/lam)^k x``.
    """
    _require_spectral(p)
    if not is_solution(p, x):
        raise NotASolutionError("x does not satisfy lam x = A x + b")
    sr, n = p.semiring, p.n
    x0 = least_solution_tracedown(p, tol=tol)
    if p.lam == 0.0:
        # b = 0 and A x = 0: x itself is an eigenvector for 0
        return x0, x
    A, _ = p.normalized()
    if sr is Semiring.MAX_TIMES:
        v = _critical_part(A, x.values)
    else:
        v = _descending_limit(A.values, x.values, tol)
    return x0, Vector(v, sr)


def _critical_part(A: Matrix, x: np.ndarray) -> np.ndarray:
    n = A.n
    data = spectral.eigenvalue_set(A)
    mu = data.match(1.0)
    C = list(spectral.critical_graph(A, mu, data).nodes) if mu is not None else []
    v = np.zeros(n)
    if not C:
        return v
    N = [i for i in range(n) if i not in set(C)]
    v[C] = x[C]
    if N:
        sr = A.semiring
        rhs = _matvec(sr, A.values[np.ix_(N, C)], x[C])
        v[N] = star_apply(A.submatrix(N), Vector(rhs, sr)).values
    return v


def _descending_limit(A: np.ndarray, x: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """``lim_k A^k x`` for ``Ax <= x``, by repeated squaring on ``supp(x)``."""
    idx = np.flatnonzero(x)
    out = np.zeros_like(x)
    if idx.size == 0:
        return out
    P = A[np.ix_(idx, idx)]
    y = P @ x[idx]
    for _ in range(MAX_DOUBLINGS):
        P = P @ P
        y_next = P @ y
        done = np.max(np.abs(y_next - y)) < tol
        y = y_next
        if done:
            break
    out[idx] = y
    return out


def krivulin_residual(x: Vector, u: Vector) -> Vector:
    """Least ``w`` with ``u + w = x``, for ``u <= x``.

    Max-times: ``w_i = x_i`` where ``x_i > u_i``, else 0.
    Nonnegative: ``w_i = x_i - u_i`` (differences at round-off level count as 0).
    """
    if x.semiring is not u.semiring or x.n != u.n:
        raise ContextError("x and u must share semiring and dimension")
    sr = x.semiring
    if sr is Semiring.NONNEGATIVE:
        scale = np.maximum(1.0, np.abs(x.values))
        d = x.values - u.values
        if np.any(d < -SOLUTION_ATOL[sr] * scale):
            raise ValueError("krivulin_residual needs u <= x")
        return Vector(np.where(d > 1e-12 * scale, d, 0.0), sr)
    if np.any(u.values > x.values):
        raise ValueError("krivulin_residual needs u <= x")
    return Vector(np.where(x.values > u.values, x.values, 0.0), sr)


def krivulin_eigenvector(A: Matrix, w: Vector, tol: float = DEFAULT_TOL, max_iter: int = 1_000_000) -> Vector:
    """``sup_{k >= 1} A^k w``; an eigenvector of eigenvalue 1 when ``w <= A w``."""
    if A.semiring is not w.semiring or A.n != w.n:
        raise ContextError("A and w must share semiring and dimension")
    sr = A.semiring
    if sr is Semiring.NONNEGATIVE:
        rows = np.array(sorted(structure.nodes_accessing(A, np.flatnonzero(w.values))), dtype=int)
        out = np.zeros(A.n)
        if rows.size == 0:
            return Vector(out, sr)
        P = A.values[np.ix_(rows, rows)]
        y = P @ w.values[rows]
        for _ in range(MAX_DOUBLINGS):
            P = P @ P
            y_next = np.maximum(y, P @ y)
            if not np.all(np.isfinite(y_next)) or y_next.max() > OVERFLOW_GUARD:
                raise DivergenceError("sup_k A^k w is unbounded")
            done = np.max(y_next - y) < tol
            y = y_next
            if done:
                break
        out[rows] = y
        return Vector(out, sr)
    first = _matvec(sr, A.values, w.values)
    s = first
    for _ in range(max_iter):
        s_next = np.maximum(first, _matvec(sr, A.values, s))
        if np.array_equal(s_next, s):
            return Vector(s, sr)
        s = s_next
    raise DivergenceError("sup_k A^k w did not stabilize")


@dataclass(frozen=True)
class SolveReport:
    semiring: Semiring
    lam: float
    solvable: bool
    rho_bar: float
    classes: tuple
    class_nodes: tuple
    least: Vector | None
    unique: bool | None
    basis: EigenBasis | None = None
    borderline: bool = False
    eigenvalues: tuple = field(default=())

    @property
    def nodes(self) -> tuple:
        return tuple(sorted(v for cls in self.class_nodes for v in cls))

    def to_dict(self) -> dict:
        """JSON-ready form; node indices are 0-based."""
        return {
            "semiring": self.semiring.value,
            "lambda": self.lam,
            "solvable": self.solvable,
            "rho_bar": self.rho_bar,
            "classes": [list(c) for c in self.class_nodes],
            "least": None if self.least is None else self.least.tolist(),
            "unique": self.unique,
            "borderline": self.borderline,
            "eigenvalues": list(self.eigenvalues),
            "basis": None
            if self.basis is None
            else {
                "lambda": self.basis.lam,
                "indices": list(self.basis.indices),
                "columns": [c.tolist() for c in self.basis.columns],
            },
        }


def solve_report(p: ZProblem, tol: float = DEFAULT_TOL) -> SolveReport:
    sr = p.semiring
    F = structure.frobenius_normal_form(p.A)
    if sr.is_lattice:
        verdict = solvability(p, F)
        least = star_apply(p.A, p.b, tol)
        return SolveReport(sr, p.lam, True, 0.0, tuple(sorted(verdict.classes)),
                           tuple(F.classes[j] for j in sorted(verdict.classes)), least, None)
    data = spectral.eigenvalue_set(p.A)
    verdict = solvability(p, F, data.rho_per_class)
    classes = tuple(sorted(verdict.classes))
    class_nodes = tuple(F.classes[j] for j in classes)
    if not verdict.solvable:
        return SolveReport(sr, p.lam, False, verdict.rho_bar, classes, class_nodes, None, None,
                           borderline=verdict.borderline, eigenvalues=data.lambda_set)
    least = least_solution_tracedown(p, F, tol)
    mu = data.match(p.lam)
    basis = None
    if mu is not None and sr is Semiring.MAX_TIMES and p.lam > 0:
        basis = spectral.eigenbasis(p.A, mu, data)
    return SolveReport(sr, p.lam, True, verdict.rho_bar, classes, class_nodes, least,
                       unique=mu is None, basis=basis, borderline=verdict.borderline,
                       eigenvalues=data.lambda_set)
