"""Perron roots, eigenvalue sets, critical graphs and max-times eigenbases.

Per-class Perron roots are the maximum geometric cycle mean (Karp's algorithm
on log weights) in max-times and the spectral radius (shifted power
iteration) in nonnegative algebra.  A class is *spectral* when its root
dominates the roots of every class accessing it: non-strictly in max-times,
strictly in nonnegative algebra.  The eigenvalues are the roots of the
spectral classes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import structure
from .errors import DivergenceError, NotAnEigenvalueError, UnsupportedSemiringError
from .linalg import Matrix, Vector, kleene_star
from .semiring import Semiring

__all__ = [
    "MAXTIMES_RTOL",
    "NONNEG_RTOL",
    "SpectralData",
    "CriticalGraph",
    "EigenBasis",
    "max_cycle_mean",
    "perron_root",
    "class_roots",
    "eigenvalue_set",
    "critical_graph",
    "eigenbasis",
    "is_eigenvalue",
]

# relative tolerance for "equal roots"; Karp is accurate to round-off,
# power iteration to its stopping tolerance
MAXTIMES_RTOL = 1e-12
NONNEG_RTOL = 1e-10


def _values(A) -> np.ndarray:
    return np.asarray(getattr(A, "values", A), dtype=float)


def _rtol(sr: Semiring) -> float:
    return MAXTIMES_RTOL if sr is Semiring.MAX_TIMES else NONNEG_RTOL


def _close(a: float, b: float, rtol: float) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b))


def max_cycle_mean(A) -> float:
    """Maximum geometric cycle mean of a nonnegative matrix (0 if acyclic).

    Karp's O(n^3) recursion in the log domain, started from every node at
    once so that reducible matrices need no special handling.  The optimal
    cycle is then read off the maximizing walk and its mean recomputed from
    the original weights, which keeps e.g. ``sqrt(0.25 * 1) = 0.5`` exact.
    """
    vals = _values(A)
    n = vals.shape[0]
    if n == 0:
        return 0.0
    with np.errstate(divide="ignore"):
        W = np.where(vals > 0, np.log(np.where(vals > 0, vals, 1.0)), -np.inf)
    D = np.full((n + 1, n), -np.inf)
    D[0] = 0.0
    pred = np.zeros((n + 1, n), dtype=int)
    for k in range(1, n + 1):
        cand = D[k - 1][:, None] + W
        pred[k] = cand.argmax(axis=0)
        D[k] = cand.max(axis=0)
    best, best_v = -np.inf, -1
    for v in np.flatnonzero(np.isfinite(D[n])):
        ks = np.flatnonzero(np.isfinite(D[:n, v]))
        m = ((D[n, v] - D[ks, v]) / (n - ks)).min()
        if m > best:
            best, best_v = m, v
    if best_v < 0:
        return 0.0
    cycle = _walk_cycle(pred, n, best_v)
    weights = [vals[a, b] for a, b in zip(cycle, cycle[1:] + cycle[:1])]
    exact = float(np.prod(weights)) ** (1.0 / len(cycle))
    approx = float(np.exp(best))
    return exact if abs(exact - approx) <= 1e-9 * approx else approx


def _walk_cycle(pred: np.ndarray, n: int, v: int) -> list:
    """A cycle on the optimal length-n walk ending at `v`, in arc order."""
    walk = [v]
    for k in range(n, 0, -1):
        walk.append(int(pred[k][walk[-1]]))
    walk.reverse()
    last_seen: dict = {}
    for pos, node in enumerate(walk):
        if node in last_seen:
            return walk[last_seen[node] : pos]
        last_seen[node] = pos
    raise AssertionError("a walk of length n must repeat a node")


def perron_root(A, rtol: float = NONNEG_RTOL, max_iter: int = 100_000) -> float:
    """Spectral radius of an irreducible nonnegative block.

    Power iteration on ``A + sI`` with ``s`` the largest row sum, which makes
    the block primitive without slowing it to a crawl.  Stops when the
    Collatz-Wielandt bounds ``min (Ax)_i/x_i <= rho <= max (Ax)_i/x_i`` agree
    to `rtol`.
    """
    vals = _values(A)
    n = vals.shape[0]
    if n == 0:
        return 0.0
    if n == 1:
        return float(vals[0, 0])
    shift = vals.sum(axis=1).max()
    if shift == 0.0:
        return 0.0
    x = np.ones(n)
    lo = hi = 0.0
    for _ in range(max_iter):
        Ax = vals @ x
        ratios = Ax / x
        lo, hi = ratios.min(), ratios.max()
        if hi - lo <= rtol * hi:
            break
        y = Ax + shift * x
        x = y / y.max()
    return float(0.5 * (lo + hi))


def class_roots(A, F: structure.FrobeniusForm, semiring: Semiring) -> tuple:
    if semiring is Semiring.MAX_TIMES:
        root = max_cycle_mean
    elif semiring is Semiring.NONNEGATIVE:
        root = perron_root
    else:
        raise UnsupportedSemiringError(
            f"spectral analysis unsupported for this semiring ({semiring.value})"
        )
    return tuple(root(F.block(A, k)) for k in range(F.r))


@dataclass(frozen=True)
class SpectralData:
    semiring: Semiring
    fnf: structure.FrobeniusForm
    rho_per_class: tuple
    rho_global: float
    spectral: tuple
    lambda_set: tuple
    spectral_classes: dict

    def match(self, lam: float):
        """The member of the eigenvalue set equal to `lam` up to tolerance, else None."""
        rtol = _rtol(self.semiring)
        for mu in self.lambda_set:
            if _close(mu, float(lam), rtol):
                return mu
        return None

    def __contains__(self, lam) -> bool:
        return self.match(lam) is not None

    def classes_for(self, lam: float) -> tuple:
        mu = self.match(lam)
        return () if mu is None else self.spectral_classes[mu]


def eigenvalue_set(A: Matrix) -> SpectralData:
    sr = A.semiring
    F = structure.frobenius_normal_form(A)
    rho = class_roots(A, F, sr)
    rtol = _rtol(sr)
    accessors = F.class_accessors()
    spectral = []
    for j in range(F.r):
        others = [rho[i] for i in accessors[j] if i != j]
        if sr is Semiring.MAX_TIMES:
            ok = all(r <= rho[j] or _close(r, rho[j], rtol) for r in others)
        else:
            ok = all(r < rho[j] and not _close(r, rho[j], rtol) for r in others)
        spectral.append(ok)
    groups: dict = {}
    for j in sorted((j for j in range(F.r) if spectral[j]), key=lambda j: rho[j]):
        for mu in groups:
            if _close(mu, rho[j], rtol):
                groups[mu].append(j)
                break
        else:
            groups[rho[j]] = [j]
    return SpectralData(
        semiring=sr,
        fnf=F,
        rho_per_class=rho,
        rho_global=max(rho, default=0.0),
        spectral=tuple(spectral),
        lambda_set=tuple(sorted(groups)),
        spectral_classes={mu: tuple(sorted(cs)) for mu, cs in groups.items()},
    )


def is_eigenvalue(A: Matrix, lam: float) -> bool:
    return float(lam) in eigenvalue_set(A)


@dataclass(frozen=True)
class CriticalGraph:
    lam: float
    J_nodes: tuple
    nodes: tuple
    edges: frozenset
    components: tuple
    representatives: tuple
    closure: Matrix


def _require_maxtimes(A: Matrix):
    if A.semiring is not Semiring.MAX_TIMES:
        raise UnsupportedSemiringError(
            "eigenbasis construction is only available in max-times algebra"
        )


def critical_graph(A: Matrix, lam: float, data: SpectralData | None = None) -> CriticalGraph:
    """Critical graph of ``A`` for eigenvalue ``lam`` (max-times).

    Restricts ``A`` to the classes accessing the spectral classes of ``lam``,
    divides by ``lam`` and keeps the arcs lying on a cycle of weight 1.  An arc
    ``(i, j)`` is critical iff ``a'_ij (A'*)_ji`` equals 1 up to round-off.
    """
    _require_maxtimes(A)
    lam = float(lam)
    if lam <= 0:
        raise NotAnEigenvalueError("eigenbasis needs a positive eigenvalue")
    data = eigenvalue_set(A) if data is None else data
    spectral_cls = data.classes_for(lam)
    if not spectral_cls:
        raise NotAnEigenvalueError(f"{lam} is not an eigenvalue; eigenvalues are {data.lambda_set}")
    F = data.fnf
    accessors = F.class_accessors()
    J_cls = set().union(*(accessors[j] for j in spectral_cls))
    J = F.nodes(J_cls)
    n = A.n
    Ap = np.zeros((n, n))
    Ap[np.ix_(J, J)] = A.values[np.ix_(J, J)] / lam
    star = kleene_star(Matrix(Ap, Semiring.MAX_TIMES))
    if not star.converged:
        raise DivergenceError("star of the normalized critical block diverged")
    S = star.closure.values
    cycle_through = Ap * S.T
    crit = (Ap > 0) & (cycle_through >= 1.0 - MAXTIMES_RTOL)
    rows, cols = np.nonzero(crit)
    edges = frozenset(zip(rows.tolist(), cols.tolist()))
    nodes = sorted(set(rows.tolist()) | set(cols.tolist()))
    succ = [[] for _ in range(n)]
    for i, j in sorted(edges):
        succ[i].append(j)
    comps = [c for c in structure.strongly_connected_components(succ) if c[0] in nodes]
    comps.sort()
    return CriticalGraph(
        lam=lam,
        J_nodes=tuple(J),
        nodes=tuple(nodes),
        edges=edges,
        components=tuple(tuple(c) for c in comps),
        representatives=tuple(c[0] for c in comps),
        closure=star.closure,
    )


@dataclass(frozen=True)
class EigenBasis:
    """Generators of the eigencone ``{v : Av = lam v}``.

    Any eigenvector is a semiring combination of `columns`.  `indices` records
    the star column each generator came from, when known.
    """

    lam: float
    columns: tuple
    semiring: Semiring = Semiring.MAX_TIMES
    indices: tuple = ()

    def __len__(self):
        return len(self.columns)

    def as_array(self) -> np.ndarray:
        if not self.columns:
            return np.zeros((0, 0))
        return np.column_stack([c.values for c in self.columns])

    @classmethod
    def from_vectors(cls, lam, vectors, semiring="max-times") -> "EigenBasis":
        cols = tuple(v if isinstance(v, Vector) else Vector(v, semiring) for v in vectors)
        sr = cols[0].semiring if cols else Vector([], semiring).semiring
        return cls(float(lam), cols, sr)


def eigenbasis(A: Matrix, lam: float, data: SpectralData | None = None) -> EigenBasis:
    """Max-times basis of the eigencone: one star column per critical component."""
    cg = critical_graph(A, lam, data)
    S = cg.closure
    cols = tuple(S.column(t) for t in cg.representatives)
    return EigenBasis(cg.lam, cols, Semiring.MAX_TIMES, cg.representatives)
