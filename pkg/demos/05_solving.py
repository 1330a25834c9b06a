"""Solving lam x = A x + b.

A solution exists iff the classes that access supp(b) have Perron roots at
most lam (max-times) or strictly below lam (nonnegative).  The least
solution is built class by class; every other solution adds an eigenvector.
"""

import json
from pathlib import Path

import numpy as np

import zsemiring as zs

DATA = Path(__file__).parent / "data"
A7 = json.loads((DATA / "example_7x7.json").read_text())["matrix"]


def e(i):
    return np.eye(7)[i - 1]


# %% which unit right-hand sides are solvable?
for sr in ("max-times", "nonnegative"):
    ok = [i for i in range(1, 8) if zs.solvability(zs.ZProblem.from_arrays(A7, e(i), 1.0, sr)).solvable]
    print(f"{sr:12s} solvable for b = e_i with i in {ok}")

# %% the least solution for b = e4 is the same in both algebras
for sr in ("max-times", "nonnegative"):
    p = zs.ZProblem.from_arrays(A7, e(4), 1.0, sr)
    print(sr, zs.least_solution_tracedown(p).tolist())

# %% the full report
p = zs.ZProblem.from_arrays(A7, e(4), 1.0)
r = zs.solve_report(p)
print("unique:", r.unique, " eigenbasis:", [c.tolist() for c in r.basis.columns])

# %% more solutions: add eigenvectors.  2 v1 + 3 v2 in max-times ...
v1, v2 = sorted(r.basis.columns, key=lambda c: -c.values[0])
basis = zs.EigenBasis.from_vectors(1.0, [v1, v2])
y1 = zs.combine(r.least, [2, 3], basis)
print("y1 =", y1.tolist(), "solution:", zs.is_solution(p, y1))

# %% ... and x0 + v2 in nonnegative algebra, where v1 is not an eigenvector
q = zs.ZProblem.from_arrays(A7, e(4), 1.0, "nonnegative")
y2 = zs.Vector(r.least.values + v2.values, "nonnegative")
print("y2 =", y2.tolist(), "solution:", zs.is_solution(q, y2))
print("y1 solves the nonnegative system?", zs.is_solution(q, zs.Vector(y1.values, "nonnegative")))
print("y2 solves the max-times system?  ", zs.is_solution(p, zs.Vector(y2.values)))

# %% going back: split a solution into least part plus eigenvector
x0, v = zs.decompose(p, y1)
print("x0 =", x0.tolist(), " v =", v.tolist())

# %% the least w with x0 + w = y1, and the eigenvector it generates
w = zs.krivulin_residual(y1, x0)
u = zs.krivulin_eigenvector(p.A, w)
print("w =", w.tolist(), " sup A^k w =", u.tolist(), " x0 + u =", np.maximum(x0.values, u.values).tolist())

# %% lam = 3 is not an eigenvalue, so the solution is unique
print("lam=3 unique:", zs.solve_report(zs.ZProblem.from_arrays(A7, e(4), 3.0)).unique)
