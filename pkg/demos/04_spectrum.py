"""Eigenvalues and eigenvectors in max-times and nonnegative algebra.

Each class has a Perron root: its maximum geometric cycle mean in max-times
algebra, its spectral radius in nonnegative algebra.  A root is an eigenvalue
when it dominates every class upstream of it.
"""

import json
from pathlib import Path

import numpy as np

import zsemiring as zs
from zsemiring.oracle import brute_cycle_mean

A7 = json.loads((Path(__file__).parent / "data" / "example_7x7.json").read_text())["matrix"]

# %% Karp against cycle enumeration
C = np.array([[0, 3], [2, 0]], float)
print("max cycle mean:", zs.max_cycle_mean(C), "brute force:", brute_cycle_mean(C), "sqrt 6:", np.sqrt(6))
print("Perron root   :", zs.perron_root(C))

# %% the two algebras disagree on which classes are spectral
for sr in ("max-times", "nonnegative"):
    data = zs.eigenvalue_set(zs.Matrix(A7, sr))
    print(sr, "roots per class:", np.round(data.rho_per_class, 12))
    for lam in data.lambda_set:
        nodes = [data.fnf.classes[j][0] + 1 for j in data.classes_for(lam)]
        print(f"  lambda={lam:g}: spectral nodes {nodes}")

# %% max-times eigenbasis: star columns of A/lam at one node per critical component
A = zs.Matrix(A7)
for lam in (1.0, 2.0):
    cg = zs.critical_graph(A, lam)
    basis = zs.eigenbasis(A, lam)
    print(f"lambda={lam:g}: critical nodes {[i + 1 for i in cg.nodes]}")
    for t, col in zip(basis.indices, basis.columns):
        Av = (A @ col).values
        print(f"  column {t + 1}: {col.tolist()}  A v = lam v: {np.array_equal(Av, lam * col.values)}")

# %% 0 is an eigenvalue as well: no arc enters node 6, so column 6 of A is zero
e6 = zs.unit_vector(7, 5)
print("A e6 =", (A @ e6).tolist())
