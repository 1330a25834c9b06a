"""Kleene star A* = I + A + A^2 + ... and the least solution A*b.

In max-times algebra (A*)_ij is the heaviest path from i to j, finite iff no
cycle weighs more than 1.  In nonnegative algebra A* = (I - A)^-1 when the
spectral radius is below 1.
"""

import json
from pathlib import Path

import numpy as np

import zsemiring as zs
from zsemiring.oracle import classical_star_solve, enumerate_paths_star

# %% a two-cycle of weight 0.25
A = zs.Matrix([[0, 0.5], [0.5, 0]])
star = zs.kleene_star(A)
print("A* =\n", star.closure.values)
print("path enumeration agrees:", np.array_equal(star.closure.values, enumerate_paths_star(A.values, 1)))

# %% a cycle heavier than 1 makes the star diverge
print("star of [[2]] converged?", bool(zs.kleene_star(zs.Matrix([[2.0]]))))

# %% the boundary: cycle weight exactly 1 is fine in max-times, fatal in nonnegative algebra
B = [[0, 2], [0.5, 0]]
print("max-times  :", bool(zs.kleene_star(zs.Matrix(B))))
print("nonnegative:", bool(zs.kleene_star(zs.Matrix(B, "nonnegative"))))

# %% nonnegative algebra: the series against an LU solve
rng = np.random.default_rng(1)
C = rng.random((4, 4))
C *= 0.9 / C.sum(axis=1, keepdims=True)
b = rng.random(4)
x = zs.star_apply(zs.Matrix(C, "nonnegative"), zs.Vector(b, "nonnegative")).values
print("series   :", x)
print("(I-A)^-1b:", classical_star_solve(C, b))

# %% A*b can be finite even when A* is not: the heavy node is never reached
A7 = np.array(json.loads((Path(__file__).parent / "data" / "example_7x7.json").read_text())["matrix"], float)
print("star of A7 converged?", bool(zs.kleene_star(zs.Matrix(A7))))
print("A7* e4 =", zs.star_apply(zs.Matrix(A7), zs.unit_vector(7, 3)).tolist())
