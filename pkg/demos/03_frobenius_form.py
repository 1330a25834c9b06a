"""Frobenius normal form of the 7x7 reference system.

Strongly connected classes are ordered so that the permuted matrix is block
lower triangular.  Here every class is a single node and the matrix already
is in that form.
"""

import json
from pathlib import Path

import numpy as np

import zsemiring as zs

doc = json.loads((Path(__file__).parent / "data" / "example_7x7.json").read_text())
A = zs.Matrix(doc["matrix"])

# %% classes and the reduced graph (node labels printed 1-based)
F = zs.frobenius_normal_form(A)
print("classes:", [[i + 1 for i in c] for c in F.classes])
print("reduced arcs:", sorted((i + 1, j + 1) for i, j in F.reduced_edges if i != j))

# %% access is reachability: 6 -> 3 -> 1, but nothing leaves node 1
print("6 accesses 1:", zs.accesses(A, 5, 0))
print("1 accesses 7:", zs.accesses(A, 0, 6))

# %% the classes that access supp(b) decide everything about A*b
for supp in ({3}, {1}, set()):
    J = zs.classes_accessing_support(F, A, supp)
    print(f"supp(b) = {sorted(i + 1 for i in supp)} -> nodes of J = {[i + 1 for i in F.nodes(J)]}")

# %% a scrambled example: 0 -> 1 <-> 2, 3 isolated
B = np.array([[0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], float)
G = zs.frobenius_normal_form(B)
print("classes:", G.classes, "permutation:", G.permutation)
print(G.permuted(B))
