"""Graph backbone of a matrix: digraph, strongly connected classes, Frobenius
normal form, reduced graph and access relation.

Nodes are 0-based.  There is an arc ``i -> j`` iff ``a_ij != 0``, and
``i`` accesses ``j`` iff a path leads from ``i`` to ``j`` (every node accesses
itself).  All four semirings are free of zero divisors, so access coincides
with ``(A*)_ij != 0`` whenever the star exists.

Functions here accept either a :class:`~zsemiring.linalg.Matrix` or a plain
square array.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Digraph",
    "FrobeniusForm",
    "digraph_of",
    "strongly_connected_components",
    "frobenius_normal_form",
    "accesses",
    "nodes_accessing",
    "classes_accessing_support",
]


def _values(A) -> np.ndarray:
    return np.asarray(getattr(A, "values", A), dtype=float)


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset

    def successors(self) -> list[list[int]]:
        succ = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            succ[i].append(j)
        return succ


def digraph_of(A) -> Digraph:
    vals = _values(A)
    rows, cols = np.nonzero(vals)
    return Digraph(vals.shape[0], frozenset(zip(rows.tolist(), cols.tolist())))


def _successor_lists(vals: np.ndarray) -> list[list[int]]:
    return [np.flatnonzero(row).tolist() for row in vals]


def strongly_connected_components(succ: list[list[int]]) -> list[list[int]]:
    """Tarjan's algorithm with an explicit stack.

    Components come out in reverse topological order of the condensation:
    a component is emitted only after every component it has an arc to.
    """
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(succ[v]):
                work[-1] = (v, pos + 1)
                w = succ[v][pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(sorted(comp))
    return sccs


@dataclass(frozen=True)
class FrobeniusForm:
    """Classes ``N_0, ..., N_{r-1}`` ordered so that the permuted matrix is
    block lower triangular: an arc from ``N_i`` to ``N_j`` needs ``i >= j``.

    ``permutation[k]`` is the original index placed at position ``k``.
    ``reduced_edges`` holds the arcs of the reduced graph, self-loops included.
    """

    n: int
    classes: tuple
    permutation: tuple
    reduced_edges: frozenset
    class_of: tuple = field(repr=False)

    @property
    def r(self) -> int:
        return len(self.classes)

    def nodes(self, class_indices) -> list[int]:
        out: list[int] = []
        for c in sorted(class_indices):
            out.extend(self.classes[c])
        return sorted(out)

    def permuted(self, A) -> np.ndarray:
        vals = _values(A)
        p = np.asarray(self.permutation, dtype=int)
        return vals[np.ix_(p, p)]

    def block(self, A, i: int, j: int | None = None) -> np.ndarray:
        """Submatrix ``A_{N_i N_j}`` (``A_{N_i N_i}`` by default)."""
        vals = _values(A)
        j = i if j is None else j
        return vals[np.ix_(self.classes[i], self.classes[j])]

    def class_accessors(self) -> list[set]:
        """For each class, the set of classes that access it (itself included)."""
        pred = [set() for _ in range(self.r)]
        for i, j in self.reduced_edges:
            pred[j].add(i)
        out = []
        for j in range(self.r):
            seen = {j}
            todo = [j]
            while todo:
                k = todo.pop()
                for i in pred[k]:
                    if i not in seen:
                        seen.add(i)
                        todo.append(i)
            out.append(seen)
        return out


def frobenius_normal_form(A) -> FrobeniusForm:
    """Condense the digraph of `A` into classes in Frobenius order.

    Among classes whose successors are all placed, the one holding the
    smallest original index goes next; nodes inside a class keep their order.
    """
    vals = _values(A)
    n = vals.shape[0]
    succ = _successor_lists(vals)
    comps = strongly_connected_components(succ)
    comp_of = [0] * n
    for c, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = c
    out_arcs = [set() for _ in comps]
    in_arcs = [set() for _ in comps]
    for v in range(n):
        for w in succ[v]:
            cv, cw = comp_of[v], comp_of[w]
            if cv != cw:
                out_arcs[cv].add(cw)
                in_arcs[cw].add(cv)
    pending = [len(s) for s in out_arcs]
    heap = [(comps[c][0], c) for c in range(len(comps)) if pending[c] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, c = heapq.heappop(heap)
        order.append(c)
        for p in in_arcs[c]:
            pending[p] -= 1
            if pending[p] == 0:
                heapq.heappush(heap, (comps[p][0], p))
    rank = {c: k for k, c in enumerate(order)}
    classes = tuple(tuple(comps[c]) for c in order)
    class_of = [0] * n
    for k, cls in enumerate(classes):
        for v in cls:
            class_of[v] = k
    reduced = {(k, k) for k in range(len(classes))}
    for c in range(len(comps)):
        for d in out_arcs[c]:
            reduced.add((rank[c], rank[d]))
    permutation = tuple(v for cls in classes for v in cls)
    return FrobeniusForm(n, classes, permutation, frozenset(reduced), tuple(class_of))


def nodes_accessing(A, targets) -> set:
    """All nodes with a path to some node of `targets` (targets included)."""
    vals = _values(A)
    pred = [np.flatnonzero(col).tolist() for col in vals.T]
    seen = set(int(t) for t in targets)
    todo = deque(seen)
    while todo:
        k = todo.popleft()
        for i in pred[k]:
            if i not in seen:
                seen.add(i)
                todo.append(i)
    return seen


def accesses(A, i: int, j: int) -> bool:
    """Whether ``i`` accesses ``j`` (reflexive-transitive reachability)."""
    if i == j:
        return True
    vals = _values(A)
    seen = {i}
    todo = deque([i])
    while todo:
        k = todo.popleft()
        for w in np.flatnonzero(vals[k]).tolist():
            if w == j:
                return True
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return False


def classes_accessing_support(F: FrobeniusForm, A, supp) -> frozenset:
    """Indices of the classes that access ``supp``; empty for an empty support."""
    supp = list(supp)
    if not supp:
        return frozenset()
    nodes = nodes_accessing(A, supp)
    return frozenset(F.class_of[v] for v in nodes)
