import math

import numpy as np
import pytest

from zsemiring.oracle import (
    OracleRefused,
    brute_cycle_mean,
    classical_star_solve,
    elementary_cycles,
    enumerate_paths_star,
    walks_cycle_mean,
)

from conftest import A7, X0, random_sparse


def test_brute_cycle_mean_examples():
    assert brute_cycle_mean(A7) == 2.0
    assert brute_cycle_mean(np.triu(np.ones((4, 4)), 1)) == 0.0
    assert brute_cycle_mean(np.array([[0, 3], [2, 0]])) == pytest.approx(math.sqrt(6), rel=1e-15)
    with pytest.raises(OracleRefused):
        brute_cycle_mean(np.zeros((9, 9)))


def test_elementary_cycles_complete_graph():
    # K3 with loops: 3 loops, 3 two-cycles, 2 three-cycles
    assert len(list(elementary_cycles(np.ones((3, 3))))) == 8


def test_brute_agrees_with_closed_walks(rng):
    for _ in range(40):
        A = random_sparse(rng, 3)
        assert brute_cycle_mean(A) == pytest.approx(walks_cycle_mean(A, 3), rel=1e-15)


def test_classical_star_solve_examples():
    b = np.array([1.0, 2.0])
    assert classical_star_solve(np.zeros((2, 2)), b).tolist() == [1, 2]
    assert classical_star_solve(np.array([[0.5]]), [1.0]) == pytest.approx([2.0])
    # 7x7 reference restricted to J = {4, 6}
    J = [3, 5]
    x = classical_star_solve(A7[np.ix_(J, J)], np.array([1.0, 0.0]))
    assert x.tolist() == X0[J].tolist()
    with pytest.raises(OracleRefused):
        classical_star_solve(np.array([[1.0]]), [1.0])


def test_enumerate_paths_star_examples():
    assert np.array_equal(enumerate_paths_star(np.zeros((3, 3)), 2), np.eye(3))
    assert np.array_equal(
        enumerate_paths_star(np.array([[0, 0.5], [0.5, 0]]), 1), [[1, 0.5], [0.5, 1]]
    )
    chain = np.diag([0.5, 0.5, 0.5], k=1)
    S = enumerate_paths_star(chain, 3)
    assert S[0, 3] == 0.125 and S[1, 3] == 0.25 and S[3, 0] == 0
    with pytest.raises(OracleRefused):
        enumerate_paths_star(np.eye(2), 1, "nonnegative")
    with pytest.raises(OracleRefused):
        enumerate_paths_star(np.eye(7), 1)


def test_enumerate_paths_lukasiewicz():
    A = np.array([[0, 0.75], [0, 0]])
    chain = np.array([[0, 0.75, 0], [0, 0, 0.75], [0, 0, 0]])
    assert enumerate_paths_star(A, 1, "lukasiewicz")[0, 1] == 0.75
    assert enumerate_paths_star(chain, 2, "lukasiewicz")[0, 2] == 0.5
    assert enumerate_paths_star(chain, 2, "max-min")[0, 2] == 0.75
