import numpy as np
import pytest

import zsemiring as zs

from conftest import A7, GRID, V2, X0, Y1, Y2, random_sparse, unit


def problem(b, lam=1.0, sr="max-times", A=A7):
    return zs.ZProblem.from_arrays(A, b, lam, sr)


def test_problem_validation():
    with pytest.raises(zs.ContextError):
        zs.ZProblem(zs.Matrix(A7), zs.Vector(unit(0), "nonnegative"))
    with pytest.raises(zs.ContextError):
        zs.ZProblem(zs.Matrix(A7), zs.Vector([1.0, 0.0]))
    with pytest.raises(zs.DomainError):
        problem(unit(0), lam=-1)
    with pytest.raises(zs.UnsupportedSemiringError):
        problem(np.zeros(2), lam=0.5, sr="max-min", A=np.eye(2) * 0.5)


def test_solvability_reference():
    ok, rho_bar, J = zs.solvability(problem(unit(3)))
    assert ok and rho_bar == 0.0
    F = zs.frobenius_normal_form(A7)
    assert F.nodes(J) == [3, 5]
    v = zs.solvability(problem(unit(2), sr="nonnegative"))
    assert not v.solvable and v.rho_bar == pytest.approx(1.0) and v.borderline
    v = zs.solvability(problem(np.zeros(7), lam=0.0))
    assert v.solvable and v.rho_bar == 0.0 and not v.classes


def test_solvability_lambda_zero():
    assert not zs.solvability(problem(unit(3), lam=0.0)).solvable
    with pytest.raises(zs.DivergenceError):
        zs.least_solution_tracedown(problem(unit(3), lam=0.0))


@pytest.mark.parametrize("sr", ["max-times", "nonnegative"])
def test_tracedown_reference(sr):
    x = zs.least_solution_tracedown(problem(unit(3), sr=sr))
    assert x.tolist() == X0.tolist()
    assert not zs.least_solution_tracedown(problem(np.zeros(7), sr=sr)).support()


def test_tracedown_unsolvable_raises():
    with pytest.raises(zs.DivergenceError):
        zs.least_solution_tracedown(problem(unit(6)))


def test_tracedown_scaled_lambda():
    x = zs.least_solution_tracedown(problem(unit(3), lam=3.0))
    assert np.array_equal(3.0 * x.values, np.maximum((A7 * x.values).max(axis=1), unit(3)))


def test_combine():
    basis = zs.EigenBasis.from_vectors(1.0, [[1, 0, 1, 0, 0, 1, 0], V2])
    x0 = zs.Vector(X0)
    assert zs.combine(x0, [2, 3], basis).tolist() == Y1.tolist()
    assert zs.combine(x0, [0, 0], basis).tolist() == X0.tolist()
    with pytest.raises(zs.ContextError):
        zs.combine(x0, [1], basis)


def test_decompose_reference():
    x0, v = zs.decompose(problem(unit(3)), zs.Vector(Y1))
    assert x0.tolist() == X0.tolist()
    assert v.tolist() == [2, 0, 3, 0, 0, 3, 0]
    x0, v = zs.decompose(problem(unit(3), sr="nonnegative"), zs.Vector(Y2, "nonnegative"))
    assert x0.tolist() == X0.tolist()
    assert np.allclose(v.values, V2, atol=1e-12)


def test_decompose_unique_case():
    p = problem(unit(3), lam=3.0)
    x0 = zs.least_solution_tracedown(p)
    _, v = zs.decompose(p, x0)
    assert not v.support()


def test_decompose_rejects_non_solution():
    with pytest.raises(zs.NotASolutionError):
        zs.decompose(problem(unit(3)), zs.Vector(Y2))


def test_krivulin_residual():
    assert zs.krivulin_residual(zs.Vector(Y1), zs.Vector(X0)).tolist() == [2, 0, 3, 0, 0, 3, 0]
    assert not zs.krivulin_residual(zs.Vector(X0), zs.Vector(X0)).support()
    w = zs.krivulin_residual(zs.Vector(Y2, "nonnegative"), zs.Vector(X0, "nonnegative"))
    assert w.tolist() == V2.tolist()
    with pytest.raises(ValueError):
        zs.krivulin_residual(zs.Vector(X0), zs.Vector(Y1))


def test_krivulin_eigenvector_reference():
    A = zs.Matrix(A7)
    w = zs.krivulin_residual(zs.Vector(Y1), zs.Vector(X0))
    assert w.leq(zs.mat_vec(A, w))
    u = zs.krivulin_eigenvector(A, w)
    assert (A @ u).tolist() == u.tolist()
    assert np.maximum(X0, u.values).tolist() == Y1.tolist()


def test_solve_report_reference():
    r = zs.solve_report(problem(unit(3)))
    assert r.solvable and r.least.tolist() == X0.tolist()
    assert r.unique is False
    assert {tuple(c.values) for c in r.basis.columns} == {(1, 0, 1, 0, 0, 1, 0), tuple(V2)}
    assert r.nodes == (3, 5)
    doc = r.to_dict()
    assert doc["least"] == X0.tolist() and doc["classes"] == [[3], [5]]

    r = zs.solve_report(problem(unit(6)))
    assert not r.solvable and r.rho_bar == 2.0 and r.least is None

    r = zs.solve_report(problem(unit(3), lam=3.0))
    assert r.solvable and r.unique and r.basis is None


def test_solve_report_lattice():
    A = np.array([[0.5, 0.25], [0, 0.75]])
    r = zs.solve_report(zs.ZProblem.from_arrays(A, [0.5, 1.0], 1.0, "lukasiewicz"))
    assert r.solvable and r.unique is None
    assert r.least.tolist() == [0.5, 1.0]
    r = zs.solve_report(zs.ZProblem.from_arrays(A, [0.3, 0.6], 1.0, "max-min"))
    assert r.least.tolist() == [0.3, 0.6]


def test_is_solution_tolerances():
    p = problem(unit(3), sr="nonnegative")
    assert zs.is_solution(p, zs.Vector(X0 * (1 + 1e-11), "nonnegative"))
    assert not zs.is_solution(problem(unit(3)), zs.Vector(X0 * (1 + 1e-9)))


def test_existence_oracle_partial_sums(rng):
    # solvable iff b + Ab + ... + A^k b stabilizes by k = n
    for _ in range(300):
        n = int(rng.integers(1, 6))
        A = random_sparse(rng, n)
        b = np.where(rng.random(n) < 0.5, rng.choice(GRID[1:], n), 0.0)
        z, term = b.copy(), b.copy()
        for _ in range(n):
            term = (A * term[None, :]).max(axis=1)
            z = np.maximum(z, term)
        z_next = np.maximum(z, (A * z[None, :]).max(axis=1))
        stabilized = np.array_equal(z, z_next)
        assert zs.solvability(problem(b, A=A)).solvable == stabilized


def test_convexity_and_recessive_cone(rng):
    p = problem(unit(3))
    basis = zs.eigenbasis(p.A, 1.0)
    x0 = zs.least_solution_tracedown(p)
    for _ in range(50):
        x = zs.combine(x0, rng.choice(GRID, 2), basis)
        y = zs.combine(x0, rng.choice(GRID, 2), basis)
        # lam_hat + mu_hat = 1 in max-times: one of them equals 1
        t = float(rng.choice([0.0, 0.25, 0.5, 1.0]))
        z = zs.Vector(np.maximum(x.values, t * y.values))
        assert zs.is_solution(p, z)
        mu = float(rng.choice(GRID))
        v = basis.columns[int(rng.integers(2))]
        assert zs.is_solution(p, zs.Vector(np.maximum(z.values, mu * v.values)))
