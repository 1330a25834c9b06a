import numpy as np
import pytest

import zsemiring as zs

# the 7x7 reference system: seven singleton classes, roots (1,1,1,0,0,0,2)
A7 = np.array(
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 2],
    ],
    dtype=float,
)

X0 = np.array([0, 0, 0, 1, 0, 1, 0], dtype=float)
V1 = np.array([1, 0, 1, 0, 0, 1, 0], dtype=float)
V2 = np.array([0, 0, 1, 0, 0, 1, 0], dtype=float)
Y1 = np.array([2, 0, 3, 1, 0, 3, 0], dtype=float)
Y2 = np.array([0, 0, 1, 1, 0, 2, 0], dtype=float)

# dyadic weights keep max-times products exact and hit rho = 1 often
GRID = np.array([0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0])
UNIT_GRID = np.array([0.0, 0.125, 0.25, 0.5, 0.75, 0.875, 1.0])


def unit(i, n=7):
    e = np.zeros(n)
    e[i] = 1.0
    return e


def random_sparse(rng, n, grid=GRID, density=None):
    density = rng.uniform(0.15, 0.7) if density is None else density
    mask = rng.random((n, n)) < density
    return np.where(mask, rng.choice(grid[1:], size=(n, n)), 0.0)


def random_substochastic(rng, n, density=None, scale=0.9):
    """Nonnegative matrix with every row sum <= scale, so rho < 1."""
    A = random_sparse(rng, n, GRID, density) * rng.random((n, n))
    sums = A.sum(axis=1, keepdims=True)
    factor = np.where(sums > 0, scale * rng.uniform(0.2, 1.0, size=sums.shape) / np.maximum(sums, 1e-300), 0.0)
    return A * factor


@pytest.fixture
def a7():
    return A7.copy()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# -- one line per acceptance criterion ------------------------------------------

_criteria: dict = {}
_details: dict = {}


@pytest.fixture
def record():
    """``record(k, text)`` attaches measured figures to criterion k's summary line."""

    def _record(key, text):
        _details.setdefault(key, []).append(text)

    return _record


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in report.keywords:
        if mark.startswith("criterion_"):
            key = int(mark.split("_")[1])
            prev = _criteria.get(key, True)
            _criteria[key] = prev and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        status = "PASS" if _criteria[key] else "FAIL"
        detail = "; ".join(_details.get(key, []))
        line = f"criterion {key}: {status}  {CRITERIA.get(key, '')}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))


CRITERIA = {
    1: "7x7 reference least solution, both algebras, exact, < 1 s",
    2: "solvability tables for b = e_i, exact",
    3: "eigenbasis at lambda = 1 and nonnegative spectral class, exact",
    4: "combination fixtures y1, y2 and cross-checks, exact",
    5: "Kleene star property suite, >= 500 matrices per instance, < 30 s",
    6: "spectral property suite, >= 500 max-times matrices",
    7: "solver property suite, >= 300 solvable instances per algebra",
    8: "semiring laws on >= 1e4 triples per instance",
}


def pytest_configure(config):
    for key in range(1, 9):
        config.addinivalue_line("markers", f"criterion_{key}: acceptance criterion {key}")


def mt(A):
    return zs.Matrix(A, "max-times")


def nn(A):
    return zs.Matrix(A, "nonnegative")
