"""Z-matrix equations ``lam x = A x + b`` over semirings.

Supported instances: max-times, nonnegative (ordinary arithmetic), max-min
and Lukasiewicz.  Node and class indices are 0-based throughout the API.
"""

from .errors import (
    ContextError,
    DivergenceError,
    DomainError,
    NotAnEigenvalueError,
    NotASolutionError,
    NotInvertibleError,
    SemiringError,
    UnsupportedSemiringError,
)
from .linalg import (
    Matrix,
    StarResult,
    Vector,
    identity,
    kleene_star,
    mat_add,
    mat_mul,
    mat_power,
    mat_vec,
    star_apply,
    unit_vector,
    vec_add,
)
from .semiring import Scalar, Semiring, as_semiring, sr_add, sr_mul, sr_try_div
from .spectral import (
    CriticalGraph,
    EigenBasis,
    SpectralData,
    critical_graph,
    eigenbasis,
    eigenvalue_set,
    is_eigenvalue,
    max_cycle_mean,
    perron_root,
)
from .structure import (
    Digraph,
    FrobeniusForm,
    accesses,
    classes_accessing_support,
    digraph_of,
    frobenius_normal_form,
)
from .zsolver import (
    Solvability,
    SolveReport,
    ZProblem,
    combine,
    decompose,
    is_solution,
    krivulin_eigenvector,
    krivulin_residual,
    least_solution_tracedown,
    solvability,
    solve_report,
)

__version__ = "0.1.0"
