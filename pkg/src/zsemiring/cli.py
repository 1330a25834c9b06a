"""Command-line front end.

Problem files are JSON documents ``{"semiring", "matrix", "b"?, "lambda"?}``.
Reports label nodes 1..n, in text and in JSON alike.

Exit codes: 0 success (solvable), 2 unsolvable, 1 usage, parse or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import spectral, structure
from .errors import SemiringError, UnsupportedSemiringError
from .linalg import DEFAULT_TOL, Matrix, Vector, kleene_star, star_apply
from .semiring import Semiring, as_semiring
from .zsolver import ZProblem, decompose, solve_report

EXIT_OK, EXIT_ERROR, EXIT_UNSOLVABLE = 0, 1, 2


class InputError(Exception):
    pass


def load_problem(path, lam_override=None) -> ZProblem:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise InputError(f"{path}: expected a JSON object with a 'matrix' field")
    try:
        sr = as_semiring(doc.get("semiring", "max-times"))
        rows = doc["matrix"]
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise InputError(f"{path}: 'matrix' must be a list of rows")
        if any(len(r) != len(rows) for r in rows):
            raise InputError(f"{path}: 'matrix' must be square")
        A = Matrix(np.array(rows, dtype=float).reshape(len(rows), len(rows)), sr)
        b = doc.get("b")
        b = Vector(np.zeros(A.n) if b is None else b, sr)
        lam = doc.get("lambda", 1.0) if lam_override is None else lam_override
        return ZProblem(A, b, lam)
    except InputError:
        raise
    except (SemiringError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def load_solution(path) -> np.ndarray:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if isinstance(doc, dict):
        doc = doc.get("x")
    if not isinstance(doc, list):
        raise InputError(f"{path}: expected a list or an object with an 'x' field")
    return np.asarray(doc, dtype=float)


def fmt(v: float) -> str:
    return f"{float(v):.12g}"


def fmt_vec(values) -> str:
    return "(" + ", ".join(fmt(v) for v in values) + ")"


def fmt_set(nodes) -> str:
    return "{" + ", ".join(str(i + 1) for i in nodes) + "}"


def _one_based(classes):
    return [[i + 1 for i in c] for c in classes]


# -- subcommands ----------------------------------------------------------------


def cmd_solve(p: ZProblem, tol: float):
    r = solve_report(p, tol)
    doc = r.to_dict()
    doc["classes"] = _one_based(r.class_nodes)
    doc["support"] = [] if r.least is None else [i + 1 for i in sorted(r.least.support())]
    if r.basis is not None:
        doc["basis"]["indices"] = [i + 1 for i in r.basis.indices]
    lines = [
        f"semiring: {p.semiring.value}",
        f"lambda: {fmt(p.lam)}",
    ]
    if r.solvable:
        lines.append("solvable: yes")
    else:
        op = ">" if p.semiring is Semiring.MAX_TIMES else ">="
        why = (f"lambda=0 with b != 0" if p.lam == 0.0
               else f"rho_bar={fmt(r.rho_bar)} {op} lambda={fmt(p.lam)}")
        lines.append(f"solvable: no ({why})")
    lines.append(f"rho_bar: {fmt(r.rho_bar)}")
    lines.append("J: " + (", ".join(fmt_set(c) for c in r.class_nodes) or "{}"))
    if r.borderline:
        lines.append("warning: rho_bar and lambda agree to the comparison margin")
    if r.least is not None:
        if not r.least.support():
            lines.append("least solution: 0")
        else:
            lines.append(f"least solution: {fmt_vec(r.least.values)}")
        lines.append(f"support: {fmt_set(sorted(r.least.support()))}")
        if r.unique is not None:
            lines.append(f"unique: {'yes' if r.unique else 'no'}")
    if r.basis is not None:
        lines.append(f"eigenbasis at lambda={fmt(r.basis.lam)}:")
        for t, col in zip(r.basis.indices, r.basis.columns):
            lines.append(f"  column {t + 1}: {fmt_vec(col.values)}")
    return (EXIT_OK if r.solvable else EXIT_UNSOLVABLE), lines, doc


def cmd_spectrum(p: ZProblem, tol: float):
    A = p.A
    data = spectral.eigenvalue_set(A)
    F = data.fnf
    bases = {}
    if A.semiring is Semiring.MAX_TIMES:
        for mu in data.lambda_set:
            if mu > 0:
                bases[mu] = spectral.eigenbasis(A, mu, data)
    lines = [f"semiring: {A.semiring.value}", "classes (Frobenius order):"]
    for k, cls in enumerate(F.classes):
        mark = " spectral" if data.spectral[k] else ""
        lines.append(f"  {fmt_set(cls)} rho={fmt(data.rho_per_class[k])}{mark}")
    lines.append("Lambda = {" + ", ".join(fmt(mu) for mu in data.lambda_set) + "}")
    for mu in data.lambda_set:
        lines.append(f"spectral@{fmt(mu)}: " + ",".join(fmt_set(F.classes[j]) for j in data.spectral_classes[mu]))
    for mu, basis in bases.items():
        lines.append(f"eigenbasis@{fmt(mu)}:")
        for t, col in zip(basis.indices, basis.columns):
            lines.append(f"  column {t + 1}: {fmt_vec(col.values)}")
    doc = {
        "semiring": A.semiring.value,
        "classes": _one_based(F.classes),
        "rho_per_class": list(data.rho_per_class),
        "rho": data.rho_global,
        "spectral": list(data.spectral),
        "lambda_set": list(data.lambda_set),
        "spectral_classes": [
            {"lambda": mu, "classes": _one_based(F.classes[j] for j in data.spectral_classes[mu])}
            for mu in data.lambda_set
        ],
        "eigenbases": [
            {"lambda": mu, "indices": [t + 1 for t in b.indices], "columns": [c.tolist() for c in b.columns]}
            for mu, b in bases.items()
        ],
    }
    return EXIT_OK, lines, doc


def cmd_fnf(p: ZProblem, tol: float):
    A = p.A
    F = structure.frobenius_normal_form(A)
    try:
        roots = spectral.class_roots(A, F, A.semiring)
    except UnsupportedSemiringError:
        roots = None
    arcs = sorted((i, j) for i, j in F.reduced_edges if i != j)
    lines = [f"semiring: {A.semiring.value}", f"permutation: {fmt_vec(np.array(F.permutation) + 1)}",
             f"classes ({F.r}):"]
    for k, cls in enumerate(F.classes):
        root = "" if roots is None else f" rho={fmt(roots[k])}"
        lines.append(f"  N{k + 1} = {fmt_set(cls)}{root}")
    lines.append("reduced arcs (self-loops implied):")
    for i, j in arcs:
        lines.append(f"  {fmt_set(F.classes[i])} -> {fmt_set(F.classes[j])}")
    doc = {
        "semiring": A.semiring.value,
        "permutation": [v + 1 for v in F.permutation],
        "classes": _one_based(F.classes),
        "rho_per_class": None if roots is None else list(roots),
        "reduced_arcs": [[i + 1, j + 1] for i, j in arcs],
    }
    return EXIT_OK, lines, doc


def cmd_star(p: ZProblem, tol: float):
    A, b = p.A, p.b
    star = kleene_star(A, tol)
    lines = [f"semiring: {A.semiring.value}"]
    doc = {"semiring": A.semiring.value, "converged": star.converged, "closure": None}
    if star.converged:
        lines.append("A* =")
        lines.extend("  " + fmt_vec(row) for row in star.closure.values)
        doc["closure"] = star.closure.values.tolist()
    else:
        lines.append("A* diverges")
    if b.support():
        try:
            x = star_apply(A, b, tol)
            lines.append(f"A*b = {fmt_vec(x.values)}")
            doc["star_b"] = x.tolist()
        except SemiringError as exc:
            lines.append(f"A*b diverges ({exc})")
            doc["star_b"] = None
    return EXIT_OK, lines, doc


def cmd_decompose(p: ZProblem, tol: float, solution):
    x = Vector(solution, p.semiring)
    x0, v = decompose(p, x, tol)
    lines = [
        f"semiring: {p.semiring.value}",
        f"lambda: {fmt(p.lam)}",
        f"x  = {fmt_vec(x.values)}",
        f"x0 = {fmt_vec(x0.values)}",
        f"v  = {fmt_vec(v.values)}",
    ]
    doc = {"semiring": p.semiring.value, "lambda": p.lam, "x": x.tolist(), "x0": x0.tolist(), "v": v.tolist()}
    return EXIT_OK, lines, doc


COMMANDS = {
    "solve": cmd_solve,
    "spectrum": cmd_spectrum,
    "fnf": cmd_fnf,
    "star": cmd_star,
    "decompose": cmd_decompose,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--lambda", dest="lam", type=float, default=None, help="override lambda from the file")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOL,
                        help="series convergence tolerance (nonnegative only)")
    parser = argparse.ArgumentParser(prog="zsemiring", description="Z-matrix equations over semirings")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("solve", "spectrum", "fnf", "star"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("problem")
    sp = sub.add_parser("decompose", parents=[common])
    sp.add_argument("problem")
    sp.add_argument("solution")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        p = load_problem(args.problem, args.lam)
        extra = (load_solution(args.solution),) if args.command == "decompose" else ()
        tol = args.tolerance if p.semiring is Semiring.NONNEGATIVE else DEFAULT_TOL
        code, lines, doc = COMMANDS[args.command](p, tol, *extra)
    except (InputError, SemiringError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR
    if args.format == "json":
        doc["exit_code"] = code
        stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
