"""Command-line front end: check, solve, generate, verify.

All commands speak JSON (complex scalars as [re, im] pairs) and share one
exit-code contract: 0 success, 1 input or usage error, 2 infeasible data
(no solution exists), 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from ._validation import BOUNDARY_WARNING_MARGIN
from .gram import factor_gram
from .herglotz import make_problem, random_measure
from .isometry import (
    ModelConsistencyError,
    build_isometry,
    determinacy_by_defect,
    determinacy_by_linear_systems,
)
from .mobius import normalize_problem
from .pick import InfeasibleDataError, build_pick_matrix, validate_psd
from .resolvent import (
    SolutionEvaluator,
    make_contraction_parameter,
    verify_solution,
)
from .serialize import (
    complex_to_pair,
    matrix_to_json,
    measure_from_json,
    parameter_from_json,
    problem_from_json,
    problem_to_json,
)

__all__ = ["main", "build_parser"]

VERIFY_RESIDUAL_LIMIT = 1e-6
VERIFY_EIGENVALUE_FLOOR = -1e-6


class _Parser(argparse.ArgumentParser):
    """Argument parser that exits with code 1 on usage errors."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _parse_point(text):
    """Parse 're,im' (or bare 're'); surrounding ()/[] are allowed."""
    cleaned = text.strip()
    if cleaned[:1] in "([" and cleaned[-1:] in ")]":
        cleaned = cleaned[1:-1]
    parts = cleaned.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ValueError(f"expected a point as re,im - got {text!r}")


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON: {exc}") from None


def _emit(payload):
    print(json.dumps(payload, indent=2))


def _boundary_warnings(problem):
    return [
        f"nodes[{k}] is within {BOUNDARY_WARNING_MARGIN} of the unit circle"
        for k, z in enumerate(problem.nodes)
        if abs(z) > 1.0 - BOUNDARY_WARNING_MARGIN
    ]


def _normalized(problem):
    if problem.normalized:
        return problem, None
    return normalize_problem(problem)


def _build_model(problem, psd_tol=None, rank_tol=1e-10):
    """Normalize and build (normalized, transform, pick, gram, iso)."""
    normalized, transform = _normalized(problem)
    pick = build_pick_matrix(normalized)
    gram = factor_gram(pick, rank_tol=rank_tol, psd_tol=psd_tol)
    iso = build_isometry(gram, normalized.nodes, rank_tol=rank_tol)
    return normalized, transform, pick, gram, iso


def _evaluator(problem, gram, iso, transform, parameter):
    first = problem.values[0]
    return SolutionEvaluator(
        gram=gram,
        iso=iso,
        parameter=parameter,
        skew_part=(first - first.conj().T) / 2.0,
        transform=transform,
    )


def _parameter_for(args, q):
    if getattr(args, "param", None):
        return parameter_from_json(_load_json(args.param), q=q)
    return make_contraction_parameter("zero", q=q)


def cmd_check(args):
    problem = problem_from_json(_load_json(args.problem))
    pick = build_pick_matrix(problem)
    report = validate_psd(pick, psd_tol=args.psd_tol)
    out = {
        "feasible": report.feasible,
        "min_eigenvalue": report.min_eigenvalue,
        "rank": None,
        "ambient_dim": None,
        "defect_dim": None,
        "determinate": None,
        "routes_agree": None,
        "pivot": complex_to_pair(problem.nodes[0]),
        "warnings": _boundary_warnings(problem),
    }
    if not report.feasible:
        _emit(out)
        return 2
    _, _, npick, gram, iso = _build_model(
        problem, psd_tol=args.psd_tol, rank_tol=args.rank_tol
    )
    decision = determinacy_by_linear_systems(npick)
    determinate = determinacy_by_defect(iso)
    out.update(
        rank=gram.rank,
        ambient_dim=iso.ambient_dim,
        defect_dim=iso.defect_dims[0],
        determinate=determinate,
        routes_agree=determinate == decision.determinate,
    )
    if args.dump_model:
        out["model"] = {
            "rank": gram.rank,
            "vectors": [
                [complex_to_pair(entry) for entry in gram.vectors[:, j]]
                for j in range(gram.vectors.shape[1])
            ],
        }
    _emit(out)
    return 0


def cmd_solve(args):
    problem = problem_from_json(_load_json(args.problem))
    _, transform, _, gram, iso = _build_model(problem)
    parameter = _parameter_for(args, iso.defect_dims[0])
    ev = _evaluator(problem, gram, iso, transform, parameter)
    points = list(problem.nodes)
    if args.grid:
        points.extend(
            0.5 * np.exp(2j * np.pi * j / args.grid) for j in range(args.grid)
        )
    if args.at:
        points.extend(_parse_point(text) for text in args.at)
    rows = [
        {"z": complex_to_pair(z), "T": matrix_to_json(ev.evaluate(z))}
        for z in points
    ]
    _emit({"pivot": complex_to_pair(problem.nodes[0]), "rows": rows})
    return 0


def cmd_generate(args):
    if args.measure:
        measure = measure_from_json(_load_json(args.measure))
    else:
        size, atoms, seed = args.random
        measure = random_measure(size, atoms, seed)
    nodes = [_parse_point(text) for text in args.nodes]
    problem = make_problem(measure, nodes)
    payload = problem_to_json(problem)
    with open(args.out, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2)
        handle.write("\n")
    _emit(payload)
    return 0


def cmd_verify(args):
    problem = problem_from_json(_load_json(args.problem))
    _, transform, _, gram, iso = _build_model(problem)
    parameter = _parameter_for(args, iso.defect_dims[0])
    ev = _evaluator(problem, gram, iso, transform, parameter)
    report = verify_solution(problem, ev, sample_count=args.samples, seed=args.seed)
    _emit(
        {
            "node_residuals": list(report.node_residuals),
            "min_re_eigenvalue": report.min_re_eigenvalue,
            "samples": report.sample_count,
            "seed": report.seed,
        }
    )
    passed = (
        report.max_node_residual <= VERIFY_RESIDUAL_LIMIT
        and report.min_re_eigenvalue >= VERIFY_EIGENVALUE_FLOOR
    )
    return 0 if passed else 3


def build_parser():
    parser = _Parser(
        prog="pickcara",
        description=(
            "Decide solvability and determinacy of matrix interpolation "
            "data on the unit disk, and evaluate the solution family."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", help="feasibility, rank, and determinacy")
    check.add_argument("problem", help="problem JSON file")
    check.add_argument("--psd-tol", type=float, default=None)
    check.add_argument("--rank-tol", type=float, default=1e-10)
    check.add_argument("--dump-model", action="store_true")
    check.set_defaults(func=cmd_check)

    solve = sub.add_parser("solve", help="evaluate one solution of the family")
    solve.add_argument("problem", help="problem JSON file")
    solve.add_argument("--param", help="parameter JSON file (default: zero)")
    where = solve.add_mutually_exclusive_group()
    where.add_argument("--grid", type=_positive_int, metavar="K",
                       help="add K points on the circle of radius 0.5")
    where.add_argument("--at", nargs="+", metavar="RE,IM",
                       help="add explicit points; wrap in () for negatives")
    solve.set_defaults(func=cmd_solve)

    generate = sub.add_parser("generate", help="sample a measure into a problem file")
    source = generate.add_mutually_exclusive_group(required=True)
    source.add_argument("--measure", help="measure JSON file")
    source.add_argument("--random", nargs=3, type=int, metavar=("N", "ATOMS", "SEED"),
                        help="random measure of size N with ATOMS atoms")
    generate.add_argument("--nodes", nargs="+", required=True, metavar="RE,IM")
    generate.add_argument("-o", "--out", required=True, help="output problem file")
    generate.set_defaults(func=cmd_generate)

    verify = sub.add_parser("verify", help="re-check a solution against its data")
    verify.add_argument("problem", help="problem JSON file")
    verify.add_argument("--param", help="parameter JSON file (default: zero)")
    verify.add_argument("--samples", type=_positive_int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ModelConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
