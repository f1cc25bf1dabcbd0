"""Evaluation of the full solution family through unitary extensions.

Solutions of a normalized feasible problem are in bijection with analytic
contraction-valued functions Phi on the disk mapping the domain defect
space of the isometry A into its range defect space.  For each admissible
parameter the operator U_z = A (+) Phi(z) is a contraction and

    T(z) = i Im C_0 + ( <(2 (I - z U_z)^{-1} - I) x_m, x_l> )_{m,l}

solves the interpolation problem; every solution arises this way.  When
both defect spaces are trivial the parameter is empty and the solution is
unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ._validation import check_disk_point, check_square_matrix, check_tolerance
from .gram import factor_gram
from .isometry import build_isometry
from .mobius import normalize_problem
from .pick import build_pick_matrix

__all__ = [
    "ContractionParameter",
    "SolutionEvaluator",
    "VerificationReport",
    "make_contraction_parameter",
    "extended_operator",
    "evaluate_solution",
    "make_evaluator",
    "verify_solution",
]


def _spectral_norm(matrix):
    if matrix.size == 0:
        return 0.0
    return float(np.linalg.norm(matrix, 2))


@dataclass(frozen=True)
class ContractionParameter:
    """Contraction-valued parameter Phi selecting one solution.

    Attributes:
        kind: One of "zero", "constant", "per_point".
        dim: Defect dimension q; Phi(z) is q x q.
        matrix: The constant value for kinds "zero" and "constant".
        provider: Callable z -> q x q array for kind "per_point"; it is
            trusted to be analytic (not checkable pointwise) but its values
            are norm-checked at every evaluation.
        contraction_tol: Slack on the largest singular value.
    """

    kind: str
    dim: int
    matrix: np.ndarray = None
    provider: object = None
    contraction_tol: float = 1e-12

    def at(self, z):
        """The parameter value Phi(z), validated for per_point kind."""
        if self.kind != "per_point":
            return self.matrix
        value = np.asarray(self.provider(z), dtype=np.complex128)
        if value.ndim == 0:
            value = value.reshape(1, 1)
        if value.shape != (self.dim, self.dim):
            raise ValueError(
                f"parameter at z={z} has shape {value.shape}, expected "
                f"({self.dim}, {self.dim})"
            )
        norm = _spectral_norm(value)
        if norm > 1.0 + self.contraction_tol:
            raise ValueError(
                f"parameter at z={z} is not a contraction: largest singular "
                f"value {norm}"
            )
        return value


def make_contraction_parameter(kind, data=None, q=None, contraction_tol=1e-12):
    """Build and validate a contraction parameter.

    Args:
        kind: "zero" (needs q), "constant" (needs data, a q x q matrix),
            or "per_point" (needs a callable data and q).
        data: Matrix or callable, depending on kind.
        q: Defect dimension; inferred from the matrix for constant kind.
        contraction_tol: Slack on the largest singular value.

    Returns:
        A ContractionParameter.

    Raises:
        ValueError: On shape mismatch, unknown kind, or a constant matrix
            that is not a contraction.
    """
    contraction_tol = check_tolerance(contraction_tol, "contraction_tol")
    if kind == "zero":
        if q is None:
            raise ValueError("zero kind requires the defect dimension q")
        q = int(q)
        matrix = np.zeros((q, q), dtype=np.complex128)
    elif kind == "constant":
        if data is None:
            raise ValueError("constant kind requires a matrix")
        matrix = check_square_matrix(data, size=q, name="parameter matrix")
        q = matrix.shape[0]
        norm = _spectral_norm(matrix)
        if norm > 1.0 + contraction_tol:
            raise ValueError(
                f"not a contraction: largest singular value {norm}"
            )
    elif kind == "per_point":
        if not callable(data):
            raise ValueError("per_point kind requires a callable")
        if q is None:
            raise ValueError("per_point kind requires the defect dimension q")
        q = int(q)
        matrix = None
    else:
        raise ValueError(f"unknown parameter kind {kind!r}")
    if matrix is not None:
        matrix.setflags(write=False)
    return ContractionParameter(
        kind=kind,
        dim=q,
        matrix=matrix,
        provider=data if kind == "per_point" else None,
        contraction_tol=contraction_tol,
    )


def extended_operator(iso, param, z):
    """The contraction U_z = A (+) Phi(z) on the model space.

    Args:
        iso: IsometryModel.
        param: ContractionParameter with dim equal to the defect dimension.
        z: Point of the open unit disk.

    Returns:
        (r, r) matrix acting as A on the domain and as Phi(z), transported
        between the defect bases, on the domain defect subspace.
    """
    z = check_disk_point(z, name="z")
    q = iso.defect_dims[0]
    if param.dim != q:
        raise ValueError(
            f"parameter dimension {param.dim} does not match defect "
            f"dimension {q}"
        )
    phi = param.at(z)
    return iso.a_full + iso.q_defect_ran @ phi @ iso.q_defect_dom.conj().T


@dataclass(frozen=True)
class SolutionEvaluator:
    """Bundles everything needed to evaluate one member of the family.

    Attributes:
        gram: GramModel of the normalized problem.
        iso: IsometryModel on that model.
        parameter: ContractionParameter of matching defect dimension.
        skew_part: i Im C_0 = (C_0 - C_0^*) / 2.
        transform: Optional MobiusTransform; when set, evaluation maps the
            input through it first, so the evaluator answers in the
            original coordinates of an unnormalized problem.
    """

    gram: object
    iso: object
    parameter: ContractionParameter
    skew_part: np.ndarray
    transform: object = None
    _base: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        skew = check_square_matrix(
            self.skew_part, size=self.gram.block_size, name="skew_part"
        )
        skew.setflags(write=False)
        object.__setattr__(self, "skew_part", skew)
        q = self.iso.defect_dims[0]
        if self.parameter.dim != q:
            raise ValueError(
                f"parameter dimension {self.parameter.dim} does not match "
                f"defect dimension {q}"
            )
        base = self.gram.vectors[:, : self.gram.block_size]
        object.__setattr__(self, "_base", base)

    def evaluate(self, z):
        """The solution value T(z) for |z| < 1."""
        z = check_disk_point(z, name="z")
        if self.transform is not None:
            z = self.transform(z)
        if self.gram.rank == 0:
            return self.skew_part.copy()
        op = extended_operator(self.iso, self.parameter, z)
        eye = np.eye(self.gram.rank, dtype=np.complex128)
        resolved = np.linalg.solve(eye - z * op, self._base)
        return self.skew_part + (2.0 * resolved - self._base).T @ self._base.conj()

    __call__ = evaluate


def evaluate_solution(ev, z):
    """Evaluate the solution selected by ``ev`` at a disk point."""
    return ev.evaluate(z)


def make_evaluator(
    problem,
    parameter=None,
    psd_tol=None,
    rank_tol=1e-10,
    iso_tol=1e-8,
    contraction_tol=1e-12,
):
    """Run the whole construction for a problem and pick one solution.

    Normalizes the data when the first node is not the origin, builds the
    Gram model and the isometry, and wires in the parameter.

    Args:
        problem: InterpolationProblem.
        parameter: None for the zero parameter, a ContractionParameter, a
            constant matrix, or a callable z -> matrix (per_point kind).
        psd_tol, rank_tol, iso_tol, contraction_tol: See the individual
            construction steps.

    Returns:
        A SolutionEvaluator answering in the problem's own coordinates.

    Raises:
        InfeasibleDataError: If the Pick matrix is not positive
            semidefinite.
    """
    if problem.normalized:
        normalized, transform = problem, None
    else:
        normalized, transform = normalize_problem(problem)
    pick = build_pick_matrix(normalized)
    gram = factor_gram(pick, rank_tol=rank_tol, psd_tol=psd_tol)
    iso = build_isometry(gram, normalized.nodes, rank_tol=rank_tol, iso_tol=iso_tol)
    q = iso.defect_dims[0]
    if parameter is None:
        parameter = make_contraction_parameter(
            "zero", q=q, contraction_tol=contraction_tol
        )
    elif not isinstance(parameter, ContractionParameter):
        if callable(parameter):
            parameter = make_contraction_parameter(
                "per_point", parameter, q=q, contraction_tol=contraction_tol
            )
        else:
            parameter = make_contraction_parameter(
                "constant", parameter, q=q, contraction_tol=contraction_tol
            )
    first = problem.values[0]
    skew = (first - first.conj().T) / 2.0
    return SolutionEvaluator(
        gram=gram,
        iso=iso,
        parameter=parameter,
        skew_part=skew,
        transform=transform,
    )


class VerificationReport(NamedTuple):
    """Numerical evidence that an evaluator solves its problem.

    Attributes:
        node_residuals: Frobenius norms of T(z_k) - C_k per node.
        min_re_eigenvalue: Minimum over the sampled points of the smallest
            eigenvalue of the Hermitian part of T(z).
        sample_count: Number of sampled disk points.
        seed: Seed that generated the sample points.
    """

    node_residuals: tuple
    min_re_eigenvalue: float
    sample_count: int
    seed: int

    @property
    def max_node_residual(self):
        return max(self.node_residuals)


def verify_solution(problem, ev, sample_count=200, seed=0):
    """Check interpolation at the nodes and positivity on random samples.

    Args:
        problem: The interpolation data the evaluator was built from.
        ev: SolutionEvaluator or any callable z -> matrix.
        sample_count: Number of pseudo-random disk points (radius <= 0.95)
            at which the Hermitian part is eigenvalue-checked.
        seed: Seed for the sample points.

    Returns:
        A VerificationReport; thresholds are left to the caller.
    """
    evaluate = getattr(ev, "evaluate", ev)
    residuals = tuple(
        float(np.linalg.norm(evaluate(z) - c, "fro"))
        for z, c in zip(problem.nodes, problem.values)
    )
    rng = np.random.default_rng(seed)
    radii = 0.95 * np.sqrt(rng.uniform(0.0, 1.0, size=sample_count))
    angles = rng.uniform(0.0, 2.0 * np.pi, size=sample_count)
    min_re = math.inf
    for z in radii * np.exp(1j * angles):
        value = evaluate(complex(z))
        herm = (value + value.conj().T) / 2.0
        min_re = min(min_re, float(np.linalg.eigvalsh(herm)[0]))
    return VerificationReport(
        node_residuals=residuals,
        min_re_eigenvalue=min_re,
        sample_count=int(sample_count),
        seed=int(seed),
    )
