"""Estimator-style front end over the interpolation machinery."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import BOUNDARY_WARNING_MARGIN
from .gram import factor_gram
from .isometry import (
    build_isometry,
    determinacy_by_defect,
    determinacy_by_linear_systems,
)
from .mobius import normalize_problem
from .pick import InfeasibleDataError, InterpolationProblem, build_pick_matrix, validate_psd
from .resolvent import (
    ContractionParameter,
    SolutionEvaluator,
    make_contraction_parameter,
    verify_solution,
)

__all__ = ["CaratheodoryInterpolator"]


def _as_nodes(x, name="X"):
    """Coerce nodes to a list of complex scalars.

    Accepts a complex 1-d array, an (n, 1) column, or an (n, 2) real array
    of [re, im] rows.  Returns (nodes, n_features).
    """
    arr = np.asarray(x)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    n_features = 1
    if arr.ndim == 2:
        if arr.shape[1] == 1:
            arr = arr[:, 0]
        elif arr.shape[1] == 2 and not np.iscomplexobj(arr):
            n_features = 2
            arr = arr[:, 0] + 1j * arr[:, 1]
        else:
            raise ValueError(
                f"{name} must have shape (n,), (n, 1) or real (n, 2), "
                f"got {arr.shape}"
            )
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1- or 2-dimensional, got {arr.ndim}")
    return [complex(z) for z in arr], n_features


def _as_values(y, n_nodes):
    """Coerce targets to an (n, N, N) complex array."""
    arr = np.asarray(y, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1, 1)
    elif arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr.reshape(-1, 1, 1)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError(
            f"y must be (n,) scalars or (n, N, N) matrices, got {arr.shape}"
        )
    if arr.shape[0] != n_nodes:
        raise ValueError(
            f"got {n_nodes} nodes but {arr.shape[0]} target values"
        )
    return arr


class CaratheodoryInterpolator(BaseEstimator):
    """Interpolation by matrix functions with positive real part on the disk.

    Fitting checks that the node/value data is solvable (block Pick matrix
    positive semidefinite), builds the operator model behind the solution
    family, and decides whether the solution is unique.  Prediction
    evaluates one member of the family, selected by a contraction
    parameter; the default parameter is zero.

    Parameters
    ----------
    psd_tol : float or None, default=None
        Feasibility threshold on the smallest Pick eigenvalue; None picks
        1e-10 * (1 + largest absolute entry).
    rank_tol : float, default=1e-10
        Relative eigenvalue/singular-value threshold for all rank
        decisions.
    iso_tol : float, default=1e-8
        Bound on the isometry residual of the model operator.
    lsq_tol : float, default=1e-8
        Relative residual threshold for the linear-system determinacy
        route.
    contraction_tol : float, default=1e-12
        Slack on the largest singular value of parameters.
    node_sep_tol : float, default=1e-12
        Minimum allowed distance between nodes.

    Attributes
    ----------
    problem_ : InterpolationProblem
        The validated data.
    pick_matrix_ : PickMatrix
        Pick matrix of the data as given.
    psd_report_ : PsdReport
        Feasibility gate outcome on ``pick_matrix_``.
    transform_ : MobiusTransform or None
        Normalizing automorphism, None when the first node is already 0.
    normalized_problem_ : InterpolationProblem
        The data with its first node moved to the origin.
    normalized_pick_ : PickMatrix
        Pick matrix of the normalized data (the one the model is built on).
    gram_ : GramModel
        Coordinate realization of the normalized Pick matrix.
    isometry_ : IsometryModel
        The model isometry with its defect subspaces.
    rank_ : int
        Rank of the Pick matrix / dimension of the model space.
    defect_dim_ : int
        Common defect dimension q; 0 exactly for unique solutions.
    determinate_ : bool
        Whether the solution is unique (defect route).
    systems_decision_ : DeterminacyDecision
        Determinacy decided independently by linear systems.
    routes_agree_ : bool
        Whether both determinacy routes agree.
    evaluator_ : SolutionEvaluator
        Zero-parameter evaluator in original coordinates.
    matrix_size_ : int
        Side length N of the values.
    n_nodes_ : int
        Number of nodes.
    warnings_ : list of str
        Conditioning warnings (nodes too close to the unit circle).
    n_features_in_ : int
        1 for complex node input, 2 for [re, im] rows.

    Examples
    --------
    >>> est = CaratheodoryInterpolator()
    >>> est.fit([0.0, 0.5], [1.0, 3.0])
    CaratheodoryInterpolator()
    >>> bool(est.determinate_)
    True
    >>> complex(est.predict([0.25])[0, 0, 0]).real
    1.666666666666666...
    """

    def __init__(
        self,
        psd_tol=None,
        rank_tol=1e-10,
        iso_tol=1e-8,
        lsq_tol=1e-8,
        contraction_tol=1e-12,
        node_sep_tol=1e-12,
    ):
        self.psd_tol = psd_tol
        self.rank_tol = rank_tol
        self.iso_tol = iso_tol
        self.lsq_tol = lsq_tol
        self.contraction_tol = contraction_tol
        self.node_sep_tol = node_sep_tol

    def fit(self, X, y):
        """Validate the data, build the model, and decide determinacy.

        Parameters
        ----------
        X : array-like
            Nodes in the open unit disk: complex shape (n,) or (n, 1), or
            real shape (n, 2) rows of [re, im].
        y : array-like
            Targets: shape (n,) scalars or (n, N, N) matrices.

        Returns
        -------
        self

        Raises
        ------
        InfeasibleDataError
            If the Pick matrix is not positive semidefinite; no
            interpolant exists for such data.
        """
        nodes, n_features = _as_nodes(X)
        values = _as_values(y, len(nodes))
        problem = InterpolationProblem(
            matrix_size=values.shape[1],
            nodes=tuple(nodes),
            values=tuple(values),
            node_sep_tol=self.node_sep_tol,
        )
        pick = build_pick_matrix(problem)
        report = validate_psd(pick, psd_tol=self.psd_tol)
        if not report.feasible:
            raise InfeasibleDataError(
                "no solution exists: Pick matrix is not positive "
                f"semidefinite (min eigenvalue {report.min_eigenvalue:.6e}, "
                f"tolerance {report.tolerance_used:.6e})"
            )
        if problem.normalized:
            normalized, transform = problem, None
        else:
            normalized, transform = normalize_problem(problem)
        normalized_pick = build_pick_matrix(normalized)
        gram = factor_gram(
            normalized_pick, rank_tol=self.rank_tol, psd_tol=self.psd_tol
        )
        iso = build_isometry(
            gram, normalized.nodes, rank_tol=self.rank_tol, iso_tol=self.iso_tol
        )
        decision = determinacy_by_linear_systems(
            normalized_pick, lsq_tol=self.lsq_tol
        )
        first = problem.values[0]
        evaluator = SolutionEvaluator(
            gram=gram,
            iso=iso,
            parameter=make_contraction_parameter(
                "zero", q=iso.defect_dims[0], contraction_tol=self.contraction_tol
            ),
            skew_part=(first - first.conj().T) / 2.0,
            transform=transform,
        )

        self.problem_ = problem
        self.pick_matrix_ = pick
        self.psd_report_ = report
        self.transform_ = transform
        self.normalized_problem_ = normalized
        self.normalized_pick_ = normalized_pick
        self.gram_ = gram
        self.isometry_ = iso
        self.rank_ = gram.rank
        self.defect_dim_ = iso.defect_dims[0]
        self.determinate_ = determinacy_by_defect(iso)
        self.systems_decision_ = decision
        self.routes_agree_ = self.determinate_ == decision.determinate
        self.evaluator_ = evaluator
        self.matrix_size_ = problem.matrix_size
        self.n_nodes_ = problem.n_nodes
        self.warnings_ = [
            f"nodes[{k}] is within {BOUNDARY_WARNING_MARGIN} of the unit circle"
            for k, z in enumerate(problem.nodes)
            if abs(z) > 1.0 - BOUNDARY_WARNING_MARGIN
        ]
        self.n_features_in_ = n_features
        return self

    def _evaluator_for(self, parameter):
        if parameter is None:
            return self.evaluator_
        if not isinstance(parameter, ContractionParameter):
            if callable(parameter):
                parameter = make_contraction_parameter(
                    "per_point",
                    parameter,
                    q=self.defect_dim_,
                    contraction_tol=self.contraction_tol,
                )
            else:
                parameter = make_contraction_parameter(
                    "constant",
                    parameter,
                    q=self.defect_dim_,
                    contraction_tol=self.contraction_tol,
                )
        return SolutionEvaluator(
            gram=self.gram_,
            iso=self.isometry_,
            parameter=parameter,
            skew_part=self.evaluator_.skew_part,
            transform=self.transform_,
        )

    def predict(self, X, parameter=None):
        """Evaluate the selected solution at points of the disk.

        Parameters
        ----------
        X : array-like
            Points, in any of the node input forms accepted by fit.
        parameter : None, matrix, callable, or ContractionParameter
            Solution selector; None means the zero parameter.

        Returns
        -------
        ndarray of shape (n, N, N)
            T(z) at each requested point.
        """
        check_is_fitted(self, "evaluator_")
        points, _ = _as_nodes(X)
        ev = self._evaluator_for(parameter)
        return np.stack([ev.evaluate(z) for z in points])

    def evaluate(self, z, parameter=None):
        """Evaluate the selected solution at one point of the disk."""
        check_is_fitted(self, "evaluator_")
        return self._evaluator_for(parameter).evaluate(z)

    def verify(self, sample_count=200, seed=0, parameter=None):
        """Re-check interpolation and positivity for a selected solution.

        Returns
        -------
        VerificationReport
        """
        check_is_fitted(self, "evaluator_")
        return verify_solution(
            self.problem_,
            self._evaluator_for(parameter),
            sample_count=sample_count,
            seed=seed,
        )
