"""Isometric shift on the Gram model and determinacy of the data.

For a normalized problem (first node exactly 0) the map

    A : x_{kN+m}  |->  (x_{kN+m} - x_m) / z_k,        k >= 1,

defined on the span of the model vectors attached to nonzero nodes, is
isometric whenever the Pick matrix is positive semidefinite.  The problem
has exactly one solution precisely when a defect subspace (the orthogonal
complement of the domain or of the range of A) is trivial.  The same
question is also decidable directly on the Pick matrix through two families
of linear systems; both routes are provided and cross-checked in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import check_tolerance
from .pick import PickMatrix

__all__ = [
    "ModelConsistencyError",
    "IsometryModel",
    "DeterminacyDecision",
    "build_isometry",
    "determinacy_by_defect",
    "determinacy_by_linear_systems",
]


class ModelConsistencyError(RuntimeError):
    """Internal inconsistency: the model violates an exact identity.

    Signals that the Pick matrix passed the feasibility gate too loosely
    for the requested tolerances, not a user input error.
    """


@dataclass(frozen=True)
class IsometryModel:
    """The isometry A in coordinates, with its four orthonormal bases.

    Attributes:
        ambient_dim: Dimension r of the model space.
        a_full: (r, r) matrix acting as A on the domain and as 0 on the
            domain defect subspace.
        q_dom: Orthonormal basis (r, p) of the domain of A.
        q_defect_dom: Orthonormal basis (r, q) of the domain defect
            subspace (orthogonal complement of the domain).
        q_ran: Orthonormal basis (r, p) of the range of A.
        q_defect_ran: Orthonormal basis (r, q) of the range defect
            subspace.
        defect_dims: Pair (domain defect dimension, range defect
            dimension); equal for every consistent model.
        iso_residual: Measured deviation of A from being isometric on its
            domain, max |<A u_i, A u_j> - delta_ij| over the orthonormal
            domain basis.
    """

    ambient_dim: int
    a_full: np.ndarray
    q_dom: np.ndarray
    q_defect_dom: np.ndarray
    q_ran: np.ndarray
    q_defect_ran: np.ndarray
    defect_dims: tuple
    iso_residual: float


@dataclass(frozen=True)
class DeterminacyDecision:
    """Joint outcome of the two linear-system determinacy conditions.

    ``domain_spans`` reports whether every first-block row of the Pick
    matrix is a linear combination of the rows attached to nonzero nodes
    (the domain of A fills the model space); ``range_spans`` reports the
    analogous condition for the differenced rows (the range of A fills the
    model space).  The decision is truthy exactly when determinate.
    """

    determinate: bool
    domain_spans: bool
    range_spans: bool

    def __bool__(self):
        return self.determinate


def _rank_from_singular_values(s, rank_tol):
    if s.size == 0:
        return 0
    return int(np.count_nonzero(s > rank_tol * s[0]))


def build_isometry(model, nodes, rank_tol=1e-10, iso_tol=1e-8):
    """Construct the isometry A of a normalized problem on its Gram model.

    The domain family consists of the model vectors x_{kN+m} for k >= 1;
    each orthonormal basis vector of their span, written as a least-squares
    combination of the family, is mapped through (x_{kN+m} - x_m) / z_k.
    Feasibility of the Pick matrix guarantees the map is well defined and
    isometric; this is verified numerically rather than assumed.

    Args:
        model: GramModel of the problem.
        nodes: The problem's nodes; nodes[0] must be exactly 0.
        rank_tol: Relative singular value threshold for the rank decisions
            on the domain and range families.
        iso_tol: Bound on the isometry residual.

    Returns:
        An IsometryModel.

    Raises:
        ValueError: If nodes[0] != 0 or the node count does not match the
            model.
        ModelConsistencyError: If the constructed map fails the isometry
            check within iso_tol, or domain and range ranks disagree.
    """
    rank_tol = check_tolerance(rank_tol, "rank_tol")
    iso_tol = check_tolerance(iso_tol, "iso_tol")
    nodes = tuple(complex(z) for z in nodes)
    if len(nodes) != model.n_nodes:
        raise ValueError(
            f"got {len(nodes)} nodes for a model with {model.n_nodes} nodes"
        )
    if nodes[0] != 0:
        raise ValueError(
            f"first node must be exactly 0, got {nodes[0]}; normalize the "
            "problem first"
        )
    if any(z == 0 for z in nodes[1:]):
        raise ValueError("nodes must be distinct; a second node equals 0")
    r = model.rank
    size = model.block_size
    d = model.n_nodes - 1
    x = model.vectors
    domain_family = x[:, size:]
    z_factors = np.repeat(np.asarray(nodes[1:], dtype=np.complex128), size)
    range_family = (domain_family - np.tile(x[:, :size], (1, d))) / z_factors

    u, s, vh = np.linalg.svd(domain_family, full_matrices=True)
    p = _rank_from_singular_values(s, rank_tol)
    q_dom = u[:, :p]
    q_defect_dom = u[:, p:]
    # coefficients writing each orthonormal basis vector in the family
    coef = vh[:p, :].conj().T / s[:p]
    images = range_family @ coef

    if p == 0:
        iso_residual = 0.0
    else:
        gram_images = images.conj().T @ images
        iso_residual = float(np.max(np.abs(gram_images - np.eye(p))))
    if iso_residual > iso_tol:
        raise ModelConsistencyError(
            f"map is not isometric within {iso_tol} (residual "
            f"{iso_residual:.3e}); the Pick matrix was accepted too loosely"
        )

    a_full = images @ q_dom.conj().T
    u2, s2, _ = np.linalg.svd(images, full_matrices=True)
    p_ran = _rank_from_singular_values(s2, rank_tol)
    if p_ran != p:
        raise ModelConsistencyError(
            f"domain rank {p} and range rank {p_ran} disagree"
        )
    q_ran = u2[:, :p_ran]
    q_defect_ran = u2[:, p_ran:]

    for arr in (a_full, q_dom, q_defect_dom, q_ran, q_defect_ran):
        arr.setflags(write=False)
    return IsometryModel(
        ambient_dim=r,
        a_full=a_full,
        q_dom=q_dom,
        q_defect_dom=q_defect_dom,
        q_ran=q_ran,
        q_defect_ran=q_defect_ran,
        defect_dims=(r - p, r - p_ran),
        iso_residual=iso_residual,
    )


def determinacy_by_defect(iso):
    """Decide determinacy from the defect dimensions.

    A unique solution exists exactly when a defect number vanishes; in this
    finite-dimensional model both vanish together.
    """
    return min(iso.defect_dims) == 0


def _consistent(system, rhs, lsq_tol):
    """Whether ``a @ system = rhs`` has a solution, by least squares."""
    rhs = rhs.astype(np.complex128, copy=False)
    if system.shape[0] == 0:
        residual = float(np.linalg.norm(rhs))
    else:
        sol, *_ = np.linalg.lstsq(system.T, rhs, rcond=None)
        residual = float(np.linalg.norm(system.T @ sol - rhs))
    return residual <= lsq_tol * (1.0 + float(np.linalg.norm(rhs)))


def determinacy_by_linear_systems(pick, lsq_tol=1e-8):
    """Decide determinacy directly on a feasible normalized Pick matrix.

    Condition (a): for each row index k < N, the row P[k, :] is a linear
    combination of the rows P[N:, :].  Condition (b): the same with the
    differenced rows P[kN+m, :] - P[m, :] in place of P[N:, :].  The data
    is determinate exactly when (a) or (b) holds for all its row indices;
    single-node problems have empty systems, consistent only against a
    vanishing right-hand side.

    Args:
        pick: PickMatrix of a normalized feasible problem (first node 0).
        lsq_tol: Relative residual threshold for consistency.

    Returns:
        A DeterminacyDecision recording both conditions; truthy exactly
        when determinate.
    """
    lsq_tol = check_tolerance(lsq_tol, "lsq_tol")
    if not isinstance(pick, PickMatrix):
        raise ValueError("expected a PickMatrix")
    p = pick.entries
    size = pick.block_size
    d = pick.n_nodes - 1
    tail = p[size:, :]
    differenced = tail - np.tile(p[:size, :], (d, 1))
    domain_spans = all(
        _consistent(tail, p[k, :], lsq_tol) for k in range(size)
    )
    range_spans = all(
        _consistent(differenced, p[j, :], lsq_tol) for j in range(size)
    )
    return DeterminacyDecision(
        determinate=domain_spans or range_spans,
        domain_spans=domain_spans,
        range_spans=range_spans,
    )
