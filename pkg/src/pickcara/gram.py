"""Finite-dimensional Hilbert space model built from the Pick matrix.

A feasible Pick matrix P is the Gram matrix of a family of vectors
x_0, ..., x_{nN-1} in C^r, where r = rank P.  The family is recovered from
the eigendecomposition P = V diag(lambda) V^*: keeping the eigenpairs whose
eigenvalue clears a relative threshold, the coordinate matrix

    X = diag(lambda_r)^{1/2} V_r^T

has columns x_j with <x_j, x_l> = P[j, l] under the inner product
<x, y> = sum_i x_i conj(y_i).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import check_tolerance
from .pick import InfeasibleDataError, PickMatrix, validate_psd

__all__ = ["inner", "GramModel", "factor_gram"]


def inner(x, y):
    """Inner product, conjugate-linear in the second argument."""
    x = np.asarray(x, dtype=np.complex128).ravel()
    y = np.asarray(y, dtype=np.complex128).ravel()
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return complex(np.vdot(y, x))


@dataclass(frozen=True)
class GramModel:
    """Vector family realizing the Pick matrix as a Gram matrix.

    Attributes:
        vectors: Array of shape (rank, n_nodes * block_size); column
            k * block_size + m is the model vector x_{kN+m} attached to node
            k and matrix row m.
        eigenvalues: Retained eigenvalues of the Pick matrix, descending.
        rank: Number of retained eigenvalues (the model space dimension).
        rank_tol_used: Relative eigenvalue threshold that was applied.
        block_size: Side length N of the target matrices.
        n_nodes: Number of nodes.
        psd_report: Feasibility gate outcome for the factored matrix.
    """

    vectors: np.ndarray
    eigenvalues: np.ndarray
    rank: int
    rank_tol_used: float
    block_size: int
    n_nodes: int
    psd_report: object

    def column(self, k, m):
        """Model vector x_{kN+m} for node k and matrix row m."""
        return self.vectors[:, k * self.block_size + m]

    def gram(self):
        """Gram matrix of the family; reproduces the Pick matrix."""
        return self.vectors.T @ self.vectors.conj()


def factor_gram(pick, rank_tol=1e-10, psd_tol=None, block_size=None):
    """Factor a feasible Pick matrix into a Gram family.

    Args:
        pick: A PickMatrix, or a plain Hermitian ndarray (then block_size is
            required).
        rank_tol: Relative eigenvalue threshold; eigenvalues above
            rank_tol * max(eigenvalue) are retained.
        psd_tol: Feasibility threshold forwarded to the gate; None selects
            the automatic scale-aware value.
        block_size: Block side length when ``pick`` is a plain array.

    Returns:
        A GramModel.  Two runs may legitimately differ by a left unitary
        factor; only Gram products are reproducible.

    Raises:
        InfeasibleDataError: If the matrix fails the feasibility gate; no
            solution exists for such data.
    """
    rank_tol = check_tolerance(rank_tol, "rank_tol")
    if not isinstance(pick, PickMatrix):
        matrix = np.asarray(pick, dtype=np.complex128)
        if block_size is None:
            raise ValueError("block_size is required for a plain array")
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
        if matrix.shape[0] % block_size != 0:
            raise ValueError(
                f"matrix side {matrix.shape[0]} is not a multiple of "
                f"block_size {block_size}"
            )
        pick = PickMatrix(
            entries=matrix,
            block_size=int(block_size),
            n_nodes=matrix.shape[0] // int(block_size),
        )
    report = validate_psd(pick, psd_tol=psd_tol)
    if not report.feasible:
        raise InfeasibleDataError(
            "no solution exists: Pick matrix is not positive semidefinite "
            f"(min eigenvalue {report.min_eigenvalue:.6e}, tolerance "
            f"{report.tolerance_used:.6e})"
        )
    eigvals, eigvecs = np.linalg.eigh(pick.entries)
    top = float(max(eigvals[-1], 0.0)) if eigvals.size else 0.0
    keep = eigvals > rank_tol * top
    lam = np.clip(eigvals[keep][::-1], 0.0, None)
    vr = eigvecs[:, keep][:, ::-1]
    vectors = np.sqrt(lam)[:, None] * vr.T
    lam.setflags(write=False)
    vectors.setflags(write=False)
    return GramModel(
        vectors=vectors,
        eigenvalues=lam,
        rank=int(lam.size),
        rank_tol_used=rank_tol,
        block_size=pick.block_size,
        n_nodes=pick.n_nodes,
        psd_report=report,
    )
