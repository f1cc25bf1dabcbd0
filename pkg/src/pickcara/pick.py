"""Interpolation data and the block Pick matrix.

The data of a problem are distinct nodes z_0, ..., z_d in the open unit disk
and square target matrices C_0, ..., C_d of a common size N.  A solution is
an analytic N x N matrix function T on the disk with T(z) + T(z)* >= 0 and
T(z_k) = C_k for every k.  Solvability is governed by the block Pick matrix
assembled from the kernel

    K(z, w) = (C_z + C_w*) / (2 (1 - z conj(w))).
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from typing import NamedTuple

import numpy as np

from ._validation import check_disk_point, check_square_matrix, check_tolerance

__all__ = [
    "InfeasibleDataError",
    "InterpolationProblem",
    "PickMatrix",
    "PsdReport",
    "kernel_block",
    "build_pick_matrix",
    "validate_psd",
    "extend_problem",
]


class InfeasibleDataError(ValueError):
    """Raised when interpolation data admits no solution."""


@dataclass(frozen=True)
class InterpolationProblem:
    """Immutable container for nodes and target values.

    Attributes:
        matrix_size: Side length N of the target matrices.
        nodes: Distinct points of the open unit disk.
        values: Target matrices, one N x N array per node.
    """

    matrix_size: int
    nodes: tuple
    values: tuple
    node_sep_tol: InitVar[float] = 1e-12

    def __post_init__(self, node_sep_tol):
        node_sep_tol = check_tolerance(node_sep_tol, "node_sep_tol")
        n = int(self.matrix_size)
        if n < 1:
            raise ValueError(f"matrix_size must be positive, got {n}")
        object.__setattr__(self, "matrix_size", n)
        nodes = tuple(
            check_disk_point(z, name=f"nodes[{k}]") for k, z in enumerate(self.nodes)
        )
        if not nodes:
            raise ValueError("at least one node is required")
        values = tuple(
            check_square_matrix(c, size=n, name=f"values[{k}]")
            for k, c in enumerate(self.values)
        )
        if len(values) != len(nodes):
            raise ValueError(f"got {len(nodes)} nodes but {len(values)} values")
        for v in values:
            v.setflags(write=False)
        for k in range(len(nodes)):
            for l in range(k + 1, len(nodes)):
                if abs(nodes[k] - nodes[l]) <= node_sep_tol:
                    raise ValueError(
                        f"nodes[{k}] and nodes[{l}] coincide within "
                        f"{node_sep_tol}: {nodes[k]} vs {nodes[l]}"
                    )
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)

    @property
    def n_nodes(self):
        return len(self.nodes)

    @property
    def normalized(self):
        """True when the first node is exactly the origin."""
        return self.nodes[0] == 0


class PickMatrix(NamedTuple):
    """Block Pick matrix together with its layout.

    Attributes:
        entries: Hermitian array of shape (n*N, n*N); scalar entry
            (k*N + m, l*N + n) is K(z_k, z_l)[m, n].
        block_size: N, the side length of each block.
        n_nodes: Number of block rows.
    """

    entries: np.ndarray
    block_size: int
    n_nodes: int

    @property
    def dim(self):
        return self.entries.shape[0]


class PsdReport(NamedTuple):
    """Outcome of the positive-semidefiniteness gate.

    Attributes:
        feasible: True when the smallest eigenvalue clears the tolerance.
        min_eigenvalue: Smallest eigenvalue of the Pick matrix.
        tolerance_used: Threshold actually applied; eigenvalues at or above
            -tolerance_used pass.
    """

    feasible: bool
    min_eigenvalue: float
    tolerance_used: float


def kernel_block(z, w, value_z, value_w):
    """Evaluate the Caratheodory kernel block K(z, w).

    Args:
        z, w: Points of the open unit disk.
        value_z, value_w: Target matrices attached to z and w.

    Returns:
        (value_z + value_w^*) / (2 (1 - z conj(w))) as an N x N array.
    """
    z = check_disk_point(z, name="z")
    w = check_disk_point(w, name="w")
    value_z = check_square_matrix(value_z, name="value_z")
    value_w = check_square_matrix(value_w, size=value_z.shape[0], name="value_w")
    denom = 2.0 * (1.0 - z * np.conj(w))
    return (value_z + value_w.conj().T) / denom


def build_pick_matrix(problem):
    """Assemble the block Pick matrix of a problem.

    The result is exactly Hermitian: off-diagonal blocks are computed once
    and mirrored, and each diagonal block is symmetrized entrywise.

    Args:
        problem: The interpolation data.

    Returns:
        A PickMatrix of dimension n_nodes * matrix_size.
    """
    n = problem.n_nodes
    size = problem.matrix_size
    p = np.zeros((n * size, n * size), dtype=np.complex128)
    for k in range(n):
        for l in range(k, n):
            block = kernel_block(
                problem.nodes[k], problem.nodes[l], problem.values[k], problem.values[l]
            )
            rows = slice(k * size, (k + 1) * size)
            cols = slice(l * size, (l + 1) * size)
            if k == l:
                p[rows, cols] = (block + block.conj().T) / 2.0
            else:
                p[rows, cols] = block
                p[cols, rows] = block.conj().T
    p.setflags(write=False)
    return PickMatrix(entries=p, block_size=size, n_nodes=n)


def validate_psd(pick, psd_tol=None):
    """Check the Pick matrix for positive semidefiniteness.

    Args:
        pick: A PickMatrix.
        psd_tol: Eigenvalues at or above -psd_tol count as nonnegative.  When
            None, the threshold is 1e-10 * (1 + max |entry|).

    Returns:
        A PsdReport; ``feasible`` is True exactly when the data admits a
        solution.
    """
    psd_tol = check_tolerance(psd_tol, "psd_tol", allow_none=True)
    if psd_tol is None:
        scale = float(np.max(np.abs(pick.entries))) if pick.entries.size else 0.0
        psd_tol = 1e-10 * (1.0 + scale)
    if not np.all(np.isfinite(pick.entries)):
        raise ValueError("Pick matrix has non-finite entries")
    min_eig = float(np.linalg.eigvalsh(pick.entries)[0])
    return PsdReport(
        feasible=min_eig >= -psd_tol, min_eigenvalue=min_eig, tolerance_used=psd_tol
    )


def extend_problem(problem, new_node, new_value, psd_tol=None, node_sep_tol=1e-12):
    """Append one node and re-run the feasibility gate.

    The existing data is untouched; the extended Pick matrix contains the
    previous one as its leading principal block.  An infeasible extension is
    not an error: the extended problem is returned together with the failing
    report so a caller streaming nodes can decide what to do.

    Args:
        problem: Existing interpolation data.
        new_node: Node to append, distinct from the existing ones.
        new_value: Target matrix at the new node.
        psd_tol: Feasibility threshold, None for automatic.
        node_sep_tol: Minimum allowed distance to existing nodes.

    Returns:
        Pair (extended problem, PsdReport of the extended Pick matrix).
    """
    extended = InterpolationProblem(
        matrix_size=problem.matrix_size,
        nodes=problem.nodes + (new_node,),
        values=problem.values + (new_value,),
        node_sep_tol=node_sep_tol,
    )
    report = validate_psd(build_pick_matrix(extended), psd_tol=psd_tol)
    return extended, report
