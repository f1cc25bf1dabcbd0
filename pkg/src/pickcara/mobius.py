"""Disk automorphism moving the first node to the origin.

The isometry construction requires the first node to sit exactly at 0.
Data with an arbitrary first node z_0 is reduced to that case by the
automorphism u(z) = (z - z_0) / (1 - conj(z_0) z): the transported problem
keeps its target values, and any solution R of it pulls back to a solution
T(z) = R(u(z)) of the original data.  The correspondence is bijective, so
nothing is lost in the reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import check_disk_point
from .pick import InterpolationProblem

__all__ = ["MobiusTransform", "normalize_problem", "pullback_evaluate"]


@dataclass(frozen=True)
class MobiusTransform:
    """The automorphism u(z) = (z - pivot) / (1 - conj(pivot) z)."""

    pivot: complex

    def __post_init__(self):
        object.__setattr__(
            self, "pivot", check_disk_point(self.pivot, name="pivot")
        )

    def __call__(self, z):
        """Map a point of the open disk; u(pivot) = 0 exactly."""
        z = check_disk_point(z, name="z")
        if z == self.pivot:
            return 0j
        return (z - self.pivot) / (1.0 - np.conj(self.pivot) * z)


def normalize_problem(problem):
    """Transport a problem so that its first node is exactly 0.

    Nodes are mapped through the automorphism with pivot z_0; values are
    kept unchanged.  The returned transform converts points of the original
    disk into points of the normalized one, which is what pullback needs.

    Args:
        problem: Any valid interpolation data.

    Returns:
        Pair (normalized problem, MobiusTransform with pivot z_0).
    """
    transform = MobiusTransform(problem.nodes[0])
    nodes = (0j,) + tuple(transform(z) for z in problem.nodes[1:])
    normalized = InterpolationProblem(
        matrix_size=problem.matrix_size,
        nodes=nodes,
        values=problem.values,
        node_sep_tol=0.0,
    )
    return normalized, transform


def pullback_evaluate(ev, transform, z):
    """Evaluate a normalized-problem solution at a point of the original disk.

    Args:
        ev: Solution evaluator (or any callable z -> matrix) built for the
            normalized problem.
        transform: The MobiusTransform returned by normalize_problem.
        z: Point of the open unit disk, in original coordinates.

    Returns:
        R(u(z)), which solves the original problem.
    """
    evaluate = getattr(ev, "evaluate", ev)
    return evaluate(transform(z))
