"""Ground-truth generators built from atomic Herglotz measures.

Every function of the target class has an integral representation

    T(z) = i T_0 + integral over [0, 2pi) of (e^{it} + z) / (e^{it} - z) dF(t)

with T_0 Hermitian and F a non-decreasing matrix measure on the circle.
Restricting F to finitely many atoms gives closed-form functions whose
interpolation data is feasible by construction and whose Pick matrices
have rank at most N times the atom count, which makes degenerate test
instances easy to manufacture on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import check_disk_point, check_square_matrix
from .pick import InterpolationProblem

__all__ = [
    "AtomicHerglotzMeasure",
    "eval_herglotz",
    "make_problem",
    "random_measure",
]

_TWO_PI = 2.0 * np.pi


def _check_hermitian(matrix, name):
    scale = 1.0 + float(np.max(np.abs(matrix))) if matrix.size else 1.0
    if float(np.max(np.abs(matrix - matrix.conj().T))) > 1e-12 * scale:
        raise ValueError(f"{name} must be Hermitian")
    return (matrix + matrix.conj().T) / 2.0


@dataclass(frozen=True)
class AtomicHerglotzMeasure:
    """Finitely supported matrix measure on the unit circle.

    Attributes:
        skew_seed: Hermitian N x N matrix T_0; i * skew_seed is the constant
            skew part of the generated function.
        atoms: Tuple of (angle, weight) pairs; angles in [0, 2pi) pairwise
            distinct, weights Hermitian positive semidefinite N x N.
    """

    skew_seed: np.ndarray
    atoms: tuple

    def __post_init__(self):
        seed = _check_hermitian(
            check_square_matrix(self.skew_seed, name="skew_seed"), "skew_seed"
        )
        seed.setflags(write=False)
        size = seed.shape[0]
        atoms = []
        for idx, (angle, weight) in enumerate(self.atoms):
            angle = float(angle) % _TWO_PI
            weight = _check_hermitian(
                check_square_matrix(weight, size=size, name=f"atoms[{idx}] weight"),
                f"atoms[{idx}] weight",
            )
            if weight.size and float(np.linalg.eigvalsh(weight)[0]) < -1e-12:
                raise ValueError(
                    f"atoms[{idx}] weight is not positive semidefinite"
                )
            weight.setflags(write=False)
            atoms.append((angle, weight))
        for i in range(len(atoms)):
            for j in range(i + 1, len(atoms)):
                gap = abs(atoms[i][0] - atoms[j][0])
                if min(gap, _TWO_PI - gap) <= 1e-12:
                    raise ValueError(
                        f"atoms {i} and {j} share the angle {atoms[i][0]}"
                    )
        object.__setattr__(self, "skew_seed", seed)
        object.__setattr__(self, "atoms", tuple(atoms))

    @property
    def matrix_size(self):
        return self.skew_seed.shape[0]


def eval_herglotz(measure, z):
    """Evaluate the function generated by an atomic measure.

    Args:
        measure: AtomicHerglotzMeasure.
        z: Point of the open unit disk.

    Returns:
        i T_0 + sum over atoms of ((e^{it} + z) / (e^{it} - z)) W; its
        Hermitian part is positive semidefinite everywhere on the disk.
    """
    z = check_disk_point(z, name="z")
    out = 1j * measure.skew_seed.astype(np.complex128)
    for angle, weight in measure.atoms:
        point = np.exp(1j * angle)
        out = out + ((point + z) / (point - z)) * weight
    return out


def make_problem(measure, nodes, node_sep_tol=1e-12):
    """Sample a measure at nodes, producing solvable interpolation data.

    Args:
        measure: AtomicHerglotzMeasure.
        nodes: Distinct points of the open unit disk.
        node_sep_tol: Minimum allowed node separation.

    Returns:
        InterpolationProblem with values C_k = eval_herglotz(measure, z_k);
        its Pick matrix is feasible with rank at most N * len(atoms).
    """
    nodes = tuple(nodes)
    values = tuple(eval_herglotz(measure, z) for z in nodes)
    return InterpolationProblem(
        matrix_size=measure.matrix_size,
        nodes=nodes,
        values=values,
        node_sep_tol=node_sep_tol,
    )


def random_measure(matrix_size, atom_count, seed):
    """Draw a reproducible random atomic measure.

    Args:
        matrix_size: Side length N of the weights.
        atom_count: Number of atoms; 0 gives a constant skew function.
        seed: Any value acceptable to numpy's default_rng.

    Returns:
        AtomicHerglotzMeasure with distinct angles and weights of the form
        G G^*, hence positive semidefinite.
    """
    if matrix_size < 1:
        raise ValueError(f"matrix_size must be positive, got {matrix_size}")
    if atom_count < 0:
        raise ValueError(f"atom_count must be nonnegative, got {atom_count}")
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((matrix_size, matrix_size)) + 1j * rng.standard_normal(
        (matrix_size, matrix_size)
    )
    skew_seed = (raw + raw.conj().T) / 2.0
    while True:
        angles = np.sort(rng.uniform(0.0, _TWO_PI, size=atom_count))
        if atom_count < 2:
            break
        gaps = np.diff(angles)
        wrap = _TWO_PI - (angles[-1] - angles[0])
        if min(gaps.min(), wrap) > 1e-9:
            break
    atoms = []
    for angle in angles:
        g = rng.standard_normal((matrix_size, matrix_size)) + 1j * rng.standard_normal(
            (matrix_size, matrix_size)
        )
        w = g @ g.conj().T
        atoms.append((float(angle), (w + w.conj().T) / 2.0))
    return AtomicHerglotzMeasure(skew_seed=skew_seed, atoms=tuple(atoms))
