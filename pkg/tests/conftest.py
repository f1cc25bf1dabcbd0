"""Shared fixtures: a reproducible corpus of generated problems."""

from typing import NamedTuple

import numpy as np
import pytest

from pickcara import AtomicHerglotzMeasure, InterpolationProblem, make_problem, random_measure

GOLDEN_ANGLE = 2.0 * np.pi * 0.6180339887498949


def disk_grid(count, radius=0.9):
    """Deterministic spiral of ``count`` points with modulus <= radius."""
    idx = np.arange(count)
    moduli = radius * np.sqrt((idx + 1) / count)
    return [complex(z) for z in moduli * np.exp(1j * GOLDEN_ANGLE * idx)]


def draw_nodes(count, seed, radius=0.8, min_sep=0.05):
    """First node exactly 0, the rest random, well separated, within radius."""
    rng = np.random.default_rng(seed)
    nodes = [0j]
    while len(nodes) < count:
        candidate = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(candidate) > radius:
            continue
        if min(abs(candidate - z) for z in nodes) <= min_sep:
            continue
        nodes.append(candidate)
    return tuple(nodes)


class SuiteInstance(NamedTuple):
    index: int
    measure: AtomicHerglotzMeasure
    problem: InterpolationProblem


def build_suite(count=50):
    """Deterministic corpus mixing sizes, node counts, and degeneracy.

    Offsetting the atom count against the node count mixes saturated
    (indeterminate) instances with rank-deficient determinate ones and
    a few rank-zero ones.
    """
    instances = []
    for i in range(count):
        matrix_size = (1, 2, 3)[i % 3]
        node_count = 1 + (i % 6)
        atom_count = (i + 3) % 6
        measure = random_measure(matrix_size, atom_count, seed=1000 + i)
        nodes = draw_nodes(node_count, seed=2000 + i)
        instances.append(
            SuiteInstance(
                index=i, measure=measure, problem=make_problem(measure, nodes)
            )
        )
    return instances


@pytest.fixture(scope="session")
def suite():
    return build_suite()


@pytest.fixture()
def two_node_problem():
    """The rank-one data forcing the solution (1 + z) / (1 - z)."""
    return InterpolationProblem(
        matrix_size=1,
        nodes=(0.0, 0.5),
        values=(np.array([[1.0]]), np.array([[3.0]])),
    )


@pytest.fixture()
def one_node_problem():
    """A single node at the origin with value 1; maximally free data."""
    return InterpolationProblem(
        matrix_size=1, nodes=(0.0,), values=(np.array([[1.0]]),)
    )
