"""JSON codecs for problems, parameters, and measures.

Complex scalars travel as two-element [re, im] arrays of doubles; matrices
are row-major nested lists of such pairs.  Everything is plain JSON so
fixtures stay diff-able.
"""

from __future__ import annotations

import numbers

import numpy as np

from .herglotz import AtomicHerglotzMeasure
from .pick import InterpolationProblem
from .resolvent import make_contraction_parameter

__all__ = [
    "complex_to_pair",
    "pair_to_complex",
    "matrix_to_json",
    "matrix_from_json",
    "problem_to_json",
    "problem_from_json",
    "parameter_from_json",
    "measure_to_json",
    "measure_from_json",
]


def complex_to_pair(z):
    """Encode a complex scalar as [re, im]."""
    z = complex(z)
    return [float(z.real), float(z.imag)]


def pair_to_complex(data, name="value"):
    """Decode a complex scalar from [re, im] (a bare real is accepted)."""
    if isinstance(data, numbers.Real) and not isinstance(data, bool):
        return complex(float(data))
    if (
        isinstance(data, (list, tuple))
        and len(data) == 2
        and all(isinstance(part, numbers.Real) for part in data)
    ):
        return complex(float(data[0]), float(data[1]))
    raise ValueError(f"{name} must be a [re, im] pair, got {data!r}")


def matrix_to_json(matrix):
    """Encode a complex matrix as nested [re, im] pairs, row-major."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    return [[complex_to_pair(entry) for entry in row] for row in matrix]


def matrix_from_json(data, name="matrix"):
    """Decode a complex matrix from nested [re, im] pairs."""
    if not isinstance(data, list) or not data:
        raise ValueError(f"{name} must be a non-empty list of rows")
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list):
            raise ValueError(f"{name} row {i} must be a list")
        rows.append(
            [pair_to_complex(entry, name=f"{name}[{i}][{j}]") for j, entry in enumerate(row)]
        )
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError(f"{name} rows have inconsistent lengths")
    return np.array(rows, dtype=np.complex128)


def problem_to_json(problem):
    """Encode an InterpolationProblem as a JSON-ready dict."""
    return {
        "matrix_size": problem.matrix_size,
        "nodes": [complex_to_pair(z) for z in problem.nodes],
        "values": [matrix_to_json(c) for c in problem.values],
    }


def problem_from_json(data, node_sep_tol=1e-12):
    """Decode an InterpolationProblem from its JSON dict."""
    if not isinstance(data, dict):
        raise ValueError("problem must be a JSON object")
    for key in ("matrix_size", "nodes", "values"):
        if key not in data:
            raise ValueError(f"problem is missing the {key!r} key")
    if not isinstance(data["nodes"], list) or not isinstance(data["values"], list):
        raise ValueError("nodes and values must be lists")
    nodes = tuple(
        pair_to_complex(entry, name=f"nodes[{k}]")
        for k, entry in enumerate(data["nodes"])
    )
    values = tuple(
        matrix_from_json(entry, name=f"values[{k}]")
        for k, entry in enumerate(data["values"])
    )
    return InterpolationProblem(
        matrix_size=int(data["matrix_size"]),
        nodes=nodes,
        values=values,
        node_sep_tol=node_sep_tol,
    )


def parameter_from_json(data, q, contraction_tol=1e-12):
    """Decode a contraction parameter for a problem with defect dimension q.

    Accepted forms: {"kind": "zero"} and
    {"kind": "constant", "matrix": [[[re,im],...],...]}.
    """
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError('parameter must be a JSON object with a "kind" key')
    kind = data["kind"]
    if kind == "zero":
        return make_contraction_parameter(
            "zero", q=q, contraction_tol=contraction_tol
        )
    if kind == "constant":
        if "matrix" not in data:
            raise ValueError('constant parameter needs a "matrix" key')
        matrix = matrix_from_json(data["matrix"], name="parameter matrix")
        return make_contraction_parameter(
            "constant", matrix, q=q, contraction_tol=contraction_tol
        )
    raise ValueError(f"unknown parameter kind {kind!r}")


def measure_to_json(measure):
    """Encode an AtomicHerglotzMeasure as a JSON-ready dict."""
    return {
        "matrix_size": measure.matrix_size,
        "skew_seed": matrix_to_json(measure.skew_seed),
        "atoms": [
            {"angle": float(angle), "weight": matrix_to_json(weight)}
            for angle, weight in measure.atoms
        ],
    }


def measure_from_json(data):
    """Decode an AtomicHerglotzMeasure from its JSON dict."""
    if not isinstance(data, dict):
        raise ValueError("measure must be a JSON object")
    for key in ("matrix_size", "skew_seed", "atoms"):
        if key not in data:
            raise ValueError(f"measure is missing the {key!r} key")
    size = int(data["matrix_size"])
    skew_seed = matrix_from_json(data["skew_seed"], name="skew_seed")
    if skew_seed.shape != (size, size):
        raise ValueError(
            f"skew_seed must be {size} x {size}, got {skew_seed.shape}"
        )
    atoms = []
    for idx, atom in enumerate(data["atoms"]):
        if not isinstance(atom, dict) or "angle" not in atom or "weight" not in atom:
            raise ValueError(f"atoms[{idx}] needs angle and weight keys")
        atoms.append(
            (
                float(atom["angle"]),
                matrix_from_json(atom["weight"], name=f"atoms[{idx}] weight"),
            )
        )
    return AtomicHerglotzMeasure(skew_seed=skew_seed, atoms=tuple(atoms))
