"""Input validation helpers shared across the package."""

from __future__ import annotations

import numbers
import warnings

import numpy as np

__all__ = [
    "check_square_matrix",
    "check_disk_point",
    "check_tolerance",
    "BOUNDARY_WARNING_MARGIN",
]

# Nodes this close to the unit circle make the kernel denominators blow up;
# we still accept them but warn.
BOUNDARY_WARNING_MARGIN = 1e-9


def check_square_matrix(value, size=None, name="matrix"):
    """Coerce ``value`` to a complex square ndarray.

    Args:
        value: Array-like expected to be square and 2-d.
        size: If given, the required side length.
        name: Label used in error messages.

    Returns:
        A complex128 ndarray copy of shape (n, n).

    Raises:
        ValueError: If the input is not square or has the wrong size.
    """
    arr = np.asarray(value, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be square, got shape {arr.shape}")
    if size is not None and arr.shape[0] != size:
        raise ValueError(
            f"{name} must have shape ({size}, {size}), got {arr.shape}"
        )
    return arr.copy()


def check_disk_point(z, name="node", strict=True):
    """Validate a point of the open unit disk.

    Args:
        z: Complex scalar.
        name: Label used in error messages.
        strict: If True, reject |z| >= 1; otherwise only warn near the
            boundary.

    Returns:
        The point as a Python complex.

    Raises:
        ValueError: If strict and the point lies outside the open disk.
    """
    if isinstance(z, np.ndarray):
        if z.size != 1:
            raise ValueError(f"{name} must be a scalar, got shape {z.shape}")
        z = z.reshape(()).item()
    if not isinstance(z, numbers.Complex):
        raise ValueError(f"{name} must be a complex number, got {type(z)!r}")
    z = complex(z)
    mod = abs(z)
    if strict and mod >= 1.0:
        raise ValueError(f"{name} must lie in the open unit disk, |{name}| = {mod}")
    if strict and mod > 1.0 - BOUNDARY_WARNING_MARGIN:
        warnings.warn(
            f"{name} = {z} is within {BOUNDARY_WARNING_MARGIN} of the unit "
            "circle; results may be inaccurate",
            stacklevel=2,
        )
    return z


def check_tolerance(value, name, allow_none=False):
    """Validate a nonnegative real tolerance."""
    if value is None:
        if allow_none:
            return None
        raise ValueError(f"{name} must not be None")
    if not isinstance(value, numbers.Real) or isinstance(value, bool):
        raise ValueError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if value < 0 or not np.isfinite(value):
        raise ValueError(f"{name} must be finite and nonnegative, got {value}")
    return value
