"""Input validation helpers for estimator-facing array arguments."""

from __future__ import annotations

import math

import numpy as np

from .errors import LengthMismatch, ShapeMismatch


def as_float_matrix(X, name="X", require_finite=True):
    """Coerce to a 2-D float64 array, optionally rejecting NaN/inf."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ShapeMismatch(f"{name} must be 2-D, got shape {arr.shape}")
    if require_finite and not np.isfinite(arr).all():
        raise ShapeMismatch(f"{name} contains NaN or infinite values")
    return arr


def as_float_vector(y, name="y", require_finite=True):
    arr = np.asarray(y, dtype=np.float64).ravel()
    if require_finite and not np.isfinite(arr).all():
        raise ShapeMismatch(f"{name} contains NaN or infinite values")
    return arr


def check_same_length(a, b, name_a="a", name_b="b"):
    if len(a) != len(b):
        raise LengthMismatch(
            f"{name_a} has length {len(a)} but {name_b} has length {len(b)}"
        )


def exact_ceil(value, tol=1e-9):
    """Ceiling that forgives binary-representation spill near integers.

    100 * 0.7 evaluates to 70.00000000000001 in float64; a plain ceil would
    shift quantile indices by one. Values within ``tol`` of an integer are
    treated as that integer.
    """
    nearest = round(value)
    if abs(value - nearest) < tol:
        return int(nearest)
    return int(math.ceil(value))
