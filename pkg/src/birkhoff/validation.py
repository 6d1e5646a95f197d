"""Input validation helpers.

Shared by every public entry point, in the spirit of scikit-learn's
``check_array``: each helper converts its input to a canonical ndarray,
enforces the type invariants, and returns the validated array unchanged
(validation never mutates entry values).
"""

from __future__ import annotations

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    NonFiniteEntryError,
    NonPositiveEntryError,
    NonSquareError,
    NotNormalizedError,
    TooSmallError,
    ValidationError,
)

# Absolute tolerance for coordinate sums of simplex points.
SUM_TOL = 1e-12


def _as_float_array(x, name: str) -> np.ndarray:
    try:
        arr = np.asarray(x, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} must be numeric: {exc}") from exc
    return arr


def _as_complex_array(x, name: str) -> np.ndarray:
    try:
        arr = np.asarray(x, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} must be numeric: {exc}") from exc
    return arr


def check_positive_matrix(A) -> np.ndarray:
    """Validate an n x n strictly positive matrix, n >= 2.

    Returns the entries as a float64 array, bit-for-bit equal to the input.
    """
    arr = _as_float_array(A, "matrix")
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquareError(f"matrix must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 2:
        raise TooSmallError(f"matrix dimension must be >= 2, got {n}")
    if not np.isfinite(arr).all():
        idx = tuple(int(k) for k in np.argwhere(~np.isfinite(arr))[0])
        raise NonFiniteEntryError(f"non-finite entry {arr[idx]} at {idx}", index=idx)
    if not (arr > 0).all():
        idx = tuple(int(k) for k in np.argwhere(~(arr > 0))[0])
        raise NonPositiveEntryError(
            f"entry {arr[idx]} at {idx} violates strict positivity", index=idx
        )
    return arr


def check_positive_vector(w, n: int | None = None) -> np.ndarray:
    """Validate a strictly positive finite 1-D vector of length >= 2."""
    arr = _as_float_array(w, "vector")
    if arr.ndim != 1:
        raise ValidationError(f"expected a 1-D vector, got shape {arr.shape}")
    if arr.size < 2:
        raise TooSmallError(f"vector length must be >= 2, got {arr.size}")
    if n is not None and arr.size != n:
        raise DimensionMismatchError(f"expected length {n}, got {arr.size}")
    if not np.isfinite(arr).all():
        i = int(np.argwhere(~np.isfinite(arr))[0][0])
        raise NonFiniteEntryError(f"non-finite entry {arr[i]} at {i}", index=i)
    if not (arr > 0).all():
        i = int(np.argwhere(~(arr > 0))[0][0])
        raise NonPositiveEntryError(
            f"entry {arr[i]} at {i} violates strict positivity", index=i
        )
    return arr


def check_simplex_vector(w, n: int | None = None) -> np.ndarray:
    """Validate a point of the open simplex: positive coords summing to 1."""
    arr = check_positive_vector(w, n=n)
    s = arr.sum()
    if abs(s - 1.0) > SUM_TOL:
        raise NotNormalizedError(f"coordinates sum to {s!r}, expected 1 within {SUM_TOL}")
    return arr


def check_complex_simplex_vector(w, n: int | None = None) -> np.ndarray:
    """Validate a complex vector with coordinate sum 1 + 0i (both parts)."""
    arr = _as_complex_array(w, "vector")
    if arr.ndim != 1:
        raise ValidationError(f"expected a 1-D vector, got shape {arr.shape}")
    if arr.size < 2:
        raise TooSmallError(f"vector length must be >= 2, got {arr.size}")
    if n is not None and arr.size != n:
        raise DimensionMismatchError(f"expected length {n}, got {arr.size}")
    if not np.isfinite(arr).all():
        i = int(np.argwhere(~np.isfinite(arr))[0][0])
        raise NonFiniteEntryError(f"non-finite entry {arr[i]} at {i}", index=i)
    s = arr.sum()
    if abs(s.real - 1.0) > SUM_TOL or abs(s.imag) > SUM_TOL:
        raise NotNormalizedError(f"coordinates sum to {s!r}, expected 1+0j within {SUM_TOL}")
    return arr


def check_same_length(v: np.ndarray, w: np.ndarray) -> None:
    if v.shape != w.shape:
        raise DimensionMismatchError(f"shape mismatch: {v.shape} vs {w.shape}")
