"""Simplex points: normalization and seeded random generators.

All generators are pure functions of their seed (NumPy PCG64), so repeated
calls with the same arguments reproduce the same output bit-for-bit.
"""

from __future__ import annotations

import numpy as np

from .exceptions import (
    BadEpsilonError,
    BadRangeError,
    NonFiniteEntryError,
    TooSmallError,
    ValidationError,
    ZeroSumError,
)
from .validation import (
    check_positive_vector,
    check_simplex_vector,
    _as_complex_array,
)

# |sum| at or below this is treated as an undefined complex normalization.
ZERO_SUM_TOL = 1e-14

# Post-normalization coordinate floor for sampled simplex points; keeps every
# log-ratio in the Hilbert metric finite and of moderate size.
COORD_FLOOR = 1e-6


def normalize(w) -> np.ndarray:
    """Scale a strictly positive vector to coordinate sum 1."""
    arr = check_positive_vector(w)
    return arr / arr.sum()


def normalize_complex(w) -> np.ndarray:
    """Scale a complex vector to coordinate sum 1.

    Raises ZeroSumError when |sum| <= 1e-14, where the normalization is
    undefined.
    """
    arr = _as_complex_array(w, "vector")
    if arr.ndim != 1:
        raise ValidationError(f"expected a 1-D vector, got shape {arr.shape}")
    if arr.size < 2:
        raise TooSmallError(f"vector length must be >= 2, got {arr.size}")
    if not np.isfinite(arr.view(np.float64)).all():
        raise NonFiniteEntryError("non-finite entries have no defined normalization")
    s = arr.sum()
    if abs(s) <= ZERO_SUM_TOL:
        raise ZeroSumError(f"coordinate sum {s!r} too close to zero")
    return arr / s


def random_positive_matrix(n: int, lo: float, hi: float, seed: int) -> np.ndarray:
    """n x n matrix with i.i.d. entries uniform on [lo, hi], 0 < lo < hi."""
    if n < 2:
        raise TooSmallError(f"matrix dimension must be >= 2, got {n}")
    if not (np.isfinite(lo) and np.isfinite(hi)) or lo <= 0 or lo >= hi:
        raise BadRangeError(f"need 0 < lo < hi finite, got lo={lo}, hi={hi}")
    rng = np.random.default_rng(seed)
    return rng.uniform(lo, hi, size=(n, n))


def _simplex_block(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    # Pre-normalization floor n*COORD_FLOOR with row sums < n guarantees
    # every normalized coordinate stays strictly above COORD_FLOOR.
    raw = rng.uniform(n * COORD_FLOOR, 1.0, size=(count, n))
    return raw / raw.sum(axis=1, keepdims=True)


def random_simplex_vector(n: int, seed: int) -> np.ndarray:
    """Random interior simplex point with all coordinates > 1e-6."""
    if n < 2:
        raise TooSmallError(f"vector length must be >= 2, got {n}")
    return _simplex_block(n, 1, np.random.default_rng(seed))[0]


def _perturbation_block(
    centers: np.ndarray, eps: float, rng: np.random.Generator
) -> np.ndarray:
    # Per-coordinate offsets uniform in the complex disk of radius eps*v/2,
    # then a re-centering along v restores coordinate sum 1. The correction
    # factor |1 - sum(u)| <= eps/2, so the total offset stays <= eps*v.
    count, n = centers.shape
    radius = 0.5 * eps * centers
    rho = radius * np.sqrt(rng.uniform(size=(count, n)))
    theta = rng.uniform(0.0, 2.0 * np.pi, size=(count, n))
    delta = rho * np.exp(1j * theta)
    u = centers + delta
    return u + centers * (1.0 - u.sum(axis=1, keepdims=True))


def random_complex_perturbation(v, eps: float, seed: int) -> np.ndarray:
    """Complex point w with sum 1 and |w_i - v_i| <= eps * v_i for all i.

    The witness is the simplex point v itself, so the output always lies in
    the eps-relative complex neighborhood of the open simplex.
    """
    arr = check_simplex_vector(v)
    if not 0.0 < eps < 0.5:
        raise BadEpsilonError(f"need 0 < eps < 1/2, got {eps}")
    rng = np.random.default_rng(seed)
    return _perturbation_block(arr[np.newaxis, :], eps, rng)[0]
