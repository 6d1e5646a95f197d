"""Birkhoff contraction coefficient and classical spectral-ratio bounds.

For a strictly positive matrix A the induced simplex map w -> N(Aw) is a
strict contraction in the Hilbert metric, with exact Lipschitz constant

    tau(A) = (1 - sqrt(phi(A))) / (1 + sqrt(phi(A))),
    phi(A) = min_{i,j,k,l} (a_ik * a_jl) / (a_jk * a_il).

phi is 1 exactly when all rows are proportional (rank one), making tau 0.
The classical entrywise bounds on the spectral ratio are

    Hopf:      (M - m) / (M + m)
    Ostrowski: (M^2 - m^2) / (M^2 + m^2)

with m, M the extreme entries; tau <= Hopf <= Ostrowski < 1 always.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    BadEpsilonError,
    DegenerateSampleError,
    DimensionMismatchError,
    ValidationError,
    ZeroSumError,
)
from .metrics import (
    PROJECTIVE_EQUALITY_TOL,
    _check_cone_block,
    _complex_hilbert_block,
)
from .simplex import ZERO_SUM_TOL, _perturbation_block, _simplex_block, normalize
from .validation import (
    check_complex_simplex_vector,
    check_positive_matrix,
    check_simplex_vector,
)

# Entry magnitudes beyond these switch the cross-ratio scan to log space to
# dodge overflow/underflow in the four-entry products.
_LOG_PATH_HI = 1e100
_LOG_PATH_LO = 1e-100

# Full O(n^4) cross-ratio tensors are materialized only up to this size.
_TENSOR_BUDGET = 2_000_000


@dataclass(frozen=True)
class ContractionReport:
    """Contraction coefficient, bound chain, and sampled ratio evidence."""

    tau: float
    phi: float
    hopf: float
    ostrowski: float
    sampled_real_max_ratio: float
    sampled_complex_max_ratio_by_eps: tuple[tuple[float, float], ...]
    sample_count: int
    seed: int


def min_cross_ratio(A) -> float:
    """phi(A): exhaustive minimum of a_ik a_jl / (a_jk a_il) over quadruples.

    Always in (0, 1]; equals 1 exactly iff all rows are proportional.
    """
    arr = check_positive_matrix(A)
    n = arr.shape[0]
    if arr.max() > _LOG_PATH_HI or arr.min() < _LOG_PATH_LO:
        logs = np.log(arr)
        best = 0.0
        for i in range(n):
            for j in range(n):
                d = logs[i] - logs[j]
                best = min(best, d.min() - d.max())
        return float(np.exp(best))
    if n**4 <= _TENSOR_BUDGET:
        num = np.einsum("ik,jl->ijkl", arr, arr)
        den = np.einsum("jk,il->ijkl", arr, arr)
        return float((num / den).min())
    best = np.inf
    for i in range(n):
        for j in range(n):
            ratio = np.outer(arr[i], arr[j]) / np.outer(arr[j], arr[i])
            best = min(best, ratio.min())
    return float(best)


def birkhoff_coefficient(A) -> float:
    """tau(A) = (1 - sqrt(phi)) / (1 + sqrt(phi)), in [0, 1)."""
    root = np.sqrt(min_cross_ratio(A))
    return float((1.0 - root) / (1.0 + root))


def hopf_bound(A) -> float:
    """(M - m)/(M + m) over the extreme entries; in [0, 1)."""
    arr = check_positive_matrix(A)
    m = float(arr.min())
    M = float(arr.max())
    return (M - m) / (M + m)


def ostrowski_bound(A) -> float:
    """(M^2 - m^2)/(M^2 + m^2); written via m/M so huge entries cannot overflow."""
    arr = check_positive_matrix(A)
    r = float(arr.min()) / float(arr.max())
    return (1.0 - r * r) / (1.0 + r * r)


def simplex_map(A, w) -> np.ndarray:
    """Normalized matrix action on an interior simplex point: N(Aw)."""
    arr = check_positive_matrix(A)
    x = check_simplex_vector(w)
    if x.size != arr.shape[0]:
        raise DimensionMismatchError(f"matrix is {arr.shape[0]}x{arr.shape[0]}, vector has length {x.size}")
    return normalize(arr @ x)


def complex_simplex_map(A, w) -> np.ndarray:
    """Normalized matrix action on a complex sum-1 vector.

    Raises ZeroSumError when |sum(Aw)| <= 1e-14, signalling w outside the
    domain where the complex map is well defined.
    """
    arr = check_positive_matrix(A)
    x = check_complex_simplex_vector(w)
    if x.size != arr.shape[0]:
        raise DimensionMismatchError(f"matrix is {arr.shape[0]}x{arr.shape[0]}, vector has length {x.size}")
    y = arr @ x
    s = y.sum()
    if abs(s) <= ZERO_SUM_TOL:
        raise ZeroSumError(f"sum of image coordinates {s!r} too close to zero")
    return y / s


def _real_distance_block(V: np.ndarray, W: np.ndarray) -> np.ndarray:
    r = np.log(W) - np.log(V)
    return r.max(axis=1) - r.min(axis=1)


def _map_block(arr: np.ndarray, X: np.ndarray) -> np.ndarray:
    images = X @ arr.T
    return images / images.sum(axis=1, keepdims=True)


def sample_contraction_ratio(
    A, count: int, seed: int
) -> tuple[float, tuple[np.ndarray, np.ndarray]]:
    """Max sampled d_H(f v, f w)/d_H(v, w) over random simplex pairs.

    Samples `count` independent pairs, skips those with d_H <= 1e-10, and
    returns the extreme ratio with its achieving pair. The result can never
    exceed tau(A): sampling lower-bounds a supremum.
    """
    arr = check_positive_matrix(A)
    if count < 1:
        raise ValidationError(f"need count >= 1, got {count}")
    n = arr.shape[0]
    rng = np.random.default_rng(seed)
    V = _simplex_block(n, count, rng)
    W = _simplex_block(n, count, rng)
    d0 = _real_distance_block(V, W)
    mask = d0 > PROJECTIVE_EQUALITY_TOL
    if not mask.any():
        raise DegenerateSampleError("all sampled pairs were projectively equal")
    d1 = _real_distance_block(_map_block(arr, V[mask]), _map_block(arr, W[mask]))
    ratios = d1 / d0[mask]
    k = int(np.argmax(ratios))
    return float(ratios[k]), (V[mask][k], W[mask][k])


def sample_complex_contraction_ratio(A, eps: float, count: int, seed: int) -> float:
    """Max sampled complex-metric contraction ratio on the eps-neighborhood.

    Draws pairs from the eps-relative complex neighborhood around
    independent random real centers and returns the largest
    d_H(f x, f y)/d_H(x, y) among pairs with denominator > 1e-10. An
    empirical lower bound for the neighborhood's contraction modulus, which
    approaches tau(A) from above as eps shrinks.
    """
    arr = check_positive_matrix(A)
    if not 0.0 < eps <= 0.01:
        raise BadEpsilonError(f"need 0 < eps <= 0.01, got {eps}")
    if count < 1:
        raise ValidationError(f"need count >= 1, got {count}")
    n = arr.shape[0]
    rng = np.random.default_rng(seed)
    X = _perturbation_block(_simplex_block(n, count, rng), eps, rng)
    Y = _perturbation_block(_simplex_block(n, count, rng), eps, rng)
    _check_cone_block(X)
    _check_cone_block(Y)
    d0 = _complex_hilbert_block(X, Y)
    mask = d0 > PROJECTIVE_EQUALITY_TOL
    if not mask.any():
        raise DegenerateSampleError("all sampled pairs were projectively equal")
    FX = _map_block(arr, X[mask])
    FY = _map_block(arr, Y[mask])
    _check_cone_block(FX)
    _check_cone_block(FY)
    d1 = _complex_hilbert_block(FX, FY)
    return float((d1 / d0[mask]).max())


def contraction_report(
    A, count: int = 1000, eps_list=(1e-2, 1e-3, 1e-4), seed: int = 0
) -> ContractionReport:
    """Bundle coefficient, bound chain, and sampled ratios for one matrix."""
    arr = check_positive_matrix(A)
    phi = min_cross_ratio(arr)
    root = np.sqrt(phi)
    children = np.random.SeedSequence(seed).generate_state(1 + len(eps_list), dtype=np.uint64)
    real_max, _ = sample_contraction_ratio(arr, count, int(children[0]))
    by_eps = tuple(
        (float(eps), sample_complex_contraction_ratio(arr, eps, count, int(children[1 + k])))
        for k, eps in enumerate(eps_list)
    )
    return ContractionReport(
        tau=float((1.0 - root) / (1.0 + root)),
        phi=float(phi),
        hopf=hopf_bound(arr),
        ostrowski=ostrowski_bound(arr),
        sampled_real_max_ratio=real_max,
        sampled_complex_max_ratio_by_eps=by_eps,
        sample_count=count,
        seed=seed,
    )
