"""Hilbert projective metric on the open simplex and its complex extension.

The real metric between interior simplex points v, w is

    d_H(v, w) = max_{i,j} log((w_i/w_j) / (v_i/v_j)),

computed here as max_i r_i - min_i r_i with r_i = log(w_i) - log(v_i),
which is algebraically identical, O(n), and exactly symmetric in floating
point. The complex extension on vectors with coordinate sum 1 whose
coordinate ratios all have positive real part is

    d_H(v, w) = max_{i,j} |log((w_i/w_j) / (v_i/v_j))|

with the principal branch of the complex logarithm; inside the cone every
ratio quotient has argument in (-pi, pi), so the branch cut is never hit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    BadEpsilonError,
    DegenerateSampleError,
    NotInConeError,
    ValidationError,
)
from .simplex import _perturbation_block
from .validation import (
    check_complex_simplex_vector,
    check_same_length,
    check_simplex_vector,
)

# Pairs closer than this in the Hilbert metric are treated as projectively
# equal and excluded from ratio statistics (avoids 0/0 without masking
# genuinely small distances).
PROJECTIVE_EQUALITY_TOL = 1e-10

# Coordinates at or below this modulus make ratios, and hence cone
# membership, undefined.
ZERO_COORD_TOL = 1e-15


@dataclass(frozen=True)
class MetricSample:
    """One vector pair together with its Hilbert and Euclidean distances."""

    pair: tuple[np.ndarray, np.ndarray]
    hilbert: float
    euclidean: float


def hilbert_distance(v, w) -> float:
    """Hilbert metric between two interior simplex points."""
    a = check_simplex_vector(v)
    b = check_simplex_vector(w, n=a.size)
    r = np.log(b) - np.log(a)
    return float(r.max() - r.min())


def in_positive_cone(w) -> bool:
    """True iff every coordinate ratio w_i/w_j has strictly positive real part.

    Any coordinate with modulus <= 1e-15 leaves some ratio undefined and
    forces False. Total function: never raises on a valid complex simplex
    vector.
    """
    arr = check_complex_simplex_vector(w)
    if (np.abs(arr) <= ZERO_COORD_TOL).any():
        return False
    ratios = arr[:, np.newaxis] / arr[np.newaxis, :]
    return bool((ratios.real > 0).all())


def complex_hilbert_distance(v, w) -> float:
    """Complex Hilbert metric between two cone members.

    Agrees with :func:`hilbert_distance` when both inputs are real. Raises
    NotInConeError when either argument has a coordinate-ratio real part
    that is not strictly positive.
    """
    a = check_complex_simplex_vector(v)
    b = check_complex_simplex_vector(w, n=a.size)
    for name, x in (("v", a), ("w", b)):
        if not in_positive_cone(x):
            raise NotInConeError(f"{name} is outside the positive-ratio cone")
    return _complex_hilbert_block(a[np.newaxis, :], b[np.newaxis, :])[0]


def _cross_products(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    # All pairwise products x_i * y_j through separate real multiplies and
    # adds, each of which is bitwise commutative; complex multiplication as
    # one fused kernel is not (FMA contraction differs per operand order),
    # and exact d(v,w) == d(w,v) symmetry depends on it.
    xr = X.real[:, :, np.newaxis]
    xi = X.imag[:, :, np.newaxis]
    yr = Y.real[:, np.newaxis, :]
    yi = Y.imag[:, np.newaxis, :]
    out = np.empty((X.shape[0], X.shape[1], Y.shape[1]), dtype=np.complex128)
    out.real = xr * yr - xi * yi
    out.imag = xr * yi + xi * yr
    return out


def _complex_hilbert_block(V: np.ndarray, W: np.ndarray) -> np.ndarray:
    """Rowwise complex Hilbert distances for (count, n) stacks.

    Callers guarantee cone membership. z[p,i,j] = (w_i v_j)/(w_j v_i); the
    (i,j) products of d(v,w) match the (j,i) products of d(w,v) bit for
    bit, so the maximum is exactly symmetric.
    """
    count, n = V.shape
    out = np.empty(count)
    step = max(1, 2_000_000 // (n * n))
    for start in range(0, count, step):
        sl = slice(start, start + step)
        cp = _cross_products(W[sl], V[sl])
        z = cp / cp.transpose(0, 2, 1)
        mags = np.hypot(np.log(np.abs(z)), np.angle(z))
        out[sl] = mags.max(axis=(1, 2))
    return out


def _check_cone_block(X: np.ndarray) -> None:
    if (np.abs(X) <= ZERO_COORD_TOL).any():
        raise NotInConeError("sampled point has a (near-)zero coordinate")
    count, n = X.shape
    step = max(1, 2_000_000 // (n * n))
    for start in range(0, count, step):
        sl = slice(start, start + step)
        ratios = X[sl, :, np.newaxis] / X[sl, np.newaxis, :]
        if not (ratios.real > 0).all():
            raise NotInConeError("sampled point left the positive-ratio cone")


def euclidean_distance(v, w) -> float:
    """Euclidean norm of the coordinate-wise difference (real or complex)."""
    a = np.asarray(v)
    b = np.asarray(w)
    if a.ndim != 1 or b.ndim != 1:
        raise ValidationError("expected 1-D vectors")
    check_same_length(a, b)
    return float(np.linalg.norm(b - a))


def in_simplex_neighborhood(w, eps: float) -> bool:
    """Exact membership test for the eps-relative complex neighborhood.

    Decides whether some interior simplex point v satisfies
    |w_i - v_i| <= eps * v_i for all i. Per coordinate the disk condition is
    the quadratic (1-eps^2) t^2 - 2 Re(w_i) t + |w_i|^2 <= 0 in t = v_i,
    feasible iff Re(w_i) > 0 and Re(w_i)^2 >= (1-eps^2)|w_i|^2, which yields
    an interval [lo_i, hi_i] of admissible v_i. Coordinates couple only
    through sum(v) = 1, so membership holds iff every interval is nonempty
    and sum(lo) <= 1 <= sum(hi).
    """
    if not 0.0 < eps < 1.0:
        raise BadEpsilonError(f"need 0 < eps < 1, got {eps}")
    arr = check_complex_simplex_vector(w)
    re = arr.real
    sq = arr.real**2 + arr.imag**2
    c = 1.0 - eps * eps
    disc = re**2 - c * sq
    if not ((re > 0) & (disc >= 0)).all():
        return False
    root = np.sqrt(disc)
    lo = (re - root) / c
    hi = (re + root) / c
    return bool(lo.sum() <= 1.0 <= hi.sum())


def metric_sample(v, w) -> MetricSample:
    """Bundle a pair with both its distances; dispatches on real/complex."""
    a = np.asarray(v)
    if np.iscomplexobj(a):
        d_h = complex_hilbert_distance(v, w)
    else:
        d_h = hilbert_distance(v, w)
    return MetricSample(
        pair=(np.asarray(v), np.asarray(w)),
        hilbert=d_h,
        euclidean=euclidean_distance(v, w),
    )


def metric_equivalence_ratios(
    S, eps: float, pairs: int, seed: int
) -> tuple[float, float]:
    """Empirical bracket of d_E/d_H over complex perturbations of S.

    Samples `pairs` point pairs from the eps-relative complex neighborhood
    of the (finite) point set S, drops pairs with d_H <= 1e-10, and returns
    the extreme Euclidean-to-Hilbert distance ratios. Both returned values
    are finite and strictly positive.
    """
    centers = [check_simplex_vector(s) for s in S]
    if not centers:
        raise ValidationError("S must be nonempty")
    for s in centers[1:]:
        check_same_length(centers[0], s)
    if not 0.0 < eps < 0.1:
        raise BadEpsilonError(f"need 0 < eps < 0.1, got {eps}")
    if pairs < 1:
        raise ValidationError(f"need pairs >= 1, got {pairs}")

    rng = np.random.default_rng(seed)
    stack = np.asarray(centers)
    ia = rng.integers(0, len(centers), size=pairs)
    ib = rng.integers(0, len(centers), size=pairs)
    X = _perturbation_block(stack[ia], eps, rng)
    Y = _perturbation_block(stack[ib], eps, rng)
    _check_cone_block(X)
    _check_cone_block(Y)
    d_h = _complex_hilbert_block(X, Y)
    d_e = np.linalg.norm(Y - X, axis=1)
    mask = d_h > PROJECTIVE_EQUALITY_TOL
    if not mask.any():
        raise DegenerateSampleError("all sampled pairs were projectively equal")
    ratios = d_e[mask] / d_h[mask]
    return float(ratios.min()), float(ratios.max())
