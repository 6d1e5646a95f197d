"""Independent brute-force oracles used to freeze expected test values.

These deliberately re-derive every quantity from its defining formula with
plain Python loops and stdlib math, sharing no code with the library paths
they check.
"""

import cmath
import math

import numpy as np


def brute_hilbert(v, w):
    """Max over ordered index pairs of log((w_i/w_j)/(v_i/v_j))."""
    n = len(v)
    return max(
        math.log((w[i] / w[j]) / (v[i] / v[j]))
        for i in range(n)
        for j in range(n)
    )


def brute_complex_hilbert(v, w):
    """Max over ordered index pairs of |log((w_i/w_j)/(v_i/v_j))|."""
    n = len(v)
    return max(
        abs(cmath.log((w[i] / w[j]) / (v[i] / v[j])))
        for i in range(n)
        for j in range(n)
    )


def brute_min_cross_ratio(A):
    """Exhaustive four-index scan of a_ik a_jl / (a_jk a_il)."""
    n = len(A)
    best = math.inf
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    best = min(best, A[i][k] * A[j][l] / (A[j][k] * A[i][l]))
    return best


def min_cross_ratio_rowpair(A):
    """Alternative phi evaluation: per row pair, min/max of the ratio row."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    best = math.inf
    for i in range(n):
        for j in range(n):
            r = A[i] / A[j]
            best = min(best, r.min() / r.max())
    return best


def quadratic_eigs_2x2(A):
    """Closed-form eigenvalues of a 2x2 matrix from trace/determinant."""
    a, b = A[0]
    c, d = A[1]
    tr = a + d
    det = a * d - b * c
    disc = cmath.sqrt(complex(tr * tr - 4.0 * det))
    return [(tr + disc) / 2.0, (tr - disc) / 2.0]


def nearest_match_error(xs, ys):
    """Greedy nearest pairing error between two complex multisets."""
    pool = list(ys)
    worst = 0.0
    for x in xs:
        k = min(range(len(pool)), key=lambda j: abs(x - pool[j]))
        worst = max(worst, abs(x - pool.pop(k)))
    return worst
