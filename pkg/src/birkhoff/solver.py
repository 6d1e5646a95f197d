"""Certified Perron eigenpair computation and bound verification.

The induced simplex map is a strict Hilbert-metric contraction with known
modulus tau(A), so fixed-point iteration carries its own certificate: after
a step of Hilbert length d, the distance to the Perron vector is at most
tau * d / (1 - tau) (a-posteriori), and tau^k / (1 - tau) * d_0 bounds the
error after k steps (a-priori). The stopping rule converts a requested
error radius into a step-length threshold through the same factor, so a
converged run certifies its result rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .contraction import (
    birkhoff_coefficient,
    hopf_bound,
    ostrowski_bound,
    simplex_map,
)
from .exceptions import BadToleranceError, DimensionMismatchError, ValidationError
from .metrics import hilbert_distance
from .spectral import spectral_ratio
from .validation import check_positive_matrix, check_simplex_vector

# Numerical slack for the kappa <= tau and chain comparisons.
BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class PerronCertificate:
    """Perron vector approximation with geometric error certificates.

    certified_radius bounds the Hilbert distance to the true Perron vector
    (a-posteriori); apriori_radius is the geometric-decay bound from the
    initial step. rho_bracket contains the spectral radius for any positive
    vector, with width shrinking as the iterate converges.
    """

    vector: np.ndarray
    rho: float
    rho_bracket: tuple[float, float]
    iterations: int
    step_distance: float
    initial_step: float
    certified_radius: float
    apriori_radius: float
    tau: float
    converged: bool
    path: tuple[np.ndarray, ...] | None = None


@dataclass(frozen=True)
class BoundReport:
    """Spectral ratio against the contraction coefficient and entry bounds."""

    kappa: float
    tau: float
    hopf: float
    ostrowski: float
    bound_holds: bool
    chain_holds: bool
    slack_kappa_tau: float


def collatz_wielandt_bounds(A, x) -> tuple[float, float]:
    """min_i (Ax)_i/x_i and max_i (Ax)_i/x_i; they sandwich the Perron root."""
    arr = check_positive_matrix(A)
    v = check_simplex_vector(x)
    if v.size != arr.shape[0]:
        raise DimensionMismatchError(
            f"matrix is {arr.shape[0]}x{arr.shape[0]}, vector has length {v.size}"
        )
    ratios = (arr @ v) / v
    return float(ratios.min()), float(ratios.max())


def perron_power_iteration(
    A,
    tol: float = 1e-12,
    max_iter: int = 10_000,
    x0=None,
    keep_path: bool = False,
) -> PerronCertificate:
    """Iterate the normalized matrix map until the certificate reaches tol.

    Stops once the step length d satisfies tau * d / (1 - tau) <= tol, i.e.
    once the a-posteriori radius is within the requested tolerance. A run
    that exhausts max_iter returns its partial certificate with
    converged=False instead of raising.
    """
    arr = check_positive_matrix(A)
    if not (np.isfinite(tol) and tol > 0):
        raise BadToleranceError(f"need tol > 0, got {tol}")
    if max_iter < 1:
        raise ValidationError(f"need max_iter >= 1, got {max_iter}")
    n = arr.shape[0]
    if x0 is None:
        x = np.full(n, 1.0 / n)
    else:
        x = check_simplex_vector(x0, n=n)

    tau = birkhoff_coefficient(arr)
    path = [x] if keep_path else None

    if tau == 0.0:
        # Rank-one action: one application lands on the fixed point exactly.
        x_next = simplex_map(arr, x)
        if path is not None:
            path.append(x_next)
        step = hilbert_distance(x, x_next)
        lower, upper = collatz_wielandt_bounds(arr, x_next)
        return PerronCertificate(
            vector=x_next,
            rho=0.5 * (lower + upper),
            rho_bracket=(lower, upper),
            iterations=1,
            step_distance=step,
            initial_step=step,
            certified_radius=0.0,
            apriori_radius=0.0,
            tau=0.0,
            converged=True,
            path=tuple(path) if path is not None else None,
        )

    threshold = tol * (1.0 - tau) / tau
    step = np.inf
    initial_step = 0.0
    iterations = 0
    converged = False
    for k in range(max_iter):
        x_next = simplex_map(arr, x)
        step = hilbert_distance(x, x_next)
        if path is not None:
            path.append(x_next)
        if k == 0:
            initial_step = step
        x = x_next
        iterations = k + 1
        if step <= threshold:
            converged = True
            break

    lower, upper = collatz_wielandt_bounds(arr, x)
    factor = tau / (1.0 - tau)
    return PerronCertificate(
        vector=x,
        rho=0.5 * (lower + upper),
        rho_bracket=(lower, upper),
        iterations=iterations,
        step_distance=float(step),
        initial_step=float(initial_step),
        certified_radius=factor * float(step),
        apriori_radius=tau**iterations / (1.0 - tau) * float(initial_step),
        tau=tau,
        converged=converged,
        path=tuple(path) if path is not None else None,
    )


def verify_bounds(A) -> BoundReport:
    """Check kappa <= tau <= Hopf <= Ostrowski on one matrix.

    bound_holds=False is a genuine verification failure, not a data point:
    the inequality is exact for every strictly positive matrix and the
    slack only covers floating point.
    """
    arr = check_positive_matrix(A)
    kappa = spectral_ratio(arr)
    tau = birkhoff_coefficient(arr)
    hopf = hopf_bound(arr)
    ostrowski = ostrowski_bound(arr)
    bound_holds = kappa <= tau + BOUND_SLACK
    chain_holds = (
        bound_holds
        and tau <= hopf + BOUND_SLACK
        and hopf <= ostrowski + BOUND_SLACK
    )
    return BoundReport(
        kappa=kappa,
        tau=tau,
        hopf=hopf,
        ostrowski=ostrowski,
        bound_holds=bound_holds,
        chain_holds=chain_holds,
        slack_kappa_tau=tau - kappa,
    )


class PerronEigenSolver(BaseEstimator):
    """Certified Perron eigenpair estimator.

    Fits on a strictly positive square matrix and exposes the fixed point
    of the normalized matrix action together with its error certificate.

    Parameters
    ----------
    tol : float, default=1e-12
        Certified Hilbert-metric error radius to stop at.
    max_iter : int, default=10000
        Iteration cap; runs hitting it are flagged via ``converged_``.

    Attributes
    ----------
    perron_vector_ : ndarray of shape (n,)
        Approximate Perron vector, positive with coordinate sum 1.
    rho_ : float
        Spectral-radius estimate (midpoint of ``rho_bracket_``).
    rho_bracket_ : tuple of (float, float)
        Collatz-Wielandt bracket containing the spectral radius.
    tau_ : float
        Contraction coefficient of the fitted matrix.
    certified_radius_ : float
        A-posteriori bound on the Hilbert distance to the true vector.
    n_iter_ : int
        Number of map applications performed.
    converged_ : bool
        Whether the stopping rule was reached within ``max_iter``.
    certificate_ : PerronCertificate
        The full certificate backing the attributes above.
    """

    def __init__(self, tol: float = 1e-12, max_iter: int = 10_000):
        self.tol = tol
        self.max_iter = max_iter

    def fit(self, X, y=None):
        A = check_positive_matrix(X)
        cert = perron_power_iteration(A, tol=self.tol, max_iter=self.max_iter)
        self.matrix_ = A
        self.certificate_ = cert
        self.perron_vector_ = cert.vector
        self.rho_ = cert.rho
        self.rho_bracket_ = cert.rho_bracket
        self.tau_ = cert.tau
        self.certified_radius_ = cert.certified_radius
        self.n_iter_ = cert.iterations
        self.converged_ = cert.converged
        return self

    def transform(self, X):
        """Apply one normalized matrix action to each row simplex vector."""
        if not hasattr(self, "matrix_"):
            raise NotFittedError("PerronEigenSolver must be fitted before transform")
        rows = np.atleast_2d(np.asarray(X, dtype=np.float64))
        return np.vstack([simplex_map(self.matrix_, row) for row in rows])

    def bound_report(self):
        """BoundReport for the fitted matrix (spectral ratio vs tau chain)."""
        if not hasattr(self, "matrix_"):
            raise NotFittedError("PerronEigenSolver must be fitted before bound_report")
        return verify_bounds(self.matrix_)
