"""Dense spectral oracle: eigenvalues, Perron root, and spectral ratio.

Two independent routes provide the ground truth. The primary route is the
dense QR eigensolver (Hessenberg reduction followed by shifted QR with 2x2
block extraction, via LAPACK). The second route, for n <= 4, forms the
characteristic polynomial explicitly with the Faddeev-LeVerrier recurrence
and extracts its roots in closed form (quadratic formula, Cardano,
Ferrari) with a Newton polish; it shares no code with the QR route.

Eigenvalues are always returned in a fixed order (descending modulus, then
descending real part, then descending imaginary part) so that downstream
reports are reproducible byte-for-byte.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import NoConvergenceError, PerronAmbiguousError, TooLargeError
from .validation import check_positive_matrix

# Largest supported dimension for the dense oracle.
MAX_DIM = 64

# Two eigenvalues whose moduli agree within this relative gap make the
# Perron root unidentifiable numerically.
PERRON_GAP_RTOL = 1e-9

# Imaginary residue allowed on the Perron root before failing loudly.
PERRON_IMAG_RTOL = 1e-10


@dataclass(frozen=True)
class SpectralReport:
    """Spectrum, Perron data, and trace/determinant consistency residual."""

    eigenvalues: np.ndarray
    rho: float
    kappa: float
    perron_vector: np.ndarray
    residuals: float


def _order_by_contract(vals: np.ndarray) -> np.ndarray:
    order = np.lexsort((-vals.imag, -vals.real, -np.abs(vals)))
    return vals[order]


def eigenvalues(A) -> np.ndarray:
    """All n eigenvalues (with multiplicity), deterministically ordered."""
    arr = check_positive_matrix(A)
    if arr.shape[0] > MAX_DIM:
        raise TooLargeError(f"dense oracle supports n <= {MAX_DIM}, got {arr.shape[0]}")
    try:
        vals = np.linalg.eigvals(arr)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"QR iteration failed: {exc}") from exc
    return _order_by_contract(vals.astype(np.complex128))


def _checked_perron_root(vals: np.ndarray) -> float:
    top = vals[0]
    mod = abs(top)
    if abs(top.imag) > PERRON_IMAG_RTOL * mod or top.real <= 0:
        raise PerronAmbiguousError(
            f"maximal-modulus eigenvalue {top!r} is not real positive within tolerance"
        )
    return float(top.real)


def spectral_radius(A) -> float:
    """Perron root: the real positive eigenvalue of maximal modulus."""
    return _checked_perron_root(eigenvalues(A))


def spectral_ratio(A) -> float:
    """Second-largest eigenvalue modulus divided by the Perron root; in [0, 1)."""
    vals = eigenvalues(A)
    rho = _checked_perron_root(vals)
    runner_up = np.abs(vals[1:]).max()
    if runner_up > (1.0 - PERRON_GAP_RTOL) * abs(vals[0]):
        raise PerronAmbiguousError(
            f"two eigenvalues tie for maximal modulus within {PERRON_GAP_RTOL} relative"
        )
    return float(runner_up / rho)


def perron_vector(A) -> np.ndarray:
    """Positive eigenvector of the Perron root, scaled to coordinate sum 1."""
    arr = check_positive_matrix(A)
    if arr.shape[0] > MAX_DIM:
        raise TooLargeError(f"dense oracle supports n <= {MAX_DIM}, got {arr.shape[0]}")
    try:
        vals, vecs = np.linalg.eig(arr)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"QR iteration failed: {exc}") from exc
    mods = np.abs(vals)
    k = int(np.argmax(mods))
    rest = np.delete(mods, k)
    if rest.max() > (1.0 - PERRON_GAP_RTOL) * mods[k]:
        raise PerronAmbiguousError("Perron root not separated; eigenvector ambiguous")
    vec = vecs[:, k]
    j = int(np.argmax(np.abs(vec)))
    vec = vec * (np.conj(vec[j]) / abs(vec[j]))
    if np.abs(vec.imag).max() > 1e-8 * np.abs(vec.real).max():
        raise PerronAmbiguousError("Perron eigenvector has a non-negligible imaginary part")
    v = vec.real
    if v.sum() < 0:
        v = -v
    if not (v > 0).all():
        raise PerronAmbiguousError("Perron eigenvector is not strictly one-signed")
    return v / v.sum()


def char_poly_coefficients(A) -> np.ndarray:
    """Monic characteristic polynomial coefficients via Faddeev-LeVerrier.

    Returns [1, c_1, ..., c_n] with p(x) = x^n + c_1 x^(n-1) + ... + c_n.
    """
    arr = check_positive_matrix(A)
    n = arr.shape[0]
    coeffs = np.empty(n + 1)
    coeffs[0] = 1.0
    eye = np.eye(n)
    M = np.zeros_like(arr)
    c = 1.0
    for k in range(1, n + 1):
        M = arr @ (M + c * eye)
        c = -np.trace(M) / k
        coeffs[k] = c
    return coeffs


def _solve_quadratic(b: float, c: float) -> list[complex]:
    # x^2 + b x + c with real coefficients; cancellation-free branch split.
    disc = b * b - 4.0 * c
    if disc >= 0.0:
        s = math.sqrt(disc)
        q = -0.5 * (b + math.copysign(s, b)) if b != 0.0 else 0.5 * s
        if q == 0.0:
            return [0j, 0j]
        return [complex(q), complex(c / q)]
    s = math.sqrt(-disc)
    return [complex(-0.5 * b, 0.5 * s), complex(-0.5 * b, -0.5 * s)]


def _solve_quadratic_complex(b: complex, c: complex) -> list[complex]:
    disc = b * b - 4.0 * c
    s = cmath.sqrt(disc)
    if (b.real * s.real + b.imag * s.imag) < 0.0:
        s = -s
    q = -0.5 * (b + s)
    if q == 0:
        return [0.5 * s, -0.5 * s]
    return [q, c / q]


def _solve_cubic(a: float, b: float, c: float) -> list[complex]:
    # x^3 + a x^2 + b x + c, real coefficients. Shift to t^3 + p t + q.
    shift = a / 3.0
    p = b - a * a / 3.0
    q = 2.0 * a**3 / 27.0 - a * b / 3.0 + c
    if p == 0.0 and q == 0.0:
        return [complex(-shift)] * 3
    disc = 0.25 * q * q + p**3 / 27.0
    if disc > 0.0:
        # One real root; avoid cancellation by pairing sqrt with q's sign.
        s = math.sqrt(disc)
        u3 = -0.5 * q - math.copysign(s, q)
        u = math.copysign(abs(u3) ** (1.0 / 3.0), u3)
        v = -p / (3.0 * u) if u != 0.0 else 0.0
        t1 = u + v
        re = -0.5 * t1
        im = 0.5 * math.sqrt(3.0) * abs(u - v)
        roots = [complex(t1), complex(re, im), complex(re, -im)]
    else:
        # Three real roots (p < 0 here): trigonometric form.
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        roots = [
            complex(m * math.cos(theta - 2.0 * math.pi * k / 3.0)) for k in range(3)
        ]
    return [r - shift for r in roots]


def _solve_quartic(a: float, b: float, c: float, d: float) -> list[complex]:
    # x^4 + a x^3 + b x^2 + c x + d, real coefficients. Depress with x = y - a/4.
    shift = a / 4.0
    p = b - 3.0 * a * a / 8.0
    q = c + a**3 / 8.0 - a * b / 2.0
    r = d - 3.0 * a**4 / 256.0 + a * a * b / 16.0 - a * c / 4.0
    if abs(q) < 1e-14 * max(1.0, abs(p), abs(r)):
        # Biquadratic: y^2 solves a quadratic.
        ys: list[complex] = []
        for u in _solve_quadratic(p, r):
            s = cmath.sqrt(u)
            ys.extend([s, -s])
    else:
        # Resolvent cubic z^3 - p z^2 - 4 r z + (4 p r - q^2); any real root
        # splits the quartic into two quadratics. Pick the real root with the
        # largest |z - p| to keep the split well conditioned.
        resolvent = _solve_cubic(-p, -4.0 * r, 4.0 * p * r - q * q)
        scale = max(abs(z) for z in resolvent) or 1.0
        real_zs = [z.real for z in resolvent if abs(z.imag) <= 1e-8 * scale]
        z0 = max(real_zs, key=lambda z: abs(z - p))
        alpha = cmath.sqrt(complex(z0 - p))
        beta = q / (2.0 * alpha)
        ys = _solve_quadratic_complex(-alpha, 0.5 * z0 + beta)
        ys += _solve_quadratic_complex(alpha, 0.5 * z0 - beta)
    return [y - shift for y in ys]


def _polish_root(coeffs: np.ndarray, x: complex, iters: int = 12) -> complex:
    # Newton refinement on the monic polynomial; keeps the best iterate.
    def horner(z: complex) -> tuple[complex, complex]:
        val: complex = 0j
        deriv: complex = 0j
        for ck in coeffs:
            deriv = deriv * z + val
            val = val * z + ck
        return val, deriv

    best = x
    best_res = abs(horner(x)[0])
    for _ in range(iters):
        val, deriv = horner(x)
        if deriv == 0:
            break
        x = x - val / deriv
        res = abs(horner(x)[0])
        if res < best_res:
            best, best_res = x, res
        if res == 0.0:
            break
    return best


def _symmetrize_conjugates(roots: list[complex]) -> list[complex]:
    # Real-coefficient polynomials have exactly conjugate-symmetric spectra;
    # restore that structure after independent per-root polishing.
    out: list[complex] = []
    complex_roots: list[complex] = []
    for z in roots:
        if abs(z.imag) <= 1e-9 * (1.0 + abs(z)):
            out.append(complex(z.real))
        else:
            complex_roots.append(z)
    used = [False] * len(complex_roots)
    for i, z in enumerate(complex_roots):
        if used[i]:
            continue
        used[i] = True
        partner = None
        best = np.inf
        for j in range(i + 1, len(complex_roots)):
            if used[j]:
                continue
            gap = abs(complex_roots[j] - z.conjugate())
            if gap < best:
                best = gap
                partner = j
        if partner is None:
            out.append(z)
            continue
        used[partner] = True
        w = 0.5 * (z + complex_roots[partner].conjugate())
        out.extend([w, w.conjugate()])
    return out


def char_poly_roots(A) -> np.ndarray:
    """Eigenvalues of an n <= 4 matrix via its characteristic polynomial.

    Closed-form extraction on Faddeev-LeVerrier coefficients, exact zero
    roots deflated first, Newton-polished, ordered like :func:`eigenvalues`.
    """
    arr = check_positive_matrix(A)
    n = arr.shape[0]
    if n > 4:
        raise TooLargeError(f"characteristic-polynomial oracle supports n <= 4, got {n}")
    coeffs = char_poly_coefficients(arr)
    work = list(coeffs)
    roots: list[complex] = []
    while len(work) > 1 and work[-1] == 0.0:
        roots.append(0j)
        work.pop()
    deg = len(work) - 1
    _, *rest = work
    if deg == 1:
        roots.append(complex(-rest[0]))
    elif deg == 2:
        roots.extend(_solve_quadratic(*rest))
    elif deg == 3:
        roots.extend(_solve_cubic(*rest))
    elif deg == 4:
        roots.extend(_solve_quartic(*rest))
    polished = _symmetrize_conjugates([_polish_root(coeffs, z) for z in roots])
    return _order_by_contract(np.array(polished, dtype=np.complex128))


def spectral_report(A) -> SpectralReport:
    """Full spectral summary with trace/determinant consistency residual."""
    arr = check_positive_matrix(A)
    vals = eigenvalues(arr)
    rho = _checked_perron_root(vals)
    runner_up = np.abs(vals[1:]).max()
    if runner_up > (1.0 - PERRON_GAP_RTOL) * abs(vals[0]):
        raise PerronAmbiguousError("Perron root not uniquely separated")
    kappa = float(runner_up / rho)
    trace = float(np.trace(arr))
    det = float(np.linalg.det(arr))
    trace_res = abs(trace - vals.sum()) / abs(trace)
    det_res = abs(det - vals.prod()) / max(abs(det), abs(vals.prod()), 1e-300)
    return SpectralReport(
        eigenvalues=vals,
        rho=rho,
        kappa=kappa,
        perron_vector=perron_vector(arr),
        residuals=float(max(trace_res, det_res)),
    )
