"""Hilbert-metric geometry and certified Perron theory for positive matrices.

Computes the Hilbert projective metric (real and complex), the Birkhoff
contraction coefficient with the classical Hopf and Ostrowski entry bounds,
brute-force spectral ground truth, and certified Perron eigenpairs via
contraction-mapping iteration, plus a CLI for reproducible verification
runs of the spectral-ratio bound kappa(A) <= tau(A).
"""

__version__ = "0.1.0"

from .contraction import (
    ContractionReport,
    birkhoff_coefficient,
    complex_simplex_map,
    contraction_report,
    hopf_bound,
    min_cross_ratio,
    ostrowski_bound,
    sample_complex_contraction_ratio,
    sample_contraction_ratio,
    simplex_map,
)
from .exceptions import (
    BadEpsilonError,
    BadRangeError,
    BadToleranceError,
    BirkhoffError,
    DegenerateSampleError,
    DimensionMismatchError,
    MatrixParseError,
    NoConvergenceError,
    NonFiniteEntryError,
    NonPositiveEntryError,
    NonSquareError,
    NotInConeError,
    NotNormalizedError,
    NumericalError,
    PerronAmbiguousError,
    TooLargeError,
    TooSmallError,
    ValidationError,
    ZeroSumError,
)
from .metrics import (
    MetricSample,
    complex_hilbert_distance,
    euclidean_distance,
    hilbert_distance,
    in_positive_cone,
    in_simplex_neighborhood,
    metric_equivalence_ratios,
    metric_sample,
)
from .simplex import (
    normalize,
    normalize_complex,
    random_complex_perturbation,
    random_positive_matrix,
    random_simplex_vector,
)
from .solver import (
    BoundReport,
    PerronCertificate,
    PerronEigenSolver,
    collatz_wielandt_bounds,
    perron_power_iteration,
    verify_bounds,
)
from .spectral import (
    SpectralReport,
    char_poly_coefficients,
    char_poly_roots,
    eigenvalues,
    perron_vector,
    spectral_radius,
    spectral_ratio,
    spectral_report,
)
from .validation import (
    check_complex_simplex_vector,
    check_positive_matrix,
    check_simplex_vector,
)

__all__ = [
    "__version__",
    "BadEpsilonError",
    "BadRangeError",
    "BadToleranceError",
    "BirkhoffError",
    "BoundReport",
    "ContractionReport",
    "DegenerateSampleError",
    "DimensionMismatchError",
    "MatrixParseError",
    "MetricSample",
    "NoConvergenceError",
    "NonFiniteEntryError",
    "NonPositiveEntryError",
    "NonSquareError",
    "NotInConeError",
    "NotNormalizedError",
    "NumericalError",
    "PerronAmbiguousError",
    "PerronCertificate",
    "PerronEigenSolver",
    "SpectralReport",
    "TooLargeError",
    "TooSmallError",
    "ValidationError",
    "ZeroSumError",
    "birkhoff_coefficient",
    "char_poly_coefficients",
    "char_poly_roots",
    "check_complex_simplex_vector",
    "check_positive_matrix",
    "check_simplex_vector",
    "collatz_wielandt_bounds",
    "complex_hilbert_distance",
    "complex_simplex_map",
    "contraction_report",
    "eigenvalues",
    "euclidean_distance",
    "hilbert_distance",
    "hopf_bound",
    "in_positive_cone",
    "in_simplex_neighborhood",
    "metric_equivalence_ratios",
    "metric_sample",
    "min_cross_ratio",
    "normalize",
    "normalize_complex",
    "ostrowski_bound",
    "perron_power_iteration",
    "perron_vector",
    "random_complex_perturbation",
    "random_positive_matrix",
    "random_simplex_vector",
    "sample_complex_contraction_ratio",
    "sample_contraction_ratio",
    "simplex_map",
    "spectral_radius",
    "spectral_ratio",
    "spectral_report",
    "verify_bounds",
]
