"""Exception types raised across the package."""


class BirkhoffError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(BirkhoffError, ValueError):
    """Invalid input data or parameters."""


class NonSquareError(ValidationError):
    """Matrix input is not a square 2-D grid."""


class TooSmallError(ValidationError):
    """Dimension below the supported minimum (n >= 2)."""


class TooLargeError(ValidationError):
    """Dimension above the supported maximum for this operation."""


class NonPositiveEntryError(ValidationError):
    """An entry violates strict positivity."""

    def __init__(self, message: str, index=None):
        super().__init__(message)
        self.index = index


class NonFiniteEntryError(ValidationError):
    """An entry is NaN or infinite."""

    def __init__(self, message: str, index=None):
        super().__init__(message)
        self.index = index


class NotNormalizedError(ValidationError):
    """Coordinates do not sum to 1 within tolerance."""


class BadRangeError(ValidationError):
    """Invalid sampling range (requires 0 < lo < hi, both finite)."""


class ZeroSumError(ValidationError):
    """Coordinate sum too close to zero for normalization to be defined."""


class BadEpsilonError(ValidationError):
    """Neighborhood radius outside the admissible interval."""


class BadToleranceError(ValidationError):
    """Tolerance must be strictly positive."""


class DimensionMismatchError(ValidationError):
    """Operands have incompatible dimensions."""


class NotInConeError(BirkhoffError, ValueError):
    """Complex vector lies outside the positive-ratio cone."""


class MatrixParseError(BirkhoffError, ValueError):
    """Malformed matrix file."""

    def __init__(self, message: str, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class NumericalError(BirkhoffError, RuntimeError):
    """Numerical breakdown in an otherwise valid computation."""


class DegenerateSampleError(NumericalError):
    """Every sampled pair was projectively equal; no ratio available."""


class NoConvergenceError(NumericalError):
    """Iterative eigenvalue computation failed to converge."""


class PerronAmbiguousError(NumericalError):
    """Maximal-modulus eigenvalue is not uniquely identifiable.

    Impossible in exact arithmetic for strictly positive matrices; raised
    loudly instead of silently rounding when floating point disagrees.
    """
