"""Exception types raised across the toolkit.

Every failure mode that callers are expected to handle gets its own class so
that the CLI can map problems to exit codes without string matching. All of
them derive from EurKitError.
"""


class EurKitError(Exception):
    """Base class for all toolkit errors."""


class ZeroNorm(EurKitError):
    """State norm too small to normalize (below 1e-300)."""


class GridTooNarrow(EurKitError):
    """Grid extent does not cover the requested state's support."""


class Undersampled(EurKitError):
    """Grid spacing or sample count too coarse for the requested object."""


class InvalidSpec(EurKitError):
    """Malformed construction parameters or serialized payload."""


class BinTooFine(EurKitError):
    """Requested bin width is below the grid spacing."""


class TailNotConverged(EurKitError):
    """Enumerated bins leave more mass outside than the tail threshold."""


class DimensionMismatch(EurKitError):
    """Operands carry incompatible dimensions."""


class NotPrime(EurKitError):
    """Construction defined only for prime dimension."""


class InvalidAlpha(EurKitError):
    """Entropy order outside its admissible range."""


class InvalidS(EurKitError):
    """Symmetrization parameter outside [0, 1)."""


class NotConjugate(EurKitError):
    """Order pair does not satisfy 1/alpha + 1/beta = 2."""


class InvalidOverlap(EurKitError):
    """Basis overlap bound outside its admissible range."""


class VariantInapplicable(EurKitError):
    """Relation variant constraint violated (for example M != D + 1)."""


class SupportBoundary(EurKitError):
    """Operation undefined on densities with jump discontinuities."""


class DegenerateParallel(EurKitError):
    """Basis pair is (numerically) identical, bound degenerates to 0."""


class NotUnitary(EurKitError):
    """Matrix fails the unitarity check."""


class GridMismatch(EurKitError):
    """Two grid objects expected to coincide do not."""


class IncompatibleState(EurKitError):
    """State family does not support the requested relation or measure."""


class OptimizerBudgetExceeded(EurKitError):
    """Search budget exhausted before convergence; carries best-so-far."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
