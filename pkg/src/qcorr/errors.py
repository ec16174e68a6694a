"""Exception types shared across the package.

Each class names the contract violation it reports; callers can catch
QcorrError to handle all of them at once.
"""


class QcorrError(Exception):
    """Base class for all errors raised by this package."""


class NonSquare(QcorrError):
    """A matrix that must be square is not."""


class NonHermitian(QcorrError):
    """A matrix that must be Hermitian fails the symmetry check."""


class DimensionMismatch(QcorrError):
    """Operand shapes or declared subsystem dimensions are inconsistent."""


class NotAState(QcorrError):
    """A matrix fails the density-matrix checks (trace, positivity)."""


class OutOfRange(QcorrError):
    """A scalar parameter lies outside its admissible interval."""


class BadSpectrum(QcorrError):
    """A Schmidt spectrum is not a sorted probability vector."""


class NotPure(QcorrError):
    """A state required to be pure has purity below tolerance."""


class OutsideRegion(QcorrError):
    """A 2-d family parameter lies outside the admissible region."""


class BadRank(QcorrError):
    """A requested matrix rank is impossible for the given dimensions."""


class MalformedCsv(QcorrError):
    """A CSV file does not have the expected layout."""


class NoConvergence(QcorrError):
    """No optimizer restart met its tolerance within the budget.

    The optimizer itself reports this as converged=False on the
    returned value rather than raising; this type is for callers that
    want to escalate the flag into an error.
    """
