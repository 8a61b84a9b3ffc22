"""Exception types shared across the package."""


class MathieuMatError(Exception):
    pass


class SingularMatrixError(MathieuMatError):
    """Inversion was requested for a matrix of deficient rank."""


class FieldTooSmallError(MathieuMatError):
    """The base field has fewer elements than the computation requires.

    Carries ``needed``, the number of field elements that would have
    sufficed (e.g. the generic dimension bound of a vector search).
    """

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


class PreconditionViolated(MathieuMatError):
    """An operation's stated precondition does not hold for the input."""


class TooLargeError(MathieuMatError):
    """An exhaustive enumeration would exceed the instance guard."""


class HypothesisFailed(MathieuMatError):
    """A criterion hypothesis fails; ``witness`` is an offending matrix."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLeftIdealError(MathieuMatError):
    """The input subspace is not closed under left multiplication."""


class SpaceFileError(MathieuMatError):
    """Malformed space file; ``line`` is the 1-based offending line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line
