"""Exception types shared across the package."""


class QcssError(Exception):
    """Base class for all package errors."""


class InvalidInput(QcssError, ValueError):
    """Malformed argument: length mismatch, out-of-range index, bad text format."""


class PreconditionError(QcssError, ValueError):
    """A construction was called on inputs that violate its hypotheses."""


class ResourceLimit(QcssError, RuntimeError):
    """An enumeration would exceed the configured codeword budget."""


class DecodingFailure(QcssError):
    """A decoder could not produce a codeword (error weight beyond guarantee).

    `side` is set by the two-sided CSS decoder ("x" or "z") so callers can
    tell which classical component gave up.
    """

    def __init__(self, message: str, side: str | None = None):
        super().__init__(message)
        self.side = side


class UnsupportedConfiguration(QcssError, ValueError):
    """Incidence structure whose row-product parities admit no orthogonal extension."""


class InternalConsistencyError(QcssError, RuntimeError):
    """An invariant that the code itself guarantees was observed broken."""
