"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`GraphFidError`
and carries an ``exit_code`` used by the command-line front end.
"""


class GraphFidError(Exception):
    """Base class for package errors."""

    exit_code = 2


class InvalidParameterError(GraphFidError, ValueError):
    """An argument is outside its documented range."""


class InvalidSizeError(InvalidParameterError):
    """A graph family was requested with too few vertices."""


class GraphParseError(InvalidParameterError):
    """A graph file is malformed; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(GraphFidError):
    """The requested enumeration or dense simulation is above the size cap."""

    exit_code = 3


class TheoremDomainError(GraphFidError, ValueError):
    """Inputs fall outside the regime where the single-setting guarantee holds."""

    exit_code = 4


class NoPatternError(TheoremDomainError):
    """No constructive measurement pattern exists for the requested size."""


class ConsistencyError(GraphFidError, AssertionError):
    """An internal invariant was violated. Should be unreachable."""

    exit_code = 5
