"""Exception hierarchy for chainhull."""


class ChainHullError(Exception):
    """Base class for every error raised by this package."""


class EmptyInput(ChainHullError, ValueError):
    """Raised when an operation needs at least one point and got none."""


class NonFiniteCoordinate(ChainHullError, ValueError):
    """Raised when a coordinate is NaN or infinite."""


class DegenerateInput(ChainHullError, ValueError):
    """Raised when fewer than three distinct, non-collinear vertices remain."""


class ParseError(ChainHullError, ValueError):
    """Raised on malformed point files. ``line`` is 1-based, or None for binary input."""

    def __init__(self, reason, line=None, path=None):
        self.reason = reason
        self.line = line
        self.path = path
        where = str(path) if path is not None else "<input>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {reason}")


class IoError(ChainHullError, OSError):
    """Raised when an output file cannot be written."""
