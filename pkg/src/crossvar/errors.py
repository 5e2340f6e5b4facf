"""Exception types shared across the package."""


class CrossvarError(Exception):
    """Base class for all errors raised by this package."""


class EdgeListParseError(CrossvarError):
    """A line of an edge-list (or layout table) file could not be parsed."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class ValidationError(CrossvarError):
    """Input violates a structural requirement (self-loop, bad parameter, ...)."""


class OracleBudgetError(CrossvarError):
    """A brute-force oracle was asked to exceed its configured cost limit."""


class NotAForestError(CrossvarError):
    """The forest-only algorithm was invoked on a graph with a cycle."""


class InternalInconsistencyError(CrossvarError):
    """Two routes that must agree produced different values (signals a bug)."""


class DegenerateStatisticsError(CrossvarError):
    """A statistic (z-score, tail bound) is undefined because the variance is zero."""
