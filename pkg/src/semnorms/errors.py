"""Shared exception types."""


class SemnormsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SemnormsError):
    """Malformed input text.  Carries the 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InvalidSemigroupError(SemnormsError):
    """A Cayley table failed validation.  Carries the full report."""

    def __init__(self, report):
        super().__init__(report.summary())
        self.report = report


class NormDomainError(SemnormsError):
    """Norm values must be nonnegative rationals."""


class NormConstructionError(SemnormsError):
    """A built-in norm family produced a table that failed its own guard."""


class GeneratorExhaustedError(SemnormsError):
    """Rejection sampling yielded no valid norm table within the budget."""
