"""Exception types raised by the library."""


class CopglmmError(Exception):
    """Base class for all library errors."""


class DomainError(CopglmmError, ValueError):
    """Input outside the mathematical domain of an operation."""


class InvalidSkewnessError(CopglmmError, ValueError):
    """Marginal skewness transform hit |delta| >= 1 (inadmissible
    correlation/skewness combination)."""


class DecompositionError(CopglmmError, ValueError):
    """A required matrix factorization failed (non positive definite)."""


class EvaluationError(CopglmmError, RuntimeError):
    """Non-finite likelihood evaluation.  Carries the subject index."""

    def __init__(self, message, subject_index=None):
        super().__init__(message)
        self.subject_index = subject_index


class RankDeficiencyError(CopglmmError, RuntimeError):
    """Singular block in the sandwich-information computation."""


class ConvergenceError(CopglmmError, RuntimeError):
    """An iterative solver failed to converge."""


class IngestError(CopglmmError, ValueError):
    """Malformed input data file."""


class ConfigError(CopglmmError, ValueError):
    """Invalid scenario or CLI configuration.  Carries the field path."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
