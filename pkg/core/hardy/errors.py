class HardyProblemError(ValueError):
    """Base exception for Hardy problem data."""


class ExponentError(HardyProblemError):
    """Raised when p, q fall outside the regime an operation handles."""
