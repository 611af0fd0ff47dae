class MetricSpaceError(ValueError):
    """Base exception for finite metric measure spaces."""


class TriangleInequalityError(MetricSpaceError):
    """Raised when a strict metric violates d(s, u) <= d(s, t) + d(t, u)."""
