class CoreSpaceError(ValueError):
    """Base exception for measure spaces, ordered cores and core maps."""


class InvalidMeasureError(CoreSpaceError):
    """Raised when weights are negative, infinite, or labels repeat."""


class InvalidCoreError(CoreSpaceError):
    """Raised when a chain is not strictly nested or does not cover the points."""


class CoreMapOrderError(CoreSpaceError):
    """Raised when the sets of a core map are not totally ordered by inclusion."""


class PointIndexError(CoreSpaceError, IndexError):
    """Raised when a point index falls outside the space."""


class FieldSizeError(CoreSpaceError):
    """Raised when a field's length does not match the number of points."""
