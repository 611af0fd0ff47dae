"""Finite metric measure spaces, anchored ball cores and their Hardy constants."""

from .errors import MetricSpaceError, TriangleInequalityError
from .space import (
    AnchoredSpace,
    LineMetricSpace,
    MetricSpace,
    WeightedMetric,
    ball_core,
    classical_hardy_grid,
    corollary42,
    metric_minorant,
    theorem41,
)

__all__ = [
    "AnchoredSpace",
    "LineMetricSpace",
    "MetricSpace",
    "MetricSpaceError",
    "TriangleInequalityError",
    "WeightedMetric",
    "ball_core",
    "classical_hardy_grid",
    "corollary42",
    "metric_minorant",
    "theorem41",
]
