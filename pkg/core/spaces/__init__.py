"""Finite measure spaces, ordered cores, the core order, and core maps."""

from .cores import (
    CoreMap,
    InducedCore,
    OrderedCore,
    core_order_leq,
    induced_core,
    is_core_decreasing,
    is_down_set,
    layers,
    maximal_core,
    rank_of,
)
from .errors import (
    CoreMapOrderError,
    CoreSpaceError,
    FieldSizeError,
    InvalidCoreError,
    InvalidMeasureError,
    PointIndexError,
)
from .measure import MeasureSpace, ScalarField

__all__ = [
    "CoreMap",
    "CoreMapOrderError",
    "CoreSpaceError",
    "FieldSizeError",
    "InducedCore",
    "InvalidCoreError",
    "InvalidMeasureError",
    "MeasureSpace",
    "OrderedCore",
    "PointIndexError",
    "ScalarField",
    "core_order_leq",
    "induced_core",
    "is_core_decreasing",
    "is_down_set",
    "layers",
    "maximal_core",
    "rank_of",
]
