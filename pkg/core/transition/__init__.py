"""Induced line measure λ, transition maps R and Q, push-forwards and distribution functions."""

from .line import LineField, LineMeasure, line_integral
from .maps import (
    Q_map,
    R_map,
    check_equal_norms,
    check_equimeasurable,
    core_transform,
    distribution,
    hardy_transform,
    induced_line_measure,
    layer_atoms,
    pushforward_measure,
)

__all__ = [
    "LineField",
    "LineMeasure",
    "Q_map",
    "R_map",
    "check_equal_norms",
    "check_equimeasurable",
    "core_transform",
    "distribution",
    "hardy_transform",
    "induced_line_measure",
    "layer_atoms",
    "line_integral",
    "pushforward_measure",
]
