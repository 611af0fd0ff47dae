"""Best constants and equivalent conditions for abstract Hardy inequalities."""

from .conditions import (
    Regime,
    condition_p_le_q,
    condition_p_le_q_halfline,
    condition_q_lt_p,
    condition_q_lt_p_halfline,
)
from .constants import halfline_ratio, stepanov_halfline, theoremA_constant
from .errors import ExponentError, HardyProblemError
from .problem import ConstantEstimate, Exponents, HardyProblem, OuterExponent
from .reduction import EtaDecomposition, HalfLineProblem, decompose_eta, reduce_to_halfline

__all__ = [
    "ConstantEstimate",
    "EtaDecomposition",
    "ExponentError",
    "Exponents",
    "HalfLineProblem",
    "HardyProblem",
    "HardyProblemError",
    "OuterExponent",
    "Regime",
    "condition_p_le_q",
    "condition_p_le_q_halfline",
    "condition_q_lt_p",
    "condition_q_lt_p_halfline",
    "decompose_eta",
    "halfline_ratio",
    "reduce_to_halfline",
    "stepanov_halfline",
    "theoremA_constant",
]
