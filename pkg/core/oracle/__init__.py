"""Independent verifiers: exact norms, the exact LP and numerical ratio search."""

from .configuration import RatioSearchConfig
from .enumeration import brute_force_minorant, value_grid
from .ratio import (
    RatioReport,
    exact_norm_halfline,
    exact_norm_p1,
    maximize_ratio,
    ratio,
    targeted_ratio_sup,
)
from .simplex import LPResult, SimplexTableau, check_duality, lp_variational, lp_witness, solve_max_lp

__all__ = [
    "LPResult",
    "RatioReport",
    "RatioSearchConfig",
    "SimplexTableau",
    "brute_force_minorant",
    "check_duality",
    "exact_norm_halfline",
    "exact_norm_p1",
    "lp_variational",
    "lp_witness",
    "maximize_ratio",
    "ratio",
    "solve_max_lp",
    "targeted_ratio_sup",
    "value_grid",
]
