"""Greatest core-decreasing minorant, variational value and push-mass witness."""

from .minorant import MinorantResult, greatest_minorant, push_mass_witness, variational_value

__all__ = ["MinorantResult", "greatest_minorant", "push_mass_witness", "variational_value"]
