import os
from typing import Any, Mapping

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


class RatioSearchConfig(BaseModel):
    """Runtime configuration for the ratio lower-bound search."""

    restarts: int = Field(
        default=8,
        ge=0,
        description="Random starts of the ascent phase (the best support-2 point is always an extra start).",
    )
    budget: int = Field(
        default=200,
        ge=1,
        description="Maximum ascent iterations per start.",
    )
    seed: int = Field(
        default=0,
        description="Seed of numpy's default_rng for the random starts.",
    )
    golden_iterations: int = Field(
        default=60,
        ge=1,
        description="Golden-section steps for the mass split of each two-point support.",
    )
    support_pair_limit: int = Field(
        default=300,
        ge=1,
        description="Only the best single points up to this count are paired in the support-2 phase.",
    )
    tolerance: float = Field(
        default=1e-13,
        gt=0,
        description="Relative improvement below which an ascent run counts as converged.",
    )

    @classmethod
    def from_overrides(cls, overrides: Mapping[str, Any] | None = None) -> "RatioSearchConfig":
        """Environment variables HARDY_RATIO_<FIELD> win over `overrides`, which win over defaults."""
        overrides = overrides or {}
        values: dict[str, Any] = {
            field_name: os.environ.get(f"HARDY_RATIO_{field_name.upper()}", overrides.get(field_name))
            for field_name in cls.model_fields
        }
        return cls(**{key: value for key, value in values.items() if value is not None})
