import os
from typing import Any, Mapping

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from core.hardy import OuterExponent

load_dotenv()


class VerifyConfig(BaseModel):
    """Runtime configuration for the randomized property suites."""

    seed: int = Field(
        default=0,
        description="Seed of numpy's default_rng; every suite derives its stream from it.",
    )
    count: int = Field(
        default=1000,
        ge=0,
        description="Random instances per exact-identity suite.",
    )
    max_points: int = Field(
        default=10,
        ge=1,
        description="Largest number of points in a random space.",
    )
    max_core_sets: int = Field(
        default=6,
        ge=1,
        description="Largest number of sets in a random ordered core.",
    )
    max_weight: int = Field(
        default=20,
        ge=1,
        description="Bound on numerators and denominators of random rational weights.",
    )
    sandwich_bound: float = Field(
        default=32.0,
        gt=1,
        description="Failure threshold for max(lower/estimate, estimate/lower) in the q < 1 sandwich.",
    )
    sandwich_count: int = Field(
        default=500,
        ge=0,
        description="Random instances per q in the sandwich suite.",
    )
    sandwich_qs: list[str] = Field(
        default_factory=lambda: ["1/4", "1/2", "3/4"],
        description="Exponents q in (0, 1) covered by the sandwich suite, as 'num/den' strings.",
    )
    singular_count: int = Field(
        default=100,
        ge=0,
        description="Constructed instances with a charged, eta-null point under a charged ball.",
    )
    ratio_restarts: int = Field(
        default=4,
        ge=0,
        description="Random starts handed to maximize_ratio inside the suites.",
    )
    ratio_budget: int = Field(
        default=100,
        ge=1,
        description="Ascent iterations per start handed to maximize_ratio inside the suites.",
    )
    outer_exponent: OuterExponent = Field(
        default=OuterExponent.THEOREM_A,
        description="Outer power of the q < 1 double sum: 'theoremA' ((1-q)/q) or 'stepanov' (1/q).",
    )

    @field_validator("sandwich_qs", mode="before")
    @classmethod
    def _split_qs(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [part.strip() for part in value.split(",") if part.strip()]
        return value

    @classmethod
    def from_overrides(cls, overrides: Mapping[str, Any] | None = None) -> "VerifyConfig":
        """Build VerifyConfig from HARDY_<FIELD> environment values, then overrides, then defaults."""
        overrides = overrides or {}
        field_names = list(cls.model_fields.keys())
        values: dict[str, Any] = {
            field_name: os.environ.get(f"HARDY_{field_name.upper()}", overrides.get(field_name))
            for field_name in field_names
        }
        return cls(**{key: value for key, value in values.items() if value is not None})
