from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from fractions import Fraction
from typing import Literal

from core.spaces import CoreMap, MeasureSpace, ScalarField
from core.utils.rationals import INF, Extended, RationalLike, mul, reciprocal, to_fraction

from .errors import ExponentError, HardyProblemError


class OuterExponent(StrEnum):
    """Outer power of the q ∈ (0,1) double sum: (1−q)/q or 1/q."""

    THEOREM_A = "theoremA"
    STEPANOV = "stepanov"

    def value_for(self, q: Fraction) -> Fraction:
        return (1 - q) / q if self is OuterExponent.THEOREM_A else 1 / q


@dataclass(frozen=True)
class Exponents:
    """p, q with p′ = p/(p−1) and 1/r = 1/q − 1/p (None when q > p)."""

    p: Fraction
    q: Fraction
    p_prime: Extended
    r: Extended | None

    @classmethod
    def of(cls, p: RationalLike, q: RationalLike) -> "Exponents":
        p = to_fraction(p)
        q = to_fraction(q)
        if p < 1:
            raise ExponentError(f"p must be >= 1, got {p}.")
        if q <= 0:
            raise ExponentError(f"q must be > 0, got {q}.")
        p_prime = INF if p == 1 else p / (p - 1)
        gap = 1 / q - 1 / p
        r: Extended | None = None if gap < 0 else reciprocal(gap)
        return cls(p=p, q=q, p_prime=p_prime, r=r)

    @property
    def q_prime(self) -> Extended:
        return INF if self.q == 1 else self.q / (self.q - 1)


@dataclass(frozen=True)
class ConstantEstimate:
    """A best constant (kind="exact") or a quantity equivalent to it (kind="equivalent")."""

    value: float
    kind: Literal["exact", "equivalent"]
    notes: str
    exact: Fraction | None = None

    def __post_init__(self):
        if not self.value >= 0:
            raise HardyProblemError(f"Constant estimate must be >= 0, got {self.value}.")

    @classmethod
    def of(cls, value: Extended, kind: Literal["exact", "equivalent"], notes: str) -> "ConstantEstimate":
        exact = value if isinstance(value, Fraction) else None
        return cls(value=float(value), kind=kind, notes=notes, exact=exact)


@dataclass(frozen=True)
class HardyProblem:
    """(Σ_y (∫_{B(y)} f dμ)^q τ(y))^{1/q} ≤ C (Σ_s f^p η(s))^{1/p}."""

    space: MeasureSpace
    eta: ScalarField
    cm: CoreMap
    p: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", to_fraction(self.p))
        object.__setattr__(self, "q", to_fraction(self.q))
        Exponents.of(self.p, self.q)
        self.eta.check_size(self.space.size)
        if not all(value != INF and value >= 0 for value in self.eta.values):
            raise HardyProblemError("eta weights must be finite and >= 0.")
        if self.cm.n_points != self.space.size:
            raise HardyProblemError(
                f"Core map covers {self.cm.n_points} points, space has {self.space.size}."
            )

    @classmethod
    def from_weight(
        cls,
        space: MeasureSpace,
        u: ScalarField,
        cm: CoreMap,
        p: RationalLike = 1,
        q: RationalLike = 1,
    ) -> "HardyProblem":
        """dη = u dμ."""
        eta = ScalarField(values=tuple(mul(a, b) for a, b in zip(u.check_size(space.size).values, space.mu)))
        return cls(space=space, eta=eta, cm=cm, p=to_fraction(p), q=to_fraction(q))

    @property
    def exponents(self) -> Exponents:
        return Exponents.of(self.p, self.q)

    def with_exponents(self, p: RationalLike, q: RationalLike) -> "HardyProblem":
        return HardyProblem(space=self.space, eta=self.eta, cm=self.cm, p=to_fraction(p), q=to_fraction(q))

    def with_eta(self, eta: ScalarField) -> "HardyProblem":
        return HardyProblem(space=self.space, eta=eta, cm=self.cm, p=self.p, q=self.q)

    def with_coremap(self, cm: CoreMap) -> "HardyProblem":
        return HardyProblem(space=self.space, eta=self.eta, cm=cm, p=self.p, q=self.q)
