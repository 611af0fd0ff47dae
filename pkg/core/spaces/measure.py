from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from core.utils.rationals import INF, Extended, RationalLike, mul, to_extended, to_fraction

from .errors import FieldSizeError, InvalidMeasureError, PointIndexError


@dataclass(frozen=True)
class MeasureSpace:
    """Finite point set with exact non-negative weights; Σ is the power set."""

    points: tuple[str, ...]
    mu: tuple[Fraction, ...]

    def __post_init__(self):
        points = tuple(str(p) for p in self.points)
        if len(set(points)) != len(points):
            raise InvalidMeasureError(f"Point labels must be unique: {list(points)}")
        if len(self.mu) != len(points):
            raise InvalidMeasureError(
                f"mu has {len(self.mu)} weights for {len(points)} points."
            )
        weights: list[Fraction] = []
        for label, raw in zip(points, self.mu):
            try:
                weight = to_fraction(raw)
            except ValueError as exc:
                raise InvalidMeasureError(f"mu[{label}]: {exc}") from exc
            if weight < 0:
                raise InvalidMeasureError(f"mu[{label}] must be >= 0, got {weight}.")
            weights.append(weight)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "mu", tuple(weights))

    @classmethod
    def uniform(cls, n: int, weight: RationalLike = 1, prefix: str = "s") -> "MeasureSpace":
        return cls(points=tuple(f"{prefix}{i}" for i in range(n)), mu=(to_fraction(weight),) * n)

    @property
    def size(self) -> int:
        return len(self.points)

    def check_index(self, s: int) -> int:
        if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < self.size:
            raise PointIndexError(f"Point index {s!r} out of range for {self.size} points.")
        return s

    def measure(self, indices: Iterable[int]) -> Fraction:
        return sum((self.mu[self.check_index(s)] for s in indices), Fraction(0))

    def total(self) -> Fraction:
        return sum(self.mu, Fraction(0))

    def positive(self) -> tuple[int, ...]:
        """Indices of points with positive weight."""
        return tuple(s for s, weight in enumerate(self.mu) if weight > 0)

    def integral(self, f: "ScalarField", indices: Iterable[int] | None = None) -> Extended:
        """Σ f·μ over the given points (all points by default), 0·∞ = 0."""
        f.check_size(self.size)
        chosen = range(self.size) if indices is None else indices
        total: Extended = Fraction(0)
        for s in chosen:
            term = mul(f.values[s], self.mu[s])
            if term == INF:
                return INF
            total += term
        return total

    def restrict(self, indices: Sequence[int]) -> "MeasureSpace":
        kept = [self.check_index(s) for s in indices]
        return MeasureSpace(
            points=tuple(self.points[s] for s in kept),
            mu=tuple(self.mu[s] for s in kept),
        )

    def scaled(self, factor: RationalLike) -> "MeasureSpace":
        factor = to_fraction(factor)
        return MeasureSpace(points=self.points, mu=tuple(factor * w for w in self.mu))


@dataclass(frozen=True)
class ScalarField:
    """Per-point extended rational values (f, g, u, ω, v, ...).

    Values may be +∞. Negative finite values are accepted so that operations
    taking |g| can receive signed input; non-negativity is checked where an
    operation needs it.
    """

    values: tuple[Extended, ...]

    def __post_init__(self):
        converted: list[Extended] = []
        for index, raw in enumerate(self.values):
            try:
                converted.append(to_extended(raw))
            except ValueError as exc:
                raise InvalidMeasureError(f"field[{index}]: {exc}") from exc
        object.__setattr__(self, "values", tuple(converted))

    @classmethod
    def of(cls, values: Iterable[RationalLike | float]) -> "ScalarField":
        return cls(values=tuple(values))

    @classmethod
    def constant(cls, n: int, value: RationalLike | float) -> "ScalarField":
        return cls(values=(to_extended(value),) * n)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, s: int) -> Extended:
        return self.values[s]

    def check_size(self, n: int) -> "ScalarField":
        if len(self.values) != n:
            raise FieldSizeError(f"Field has {len(self.values)} values for {n} points.")
        return self

    def abs(self) -> "ScalarField":
        return ScalarField(values=tuple(abs(value) for value in self.values))

    def map(self, fn: Callable[[Extended], Extended]) -> "ScalarField":
        return ScalarField(values=tuple(fn(value) for value in self.values))

    def scaled(self, factor: RationalLike) -> "ScalarField":
        factor = to_fraction(factor)
        return self.map(lambda value: mul(factor, value))

    def times(self, other: "ScalarField") -> "ScalarField":
        other.check_size(len(self))
        return ScalarField(values=tuple(mul(a, b) for a, b in zip(self.values, other.values)))

    def restrict(self, indices: Sequence[int]) -> "ScalarField":
        return ScalarField(values=tuple(self.values[s] for s in indices))
