from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from core.spaces.errors import FieldSizeError, InvalidMeasureError
from core.utils.rationals import INF, Extended, ext_sum, mul, to_extended, to_fraction


@dataclass(frozen=True)
class LineMeasure:
    """Atomic measure on [0, ∞): strictly increasing positions, positive masses."""

    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        atoms = tuple((to_fraction(x), to_fraction(m)) for x, m in self.atoms)
        for x, m in atoms:
            if x < 0:
                raise InvalidMeasureError(f"Atom position {x} is negative.")
            if m <= 0:
                raise InvalidMeasureError(f"Atom mass at {x} must be positive, got {m}.")
        for (x0, _), (x1, _) in zip(atoms, atoms[1:]):
            if not x0 < x1:
                raise InvalidMeasureError(f"Atom positions must increase strictly: {x0}, {x1}.")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[object, object]]) -> "LineMeasure":
        return cls(atoms=tuple((to_fraction(x), to_fraction(m)) for x, m in pairs))

    @property
    def positions(self) -> tuple[Fraction, ...]:
        return tuple(x for x, _ in self.atoms)

    @property
    def masses(self) -> tuple[Fraction, ...]:
        return tuple(m for _, m in self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def total(self) -> Fraction:
        return sum(self.masses, Fraction(0))

    def mass_upto(self, x: Fraction) -> Fraction:
        """Measure of [0, x]."""
        return sum((m for pos, m in self.atoms if pos <= x), Fraction(0))

    def count_upto(self, x: Fraction) -> int:
        """Number of atoms in [0, x]."""
        return bisect_right(self.positions, x)


@dataclass(frozen=True)
class LineField:
    """Extended non-negative values at the atoms of `measure`."""

    measure: LineMeasure
    values: tuple[Extended, ...]

    def __post_init__(self):
        values = tuple(to_extended(v) for v in self.values)
        if len(values) != len(self.measure):
            raise FieldSizeError(f"Line field has {len(values)} values for {len(self.measure)} atoms.")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def is_non_increasing(self) -> bool:
        return all(a >= b for a, b in zip(self.values, self.values[1:]))

    def running_minimum(self) -> "LineField":
        """Greatest non-increasing minorant along position order."""
        running: Extended = INF
        out: list[Extended] = []
        for value in self.values:
            running = min(running, value)
            out.append(running)
        return LineField(measure=self.measure, values=tuple(out))

    def minorant_at(self, x: Fraction) -> Extended:
        """essinf of the field over [0, x] (+∞ when no atom lies in [0, x])."""
        count = self.measure.count_upto(x)
        return min(self.values[:count], default=INF)

    def times(self, other: "LineField") -> "LineField":
        if other.measure != self.measure:
            raise FieldSizeError("Line fields live on different measures.")
        return LineField(measure=self.measure, values=tuple(mul(a, b) for a, b in zip(self.values, other.values)))


def line_integral(field: LineField, upto: Fraction | None = None) -> Extended:
    """∫_{[0, upto]} φ dλ (the whole line when `upto` is None)."""
    count = len(field) if upto is None else field.measure.count_upto(upto)
    return ext_sum(mul(v, m) for v, m in zip(field.values[:count], field.measure.masses[:count]))

