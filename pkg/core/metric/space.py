"""Finite metric measure spaces with an anchor, their closed-ball cores, and the
Hardy front-end with τ = ω dμ and η = v dμ."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from core.hardy import (
    ConstantEstimate,
    HardyProblem,
    OuterExponent,
    condition_p_le_q,
    condition_q_lt_p,
    theoremA_constant,
)
from core.hardy.errors import ExponentError
from core.minorant import greatest_minorant
from core.spaces import CoreMap, MeasureSpace, OrderedCore, ScalarField
from core.utils.logs import logger
from core.utils.rationals import INF, RationalLike, mul, to_fraction

from .errors import MetricSpaceError, TriangleInequalityError


def _check_anchor(anchor: int, size: int) -> None:
    if not 0 <= anchor < size:
        raise MetricSpaceError(f"Anchor {anchor} out of range for {size} points.")


@dataclass(frozen=True)
class MetricSpace:
    """(X, d, μ) with anchor a. `strict=False` accepts semimetrics."""

    space: MeasureSpace
    dist: tuple[tuple[Fraction, ...], ...]
    anchor: int = 0
    strict: bool = True

    def __post_init__(self):
        n = self.space.size
        _check_anchor(self.anchor, n)
        if len(self.dist) != n or any(len(row) != n for row in self.dist):
            raise MetricSpaceError(f"Distance matrix must be {n}x{n}.")
        dist = tuple(tuple(to_fraction(d) for d in row) for row in self.dist)
        for s in range(n):
            if dist[s][s] != 0:
                raise MetricSpaceError(f"d({self.space.points[s]}, itself) = {dist[s][s]}, expected 0.")
            for t in range(s + 1, n):
                if dist[s][t] < 0:
                    raise MetricSpaceError(f"Negative distance between {self.space.points[s]} and {self.space.points[t]}.")
                if dist[s][t] != dist[t][s]:
                    raise MetricSpaceError(f"Distance between {self.space.points[s]} and {self.space.points[t]} is not symmetric.")
        if self.strict:
            for s in range(n):
                for t in range(n):
                    for u in range(n):
                        if dist[s][u] > dist[s][t] + dist[t][u]:
                            raise TriangleInequalityError(
                                f"d({self.space.points[s]}, {self.space.points[u]}) exceeds the path "
                                f"through {self.space.points[t]}."
                            )
        object.__setattr__(self, "dist", dist)

    @property
    def size(self) -> int:
        return self.space.size

    def distance(self, s: int, t: int) -> Fraction:
        return self.dist[s][t]

    def anchor_distances(self) -> tuple[Fraction, ...]:
        """|x|_a = d(a, x) per point."""
        return self.dist[self.anchor]


@dataclass(frozen=True)
class LineMetricSpace:
    """Points at rational coordinates with d(s, t) = |x_s − x_t|; no matrix is stored."""

    space: MeasureSpace
    coordinates: tuple[Fraction, ...]
    anchor: int = 0

    def __post_init__(self):
        if len(self.coordinates) != self.space.size:
            raise MetricSpaceError(f"{len(self.coordinates)} coordinates for {self.space.size} points.")
        _check_anchor(self.anchor, self.space.size)
        object.__setattr__(self, "coordinates", tuple(to_fraction(x) for x in self.coordinates))

    @property
    def size(self) -> int:
        return self.space.size

    def distance(self, s: int, t: int) -> Fraction:
        return abs(self.coordinates[s] - self.coordinates[t])

    def anchor_distances(self) -> tuple[Fraction, ...]:
        origin = self.coordinates[self.anchor]
        return tuple(abs(x - origin) for x in self.coordinates)


AnchoredSpace = MetricSpace | LineMetricSpace


def ball_core(m: AnchoredSpace, tau: Sequence[RationalLike] | None = None) -> tuple[OrderedCore, CoreMap]:
    """Closed balls B_{a,r} at the distinct anchor distances, and x ↦ B_{a,|x|_a}."""
    distances = m.anchor_distances()
    radii = sorted(set(distances))
    order = sorted(range(m.size), key=lambda s: distances[s])
    balls_by_radius: dict[Fraction, frozenset[int]] = {}
    members: list[int] = []
    cursor = 0
    for radius in radii:
        while cursor < len(order) and distances[order[cursor]] <= radius:
            members.append(order[cursor])
            cursor += 1
        balls_by_radius[radius] = frozenset(members)
    core = OrderedCore(chain=tuple(balls_by_radius[r] for r in radii), n_points=m.size)
    cm = CoreMap(
        items=m.space.points,
        tau=tuple(tau) if tau is not None else (Fraction(1),) * m.size,
        balls=tuple(balls_by_radius[d] for d in distances),
        n_points=m.size,
    )
    logger.debug(f"ball_core: {len(radii)} balls over {m.size} points.")
    return core, cm


def metric_minorant(m: AnchoredSpace, v: ScalarField) -> ScalarField:
    """v̲(x) = essinf_μ {v(t) : t ∈ B_{a,|x|_a}}."""
    core, _ = ball_core(m)
    return greatest_minorant(core, m.space, v).minorant


@dataclass(frozen=True)
class WeightedMetric:
    """A metric measure space with the weights ω (left side) and v (right side)."""

    metric: AnchoredSpace
    omega: ScalarField
    v: ScalarField

    def __post_init__(self):
        for name, field in (("omega", self.omega), ("v", self.v)):
            field.check_size(self.metric.size)
            if not all(value != INF and value >= 0 for value in field.values):
                raise MetricSpaceError(f"{name} must be finite and >= 0.")

    def problem(self, p: RationalLike = 1, q: RationalLike = 1) -> HardyProblem:
        """τ = ω dμ on the items x ↦ B_{a,|x|_a}, η = v dμ."""
        space = self.metric.space
        tau = tuple(mul(w, m) for w, m in zip(self.omega.values, space.mu))
        _, cm = ball_core(self.metric, tau=tau)
        return HardyProblem.from_weight(space, self.v, cm, p=p, q=q)


def corollary42(
    m: AnchoredSpace,
    omega: ScalarField,
    v: ScalarField,
    q: RationalLike,
    outer: OuterExponent = OuterExponent.THEOREM_A,
) -> ConstantEstimate:
    """Best constant (q ≥ 1) or its equivalent (q < 1) for p = 1 on the ball core."""
    weighted = WeightedMetric(metric=m, omega=omega, v=v)
    return theoremA_constant(weighted.problem(p=1, q=q), outer)


def theorem41(m: AnchoredSpace, omega: ScalarField, v: ScalarField, p: RationalLike, q: RationalLike) -> ConstantEstimate:
    """The p > 1 condition on the ball core: Muckenhoupt sup for p ≤ q, integral condition for q < p."""
    weighted = WeightedMetric(metric=m, omega=omega, v=v)
    p, q = to_fraction(p), to_fraction(q)
    if p <= 1:
        raise ExponentError(f"theorem41 needs p > 1, got {p}; use corollary42 for p = 1.")
    problem = weighted.problem(p=p, q=q)
    if p <= q:
        return condition_p_le_q(problem, omega, v)
    return condition_q_lt_p(problem, omega, v)


def classical_hardy_grid(n: int) -> WeightedMetric:
    """Uniform grid x_i = i/n on (0, 1] with μ = 1/n, anchor x_1, ω(x) = x^{−2}, v = 1."""
    if n < 1:
        raise MetricSpaceError(f"Grid needs at least one point, got {n}.")
    space = MeasureSpace(points=tuple(f"x{i}" for i in range(1, n + 1)), mu=(Fraction(1, n),) * n)
    coordinates = tuple(Fraction(i, n) for i in range(1, n + 1))
    return WeightedMetric(
        metric=LineMetricSpace(space=space, coordinates=coordinates, anchor=0),
        omega=ScalarField(values=tuple(1 / x**2 for x in coordinates)),
        v=ScalarField.constant(n, 1),
    )
