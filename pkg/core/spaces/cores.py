"""Ordered cores and core maps over a finite point set.

An ordered core is stored as its strictly nested chain A_1 ⊊ ... ⊊ A_k = U;
the empty set is an implicit member. The order u ≤ v ("every core set that
contains v contains u") is encoded by ranks: rank(s) is the smallest i with
s ∈ A_i, and u ≤ v iff rank(u) ≤ rank(v).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from core.utils.logs import logger
from core.utils.rationals import RationalLike, to_fraction

from .errors import CoreMapOrderError, InvalidCoreError, InvalidMeasureError, PointIndexError
from .measure import MeasureSpace, ScalarField


def _check_point(s: int, n_points: int) -> int:
    if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < n_points:
        raise PointIndexError(f"Point index {s!r} out of range for {n_points} points.")
    return s


@dataclass(frozen=True)
class OrderedCore:
    """Full ordered core given by its chain of non-empty point-index sets."""

    chain: tuple[frozenset[int], ...]
    n_points: int
    ranks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        chain = tuple(frozenset(entry) for entry in self.chain)
        for i, entry in enumerate(chain, start=1):
            if not entry:
                raise InvalidCoreError(f"A_{i} is empty; the empty set is implicit.")
            for s in entry:
                _check_point(s, self.n_points)
        for i in range(len(chain) - 1):
            if not chain[i] < chain[i + 1]:
                raise InvalidCoreError(f"A_{i + 1} is not a proper subset of A_{i + 2}.")
        if self.n_points and (not chain or len(chain[-1]) != self.n_points):
            raise InvalidCoreError("The last chain set must be the entire point set.")

        ranks = [0] * self.n_points
        assigned: frozenset[int] = frozenset()
        for i, entry in enumerate(chain, start=1):
            for s in entry - assigned:
                ranks[s] = i
            assigned = entry
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "ranks", tuple(ranks))

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], n_points: int) -> "OrderedCore":
        return cls(chain=tuple(frozenset(entry) for entry in sets), n_points=n_points)

    @classmethod
    def prefixes(cls, n_points: int) -> "OrderedCore":
        """Chain {s0} ⊂ {s0,s1} ⊂ ... of singleton layers."""
        return cls(chain=tuple(frozenset(range(i + 1)) for i in range(n_points)), n_points=n_points)

    @property
    def depth(self) -> int:
        return len(self.chain)

    def layer(self, i: int) -> tuple[int, ...]:
        """Points of A_i ∖ A_{i−1} (1-based i), in index order."""
        previous = self.chain[i - 2] if i > 1 else frozenset()
        return tuple(sorted(self.chain[i - 1] - previous))


def rank_of(core: OrderedCore, s: int) -> int:
    """Smallest i with s ∈ A_i."""
    return core.ranks[_check_point(s, core.n_points)]


def core_order_leq(core: OrderedCore, u: int, v: int) -> bool:
    """u ≤ v: every core set containing v also contains u."""
    return rank_of(core, u) <= rank_of(core, v)


def layers(core: OrderedCore) -> list[tuple[int, ...]]:
    return [core.layer(i) for i in range(1, core.depth + 1)]


def is_core_decreasing(core: OrderedCore, f: ScalarField) -> bool:
    """Constant on every layer, with non-increasing layer values."""
    f.check_size(core.n_points)
    previous = None
    for layer in layers(core):
        values = {f.values[s] for s in layer}
        if len(values) != 1:
            return False
        (value,) = values
        if value < 0 or (previous is not None and value > previous):
            return False
        previous = value
    return True


def is_down_set(core: OrderedCore, subset: Iterable[int]) -> bool:
    """Closed downward under ≤ (membership in the maximal core)."""
    members = {_check_point(s, core.n_points) for s in subset}
    if not members:
        return True
    top = max(core.ranks[s] for s in members)
    return members == set(core.chain[top - 1])


def maximal_core(core: OrderedCore) -> list[frozenset[int]]:
    """All down-sets: ∅ followed by the chain (no other finite unions or intersections exist)."""
    return [frozenset()] + list(core.chain)


@dataclass(frozen=True)
class CoreMap:
    """Index set Y with weights τ and a core set B(y) per item."""

    items: tuple[str, ...]
    tau: tuple[Fraction, ...]
    balls: tuple[frozenset[int], ...]
    n_points: int

    def __post_init__(self):
        items = tuple(str(item) for item in self.items)
        if len(set(items)) != len(items):
            raise InvalidMeasureError(f"Core map items must be unique: {list(items)}")
        if not len(items) == len(self.tau) == len(self.balls):
            raise InvalidMeasureError(
                f"Core map has {len(items)} items, {len(self.tau)} weights, {len(self.balls)} balls."
            )
        weights: list[Fraction] = []
        for item, raw in zip(items, self.tau):
            try:
                weight = to_fraction(raw)
            except ValueError as exc:
                raise InvalidMeasureError(f"tau[{item}]: {exc}") from exc
            if weight < 0:
                raise InvalidMeasureError(f"tau[{item}] must be >= 0, got {weight}.")
            weights.append(weight)
        balls = tuple(frozenset(_check_point(s, self.n_points) for s in ball) for ball in self.balls)

        distinct = sorted(set(balls), key=len)
        for smaller, larger in zip(distinct, distinct[1:]):
            if not smaller <= larger:
                raise CoreMapOrderError(
                    f"B(y) sets {sorted(smaller)} and {sorted(larger)} are not nested."
                )
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "tau", tuple(weights))
        object.__setattr__(self, "balls", balls)

    @classmethod
    def build(
        cls,
        balls: Sequence[Iterable[int]],
        n_points: int,
        tau: Sequence[RationalLike] | None = None,
        items: Sequence[str] | None = None,
    ) -> "CoreMap":
        count = len(balls)
        return cls(
            items=tuple(items) if items is not None else tuple(f"y{j}" for j in range(count)),
            tau=tuple(tau) if tau is not None else (Fraction(1),) * count,
            balls=tuple(frozenset(ball) for ball in balls),
            n_points=n_points,
        )

    @property
    def size(self) -> int:
        return len(self.items)

    def coverage(self, s: int) -> Fraction:
        """τ({y : s ∈ B(y)})."""
        _check_point(s, self.n_points)
        return sum((t for t, ball in zip(self.tau, self.balls) if s in ball), Fraction(0))

    def union(self) -> frozenset[int]:
        return frozenset().union(*self.balls) if self.balls else frozenset()

    def ball_measures(self, space: MeasureSpace) -> tuple[Fraction, ...]:
        """φ(y) = μ(B(y)) per item."""
        return tuple(space.measure(ball) for ball in self.balls)

    def scaled(self, factor: RationalLike) -> "CoreMap":
        factor = to_fraction(factor)
        return CoreMap(
            items=self.items,
            tau=tuple(factor * t for t in self.tau),
            balls=self.balls,
            n_points=self.n_points,
        )

    def reindexed(self, kept: Sequence[int]) -> "CoreMap":
        """Same map over the sub-space made of `kept` points (all balls must lie inside)."""
        position = {s: i for i, s in enumerate(kept)}
        return CoreMap(
            items=self.items,
            tau=self.tau,
            balls=tuple(frozenset(position[s] for s in ball) for ball in self.balls),
            n_points=len(kept),
        )

    def ball_rank(self, core: OrderedCore, y: int) -> int:
        """Chain index of B(y) in `core` (0 for the empty set)."""
        ball = self.balls[y]
        if not ball:
            return 0
        for i, entry in enumerate(core.chain, start=1):
            if entry == ball:
                return i
        raise InvalidCoreError(f"B({self.items[y]}) is not a set of the given core.")


@dataclass(frozen=True)
class InducedCore:
    """Core {∅} ∪ {B(y)} together with the (possibly restricted) data it lives on.

    `kept` lists the original point indices of U₀ = ∪ B(y); when U₀ is a proper
    subset, `coremap` and `space` are re-indexed onto U₀.
    """

    core: OrderedCore
    coremap: CoreMap
    space: MeasureSpace | None
    kept: tuple[int, ...]
    restricted: bool = False


def induced_core(cm: CoreMap, space: MeasureSpace | None = None) -> InducedCore:
    """Deduplicated chain of the non-empty B(y), restricted to U₀ = ∪ B(y) if needed."""
    if space is not None and space.size != cm.n_points:
        raise InvalidCoreError(f"Core map covers {cm.n_points} points, space has {space.size}.")
    union = cm.union()
    kept = tuple(sorted(union))
    restricted_cm = cm
    restricted_space = space
    if len(kept) != cm.n_points:
        logger.debug(f"Restricting {cm.n_points} points to the {len(kept)} covered by the core map.")
        restricted_cm = cm.reindexed(kept)
        if space is not None:
            restricted_space = space.restrict(kept)
    distinct = sorted({ball for ball in restricted_cm.balls if ball}, key=len)
    core = OrderedCore(chain=tuple(distinct), n_points=restricted_cm.n_points)
    return InducedCore(
        core=core,
        coremap=restricted_cm,
        space=restricted_space,
        kept=kept,
        restricted=len(kept) != cm.n_points,
    )
