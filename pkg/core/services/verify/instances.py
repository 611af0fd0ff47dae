"""Seeded random instances for the property suites."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from core.hardy import HardyProblem
from core.spaces import CoreMap, MeasureSpace, OrderedCore, ScalarField, layers
from core.utils.rationals import Extended

from .configuration import VerifyConfig


@dataclass(frozen=True)
class Instance:
    """A space with an ordered core and three random fields f, u, g."""

    space: MeasureSpace
    core: OrderedCore
    f: ScalarField
    u: ScalarField
    g: ScalarField


def random_fraction(rng: np.random.Generator, bound: int, zero_chance: float = 0.0) -> Fraction:
    if zero_chance and rng.random() < zero_chance:
        return Fraction(0)
    numerator = int(rng.integers(1, bound + 1))
    denominator = int(rng.integers(1, bound + 1))
    return Fraction(numerator, denominator)


def random_space(rng: np.random.Generator, n: int, bound: int, zero_chance: float = 0.15) -> MeasureSpace:
    mu = tuple(random_fraction(rng, bound, zero_chance) for _ in range(n))
    return MeasureSpace(points=tuple(f"s{i}" for i in range(n)), mu=mu)


def random_core(rng: np.random.Generator, n: int, max_sets: int) -> OrderedCore:
    """Random ordered partition of the points into at most `max_sets` layers."""
    k = int(rng.integers(1, min(n, max_sets) + 1))
    order = [int(s) for s in rng.permutation(n)]
    cuts = sorted(int(c) for c in rng.choice(np.arange(1, n), size=k - 1, replace=False)) if k > 1 else []
    chain = [frozenset(order[:cut]) for cut in cuts] + [frozenset(order)]
    return OrderedCore(chain=tuple(chain), n_points=n)


def random_field(rng: np.random.Generator, n: int, bound: int, zero_chance: float = 0.2) -> ScalarField:
    return ScalarField(values=tuple(random_fraction(rng, bound, zero_chance) for _ in range(n)))


def random_layer_field(
    rng: np.random.Generator,
    core: OrderedCore,
    bound: int,
    decreasing: bool = False,
) -> ScalarField:
    """Constant on every layer; non-increasing across layers when `decreasing`."""
    per_layer = [random_fraction(rng, bound, zero_chance=0.1) for _ in range(core.depth)]
    if decreasing:
        per_layer.sort(reverse=True)
    values: list[Extended] = [Fraction(0)] * core.n_points
    for layer, value in zip(layers(core), per_layer):
        for s in layer:
            values[s] = value
    return ScalarField(values=tuple(values))


def random_instance(rng: np.random.Generator, config: VerifyConfig) -> Instance:
    n = int(rng.integers(1, config.max_points + 1))
    space = random_space(rng, n, config.max_weight)
    core = random_core(rng, n, config.max_core_sets)
    return Instance(
        space=space,
        core=core,
        f=random_field(rng, n, config.max_weight),
        u=random_field(rng, n, config.max_weight),
        g=random_field(rng, n, config.max_weight),
    )


def random_coremap(
    rng: np.random.Generator,
    core: OrderedCore,
    bound: int,
    max_items: int = 6,
    empty_chance: float = 0.1,
) -> CoreMap:
    """Items with random τ (some zero) sent to random chain entries or to ∅."""
    count = int(rng.integers(1, max_items + 1))
    balls: list[frozenset[int]] = []
    for _ in range(count):
        if rng.random() < empty_chance:
            balls.append(frozenset())
        else:
            balls.append(core.chain[int(rng.integers(0, core.depth))])
    tau = tuple(random_fraction(rng, bound, zero_chance=0.1) for _ in range(count))
    return CoreMap.build(balls=balls, n_points=core.n_points, tau=tau)


def random_problem(
    rng: np.random.Generator,
    config: VerifyConfig,
    q: Fraction,
    p: Fraction = Fraction(1),
    eta_zero_chance: float = 0.0,
) -> HardyProblem:
    """A random p, q problem; with eta_zero_chance = 0 the charged points all carry η > 0."""
    n = int(rng.integers(1, config.max_points + 1))
    space = random_space(rng, n, config.max_weight)
    core = random_core(rng, n, config.max_core_sets)
    cm = random_coremap(rng, core, config.max_weight)
    eta = ScalarField(values=tuple(random_fraction(rng, config.max_weight, eta_zero_chance) for _ in range(n)))
    return HardyProblem(space=space, eta=eta, cm=cm, p=p, q=q)


def singular_problem(rng: np.random.Generator, config: VerifyConfig, q: Fraction) -> tuple[HardyProblem, int]:
    """A problem with a charged, η-null point inside a ball of positive τ, and that point."""
    n = int(rng.integers(1, config.max_points + 1))
    space = random_space(rng, n, config.max_weight)
    mu = list(space.mu)
    target = int(rng.integers(0, n))
    mu[target] = random_fraction(rng, config.max_weight)
    space = MeasureSpace(points=space.points, mu=tuple(mu))
    core = random_core(rng, n, config.max_core_sets)
    cm = random_coremap(rng, core, config.max_weight)
    # an extra item whose ball is the full set guarantees the target is reached
    cm = CoreMap(
        items=cm.items + ("reach",),
        tau=cm.tau + (random_fraction(rng, config.max_weight),),
        balls=cm.balls + (core.chain[-1],),
        n_points=n,
    )
    eta = [random_fraction(rng, config.max_weight) for _ in range(n)]
    eta[target] = Fraction(0)
    return HardyProblem(space=space, eta=ScalarField(values=tuple(eta)), cm=cm, p=Fraction(1), q=q), target
