"""Greatest core-decreasing minorant and its mass-pushing description."""

from dataclasses import dataclass
from fractions import Fraction

from core.spaces import MeasureSpace, OrderedCore, ScalarField, layers
from core.utils.logs import logger
from core.utils.rationals import INF, Extended, div, ext_sum, mul


@dataclass(frozen=True)
class MinorantResult:
    """The minorant as a field plus its value on each layer.

    `per_layer` is +∞ on leading layers that carry no μ-mass (empty essential
    infimum); the field gives points of those layers the first finite layer
    value instead, which keeps it a core-decreasing function.
    """

    minorant: ScalarField
    per_layer: tuple[Extended, ...]


def greatest_minorant(core: OrderedCore, space: MeasureSpace, g: ScalarField) -> MinorantResult:
    """u̲(s) = essinf_μ {|g(v)| : v ≤ s}: running minimum over layers of positive-mass values."""
    g = g.check_size(space.size).abs()
    per_layer: list[Extended] = []
    running: Extended = INF
    for layer in layers(core):
        charged = [g.values[s] for s in layer if space.mu[s] > 0]
        if charged:
            running = min(running, min(charged))
        per_layer.append(running)

    first_finite = next((value for value in per_layer if value != INF), INF)
    values: list[Extended] = [INF] * space.size
    for layer, value in zip(layers(core), per_layer):
        for s in layer:
            values[s] = value if value != INF else first_finite
    return MinorantResult(minorant=ScalarField(values=tuple(values)), per_layer=tuple(per_layer))


def variational_value(core: OrderedCore, space: MeasureSpace, f: ScalarField, u: ScalarField) -> Extended:
    """∫ f u̲ dμ, which equals inf{∫ g u dμ : ∫_A g dμ ≥ ∫_A f dμ for every core set A}."""
    minorant = greatest_minorant(core, space, u).minorant
    return space.integral(f.check_size(space.size).times(minorant))


def push_mass_witness(core: OrderedCore, space: MeasureSpace, f: ScalarField, u: ScalarField) -> ScalarField:
    """A feasible g attaining ∫ g u dμ = ∫ f u̲ dμ.

    Layer by layer, the f-mass of the layer is pushed onto one positive-mass
    point of minimal u among ranks up to that layer (ties: lowest rank, then
    lowest index).
    """
    f = f.check_size(space.size)
    u = u.check_size(space.size)
    mass: list[Extended] = [Fraction(0)] * space.size
    best: tuple[Extended, int, int] | None = None
    moved = 0
    for rank, layer in enumerate(layers(core), start=1):
        for s in layer:
            if space.mu[s] > 0 and (best is None or u.values[s] < best[0]):
                best = (u.values[s], rank, s)
        layer_mass = ext_sum(mul(f.values[s], space.mu[s]) for s in layer)
        if layer_mass == 0:
            continue
        target = best[2]
        if target not in layer:
            moved += 1
        mass[target] = ext_sum([mass[target], layer_mass])

    logger.debug(f"push_mass_witness: {moved} layers moved mass to earlier points.")
    return ScalarField(values=tuple(div(m, w) if w > 0 else Fraction(0) for m, w in zip(mass, space.mu)))
