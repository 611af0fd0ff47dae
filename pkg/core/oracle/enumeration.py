"""Brute-force greatest minorant over a finite value grid."""

from fractions import Fraction
from typing import Iterable

from core.spaces import MeasureSpace, OrderedCore, ScalarField, layers
from core.utils.logs import logger
from core.utils.rationals import INF, Extended


def value_grid(space: MeasureSpace, g: ScalarField) -> list[Extended]:
    """|g| on charged points together with 0 and +∞, largest first."""
    g = g.check_size(space.size).abs()
    grid = {Fraction(0), INF} | {g.values[s] for s in space.positive()}
    return sorted(grid, reverse=True)


def brute_force_minorant(
    core: OrderedCore,
    space: MeasureSpace,
    g: ScalarField,
    grid: Iterable[Extended] | None = None,
) -> tuple[Extended, ...]:
    """Per-layer maximum over every non-increasing per-layer vector h on `grid`
    with h ≤ |g| μ-a.e.

    Every such vector is enumerated, so this stays an independent check of the
    running-minimum formula for small cores.
    """
    g = g.check_size(space.size).abs()
    values = sorted(set(grid) if grid is not None else value_grid(space, g), reverse=True)
    caps: list[Extended] = []
    for layer in layers(core):
        charged = [g.values[s] for s in layer if space.mu[s] > 0]
        caps.append(min(charged, default=INF))

    best: list[Extended | None] = [None] * len(caps)
    visited = 0

    def descend(i: int, upper: Extended) -> None:
        nonlocal visited
        if i == len(caps):
            visited += 1
            return
        for value in values:
            if value > upper or value > caps[i]:
                continue
            if best[i] is None or value > best[i]:
                best[i] = value
            descend(i + 1, value)

    descend(0, INF)
    logger.debug(f"brute_force_minorant: {visited} feasible vectors over {len(caps)} layers.")
    return tuple(INF if value is None else value for value in best)
