from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from core.hardy import HardyProblem
from core.metric import MetricSpace
from core.services.verify import VerifyConfig
from core.spaces import CoreMap, MeasureSpace, OrderedCore, ScalarField, rank_of


def prefix_coremap(n: int, tau=None) -> CoreMap:
    """Item s ↦ {0, ..., s}, the discrete version of x ↦ [0, x]."""
    return CoreMap.build(balls=[range(s + 1) for s in range(n)], n_points=n, tau=tau)


def canonical_coremap(core: OrderedCore, tau) -> CoreMap:
    """Item s ↦ the smallest core set containing s."""
    return CoreMap.build(balls=[core.chain[rank_of(core, s) - 1] for s in range(core.n_points)], n_points=core.n_points, tau=tau)


def unit_problem(u=(1, 1, 1), q=1, p=1) -> HardyProblem:
    """μ = τ = 1 on three points with prefix balls."""
    space = MeasureSpace.uniform(3)
    return HardyProblem.from_weight(space, ScalarField.of(u), prefix_coremap(3), p=p, q=q)


@pytest.fixture
def unit_space() -> MeasureSpace:
    return MeasureSpace.uniform(3)


@pytest.fixture
def prefix_core() -> OrderedCore:
    return OrderedCore.prefixes(3)


@pytest.fixture
def small_config() -> VerifyConfig:
    return VerifyConfig(
        seed=11,
        count=40,
        max_points=6,
        max_core_sets=4,
        max_weight=9,
        sandwich_count=15,
        singular_count=12,
        ratio_restarts=2,
        ratio_budget=40,
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(2024)


rationals = st.fractions(min_value=0, max_value=50, max_denominator=20)
positive_rationals = st.fractions(min_value=Fraction(1, 20), max_value=50, max_denominator=20)


@st.composite
def spaces_with_cores(draw, max_points: int = 6):
    """A space with some μ-null points, an ordered core and a field on it."""
    n = draw(st.integers(min_value=1, max_value=max_points))
    mu = draw(st.lists(rationals, min_size=n, max_size=n))
    order = draw(st.permutations(range(n)))
    cuts = draw(st.sets(st.integers(min_value=1, max_value=n - 1), max_size=n - 1)) if n > 1 else set()
    chain = [frozenset(order[:cut]) for cut in sorted(cuts)] + [frozenset(order)]
    space = MeasureSpace(points=tuple(f"s{i}" for i in range(n)), mu=tuple(mu))
    core = OrderedCore(chain=tuple(chain), n_points=n)
    g = ScalarField(values=tuple(draw(st.lists(rationals, min_size=n, max_size=n))))
    return space, core, g


@st.composite
def metric_spaces(draw, max_points: int = 6):
    """Taxicab distances between integer points of the plane, a random anchor and a field v."""
    n = draw(st.integers(min_value=1, max_value=max_points))
    coordinate = st.integers(min_value=-4, max_value=4)
    points = draw(st.lists(st.tuples(coordinate, coordinate), min_size=n, max_size=n))
    dist = tuple(tuple(abs(x - a) + abs(y - b) for a, b in points) for x, y in points)
    space = MeasureSpace(points=tuple(f"x{i}" for i in range(n)), mu=tuple(draw(st.lists(rationals, min_size=n, max_size=n))))
    anchor = draw(st.integers(min_value=0, max_value=n - 1))
    v = ScalarField(values=tuple(draw(st.lists(rationals, min_size=n, max_size=n))))
    return MetricSpace(space=space, dist=dist, anchor=anchor), v
