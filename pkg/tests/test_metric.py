import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import metric_spaces
from core.hardy import ExponentError, theoremA_constant
from core.metric import (
    LineMetricSpace,
    MetricSpace,
    MetricSpaceError,
    TriangleInequalityError,
    WeightedMetric,
    ball_core,
    classical_hardy_grid,
    corollary42,
    metric_minorant,
    theorem41,
)
from core.oracle import maximize_ratio
from core.spaces import MeasureSpace, ScalarField

ONES = ScalarField.constant(3, 1)


def line(coordinates=(0, 1, 2), anchor=0) -> LineMetricSpace:
    return LineMetricSpace(space=MeasureSpace.uniform(len(coordinates)), coordinates=coordinates, anchor=anchor)


def test_metric_validation(unit_space):
    with pytest.raises(MetricSpaceError):
        MetricSpace(space=unit_space, dist=((0, 1), (1, 0)))
    with pytest.raises(MetricSpaceError):
        MetricSpace(space=unit_space, dist=((1, 1, 1), (1, 0, 1), (1, 1, 0)))
    with pytest.raises(MetricSpaceError):
        MetricSpace(space=unit_space, dist=((0, 1, 1), (2, 0, 1), (1, 1, 0)))
    with pytest.raises(MetricSpaceError):
        MetricSpace(space=unit_space, dist=((0, 1, 1), (1, 0, 1), (1, 1, 0)), anchor=3)
    with pytest.raises(MetricSpaceError):
        LineMetricSpace(space=unit_space, coordinates=(0, 1))


def test_triangle_inequality_is_strict_only_on_request(unit_space):
    dist = ((0, 1, 5), (1, 0, 1), (5, 1, 0))
    with pytest.raises(TriangleInequalityError):
        MetricSpace(space=unit_space, dist=dist)
    semimetric = MetricSpace(space=unit_space, dist=dist, strict=False)
    assert semimetric.anchor_distances() == (0, 1, 5)


def test_ball_core_on_collinear_points():
    core, cm = ball_core(line())
    assert core.chain == (frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2}))
    assert cm.balls == core.chain
    assert cm.items == ("s0", "s1", "s2")


def test_equidistant_points_share_a_ball():
    core, cm = ball_core(line(coordinates=(0, 1, -1)))
    assert core.chain == (frozenset({0}), frozenset({0, 1, 2}))
    assert cm.balls[1] == cm.balls[2] == frozenset({0, 1, 2})


def test_matrix_and_line_spaces_agree(unit_space):
    matrix = MetricSpace(space=unit_space, dist=((0, 1, 2), (1, 0, 1), (2, 1, 0)), anchor=1)
    assert matrix.anchor_distances() == line(anchor=1).anchor_distances() == (1, 0, 1)
    assert ball_core(matrix) == ball_core(line(anchor=1))


def test_metric_minorant():
    assert metric_minorant(line(), ScalarField.of([5, 2, 3])).values == (5, 2, 2)


@given(metric_spaces())
@settings(max_examples=200)
def test_ball_core_has_one_set_per_distance(data):
    metric, _ = data
    core, cm = ball_core(metric)
    assert core.depth == len(set(metric.anchor_distances()))
    assert all(metric.anchor in ball for ball in cm.balls)


@given(metric_spaces())
@settings(max_examples=200)
def test_metric_minorant_follows_distance_shells(data):
    metric, v = data
    low = metric_minorant(metric, v).values
    distances = metric.anchor_distances()
    for s in range(metric.size):
        for t in range(metric.size):
            if distances[s] == distances[t]:
                assert low[s] == low[t]
            elif distances[s] < distances[t]:
                assert low[s] >= low[t]


def test_corollary42_on_unit_fixture():
    estimate = corollary42(line(), ONES, ONES, 1)
    assert estimate.kind == "exact"
    assert estimate.exact == 3
    assert corollary42(line(), ONES, ONES, "1/2").exact == 6


@pytest.mark.parametrize("q", ["1/3", "1", "2"])
def test_corollary42_is_theorem_a_on_the_ball_core(q):
    metric = line(coordinates=(0, 3, 1, 3))
    omega = ScalarField.of([1, "1/2", 2, 4])
    v = ScalarField.of([3, 1, "5/2", 2])
    weighted = WeightedMetric(metric=metric, omega=omega, v=v)
    assert corollary42(metric, omega, v, q).value == theoremA_constant(weighted.problem(1, q)).value


def test_theorem41_dispatch():
    assert theorem41(line(), ONES, ONES, 2, 2).value == pytest.approx(math.sqrt(2), rel=1e-15)
    assert theorem41(line(), ONES, ONES, 2, "1/2").value == pytest.approx(2 * 2 ** (1 / 3), rel=1e-12)
    with pytest.raises(ExponentError):
        theorem41(line(), ONES, ONES, 1, 2)


def test_anchor_ball_carries_the_condition_on_two_points():
    two = line(coordinates=(0, 1))
    ones = ScalarField.constant(2, 1)
    assert theorem41(two, ones, ones, 2, 2).value == 1
    norm = maximize_ratio(WeightedMetric(metric=two, omega=ones, v=ones).problem(2, 2), seed=0).lower_bound
    assert norm == pytest.approx((1 + math.sqrt(5)) / 2, rel=1e-6)


def test_weights_must_be_finite_and_non_negative():
    with pytest.raises(MetricSpaceError):
        WeightedMetric(metric=line(), omega=ScalarField.of([1, "inf", 1]), v=ONES)
    with pytest.raises(MetricSpaceError):
        WeightedMetric(metric=line(), omega=ONES, v=ScalarField.of([1, -1, 1]))


def test_classical_grid_shape():
    weighted = classical_hardy_grid(4)
    assert weighted.metric.coordinates == (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
    assert weighted.omega.values[0] == 16
    assert weighted.metric.space.mu == (Fraction(1, 4),) * 4
    with pytest.raises(MetricSpaceError):
        classical_hardy_grid(0)


@pytest.mark.slow
def test_classical_hardy_inequality():
    weighted = classical_hardy_grid(1000)
    condition = theorem41(weighted.metric, weighted.omega, weighted.v, 2, 2).value
    assert 0.97 <= condition <= 1.0
    report = maximize_ratio(weighted.problem(2, 2), seed=0)
    assert 1.74 <= report.lower_bound <= 2.0
