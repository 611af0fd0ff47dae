import math
from fractions import Fraction

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import canonical_coremap, positive_rationals, prefix_coremap, rationals, spaces_with_cores, unit_problem
from core.hardy import (
    ConstantEstimate,
    ExponentError,
    Exponents,
    HardyProblem,
    HardyProblemError,
    OuterExponent,
    Regime,
    condition_p_le_q,
    condition_p_le_q_halfline,
    condition_q_lt_p,
    condition_q_lt_p_halfline,
    decompose_eta,
    halfline_ratio,
    reduce_to_halfline,
    stepanov_halfline,
    theoremA_constant,
)
from core.oracle import exact_norm_p1, ratio
from core.spaces import CoreMap, MeasureSpace, ScalarField
from core.transition import LineField
from core.utils.rationals import INF

ONES = ScalarField.constant(3, 1)


def test_exponents():
    exponents = Exponents.of(2, "1/2")
    assert exponents.p_prime == 2
    assert exponents.r == Fraction(2, 3)
    assert exponents.q_prime == -1
    conjugate_one = Exponents.of(1, 2)
    assert conjugate_one.p_prime == INF
    assert conjugate_one.r is None
    with pytest.raises(ExponentError):
        Exponents.of("1/2", 1)
    with pytest.raises(ExponentError):
        Exponents.of(1, 0)


def test_problem_validation(unit_space):
    with pytest.raises(HardyProblemError):
        HardyProblem(space=unit_space, eta=ScalarField.of([1, "inf", 1]), cm=prefix_coremap(3), p=1, q=1)
    with pytest.raises(HardyProblemError):
        HardyProblem(space=unit_space, eta=ONES, cm=prefix_coremap(2), p=1, q=1)
    with pytest.raises(HardyProblemError):
        ConstantEstimate.of(Fraction(-1), "exact", "")


def test_decompose_eta():
    space = MeasureSpace.uniform(2)
    plain = HardyProblem(space=space, eta=ScalarField.of([2, 6]), cm=CoreMap.build([[0], [0, 1]], 2), p=1, q=1)
    assert decompose_eta(plain).u.values == (2, 6)
    assert not decompose_eta(plain).infinite

    singular = HardyProblem(space=space, eta=ScalarField.of([0, 1]), cm=CoreMap.build([[0]], 2), p=1, q=1)
    assert decompose_eta(singular).infinite

    null = MeasureSpace(points=("a", "b"), mu=(1, 0))
    dropped = decompose_eta(HardyProblem(space=null, eta=ScalarField.of([1, 5]), cm=CoreMap.build([[0, 1]], 2), p=1, q=1))
    assert dropped.dropped == frozenset({1})
    assert dropped.u.values == (1, INF)


def test_theorem_a_exact_branch():
    estimate = theoremA_constant(unit_problem(q=1))
    assert estimate.kind == "exact"
    assert estimate.exact == 3
    assert theoremA_constant(unit_problem(u=(1, 2, 4))).exact == 3
    assert exact_norm_p1(unit_problem(u=(1, 2, 4))) == 3
    assert theoremA_constant(unit_problem(q=2)).value == pytest.approx(math.sqrt(3), rel=1e-15)


def test_theorem_a_double_sum():
    estimate = theoremA_constant(unit_problem(q="1/2"))
    assert estimate.kind == "equivalent"
    assert estimate.exact == 6
    assert theoremA_constant(unit_problem(q="1/2"), OuterExponent.STEPANOV).exact == 36
    quarter = theoremA_constant(unit_problem(q="1/4")).value
    assert quarter == pytest.approx((1 + 2 ** (1 / 3) + 3 ** (1 / 3)) ** 3, rel=1e-12)


@pytest.mark.parametrize("q", ["1/2", "1", "2"])
def test_u_scaling(q):
    base = theoremA_constant(unit_problem(u=(3, 1, 2), q=q)).value
    scaled = theoremA_constant(unit_problem(u=(6, 2, 4), q=q)).value
    assert scaled == pytest.approx(base / 2, rel=1e-12)


def test_singular_point_gives_infinity():
    space = MeasureSpace.uniform(2)
    problem = HardyProblem(space=space, eta=ScalarField.of([0, 1]), cm=CoreMap.build([[0]], 2), p=1, q="1/2")
    assert theoremA_constant(problem).value == INF


def test_reduce_to_halfline_on_unit_fixture():
    reduced = reduce_to_halfline(unit_problem(u=(5, 2, 3)))
    assert reduced.lam.atoms == ((1, 1), (2, 1), (3, 1))
    assert reduced.nu.atoms == ((1, 1), (2, 1), (3, 1))
    assert reduced.w.values == (5, 2, 2)
    with pytest.raises(ExponentError):
        reduce_to_halfline(unit_problem(p=2, q=2))


@pytest.mark.parametrize("q", ["1/4", "1/2", "3/4"])
@pytest.mark.parametrize("outer", list(OuterExponent))
def test_abstract_and_halfline_double_sums_agree(q, outer):
    space = MeasureSpace(points=("a", "b", "c", "d"), mu=(2, 0, 1, 3))
    cm = CoreMap.build([[0], [0, 1, 2], [0, 1, 2], [], [0, 1, 2, 3]], 4, tau=[1, 2, "1/2", 5, 3])
    problem = HardyProblem(space=space, eta=ScalarField.of([4, 1, 1, 6]), cm=cm, p=1, q=q)
    reduced = reduce_to_halfline(problem)
    expected = stepanov_halfline(reduced.nu, reduced.w, Fraction(q), outer).value
    assert theoremA_constant(problem, outer).value == pytest.approx(expected, rel=1e-12)


def test_stepanov_needs_q_below_one():
    reduced = reduce_to_halfline(unit_problem())
    with pytest.raises(ExponentError):
        stepanov_halfline(reduced.nu, reduced.w, Fraction(1))


def test_halfline_ratio_point_mass():
    reduced = reduce_to_halfline(unit_problem())
    phi = LineField(measure=reduced.lam, values=(1, 0, 0))
    assert halfline_ratio(reduced.lam, reduced.nu, reduced.w, phi, Fraction(1)) == 3.0
    zero = LineField(measure=reduced.lam, values=(0, 0, 0))
    assert halfline_ratio(reduced.lam, reduced.nu, reduced.w, zero, Fraction(1)) == 0.0


def test_muckenhoupt_condition():
    problem = unit_problem(p=2, q=2)
    value = condition_p_le_q(problem, ONES, ONES).value
    assert value == pytest.approx(math.sqrt(2), rel=1e-15)
    assert condition_p_le_q_halfline(problem, ONES, ONES) == pytest.approx(value, rel=1e-12)
    with pytest.raises(ExponentError):
        condition_p_le_q(unit_problem(p=2, q="1/2"), ONES, ONES)


def test_integral_condition_low_regime():
    problem = unit_problem(p=2, q="1/2")
    estimate = condition_q_lt_p(problem, ONES, ONES)
    assert estimate.kind == "equivalent"
    assert estimate.value == pytest.approx(2 * 2 ** (1 / 3), rel=1e-12)
    assert condition_q_lt_p_halfline(problem, ONES, ONES) == pytest.approx(estimate.value, rel=1e-12)


def test_integral_condition_high_regime():
    problem = unit_problem(p=3, q=2)
    assert condition_q_lt_p(problem, ONES, ONES, regime=Regime.HIGH).value == pytest.approx(16, rel=1e-12)
    assert condition_q_lt_p_halfline(problem, ONES, ONES) == pytest.approx(16, rel=1e-12)


def test_integral_condition_rejects_bad_regimes():
    with pytest.raises(ExponentError):
        condition_q_lt_p(unit_problem(p=2, q=1), ONES, ONES)
    with pytest.raises(ExponentError):
        condition_q_lt_p(unit_problem(p=2, q="1/2"), ONES, ONES, regime="1<q<p")
    with pytest.raises(ExponentError):
        condition_q_lt_p(unit_problem(p=1, q="1/2"), ONES, ONES)


@given(
    spaces_with_cores(),
    st.lists(rationals, min_size=6, max_size=6),
    st.lists(rationals, min_size=6, max_size=6),
    st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(2)]),
)
@settings(max_examples=150)
def test_theorem_a_grows_with_tau_and_falls_with_u(data, tau_extra, u_extra, q):
    space, core, u = data
    n = space.size
    ones = [Fraction(1)] * n
    base = theoremA_constant(HardyProblem.from_weight(space, u, canonical_coremap(core, ones), q=q)).value
    heavier = canonical_coremap(core, [1 + extra for extra in tau_extra[:n]])
    assert base <= theoremA_constant(HardyProblem.from_weight(space, u, heavier, q=q)).value * (1 + 1e-12)
    larger_u = ScalarField(values=tuple(a + b for a, b in zip(u.values, u_extra)))
    assert theoremA_constant(HardyProblem.from_weight(space, larger_u, canonical_coremap(core, ones), q=q)).value <= base * (1 + 1e-12)


@given(
    spaces_with_cores(),
    st.lists(rationals, min_size=6, max_size=6),
    st.lists(positive_rationals, min_size=6, max_size=6),
    st.lists(rationals, min_size=6, max_size=6),
    st.sampled_from([Fraction(2), Fraction(3)]),
)
@settings(max_examples=150)
def test_muckenhoupt_condition_grows_with_omega_and_falls_with_v(data, omega_extra, v_raw, v_extra, q):
    space, core, omega = data
    n = space.size
    v = ScalarField(values=tuple(v_raw[:n]))
    problem = HardyProblem.from_weight(space, v, canonical_coremap(core, [Fraction(1)] * n), p=2, q=q)
    base = condition_p_le_q(problem, omega, v).value
    larger_omega = ScalarField(values=tuple(a + b for a, b in zip(omega.values, omega_extra)))
    assert base <= condition_p_le_q(problem, larger_omega, v).value * (1 + 1e-12)
    larger_v = ScalarField(values=tuple(a + b for a, b in zip(v.values, v_extra)))
    assert condition_p_le_q(problem, omega, larger_v).value <= base * (1 + 1e-12)


@given(spaces_with_cores(), positive_rationals, st.sampled_from([(1, "1/2"), (1, 2), (2, 2), (3, "3/2")]))
@settings(max_examples=150)
def test_ratio_is_scale_invariant(data, factor, exponents):
    space, core, g = data
    p, q = exponents
    problem = HardyProblem.from_weight(space, ScalarField.constant(space.size, 1), canonical_coremap(core, [Fraction(1)] * space.size), p=p, q=q)
    assert ratio(problem, g.scaled(factor)) == pytest.approx(ratio(problem, g), rel=1e-10)
