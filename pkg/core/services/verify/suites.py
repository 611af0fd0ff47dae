"""Randomized property suites.

Every suite draws from its own numpy stream, default_rng([seed, index]), so the
suites can be run alone or together with identical instances.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from core.hardy import (
    HardyProblem,
    decompose_eta,
    reduce_to_halfline,
    stepanov_halfline,
    theoremA_constant,
)
from core.minorant import greatest_minorant, push_mass_witness, variational_value
from core.oracle import (
    brute_force_minorant,
    exact_norm_halfline,
    exact_norm_p1,
    lp_variational,
    maximize_ratio,
    ratio,
)
from core.spaces import ScalarField, induced_core, layers
from core.transition import (
    LineField,
    Q_map,
    R_map,
    check_equimeasurable,
    induced_line_measure,
    line_integral,
    pushforward_measure,
)
from core.utils.logs import logger
from core.utils.rationals import INF, Extended, mul

from .configuration import VerifyConfig
from .instances import (
    random_coremap,
    random_fraction,
    random_instance,
    random_layer_field,
    random_problem,
    singular_problem,
)

RTOL = 1e-12


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[int] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, index: int, success: bool) -> None:
        if success:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 10:
                self.failures.append(index)

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
            **self.details,
        }


def _close(a: Extended, b: Extended, rtol: float = RTOL) -> bool:
    if a == INF or b == INF:
        return a == b
    return bool(np.isclose(float(a), float(b), rtol=rtol, atol=0.0))


def _rng(config: VerifyConfig, index: int) -> np.random.Generator:
    return np.random.default_rng([config.seed, index])


def duality_suite(config: VerifyConfig) -> SuiteResult:
    """LP optimum = ∫ f u̲ dμ exactly, and the push-mass witness is feasible and optimal."""
    rng = _rng(config, 1)
    result = SuiteResult("duality")
    for index in range(config.count):
        inst = random_instance(rng, config)
        value = variational_value(inst.core, inst.space, inst.f, inst.u)
        lp = lp_variational(inst.core, inst.space, inst.f, inst.u)
        witness = push_mass_witness(inst.core, inst.space, inst.f, inst.u)
        feasible = all(
            inst.space.integral(witness, chain_set) >= inst.space.integral(inst.f, chain_set)
            for chain_set in inst.core.chain
        )
        attained = inst.space.integral(witness.times(inst.u)) == value
        result.record(index, lp == value and feasible and attained)
    return result


def maximality_suite(config: VerifyConfig) -> SuiteResult:
    """Running-minimum formula = brute-force maximal minorant on the value grid."""
    rng = _rng(config, 2)
    result = SuiteResult("maximality")
    for index in range(config.count):
        inst = random_instance(rng, config)
        formula = greatest_minorant(inst.core, inst.space, inst.g).per_layer
        result.record(index, formula == brute_force_minorant(inst.core, inst.space, inst.g))
    return result


def _transition_checks(rng: np.random.Generator, config: VerifyConfig) -> bool:
    inst = random_instance(rng, config)
    space, core = inst.space, inst.core
    lam = induced_line_measure(core, space)
    phi = LineField(measure=lam, values=tuple(random_fraction(rng, config.max_weight, 0.1) for _ in range(len(lam))))
    charged = space.positive()

    # (i) R(Qφ) = φ
    if R_map(core, space, Q_map(core, space, phi)).values != phi.values:
        return False

    # (ii) Q(Rf) = f on charged points for layer-constant f
    f_layer = random_layer_field(rng, core, config.max_weight)
    back = Q_map(core, space, R_map(core, space, f_layer))
    if any(back.values[s] != f_layer.values[s] for s in charged):
        return False

    # (iii) ∫_{A_j} f Qφ dμ = ∫_{[0, μ(A_j)]} Rf φ dλ
    rf = R_map(core, space, inst.f)
    q_phi = Q_map(core, space, phi)
    for chain_set in core.chain:
        left = space.integral(inst.f.times(q_phi), chain_set)
        right = line_integral(rf.times(phi), upto=space.measure(chain_set))
        if left != right:
            return False

    # (iv) R(fg) = R(f) R(g) for layer-constant f, g
    g_layer = random_layer_field(rng, core, config.max_weight)
    product = R_map(core, space, f_layer.times(g_layer))
    if product.values != R_map(core, space, f_layer).times(R_map(core, space, g_layer)).values:
        return False

    # (v) equal core-set integrals force equality on charged points
    values: list[Extended] = [Fraction(0)] * space.size
    previous = Fraction(0)
    for layer, chain_set in zip(layers(core), core.chain):
        integral = space.integral(f_layer, chain_set)
        mass = space.measure(layer)
        for s in layer:
            values[s] = (integral - previous) / mass if mass > 0 else random_fraction(rng, config.max_weight)
        previous = integral
    rebuilt = ScalarField(values=tuple(values))
    if any(rebuilt.values[s] != f_layer.values[s] for s in charged):
        return False

    # ν([0, x]) = τ({y : μ(B(y)) ≤ x})
    cm = random_coremap(rng, core, config.max_weight)
    nu = pushforward_measure(cm, space)
    measures = cm.ball_measures(space)
    for x in {Fraction(0), *measures}:
        expected = sum((t for t, m in zip(cm.tau, measures) if m <= x), Fraction(0))
        if nu.mass_upto(x) != expected:
            return False
    return True


def transition_suite(config: VerifyConfig) -> SuiteResult:
    rng = _rng(config, 3)
    result = SuiteResult("transition")
    for index in range(config.count):
        result.record(index, _transition_checks(rng, config))
    return result


def equimeasurability_suite(config: VerifyConfig) -> SuiteResult:
    """Hf under ν and Tf under τ share their distribution function."""
    rng = _rng(config, 4)
    result = SuiteResult("equimeasurability")
    for index in range(config.count):
        inst = random_instance(rng, config)
        cm = random_coremap(rng, inst.core, config.max_weight)
        result.record(index, check_equimeasurable(cm, inst.space, inst.f))
    return result


def _minorant_eta(problem: HardyProblem) -> ScalarField:
    """η with u replaced by its greatest core-decreasing minorant on U₀."""
    decomposition = decompose_eta(problem)
    induced = induced_core(problem.cm, problem.space)
    lowered = greatest_minorant(induced.core, induced.space, decomposition.u.restrict(induced.kept)).minorant
    eta = list(problem.eta.values)
    for position, s in enumerate(induced.kept):
        eta[s] = mul(lowered.values[position], problem.space.mu[s]) if problem.space.mu[s] > 0 else eta[s]
    return ScalarField(values=tuple(eta))


def theorem_a_suite(config: VerifyConfig) -> SuiteResult:
    """q ≥ 1: the formula equals the point-mass norm and ignores u → u̲."""
    rng = _rng(config, 5)
    result = SuiteResult("theoremA")
    qs = [Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]
    for index in range(config.count):
        q = qs[index % len(qs)]
        problem = random_problem(rng, config, q, eta_zero_chance=0.1)
        estimate = theoremA_constant(problem)
        norm = exact_norm_p1(problem)
        matches = (estimate.exact == norm) if q == 1 and norm != INF else _close(estimate.value, norm)
        lowered = problem.with_eta(_minorant_eta(problem))
        invariant = theoremA_constant(lowered).value == estimate.value and _close(exact_norm_p1(lowered), norm)
        result.record(index, matches and invariant)
    return result


def reduction_suite(config: VerifyConfig) -> SuiteResult:
    """q < 1: abstract and half-line double sums agree, scaling laws hold; q = 1: reduction keeps the norm."""
    rng = _rng(config, 6)
    result = SuiteResult("reduction")
    qs = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    for index in range(config.count):
        q = qs[index % len(qs)]
        problem = random_problem(rng, config, q)
        estimate = theoremA_constant(problem, config.outer_exponent).value
        reduced = reduce_to_halfline(problem)
        halfline = stepanov_halfline(reduced.nu, reduced.w, q, config.outer_exponent).value

        t = random_fraction(rng, config.max_weight)
        outer = float(config.outer_exponent.value_for(q))
        tau_power = outer / float(1 - q)
        scaled_tau = theoremA_constant(problem.with_coremap(problem.cm.scaled(t)), config.outer_exponent).value
        scaled_u = theoremA_constant(problem.with_eta(problem.eta.scaled(t)), config.outer_exponent).value
        tau_law = _close(scaled_tau, estimate * float(t) ** tau_power, rtol=1e-10)
        u_law = _close(scaled_u, estimate * float(t) ** (-float(q) * tau_power), rtol=1e-10)

        at_one = problem.with_exponents(1, 1)
        reduced_one = reduce_to_halfline(at_one)
        preserved = exact_norm_p1(at_one) == exact_norm_halfline(reduced_one.lam, reduced_one.nu, reduced_one.w, Fraction(1))
        result.record(index, _close(estimate, halfline) and tau_law and u_law and preserved)
    return result


def sandwich_suite(config: VerifyConfig) -> SuiteResult:
    """q < 1: max(lower/estimate, estimate/lower) stays under the configured bound."""
    rng = _rng(config, 7)
    result = SuiteResult("sandwich")
    factors: list[float] = []
    index = 0
    for raw_q in config.sandwich_qs:
        q = Fraction(raw_q)
        for _ in range(config.sandwich_count):
            problem = random_problem(rng, config, q)
            estimate = theoremA_constant(problem, config.outer_exponent).value
            report = maximize_ratio(
                problem,
                restarts=config.ratio_restarts,
                budget=config.ratio_budget,
                seed=int(rng.integers(0, 2**31)),
            )
            lower = report.lower_bound
            if estimate == 0 and lower == 0:
                factor = 1.0
            elif estimate == 0 or lower == 0 or estimate == INF or lower == INF:
                factor = INF
            else:
                factor = max(lower / estimate, estimate / lower)
            factors.append(factor)
            result.record(index, factor < config.sandwich_bound)
            index += 1

    edges = np.array([1.0, 2.0, 4.0, 8.0, 16.0, 32.0, np.inf])
    # ∞ factors land in the last bin
    clipped = np.minimum(np.array(factors, dtype=float), np.finfo(float).max)
    counts, _ = np.histogram(clipped, bins=edges)
    histogram = {f"[{edges[i]:g},{edges[i + 1]:g})": int(c) for i, c in enumerate(counts)}
    result.details = {
        "max_factor": max(factors, default=1.0),
        "histogram": histogram,
    }
    logger.info(f"sandwich factors: {histogram}, max {result.details['max_factor']:.6g}")
    return result


def singular_suite(config: VerifyConfig) -> SuiteResult:
    """A charged, η-null point under a charged ball forces C = ∞ and an unbounded ratio."""
    rng = _rng(config, 8)
    result = SuiteResult("singular")
    qs = [Fraction(1, 2), Fraction(1), Fraction(2)]
    for index in range(config.singular_count):
        problem, target = singular_problem(rng, config, qs[index % len(qs)])
        estimate = theoremA_constant(problem).value
        report = maximize_ratio(problem, restarts=0, budget=config.ratio_budget, seed=config.seed)
        point_mass = ScalarField(values=tuple(Fraction(1 if s == target else 0) for s in range(problem.space.size)))
        targeted = ratio(problem, point_mass)
        result.record(index, estimate == INF and report.lower_bound > 1e6 and targeted > 1e6)
    return result


SUITES: dict[str, Callable[[VerifyConfig], SuiteResult]] = {
    "duality": duality_suite,
    "maximality": maximality_suite,
    "transition": transition_suite,
    "equimeasurability": equimeasurability_suite,
    "theoremA": theorem_a_suite,
    "reduction": reduction_suite,
    "sandwich": sandwich_suite,
    "singular": singular_suite,
}

