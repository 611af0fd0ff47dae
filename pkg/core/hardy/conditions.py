"""Muckenhoupt-type conditions for p > 1 over the sets of a core.

With σ = v^{1−p′} μ, every core set A contributes the tail ∫_{U∖A} ω dμ and the
ball mass σ(A). The *_halfline variants evaluate the same functionals in the
reduced coordinates x = σ(A) with numpy and serve as an independent check.
"""

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from fractions import Fraction

import numpy as np

from core.spaces import ScalarField, induced_core, layers
from core.utils.logs import logger
from core.utils.rationals import Extended, ext_sum, mul, power, to_float

from .errors import ExponentError
from .problem import ConstantEstimate, Exponents, HardyProblem


class Regime(StrEnum):
    LOW = "0<q<1<p"
    HIGH = "1<q<p"


def _layer_sums(problem: HardyProblem, omega: ScalarField, v: ScalarField, p_prime: Fraction):
    """Per-layer ∫ ω dμ and σ mass over the induced core, in chain order."""
    induced = induced_core(problem.cm, problem.space)
    space = induced.space
    omega = omega.check_size(problem.space.size).restrict(induced.kept)
    v = v.check_size(problem.space.size).restrict(induced.kept)
    omega_mass: list[Extended] = []
    sigma_mass: list[Extended] = []
    for layer in layers(induced.core):
        omega_mass.append(ext_sum(mul(omega.values[s], space.mu[s]) for s in layer))
        sigma_mass.append(ext_sum(mul(power(v.values[s], 1 - p_prime), space.mu[s]) for s in layer))
    return omega_mass, sigma_mass


def _tails_and_balls(omega_mass: list[Extended], sigma_mass: list[Extended]):
    """tail_i = Σ_{j > i} ω-mass, ball_i = Σ_{j ≤ i} σ-mass."""
    balls: list[Extended] = []
    running: Extended = Fraction(0)
    for mass in sigma_mass:
        running = ext_sum([running, mass])
        balls.append(running)
    tails: list[Extended] = []
    running = Fraction(0)
    for mass in reversed(omega_mass):
        tails.append(running)
        running = ext_sum([running, mass])
    return tails[::-1], balls


def _require_p_gt_1(exponents: Exponents) -> None:
    if exponents.p <= 1:
        raise ExponentError(f"p > 1 conditions need p > 1, got p = {exponents.p}.")


def _regime_for(exponents: Exponents, regime: Regime | str | None) -> Regime:
    if exponents.q >= exponents.p or exponents.q == 1:
        raise ExponentError(f"q < p with q != 1 required, got p = {exponents.p}, q = {exponents.q}.")
    detected = Regime.LOW if exponents.q < 1 else Regime.HIGH
    if regime is not None and Regime(regime) is not detected:
        raise ExponentError(f"Regime {regime} does not match p = {exponents.p}, q = {exponents.q}.")
    return detected


def condition_p_le_q(problem: HardyProblem, omega: ScalarField, v: ScalarField) -> ConstantEstimate:
    """sup over core sets A of (∫_{U∖A} ω dμ)^{1/q} σ(A)^{1/p′}.

    Every chain set counts, A_1 included. On a ball core A_1 is the anchor ball
    B_{a,0}; with μ(a) > 0 its term can carry the whole supremum.
    """
    exponents = problem.exponents
    _require_p_gt_1(exponents)
    if exponents.q < exponents.p:
        raise ExponentError(f"condition_p_le_q needs p <= q, got p = {exponents.p}, q = {exponents.q}.")
    omega_mass, sigma_mass = _layer_sums(problem, omega, v, exponents.p_prime)
    tails, balls = _tails_and_balls(omega_mass, sigma_mass)
    best: Extended = Fraction(0)
    for tail, ball in zip(tails, balls):
        best = max(best, mul(power(tail, 1 / exponents.q), power(ball, 1 / exponents.p_prime)))
    logger.debug(f"condition_p_le_q: p={exponents.p} q={exponents.q} over {len(tails)} core sets.")
    return ConstantEstimate.of(best, "equivalent", "p<=q: sup_A tail(A)^(1/q) sigma(A)^(1/p')")


def condition_q_lt_p(
    problem: HardyProblem,
    omega: ScalarField,
    v: ScalarField,
    regime: Regime | str | None = None,
) -> ConstantEstimate:
    """Σ_s tail^{r/p} σ(Ball(s))^{r/p′} ω(s) μ(s) for q < 1 < p, and
    Σ_s tail^{r/q} σ(Ball(s))^{r/q′} v^{1−p′}(s) μ(s) for 1 < q < p.

    Ball(s) is the smallest core set containing s. No outer power is taken.
    """
    exponents = problem.exponents
    _require_p_gt_1(exponents)
    regime = _regime_for(exponents, regime)
    r = exponents.r
    omega_mass, sigma_mass = _layer_sums(problem, omega, v, exponents.p_prime)
    tails, balls = _tails_and_balls(omega_mass, sigma_mass)
    if regime is Regime.LOW:
        a, b, weights = r / exponents.p, r / exponents.p_prime, omega_mass
    else:
        a, b, weights = r / exponents.q, r / exponents.q_prime, sigma_mass
    terms = [mul(mul(power(tail, a), power(ball, b)), weight) for tail, ball, weight in zip(tails, balls, weights)]
    value = ext_sum(terms)
    logger.debug(f"condition_q_lt_p: regime {regime.value}, r={r}, {len(terms)} layers.")
    return ConstantEstimate.of(value, "equivalent", f"q<p ({regime.value}): integral condition with r={r}")


def _halfline_arrays(problem: HardyProblem, omega: ScalarField, v: ScalarField, p_prime: Fraction):
    """Positions x_i = σ(A_i), densities dω/dσ and σ-masses of the charged layers."""
    induced = induced_core(problem.cm, problem.space)
    space, core = induced.space, induced.core
    kept = list(induced.kept)
    mu = np.array([to_float(m) for m in space.mu], dtype=float)
    omega_values = np.array([to_float(omega.values[s]) for s in kept], dtype=float)
    v_values = np.array([to_float(v.values[s]) for s in kept], dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        sigma = np.where(mu > 0, v_values ** (1.0 - float(p_prime)) * mu, 0.0)
    omega_mu = np.where(mu > 0, omega_values * mu, 0.0)

    layer_of = np.zeros(space.size, dtype=int)
    for i, layer in enumerate(layers(core)):
        layer_of[list(layer)] = i
    sigma_layer = np.zeros(core.depth)
    omega_layer = np.zeros(core.depth)
    np.add.at(sigma_layer, layer_of, sigma)
    np.add.at(omega_layer, layer_of, omega_mu)

    charged = sigma_layer > 0
    masses = sigma_layer[charged]
    density = omega_layer[charged] / masses
    positions = np.cumsum(masses)
    # tail over the open ray (x_i, ∞)
    weighted = density * masses
    tails = np.concatenate([np.cumsum(weighted[::-1])[::-1][1:], [0.0]]) if len(masses) else np.zeros(0)
    return positions, density, masses, tails


def condition_p_le_q_halfline(problem: HardyProblem, omega: ScalarField, v: ScalarField) -> float:
    exponents = problem.exponents
    _require_p_gt_1(exponents)
    positions, _, _, tails = _halfline_arrays(problem, omega, v, exponents.p_prime)
    if not len(positions):
        return 0.0
    values = tails ** (1.0 / float(exponents.q)) * positions ** (1.0 / float(exponents.p_prime))
    return float(np.max(values))


def condition_q_lt_p_halfline(
    problem: HardyProblem,
    omega: ScalarField,
    v: ScalarField,
    regime: Regime | str | None = None,
) -> float:
    exponents = problem.exponents
    _require_p_gt_1(exponents)
    regime = _regime_for(exponents, regime)
    positions, density, masses, tails = _halfline_arrays(problem, omega, v, exponents.p_prime)
    r = float(exponents.r)
    if regime is Regime.LOW:
        terms = tails ** (r / float(exponents.p)) * positions ** (r / float(exponents.p_prime)) * density * masses
    else:
        terms = tails ** (r / float(exponents.q)) * positions ** (r / float(exponents.q_prime)) * masses
    return float(np.sum(terms))
