"""From an abstract p = 1 problem to a weighted inequality on the half line.

decompose_eta   dη = u dμ on the μ-charged points, plus the singular check
reduce_to_halfline   (λ, ν, w = R(u̲)) with ν the push-forward of τ under μ∘B
"""

from dataclasses import dataclass
from fractions import Fraction

from core.minorant import greatest_minorant
from core.spaces import ScalarField, induced_core
from core.transition import LineField, LineMeasure, R_map, induced_line_measure, pushforward_measure
from core.utils.logs import logger
from core.utils.rationals import INF, Extended

from .errors import ExponentError
from .problem import HardyProblem


@dataclass(frozen=True)
class EtaDecomposition:
    """u = dη/dμ on μ-charged points (+∞ on μ-null points).

    `infinite` marks a μ-charged, η-null point reached by a ball of positive
    τ-measure, which forces C = ∞. `dropped` lists μ-null points carrying η-mass.
    """

    u: ScalarField
    infinite: bool
    dropped: frozenset[int]


@dataclass(frozen=True)
class HalfLineProblem:
    lam: LineMeasure
    nu: LineMeasure
    w: LineField


def decompose_eta(problem: HardyProblem) -> EtaDecomposition:
    space, eta, cm = problem.space, problem.eta, problem.cm
    u: list[Extended] = []
    dropped: set[int] = set()
    infinite = False
    for s in range(space.size):
        mu_s, eta_s = space.mu[s], eta.values[s]
        if mu_s > 0:
            u.append(Fraction(eta_s) / mu_s)
            if eta_s == 0 and cm.coverage(s) > 0:
                infinite = True
        else:
            u.append(INF)
            if eta_s > 0:
                dropped.add(s)
    if infinite:
        logger.debug("decompose_eta: singular part reaches a charged ball, best constant is infinite.")
    return EtaDecomposition(u=ScalarField(values=tuple(u)), infinite=infinite, dropped=frozenset(dropped))


def reduce_to_halfline(problem: HardyProblem) -> HalfLineProblem:
    if problem.p != 1:
        raise ExponentError(f"reduce_to_halfline needs p = 1, got {problem.p}.")
    decomposition = decompose_eta(problem)
    induced = induced_core(problem.cm, problem.space)
    u = decomposition.u.restrict(induced.kept)
    minorant = greatest_minorant(induced.core, induced.space, u).minorant
    return HalfLineProblem(
        lam=induced_line_measure(induced.core, induced.space),
        nu=pushforward_measure(induced.coremap, induced.space),
        w=R_map(induced.core, induced.space, minorant),
    )
