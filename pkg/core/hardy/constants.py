"""Best constants for p = 1.

theoremA_constant works on the abstract data (U, μ, η, Y, τ, B); the q ∈ (0, 1)
branch sums over items ordered by φ(y) = μ(B(y)). stepanov_halfline evaluates
the same double sum on the reduced half-line data (ν, w) and halfline_ratio is
the quotient of the reduced inequality.
"""

from fractions import Fraction

from core.minorant import greatest_minorant
from core.spaces import induced_core, layers
from core.transition import LineField, LineMeasure, line_integral
from core.utils.logs import logger
from core.utils.rationals import INF, Extended, ext_sum, mul, power, reciprocal, to_float

from .errors import ExponentError
from .problem import ConstantEstimate, HardyProblem, OuterExponent
from .reduction import decompose_eta


def _double_sum(pairs: list[tuple[Extended, Fraction]], q: Fraction, outer: OuterExponent) -> Extended:
    """(Σ_z (Σ_{x ≤ z} a(x) m(x))^{q/(1−q)} m(z))^E over pairs (a(z), m(z)) sorted by position.

    Pairs sharing a position must be grouped by the caller.
    """
    inner: Extended = Fraction(0)
    total: Extended = Fraction(0)
    inner_exponent = q / (1 - q)
    for weight, mass in pairs:
        inner = ext_sum([inner, mul(weight, mass)])
        total = ext_sum([total, mul(power(inner, inner_exponent), mass)])
    return power(total, outer.value_for(q))


def theoremA_constant(problem: HardyProblem, outer: OuterExponent = OuterExponent.THEOREM_A) -> ConstantEstimate:
    if problem.p != 1:
        raise ExponentError(f"theoremA_constant needs p = 1, got p = {problem.p}.")
    q = problem.q
    kind = "exact" if q >= 1 else "equivalent"
    decomposition = decompose_eta(problem)
    if decomposition.infinite:
        return ConstantEstimate.of(INF, kind, "theoremA: eta vanishes on a charged point under a ball, C = inf")

    induced = induced_core(problem.cm, problem.space)
    space, cm, core = induced.space, induced.coremap, induced.core
    u = decomposition.u.restrict(induced.kept)
    result = greatest_minorant(core, space, u)

    if q >= 1:
        best: Extended = Fraction(0)
        for s in space.positive():
            term = mul(reciprocal(result.minorant.values[s]), power(cm.coverage(s), 1 / q))
            best = max(best, term)
        logger.debug(f"theoremA_constant: q={q} sup over {len(space.positive())} charged points.")
        return ConstantEstimate.of(best, kind, "theoremA q>=1: sup_s coverage(s)^(1/q) / u_(s)")

    # 1/u̲ on the λ-atom at φ(y): the last charged layer at or below B(y)
    layer_mass = [space.measure(layer) for layer in layers(core)]
    atom_value: list[Extended] = []
    current: Extended = Fraction(0)
    for mass, value in zip(layer_mass, result.per_layer):
        if mass > 0:
            current = reciprocal(value)
        atom_value.append(current)

    # items at one position share the same 1/u̲ value
    grouped: dict[Fraction, tuple[Extended, Fraction]] = {}
    for y, (weight, position) in enumerate(zip(cm.tau, cm.ball_measures(space))):
        rank = cm.ball_rank(core, y)
        value = atom_value[rank - 1] if rank else Fraction(0)
        grouped[position] = (value, grouped.get(position, (value, Fraction(0)))[1] + weight)
    pairs = [(value, mass) for _, (value, mass) in sorted(grouped.items()) if mass > 0]
    value = _double_sum(pairs, q, outer)
    logger.debug(f"theoremA_constant: q={q} double sum over {len(pairs)} ball measures, outer={outer.value}.")
    return ConstantEstimate.of(value, kind, f"theoremA q<1: double sum, outer exponent {outer.value}")


def stepanov_halfline(
    nu: LineMeasure,
    w: LineField,
    q: Fraction,
    outer: OuterExponent = OuterExponent.THEOREM_A,
) -> ConstantEstimate:
    """(Σ_z (Σ_{x ≤ z} ν({x}) / w̲(x))^{q/(1−q)} ν({z}))^E with w̲ the running minimum of w."""
    q = Fraction(q)
    if not 0 < q < 1:
        raise ExponentError(f"stepanov_halfline needs 0 < q < 1, got {q}.")
    pairs = [(reciprocal(w.minorant_at(position)), mass) for position, mass in nu.atoms]
    value = _double_sum(pairs, q, outer)
    return ConstantEstimate.of(value, "equivalent", f"stepanov half line: double sum, outer exponent {outer.value}")


def halfline_ratio(lam: LineMeasure, nu: LineMeasure, w: LineField, phi: LineField, q: Fraction) -> float:
    """(∫ (∫_{[0,x]} φ dλ)^q dν(x))^{1/q} / ∫ φ w dλ, with 0/0 = 0."""
    if phi.measure != lam or w.measure != lam:
        raise ValueError("phi and w must live on lam.")
    q = Fraction(q)
    lhs = ext_sum(mul(power(line_integral(phi, upto=x), q), m) for x, m in nu.atoms)
    lhs = power(lhs, 1 / q)
    rhs = line_integral(phi.times(w))
    if lhs == 0:
        return 0.0
    if rhs == 0:
        return INF
    return to_float(lhs) / to_float(rhs)
