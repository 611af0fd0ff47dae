"""Exact-rational simplex for max cᵀy, Ay ≤ b, y ≥ 0 with b ≥ 0.

The slack basis is feasible, so no first phase is needed. Pivots follow Bland's
rule (smallest variable index enters, smallest basic index breaks ratio ties),
which rules out cycling.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from core.minorant import variational_value
from core.spaces import MeasureSpace, OrderedCore, ScalarField
from core.utils.logs import logger
from core.utils.rationals import INF, Extended, to_fraction


@dataclass(frozen=True)
class LPResult:
    """Optimum value, primal y, and the dual solution read off the slack columns."""

    status: Literal["optimal", "unbounded"]
    value: Extended
    solution: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]


class SimplexTableau:
    """Dictionary form: basic_i + Σ_j A[i][j]·x_j = b[i], objective = value + Σ_j c[j]·x_j."""

    def __init__(self, A: Sequence[Sequence[Fraction]], b: Sequence[Fraction], c: Sequence[Fraction]):
        self.m = len(b)
        self.n = len(c)
        self.A = [[to_fraction(a) for a in row] for row in A]
        self.b = [to_fraction(v) for v in b]
        self.c = [to_fraction(v) for v in c]
        self.value = Fraction(0)
        # variables 0..n-1 are structural, n..n+m-1 are slacks
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        self.value += delta * self.b[i]
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        for l in range(self.n):
            self.A[i][l] = 1 / piv if l == j else self.A[i][l] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k != i:
                f = self.A[k][j]
                if f == 0:
                    continue
                for l in range(self.n):
                    self.A[k][l] = -f / piv if l == j else self.A[k][l] - f * self.A[i][l]
                self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self) -> str:
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return "optimal"
        try:
            _, _, i = min((self.b[i] / self.A[i][j], self.b_vars[i], i) for i in range(self.m) if self.A[i][j] > 0)
        except ValueError:
            return "unbounded"
        self.pivot(i, j)
        return "go_on"

    def bland_primal(self) -> str:
        while True:
            status = self.bland_primal_step()
            if status in ("optimal", "unbounded"):
                return status

    def primal(self) -> tuple[Fraction, ...]:
        y = [Fraction(0)] * self.n
        for i, var in enumerate(self.b_vars):
            if var < self.n:
                y[var] = self.b[i]
        return tuple(y)

    def dual(self) -> tuple[Fraction, ...]:
        """Shadow price of every constraint row (minus the reduced cost of its slack)."""
        prices = [Fraction(0)] * self.m
        for j, var in enumerate(self.nb_vars):
            if var >= self.n:
                prices[var - self.n] = -self.c[j]
        return tuple(prices)


def solve_max_lp(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction], c: Sequence[Fraction]) -> LPResult:
    """max cᵀy subject to Ay ≤ b, y ≥ 0, for b ≥ 0."""
    if any(to_fraction(v) < 0 for v in b):
        raise ValueError("solve_max_lp needs b >= 0 so that the slack basis is feasible.")
    if any(len(row) != len(c) for row in A) or len(A) != len(b):
        raise ValueError(f"Shape mismatch: A is {len(A)} rows, b has {len(b)}, c has {len(c)}.")
    tableau = SimplexTableau(A, b, c)
    status = tableau.bland_primal()
    logger.debug(f"solve_max_lp: {status} after {tableau.pivots} pivots ({len(b)}x{len(c)}).")
    if status == "unbounded":
        return LPResult(status=status, value=INF, solution=tableau.primal(), dual=tableau.dual())
    return LPResult(status=status, value=tableau.value, solution=tableau.primal(), dual=tableau.dual())


def lp_variational(core: OrderedCore, space: MeasureSpace, f: ScalarField, u: ScalarField) -> Extended:
    """min Σ g u μ subject to ∫_{A_i} g dμ ≥ ∫_{A_i} f dμ for every core set, g ≥ 0.

    Solved through its dual in the masses m_s = g_s μ_s of the charged points:
    max Σ_i F_i y_i subject to Σ_{i : s ∈ A_i} y_i ≤ u_s, y ≥ 0.
    Points with u = +∞ carry no dual row.
    """
    f = f.check_size(space.size)
    u = u.check_size(space.size).abs()
    F = [space.integral(f, chain_set) for chain_set in core.chain]
    if any(value == INF for value in F):
        return INF
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for s in space.positive():
        if u.values[s] == INF:
            continue
        rows.append([Fraction(1) if s in chain_set else Fraction(0) for chain_set in core.chain])
        rhs.append(u.values[s])
    return solve_max_lp(rows, rhs, F).value


def lp_witness(core: OrderedCore, space: MeasureSpace, f: ScalarField, u: ScalarField) -> ScalarField:
    """An optimal g of the minimization read from the dual prices (zero on μ-null points)."""
    f = f.check_size(space.size)
    u = u.check_size(space.size).abs()
    F = [space.integral(f, chain_set) for chain_set in core.chain]
    charged = [s for s in space.positive() if u.values[s] != INF]
    rows = [[Fraction(1) if s in chain_set else Fraction(0) for chain_set in core.chain] for s in charged]
    result = solve_max_lp(rows, [u.values[s] for s in charged], F)
    g = [Fraction(0)] * space.size
    for s, mass in zip(charged, result.dual):
        g[s] = mass / space.mu[s]
    return ScalarField(values=tuple(g))


def check_duality(core: OrderedCore, space: MeasureSpace, f: ScalarField, u: ScalarField) -> bool:
    """lp_variational equals the minorant formula ∫ f u̲ dμ as exact rationals."""
    lp = lp_variational(core, space, f, u)
    formula = variational_value(core, space, f, u)
    if lp != formula:
        logger.warning(f"Duality mismatch: LP {lp} vs formula {formula}.")
    return lp == formula
