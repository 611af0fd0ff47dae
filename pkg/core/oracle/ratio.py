"""Ratio of both sides of a Hardy inequality and searches for its supremum.

ratio                the quotient at one f, in binary64
exact_norm_p1        p = 1, q ≥ 1: the supremum is attained at a point mass
exact_norm_halfline  the same supremum for the reduced half-line problem
maximize_ratio       lower bound for any (p, q): two-point supports with a golden-section
                     split, then multi-start ascent (nonlinear power iteration for p > 1,
                     exponentiated gradient on the mass simplex for p = 1)
targeted_ratio_sup   sup over core sets A of the ratio at f = v^{1−p′} χ_A
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from core.hardy import HardyProblem
from core.hardy.errors import ExponentError
from core.spaces import ScalarField, induced_core
from core.transition import LineField, LineMeasure
from core.utils.logs import logger
from core.utils.rationals import INF, Extended, div, mul, power, to_float

from .configuration import RatioSearchConfig

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0
MAX_STEP = 64.0


@dataclass(frozen=True)
class RatioReport:
    """Best ratio found and its witness; `lower_bound` is ratio(problem, argmax)."""

    lower_bound: float
    argmax: ScalarField
    iterations: int
    converged: bool
    seed: int


@dataclass(frozen=True)
class _Kernel:
    """Dense (Tf)(y) = Σ_s member[y, s] μ_s f_s in binary64."""

    member: np.ndarray
    mu: np.ndarray
    tau: np.ndarray
    eta: np.ndarray
    p: float
    q: float

    @classmethod
    def of(cls, problem: HardyProblem) -> "_Kernel":
        member = np.zeros((problem.cm.size, problem.space.size))
        for y, ball in enumerate(problem.cm.balls):
            member[y, sorted(ball)] = 1.0
        return cls(
            member=member,
            mu=np.array([float(m) for m in problem.space.mu]),
            tau=np.array([float(t) for t in problem.cm.tau]),
            eta=np.array([float(e) for e in problem.eta.values]),
            p=float(problem.p),
            q=float(problem.q),
        )

    @property
    def K(self) -> np.ndarray:
        return self.member * self.mu


def _quotient(lhs: float, rhs: float) -> float:
    if lhs == 0:
        return 0.0
    if rhs == 0 or lhs == INF:
        return INF
    return float(lhs / rhs)


def _ratio_values(kernel: _Kernel, f: np.ndarray) -> float:
    f = np.abs(f)
    with np.errstate(invalid="ignore"):
        tf = np.where(kernel.K > 0, kernel.K * f, 0.0).sum(axis=1)
        weighted = np.where(kernel.eta > 0, kernel.eta * f**kernel.p, 0.0)
    charged = (kernel.tau > 0) & (tf > 0)
    lhs = float(np.sum(kernel.tau[charged] * tf[charged] ** kernel.q)) ** (1.0 / kernel.q)
    rhs = float(np.sum(weighted[f > 0])) ** (1.0 / kernel.p)
    return _quotient(lhs, rhs)


def ratio(problem: HardyProblem, f: ScalarField) -> float:
    """(Σ_y (Σ_{s∈B(y)} f μ)^q τ(y))^{1/q} / (Σ_s f^p η(s))^{1/p} with 0/0 = 0."""
    values = np.array([to_float(v) for v in f.check_size(problem.space.size).values])
    return _ratio_values(_Kernel.of(problem), values)


def exact_norm_p1(problem: HardyProblem) -> Extended:
    """max over charged points of the ratio at a point mass: μ(s) τ({y : s ∈ B(y)})^{1/q} / η(s)."""
    if problem.p != 1 or problem.q < 1:
        raise ExponentError(f"exact_norm_p1 needs p = 1 and q >= 1, got p = {problem.p}, q = {problem.q}.")
    best: Extended = Fraction(0)
    for s in problem.space.positive():
        coverage = problem.cm.coverage(s)
        if coverage == 0:
            continue
        lhs = mul(problem.space.mu[s], power(coverage, 1 / problem.q))
        best = max(best, div(lhs, problem.eta.values[s]))
    return best


def exact_norm_halfline(lam: LineMeasure, nu: LineMeasure, w: LineField, q: Fraction) -> Extended:
    """sup over λ-atoms x of ν([x, ∞))^{1/q} / w̲(x), the best constant of the reduced problem for q ≥ 1."""
    q = Fraction(q)
    if q < 1:
        raise ExponentError(f"exact_norm_halfline needs q >= 1, got {q}.")
    if w.measure != lam:
        raise ValueError("w must live on lam.")
    lowest = w.running_minimum()
    total = nu.total()
    best: Extended = Fraction(0)
    for k, position in enumerate(lam.positions):
        below = sum((m for x, m in nu.atoms if x < position), Fraction(0))
        best = max(best, div(power(total - below, 1 / q), lowest.values[k]))
    return best


def targeted_ratio_sup(problem: HardyProblem, omega: ScalarField, v: ScalarField) -> float:
    """sup over core sets A of ratio(problem, v^{1−p′} χ_A); for τ = ω dμ and η = v dμ every
    term dominates (∫_{U∖A} ω dμ)^{1/q} σ(A)^{1/p′}."""
    exponents = problem.exponents
    if exponents.p <= 1:
        raise ExponentError(f"targeted_ratio_sup needs p > 1, got {exponents.p}.")
    omega.check_size(problem.space.size)
    v = v.check_size(problem.space.size)
    kernel = _Kernel.of(problem)
    induced = induced_core(problem.cm, problem.space)
    density = np.zeros(problem.space.size)
    for s in problem.space.positive():
        density[s] = to_float(power(v.values[s], 1 - exponents.p_prime))
    best = 0.0
    for chain_set in induced.core.chain:
        indicator = np.zeros(problem.space.size)
        indicator[[induced.kept[i] for i in chain_set]] = 1.0
        best = max(best, _ratio_values(kernel, density * indicator))
    return best


class _Search:
    """The ratio restricted to active points (charged, covered, η > 0), RHS-normalized."""

    def __init__(self, kernel: _Kernel, active: np.ndarray):
        rows = (kernel.tau > 0) & (kernel.member[:, active].sum(axis=1) > 0)
        self.member = kernel.member[np.ix_(rows, active)]
        self.K = self.member * kernel.mu[active]
        self.tau = kernel.tau[rows]
        self.mu = kernel.mu[active]
        self.eta = kernel.eta[active]
        self.p = kernel.p
        self.q = kernel.q

    def lhs(self, f: np.ndarray) -> float:
        tf = self.K @ f
        charged = tf > 0
        return float(np.sum(self.tau[charged] * tf[charged] ** self.q)) ** (1.0 / self.q)

    def rhs(self, f: np.ndarray) -> float:
        return float(np.sum(self.eta * f**self.p)) ** (1.0 / self.p)

    def normalize(self, f: np.ndarray) -> np.ndarray:
        return f / self.rhs(f)

    def pull_back(self, f: np.ndarray) -> np.ndarray:
        """Kᵀ(τ (Kf)^{q−1}), the gradient of LHS^q / q."""
        tf = self.K @ f
        weights = np.zeros_like(tf)
        charged = tf > 0
        weights[charged] = self.tau[charged] * tf[charged] ** (self.q - 1.0)
        return self.K.T @ weights

    def singles(self) -> np.ndarray:
        return (self.tau @ self.K**self.q) ** (1.0 / self.q) / self.eta ** (1.0 / self.p)

    def best_pair(self, candidates: np.ndarray, iterations: int) -> tuple[float, np.ndarray | None]:
        """Golden-section search of LHS^q over the RHS-normalized split θ of each pair."""
        if candidates.size < 2:
            return 0.0, None
        members = self.member[:, candidates]
        shared = members.T @ (members * self.tau[:, None])
        s_idx, t_idx = np.triu_indices(candidates.size, k=1)
        s, t = candidates[s_idx], candidates[t_idx]
        both = shared[s_idx, t_idx]
        s_only = shared[s_idx, s_idx] - both
        t_only = shared[t_idx, t_idx] - both
        mu_s, mu_t = self.mu[s], self.mu[t]
        eta_s, eta_t = self.eta[s], self.eta[t]

        def objective(theta: np.ndarray) -> np.ndarray:
            a = mu_s * (theta / eta_s) ** (1.0 / self.p)
            b = mu_t * ((1.0 - theta) / eta_t) ** (1.0 / self.p)
            return both * (a + b) ** self.q + s_only * a**self.q + t_only * b**self.q

        lo, hi = np.zeros(s.size), np.ones(s.size)
        x1, x2 = hi - GOLDEN * (hi - lo), lo + GOLDEN * (hi - lo)
        f1, f2 = objective(x1), objective(x2)
        for _ in range(iterations):
            left = f1 >= f2
            hi = np.where(left, x2, hi)
            lo = np.where(left, lo, x1)
            x1_next = np.where(left, hi - GOLDEN * (hi - lo), x2)
            x2_next = np.where(left, x1, lo + GOLDEN * (hi - lo))
            f1, f2 = np.where(left, objective(x1_next), f2), np.where(left, f1, objective(x2_next))
            x1, x2 = x1_next, x2_next
        theta = (lo + hi) / 2.0
        values = objective(theta)
        k = int(np.argmax(values))
        f = np.zeros(self.mu.size)
        f[s[k]] = (theta[k] / eta_s[k]) ** (1.0 / self.p)
        f[t[k]] = ((1.0 - theta[k]) / eta_t[k]) ** (1.0 / self.p)
        return float(values[k]) ** (1.0 / self.q), f

    def power_iteration(self, f: np.ndarray, budget: int, tolerance: float) -> tuple[np.ndarray, float, int, bool]:
        """f ← (Kᵀ(τ (Kf)^{q−1}) / η)^{1/(p−1)}, RHS-normalized, while the ratio improves."""
        f = self.normalize(f)
        value = self.lhs(f)
        for iteration in range(1, budget + 1):
            direction = self.pull_back(f) / self.eta
            candidate = self.normalize((direction / direction.max()) ** (1.0 / (self.p - 1.0)))
            candidate_value = self.lhs(candidate)
            if candidate_value <= value * (1.0 + tolerance):
                if candidate_value > value:
                    f, value = candidate, candidate_value
                return f, value, iteration, True
            f, value = candidate, candidate_value
        return f, value, budget, False

    def exponentiated_gradient(self, f: np.ndarray, budget: int, tolerance: float) -> tuple[np.ndarray, float, int, bool]:
        """Multiplicative ascent on masses m = η f over the simplex (p = 1)."""
        masses = self.eta * f
        masses = masses / masses.sum()
        value = self.lhs(masses / self.eta)
        step = 1.0
        for iteration in range(1, budget + 1):
            grad = self.pull_back(masses / self.eta) / self.eta
            scale = grad.max()
            if scale <= 0:
                return masses / self.eta, value, iteration, True
            candidate = masses * np.exp(step * (grad / scale - 1.0))
            candidate = candidate / candidate.sum()
            candidate_value = self.lhs(candidate / self.eta)
            if candidate_value > value:
                improvement = candidate_value - value
                masses, value = candidate, candidate_value
                step = min(step * 1.5, MAX_STEP)
                if improvement <= tolerance * value:
                    return masses / self.eta, value, iteration, True
            else:
                step /= 2.0
                if step < 1e-12:
                    return masses / self.eta, value, iteration, True
        return masses / self.eta, value, budget, False


def maximize_ratio(
    problem: HardyProblem,
    restarts: int | None = None,
    budget: int | None = None,
    seed: int | None = None,
    config: RatioSearchConfig | None = None,
) -> RatioReport:
    overrides = {key: value for key, value in {"restarts": restarts, "budget": budget, "seed": seed}.items() if value is not None}
    config = (config or RatioSearchConfig.from_overrides()).model_copy(update=overrides)
    kernel = _Kernel.of(problem)
    n = problem.space.size
    coverage = kernel.member.T @ kernel.tau
    charged = (kernel.mu > 0) & (coverage > 0)

    singular = np.flatnonzero(charged & (kernel.eta == 0))
    if singular.size:
        f = np.zeros(n)
        f[singular[0]] = 1.0
        logger.debug(f"maximize_ratio: point {int(singular[0])} is covered with eta = 0, ratio is infinite.")
        return _report(problem, kernel, f, iterations=0, converged=True, seed=config.seed)

    active = np.flatnonzero(charged)
    if not active.size:
        return _report(problem, kernel, np.zeros(n), iterations=0, converged=True, seed=config.seed)

    search = _Search(kernel, active)
    singles = search.singles()
    best_k = int(np.argmax(singles))
    best_value = float(singles[best_k])
    best_f = np.zeros(active.size)
    best_f[best_k] = search.eta[best_k] ** (-1.0 / search.p)

    candidates = np.argsort(-singles, kind="stable")[: config.support_pair_limit]
    pair_value, pair_f = search.best_pair(candidates, config.golden_iterations)
    if pair_f is not None and pair_value > best_value:
        best_value, best_f = pair_value, pair_f
    logger.debug(f"maximize_ratio: support<=2 phase best {best_value:.17g} over {active.size} points.")

    rng = np.random.default_rng(config.seed)
    starts = [best_f + 0.1 * best_f.max() / active.size] + [rng.random(active.size) + 1e-3 for _ in range(config.restarts)]
    iterations = 0
    converged = True
    for start in starts:
        if search.p > 1:
            f, value, used, done = search.power_iteration(start, config.budget, config.tolerance)
        else:
            f, value, used, done = search.exponentiated_gradient(start, config.budget, config.tolerance)
        iterations += used
        converged = converged and done
        if value > best_value:
            best_value, best_f = value, search.normalize(f)
    logger.debug(f"maximize_ratio: {len(starts)} starts, {iterations} iterations, best {best_value:.17g}.")

    full = np.zeros(n)
    full[active] = best_f
    return _report(problem, kernel, full, iterations=iterations, converged=converged, seed=config.seed)


def _report(problem: HardyProblem, kernel: _Kernel, f: np.ndarray, iterations: int, converged: bool, seed: int) -> RatioReport:
    argmax = ScalarField(values=tuple(Fraction(float(value)) for value in f))
    values = np.array([float(value) for value in argmax.values])
    return RatioReport(
        lower_bound=_ratio_values(kernel, values),
        argmax=argmax,
        iterations=iterations,
        converged=converged,
        seed=seed,
    )
