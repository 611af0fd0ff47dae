"""Single entry CLI: minorants, best constants, half-line reductions and the property suites."""

import argparse
import json
import sys
from time import perf_counter
from typing import Any

from pydantic import ValidationError

from core.hardy import (
    HardyProblemError,
    OuterExponent,
    condition_p_le_q,
    condition_q_lt_p,
    reduce_to_halfline,
    theoremA_constant,
)
from core.metric import MetricSpaceError, corollary42, theorem41
from core.minorant import greatest_minorant, variational_value
from core.oracle import exact_norm_p1, lp_variational, maximize_ratio, targeted_ratio_sup
from core.services.verify import UnknownSuiteError, VerifyConfig, run_verify
from core.spaces import CoreSpaceError
from core.utils.logs import logger
from core.utils.rationals import format_rational

from .errors import ProblemFileError
from .problem_file import LoadedProblem, load_problem, serialize_problem
from .report import bound_entry, digest, estimate_entry, format_float, render, sandwich_factor

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILED = 2


def build_parser() -> argparse.ArgumentParser:
    """Build CLI parser for the abstract Hardy toolkit."""
    parser = argparse.ArgumentParser(prog="hardy", description="Abstract Hardy inequalities on finite measure spaces")
    parser.add_argument("--seed", type=int, default=0, help="Seed for the ratio search and the property suites")
    parser.add_argument("--emit", choices=["json", "csv"], default="json", help="Report format")
    parser.add_argument("--timing", action="store_true", help="Add wall-clock seconds to the report")
    parser.add_argument(
        "--outer-exponent",
        choices=[member.value for member in OuterExponent],
        default=OuterExponent.THEOREM_A.value,
        help="Outer power of the q < 1 double sum",
    )
    subparsers = parser.add_subparsers(dest="op", required=True)

    minorant = subparsers.add_parser("minorant", help="Greatest core-decreasing minorant of u with the LP cross-check")
    minorant.add_argument("file", help="Problem file (JSON)")

    constant = subparsers.add_parser("constant", help="Best constant or equivalent quantity, with oracle bounds")
    constant.add_argument("file", help="Problem file (JSON)")
    constant.add_argument("--restarts", type=int, default=None, help="Random starts of the ratio search")
    constant.add_argument("--budget", type=int, default=None, help="Ascent iterations per start")

    reduce = subparsers.add_parser("reduce", help="Half-line data λ, ν and w of a p = 1 problem")
    reduce.add_argument("file", help="Problem file (JSON)")

    verify = subparsers.add_parser("verify", help="Run the randomized property suites")
    verify.add_argument("--count", type=int, default=None, help="Random instances per exact suite")
    verify.add_argument("--size", type=int, default=None, help="Largest number of points per instance")
    verify.add_argument("--sandwich-count", type=int, default=None, help="Random instances per q in the sandwich suite")
    verify.add_argument("--suite", action="append", default=None, help="Run only this suite (repeatable)")

    return parser


def _header(args: argparse.Namespace, loaded: LoadedProblem) -> dict[str, Any]:
    document = loaded.document
    return {
        "command": args.op,
        "file": args.file,
        "digest": digest(serialize_problem(document)),
        "kind": document.kind,
        "p": format_rational(document.p),
        "q": format_rational(document.q),
    }


def cmd_minorant(args: argparse.Namespace) -> dict[str, Any]:
    loaded = load_problem(args.file)
    space = loaded.problem.space
    result = greatest_minorant(loaded.core, space, loaded.u)
    formula = variational_value(loaded.core, space, loaded.f, loaded.u)
    lp = lp_variational(loaded.core, space, loaded.f, loaded.u)
    if lp != formula:
        logger.warning(f"LP optimum {lp} differs from the variational formula {formula}.")
    return {
        **_header(args, loaded),
        "minorant": {
            "source": "greatest_minorant",
            "points": dict(zip(space.points, (format_rational(value) for value in result.minorant.values))),
            "per_layer": [format_rational(value) for value in result.per_layer],
        },
        "variational": bound_entry(formula, "variational_value", "exact"),
        "lp": bound_entry(lp, "lp_variational", "exact"),
        "passed": lp == formula,
    }


def _estimate(loaded: LoadedProblem, outer: OuterExponent) -> tuple[Any, str]:
    problem = loaded.problem
    p, q = problem.p, problem.q
    metric = loaded.metric
    if metric is not None:
        if p == 1:
            return corollary42(metric.metric, metric.omega, metric.v, q, outer), "corollary42"
        return theorem41(metric.metric, metric.omega, metric.v, p, q), "theorem41"
    if p == 1:
        return theoremA_constant(problem, outer), "theoremA_constant"
    if loaded.omega is None or loaded.v is None:
        raise HardyProblemError("p > 1 needs a generic or metric problem file (ω and v per point).")
    if p <= q:
        return condition_p_le_q(problem, loaded.omega, loaded.v), "condition_p_le_q"
    return condition_q_lt_p(problem, loaded.omega, loaded.v), "condition_q_lt_p"


def cmd_constant(args: argparse.Namespace) -> dict[str, Any]:
    loaded = load_problem(args.file)
    problem = loaded.problem
    estimate, source = _estimate(loaded, OuterExponent(args.outer_exponent))
    report = maximize_ratio(problem, restarts=args.restarts, budget=args.budget, seed=args.seed)

    oracles: list[dict[str, Any]] = []
    passed = True
    if problem.p == 1 and problem.q >= 1:
        exact = exact_norm_p1(problem)
        oracles.append(bound_entry(exact, "exact_norm_p1", "exact"))
        if estimate.exact is not None and exact != estimate.exact:
            logger.warning(f"Theorem A value {estimate.exact} differs from the point-mass norm {exact}.")
            passed = False
    oracles.append(
        {
            "source": "maximize_ratio",
            "kind": "lower",
            "value": format_float(report.lower_bound),
            "iterations": report.iterations,
            "converged": report.converged,
        }
    )
    if problem.p > 1 and loaded.omega is not None and loaded.v is not None:
        oracles.append(
            {"source": "targeted_ratio_sup", "kind": "lower", "value": format_float(targeted_ratio_sup(problem, loaded.omega, loaded.v))}
        )

    factor = sandwich_factor(estimate.value, report.lower_bound)
    logger.info(f"{source}: {estimate.value:.17g} ({estimate.kind}), ratio search {report.lower_bound:.17g}, factor {factor:.6g}")
    return {
        **_header(args, loaded),
        "seed": args.seed,
        "outer_exponent": args.outer_exponent,
        "estimate": estimate_entry(estimate, source),
        "oracles": oracles,
        "sandwich": {"source": f"{source}/maximize_ratio", "value": format_float(factor)},
        "passed": passed,
    }


def cmd_reduce(args: argparse.Namespace) -> dict[str, Any]:
    loaded = load_problem(args.file)
    reduced = reduce_to_halfline(loaded.problem)
    return {
        **_header(args, loaded),
        "lambda": [{"x": format_rational(x), "mass": format_rational(m)} for x, m in reduced.lam.atoms],
        "nu": [{"x": format_rational(x), "mass": format_rational(m)} for x, m in reduced.nu.atoms],
        "w": [format_rational(value) for value in reduced.w.values],
        "passed": True,
    }


def cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    overrides = {
        "seed": args.seed,
        "count": args.count,
        "max_points": args.size,
        "sandwich_count": args.sandwich_count,
        "outer_exponent": args.outer_exponent,
    }
    config = VerifyConfig.from_overrides({key: value for key, value in overrides.items() if value is not None})
    return {"command": "verify", **run_verify(config, suites=args.suite)}


COMMANDS = {
    "minorant": cmd_minorant,
    "constant": cmd_constant,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
}


def run_operation(args: argparse.Namespace) -> dict[str, Any]:
    """Execute selected command and return a JSON-serializable report."""
    started = perf_counter()
    result = COMMANDS[args.op](args)
    if args.timing:
        result["elapsed_seconds"] = round(perf_counter() - started, 3)
    return result


def main(argv: list[str] | None = None) -> int:
    """CLI entry."""
    args = build_parser().parse_args(argv)
    try:
        result = run_operation(args)
    except ProblemFileError as exc:
        logger.warning(f"Invalid problem file: {exc} (field {exc.field or '-'})")
        print(json.dumps({"error": str(exc), "field": exc.field}, ensure_ascii=False, indent=2))
        return EXIT_INVALID
    except (ValidationError, CoreSpaceError, HardyProblemError, MetricSpaceError, UnknownSuiteError) as exc:
        logger.warning(f"Invalid input: {exc}")
        print(json.dumps({"error": str(exc), "field": ""}, ensure_ascii=False, indent=2))
        return EXIT_INVALID
    print(render(result, args.emit))
    return EXIT_OK if result.get("passed", True) else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
