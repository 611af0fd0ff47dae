from time import perf_counter
from typing import Any, Iterable

from core.utils.logs import logger

from .configuration import VerifyConfig
from .suites import SUITES, SuiteResult


class UnknownSuiteError(ValueError):
    pass


def _selected(suites: Iterable[str] | None) -> list[str]:
    if suites is None:
        return list(SUITES)
    names = list(suites)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise UnknownSuiteError(f"Unknown suites {unknown}; choose from {list(SUITES)}.")
    return names


def run_verify(config: VerifyConfig | None = None, suites: Iterable[str] | None = None, timing: bool = False) -> dict[str, Any]:
    """Run the property suites and return a summary that is identical for identical seeds.

    Wall-clock times are only included when `timing` is set.
    """
    config = config or VerifyConfig.from_overrides()
    results: dict[str, SuiteResult] = {}
    elapsed: dict[str, float] = {}
    for name in _selected(suites):
        logger.info(f"verify: running {name} (seed {config.seed})")
        started = perf_counter()
        results[name] = SUITES[name](config)
        elapsed[name] = perf_counter() - started
        result = results[name]
        if result.ok:
            logger.info(f"verify: {name} passed {result.passed}")
        else:
            logger.warning(f"verify: {name} failed {result.failed} of {result.passed + result.failed}, first {result.failures}")

    summary: dict[str, Any] = {
        "seed": config.seed,
        "config": config.model_dump(mode="json"),
        "suites": {name: result.to_dict() for name, result in results.items()},
        "passed": all(result.ok for result in results.values()),
    }
    if timing:
        summary["timing"] = {name: round(seconds, 3) for name, seconds in elapsed.items()}
    return summary
