import numpy as np
import pytest

from core.hardy import OuterExponent, decompose_eta
from core.services.verify import (
    SUITES,
    UnknownSuiteError,
    VerifyConfig,
    random_instance,
    random_problem,
    run_verify,
    singular_problem,
)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_on_small_instances(name, small_config):
    result = SUITES[name](small_config)
    assert result.ok, result.failures
    assert result.passed > 0


def test_reduction_suite_with_stepanov_exponent(small_config):
    config = small_config.model_copy(update={"outer_exponent": OuterExponent.STEPANOV})
    assert SUITES["reduction"](config).ok


def test_single_point_spaces(small_config):
    config = small_config.model_copy(update={"max_points": 1, "max_core_sets": 1, "count": 20})
    for name in ("duality", "maximality", "transition", "equimeasurability", "theoremA", "singular"):
        assert SUITES[name](config).ok, name


def test_sandwich_histogram_counts_every_instance(small_config):
    result = SUITES["sandwich"](small_config)
    assert sum(result.details["histogram"].values()) == small_config.sandwich_count * len(small_config.sandwich_qs)


def test_reports_are_deterministic(small_config):
    first = run_verify(small_config, suites=["duality", "reduction", "sandwich"])
    second = run_verify(small_config, suites=["duality", "reduction", "sandwich"])
    assert first == second
    assert first["seed"] == small_config.seed
    assert first["passed"]
    assert "timing" not in first


def test_unknown_suite(small_config):
    with pytest.raises(UnknownSuiteError):
        run_verify(small_config, suites=["nope"])


def test_instances(rng, small_config):
    inst = random_instance(rng, small_config)
    assert 1 <= inst.space.size <= small_config.max_points
    assert inst.core.depth <= small_config.max_core_sets
    assert len(inst.f) == len(inst.u) == len(inst.g) == inst.space.size

    problem, target = singular_problem(rng, small_config, q=1)
    assert problem.space.mu[target] > 0
    assert problem.eta.values[target] == 0
    assert decompose_eta(problem).infinite

    plain = random_problem(np.random.default_rng(1), small_config, q=2)
    assert all(value > 0 for value in plain.eta.values)


def test_config_reads_environment(monkeypatch):
    monkeypatch.setenv("HARDY_COUNT", "7")
    monkeypatch.setenv("HARDY_SANDWICH_QS", "1/3, 2/3")
    config = VerifyConfig.from_overrides({"count": 99, "seed": 5})
    assert config.count == 7
    assert config.seed == 5
    assert config.sandwich_qs == ["1/3", "2/3"]


@pytest.mark.slow
def test_acceptance_run():
    summary = run_verify(VerifyConfig(seed=0))
    assert summary["passed"], {name: suite["failures"] for name, suite in summary["suites"].items() if suite["failed"]}
