import json
import math
from fractions import Fraction

import pytest

from core.cli import ProblemFileError, parse_problem, serialize_problem
from core.cli.hardy_tool import main
from core.cli.problem_file import to_problem

THREE_POINT = {
    "kind": "generic",
    "points": ["a", "b", "c"],
    "mu": ["1", "1", "1"],
    "core": [[0], [0, 1], [0, 1, 2]],
    "u": ["5", "2", "3"],
    "p": "1",
    "q": "1",
}


def write(tmp_path, document, name="problem.json"):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def unit(**changes):
    return {**THREE_POINT, "u": ["1", "1", "1"], **changes}


def test_minorant_command(tmp_path, capsys):
    code, out = run(capsys, "minorant", write(tmp_path, THREE_POINT))
    report = json.loads(out)
    assert code == 0
    assert report["minorant"]["points"] == {"a": "5/1", "b": "2/1", "c": "2/1"}
    assert report["variational"] == {"source": "variational_value", "kind": "exact", "value": "9/1", "exact": "9/1"}
    assert report["lp"]["value"] == "9/1"
    assert report["digest"].startswith("sha256:")


def test_minorant_of_constant_u(tmp_path, capsys):
    _, out = run(capsys, "minorant", write(tmp_path, unit(u=["4", "4", "4"])))
    assert json.loads(out)["minorant"]["per_layer"] == ["4/1", "4/1", "4/1"]


def test_constant_exact_branch(tmp_path, capsys):
    code, out = run(capsys, "constant", write(tmp_path, unit()))
    report = json.loads(out)
    assert code == 0
    assert report["estimate"]["source"] == "theoremA_constant"
    assert report["estimate"]["kind"] == "exact"
    assert report["estimate"]["exact"] == "3/1"
    assert report["oracles"][0] == {"source": "exact_norm_p1", "kind": "exact", "value": "3/1", "exact": "3/1"}
    assert float(report["oracles"][1]["value"]) == pytest.approx(3.0, rel=1e-9)


def test_constant_below_one(tmp_path, capsys):
    code, out = run(capsys, "constant", write(tmp_path, unit(q="1/2")))
    report = json.loads(out)
    assert code == 0
    assert report["estimate"]["kind"] == "equivalent"
    assert report["estimate"]["exact"] == "6/1"
    assert float(report["sandwich"]["value"]) == pytest.approx(1.5, rel=1e-9)


def test_constant_stepanov_exponent(tmp_path, capsys):
    _, out = run(capsys, "--outer-exponent", "stepanov", "constant", write(tmp_path, unit(q="1/2")))
    assert json.loads(out)["estimate"]["exact"] == "36/1"


def test_constant_for_metric_file(tmp_path, capsys):
    document = {
        "kind": "metric",
        "points": ["x0", "x1", "x2"],
        "mu": ["1", "1", "1"],
        "metric": {"coordinates": ["0", "1", "2"], "anchor": 0, "omega": ["1", "1", "1"], "v": ["1", "1", "1"]},
        "p": "2",
        "q": "2",
    }
    code, out = run(capsys, "constant", write(tmp_path, document))
    report = json.loads(out)
    assert code == 0
    assert report["estimate"]["source"] == "theorem41"
    assert float(report["estimate"]["value"]) == pytest.approx(math.sqrt(2), rel=1e-12)
    assert [oracle["source"] for oracle in report["oracles"]] == ["maximize_ratio", "targeted_ratio_sup"]


def test_reduce_command(tmp_path, capsys):
    code, out = run(capsys, "reduce", write(tmp_path, THREE_POINT))
    report = json.loads(out)
    assert code == 0
    assert report["lambda"] == [{"x": f"{i}/1", "mass": "1/1"} for i in (1, 2, 3)]
    assert report["nu"] == report["lambda"]
    assert report["w"] == ["5/1", "2/1", "2/1"]


def test_csv_output(tmp_path, capsys):
    _, out = run(capsys, "--emit", "csv", "minorant", write(tmp_path, THREE_POINT))
    lines = out.splitlines()
    assert lines[0] == "field,value"
    assert "minorant.points.b,2/1" in lines


def test_invalid_rational_names_the_field(tmp_path, capsys):
    code, out = run(capsys, "minorant", write(tmp_path, {**THREE_POINT, "mu": ["1", "1", "1/0"]}))
    assert code == 1
    assert json.loads(out)["field"] == "mu.2"


def test_weight_is_required(tmp_path, capsys):
    document = {key: value for key, value in THREE_POINT.items() if key != "u"}
    code, _ = run(capsys, "minorant", write(tmp_path, document))
    assert code == 1


def test_length_mismatch(tmp_path, capsys):
    code, out = run(capsys, "minorant", write(tmp_path, {**THREE_POINT, "u": ["1", "2"]}))
    assert code == 1
    assert json.loads(out)["field"] == "u"


def test_invalid_core(tmp_path, capsys):
    code, out = run(capsys, "minorant", write(tmp_path, {**THREE_POINT, "core": [[1], [0]]}))
    assert code == 1
    assert json.loads(out)["field"] == "core"


def test_coremap_file_needs_p_one_for_constants(tmp_path, capsys):
    document = {
        **unit(p="2", q="2"),
        "kind": "coremap",
        "coremap": {"items": ["y0", "y1"], "tau": ["1", "2"], "ball": [1, 3]},
    }
    code, _ = run(capsys, "constant", write(tmp_path, document))
    assert code == 1


def test_coremap_file(tmp_path, capsys):
    document = {
        **unit(),
        "kind": "coremap",
        "coremap": {"items": ["y0", "y1", "y2"], "tau": ["1", "2", "1"], "ball": [1, 3, 0]},
    }
    code, out = run(capsys, "constant", write(tmp_path, document))
    assert code == 0
    assert json.loads(out)["estimate"]["exact"] == "3/1"


def test_round_trip():
    document = parse_problem(json.dumps({**THREE_POINT, "mu": ["2/4", 1, "3"]}))
    assert document.mu == [Fraction(1, 2), Fraction(1), Fraction(3)]
    text = serialize_problem(document)
    assert parse_problem(text) == document
    assert json.loads(text)["mu"] == ["1/2", "1/1", "3/1"]


def test_eta_and_u_are_exclusive():
    with pytest.raises(ProblemFileError):
        parse_problem(json.dumps({**THREE_POINT, "eta": ["1", "1", "1"]}))


def test_generic_operator_uses_chain_balls():
    loaded = to_problem(parse_problem(json.dumps(THREE_POINT)))
    assert loaded.problem.cm.balls == loaded.core.chain
    assert loaded.omega.values == (1, 1, 1)


def test_verify_command_is_deterministic(capsys):
    argv = ["--seed", "3", "verify", "--count", "5", "--size", "4", "--sandwich-count", "2", "--suite", "duality", "--suite", "sandwich"]
    first_code, first = run(capsys, *argv)
    second_code, second = run(capsys, *argv)
    assert first_code == second_code == 0
    assert first == second
    report = json.loads(first)
    assert report["seed"] == 3
    assert set(report["suites"]) == {"duality", "sandwich"}


def test_timing_flag(tmp_path, capsys):
    _, out = run(capsys, "--timing", "reduce", write(tmp_path, THREE_POINT))
    assert "elapsed_seconds" in json.loads(out)
