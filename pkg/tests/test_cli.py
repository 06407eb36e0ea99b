"""The command line driver: scenario dispatch, exit codes, report files."""

import json

from click.testing import CliRunner

from lefschetz.cli import main
from lefschetz.exprs import parse_scalar
from lefschetz.scalars import rf_equal


def run(*args):
    return CliRunner().invoke(main, list(args))


def write_scenario(tmp_path, payload, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_p1_builtin_reports_equal():
    result = run("p1", "--n", "3")
    assert result.exit_code == 0
    assert "verdict: equal" in result.output
    assert "q^3 + q^2 + q + 1" in result.output


def test_weyl_command_reports_dimension():
    result = run("weyl", "--type", "A2", "--weight", "1,1")
    assert result.exit_code == 0
    assert "dimension: 8" in result.output


def test_weyl_bad_weight_is_input_error():
    assert run("weyl", "--type", "A2", "--weight", "1").exit_code == 4
    assert run("weyl", "--type", "A2", "--weight", "1,x").exit_code == 4
    assert run("weyl", "--type", "A2", "--weight", "1,-1").exit_code == 4
    assert run("weyl", "--type", "Z9", "--weight", "1,1").exit_code == 4


def test_verify_projective_scenario(tmp_path):
    path = write_scenario(tmp_path, {
        "kind": "projective_ab", "dim": 1, "eigenvalues": ["q", "1"],
        "bundle": [{"twist": 3, "scalar": "1"}]})
    result = run("verify", path)
    assert result.exit_code == 0
    assert "verdict: equal" in result.output


def test_verify_not_transversal_exit_code(tmp_path):
    path = write_scenario(tmp_path, {
        "kind": "projective_ab", "dim": 1, "eigenvalues": ["q", "q"],
        "bundle": [{"twist": 1, "scalar": "1"}]})
    result = run("verify", path)
    assert result.exit_code == 2
    assert "not_transversal" in result.output


def test_verify_schema_errors_name_the_field(tmp_path):
    path = write_scenario(tmp_path, {"kind": "projective_ab", "dim": 1,
                                     "eigenvalues": ["q", "1"]})
    result = run("verify", path)
    assert result.exit_code == 4
    assert "bundle" in result.output

    path = write_scenario(tmp_path, {
        "kind": "projective_ab", "dim": 1, "eigenvalues": ["q", "1 +"],
        "bundle": [{"twist": 0, "scalar": "1"}]})
    result = run("verify", path)
    assert result.exit_code == 4
    assert "eigenvalues[1]" in result.output

    result = run("verify", write_scenario(tmp_path, {"kind": "mystery"}))
    assert result.exit_code == 4
    assert "kind" in result.output


def test_verify_missing_or_invalid_file(tmp_path):
    assert run("verify", str(tmp_path / "nope.json")).exit_code == 4
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("verify", str(bad)).exit_code == 4


def test_verify_weyl_scenario(tmp_path):
    path = write_scenario(tmp_path, {"kind": "weyl_char", "type": "B2",
                                     "weight": [1, 0]})
    result = run("verify", path)
    assert result.exit_code == 0
    assert "dimension: 5" in result.output


def test_selftest_command_and_trial_validation():
    result = run("selftest", "--seed", "5", "--trials", "4")
    assert result.exit_code == 0
    assert "trace_map_functoriality: 4/4" in result.output
    assert run("selftest", "--trials", "0").exit_code == 4


def test_lemma313_command():
    result = run("lemma313", "--dim", "4", "--trials", "5")
    assert result.exit_code == 0
    assert "verdict: equal" in result.output
    assert run("lemma313", "--dim", "0", "--trials", "5").exit_code == 4


def test_json_reports_are_deterministic(tmp_path):
    path = write_scenario(tmp_path, {
        "kind": "projective_ab", "dim": 2, "eigenvalues": ["q", "1", "q^2"],
        "bundle": [{"twist": 2, "scalar": "3"}, {"twist": -4, "scalar": "1/2"}]})
    out1, out2 = str(tmp_path / "r1.json"), str(tmp_path / "r2.json")
    assert run("verify", path, "--json", out1).exit_code == 0
    assert run("verify", path, "--json", out2).exit_code == 0
    r1 = json.loads(open(out1).read())
    r2 = json.loads(open(out2).read())
    r1.pop("elapsed"), r2.pop("elapsed")
    assert r1 == r2
    assert r1["verdict"] == "equal"


def test_serialized_scalars_reparse_to_equal_values(tmp_path):
    path = write_scenario(tmp_path, {
        "kind": "projective_ab", "dim": 1, "eigenvalues": ["q", "1"],
        "bundle": [{"twist": -3, "scalar": "2"}]})
    out = str(tmp_path / "r.json")
    assert run("verify", path, "--json", out).exit_code == 0
    report = json.loads(open(out).read())
    assert rf_equal(parse_scalar(report["lhs"]), parse_scalar(report["rhs"]))


def test_probabilistic_equality_flag_accepted():
    result = run("p1", "--n", "2", "--probabilistic-equality")
    assert result.exit_code == 0
    assert "verdict: equal" in result.output
