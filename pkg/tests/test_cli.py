import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from multctl.cli import (
    CommandReport,
    load_corpus,
    load_graded_system,
    main,
    run_captured,
    run_corpus,
)
from multctl.monomial import IdealInputError
from multctl.syntax import ParseError

SCHEMA = json.loads(resources.files("multctl").joinpath("data/report.schema.json").read_text())


def run_json(argv):
    code, out = run_captured(list(argv) + ["--json"])
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


def test_documented_examples():
    assert run_json(["lct", "--vars", "x,y", "<x^2,y^3>"])[1]["result"]["lct"] == "5/6"
    assert run_json(["mi", "--coeff", "5/6", "--vars", "x,y", "<x^2,y^3>"])[1]["result"]["ideal"] == "<x, y>"
    code, data = run_json(["jn", "--max", "4/3", "--vars", "x,y", "<x^2,y^3>"])
    assert data["result"]["jumping_numbers"] == ["5/6", "7/6", "4/3"] and code == 0


def test_campaign_style_verify_examples():
    code, data = run_json(["verify", "thm1", "--trials", "100", "--seed", "42"])
    assert code == 0 and data["verdict"] != "FAILS" and sum(data["result"]["counts"].values()) == 100
    assert set(data["result"]["counts"]) <= {"Holds", "HoldsWithEquality"}
    code, data = run_json(["verify", "equality", "--trials", "50", "--seed", "7"])
    assert data["result"]["counts"] == {"HoldsWithEquality": 50} and data["seed"] == 7
    code, data = run_json(["verify", "jumpshift", "--trials", "20", "--seed", "1"])
    assert code == 0 and sum(data["result"]["counts"].values()) == 20
    assert set(data["result"]["counts"]) <= {"Holds", "HoldsWithEquality"}


def test_plain_and_json_carry_the_same_fields():
    argv = ["verify", "thm1", "--vars", "x,y", "--coeff", "2", "<x,y>", "<x,y>"]
    _, text = run_captured(argv)
    _, data = run_json(argv)
    lines = dict(line.split(": ", 1) for line in text.splitlines())
    assert lines["verdict"] == data["verdict"] == "Holds"
    assert lines["result.lhs"] == data["result"]["lhs"] == "<x, y>"
    assert lines["inputs.gamma"] == data["inputs"]["gamma"]
    assert lines["timing_ms"] == "-" and data["timing_ms"] is None


def test_timing_reported_by_default(capsys):
    assert main(["lct", "--json", "--vars", "x", "<x^3>"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert isinstance(data["timing_ms"], int)
    jsonschema.validate(data, SCHEMA)


@pytest.mark.parametrize("argv", [
    ["lct", "<x^-1>"],
    ["lct", "--vars", "x", "<x, y>"],
    ["mi", "--vars", "x", "<x>"],                 # missing --coeff
    ["mi", "--vars", "x", "--coeff", "1/0", "<x>"],
    ["lct", "--vars", "x", "<0>"],                # zero ideal
    ["frobnicate"],
    ["verify", "thm1", "<x>"],                    # wrong number of ideals
    ["verify", "subvariety", "--vars", "x,y", "--r", "1", "--coeff", "1", "<x^2>"],
    ["lct", "--vars", "x", "<x>", "extra"],
])
def test_usage_errors_exit_1(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err


def test_inconclusive_exit_3():
    code, data = run_json(["verify", "thm2", "--vars", "x,y", "--coeff", "5/6", "--mmax", "3", "--qmax", "1",
                           "<x^2>", "<y^3>"])
    assert code == 3 and data["verdict"] == "Inconclusive"
    code, data = run_json(["amult", "--vars", "x,y", "--coeff", "2", "--qmax", "1", "<x,y>"])
    assert code == 3 and data["result"]["stabilized"] is False


def test_fails_exit_2(monkeypatch):
    from multctl import harness
    from multctl.monomial import MonomialIdeal

    # sabotage the right-hand side so the inclusion breaks
    monkeypatch.setattr(harness, "finite_sum", lambda a, b, g, **kw: MonomialIdeal.of(a.arity, [(9,) * a.arity]))
    code, data = run_json(["verify", "thm1", "--vars", "x,y", "--coeff", "2", "<x,y>", "<x,y>"])
    assert code == 2 and data["verdict"] == "FAILS" and data["witness"]


def test_oracle_flag():
    code, data = run_json(["mi", "--oracle", "--vars", "x,y,z", "--coeff", "3/2", "<x^2*y, y^3, z^2*x>"])
    assert code == 0 and data["result"]["oracle"] == "agrees"
    code, data = run_json(["verify", "lemma", "--trials", "3", "--seed", "2", "--oracle"])
    assert code == 0 and data["result"]["oracle_mismatches"] == 0


def test_negative_coefficient_is_not_a_flag():
    code, data = run_json(["verify", "subvariety", "--vars", "x,y", "--r", "1", "--coeff", "-1/2", "<x, y>"])
    assert code == 0 and data["inputs"]["gamma"] == "-1/2"


def test_graded_system_file(tmp_path):
    good = tmp_path / "a.txt"
    good.write_text("# powers of (x^2, y)\narity = 2\np_max = 2\nvars = u,v\n1 = <u^2, v>\n2 = <u^4, u^2*v, v^2>\n")
    system, names = load_graded_system(good)
    assert names == ("u", "v") and system.p_max == 2
    code, data = run_json(["amult", str(good), "--coeff", "2", "--qmax", "2"])
    assert code == 0 and data["result"]["ideal"] == "<u^2, v>"
    bad = tmp_path / "b.txt"
    bad.write_text("arity = 1\np_max = 2\n1 = <x>\n2 = <x^3>\n")
    with pytest.raises(IdealInputError):
        load_graded_system(bad)
    assert main(["amult", str(bad), "--coeff", "1"]) == 1
    missing = tmp_path / "c.txt"
    missing.write_text("arity = 1\n1 = <x>\n")
    with pytest.raises(ParseError):
        load_graded_system(missing)


def test_graded_file_in_verify(tmp_path):
    a = tmp_path / "a.txt"
    a.write_text("arity = 2\np_max = 2\n1 = <x^2>\n2 = <x^4>\n")
    b = tmp_path / "b.txt"
    b.write_text("arity = 2\np_max = 2\n1 = <y^3>\n2 = <y^6>\n")
    code, data = run_json(["verify", "thm2", str(a), str(b), "--coeff", "5/6", "--mmax", "2", "--qmax", "2"])
    assert code == 0 and data["verdict"] in ("Holds", "HoldsWithEquality")


def test_regression_corpus_replays():
    entries = load_corpus()
    assert len(entries) >= 40
    results = run_corpus(entries)
    assert [r["command"] for r in results if not r["passed"]] == []


def test_campaign_is_deterministic():
    first = run_captured(["campaign", "--trials", "2", "--seed", "9", "--json"])
    second = run_captured(["campaign", "--trials", "2", "--seed", "9", "--json"])
    assert first == second and first[0] == 0
    data = json.loads(first[1])
    jsonschema.validate(data, SCHEMA)
    assert data["result"]["corpus"]["passed"] == data["result"]["corpus"]["total"]


def test_threads_env(monkeypatch):
    monkeypatch.setenv("MULTCTL_THREADS", "2")
    par = run_captured(["verify", "approx", "--trials", "4", "--seed", "3"])
    monkeypatch.setenv("MULTCTL_THREADS", "1")
    assert par == run_captured(["verify", "approx", "--trials", "4", "--seed", "3"])
    monkeypatch.setenv("MULTCTL_THREADS", "many")
    assert main(["verify", "approx", "--trials", "1"]) == 1


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "multctl.cli", "lct", "--vars", "x,y", "<x^2,y^3>", "--no-timing"],
                         capture_output=True, text=True, check=True)
    assert "result.lct: 5/6" in out.stdout


def test_command_report_flattening():
    rep = CommandReport("x", {"a": "1"}, {"list": ["1", "2"], "nested": [{"k": True}]})
    assert rep.to_text().splitlines() == [
        "command: x", "inputs.a: 1", "result.list: 1, 2", "result.nested[0].k: true", "timing_ms: -"]
