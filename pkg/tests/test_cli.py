import json
import pytest
from typer.testing import CliRunner
from main import app
from schemas.report import CheckReport, Verdict, Witness

runner = CliRunner()


def test_decompose_json():
    result = runner.invoke(app, ["--format", "json", "decompose", "-p", "5,5,2,2", "-t", "3"])
    assert result.exit_code == 0, result.output
    out = json.loads(result.stdout)
    assert out["core"] == [2]
    assert out["quotient"] == [[2], [1], [1]]
    assert out["t"] == 3


def test_decompose_human():
    result = runner.invoke(app, ["decompose", "-p", "5,5,2,2", "-t", "3"])
    assert result.exit_code == 0
    assert "3-decomposition of [5,5,2,2]" in result.stdout


def test_decompose_rejects_bad_partition():
    result = runner.invoke(app, ["decompose", "-p", "2,5", "-t", "3"])
    assert result.exit_code == 2


def test_classify_tsv():
    result = runner.invoke(app, ["-f", "tsv", "classify", "sc", "pz:1", "bgt:3", "-p", "2,1"])
    assert result.exit_code == 0
    rows = [line.split("\t") for line in result.stdout.strip().splitlines()]
    assert rows == [["sc", "true"], ["pz:1", "false"], ["bgt:3", "false"]]


def test_enumerate_self_conjugate():
    result = runner.invoke(app, ["-f", "json", "enumerate", "8", "--class", "sc"])
    assert result.exit_code == 0
    out = json.loads(result.stdout)
    assert out["count"] == 2
    assert sorted(out["partitions"]) == [[3, 3, 2], [4, 2, 1, 1]]


def test_enumerate_t_cores():
    result = runner.invoke(app, ["-f", "json", "enumerate", "6", "--t-cores", "2"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["partitions"] == [[], [1], [2, 1], [3, 2, 1]]


def test_class_series_human():
    result = runner.invoke(app, ["series", "class", "sc", "--order", "10"])
    assert result.exit_code == 0
    assert "1,1,0,1,1,1,1,1,2,2,2" in result.stdout


def test_class_series_with_marked_hooks():
    result = runner.invoke(app, ["-f", "json", "series", "class", "sc", "--order", "6", "--y-hook", "2"])
    assert result.exit_code == 0
    out = json.loads(result.stdout)
    assert out["ring"] == "QQ[y]/y^5"
    assert out["coefficients"][4] == ["0", "0", "1"]


def test_rhs_series():
    result = runner.invoke(app, ["-f", "json", "series", "rhs", "pz-gf", "--z", "0", "--order", "8"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["coefficients"] == ["1", "1", "0", "1", "1", "1", "1", "1", "2"]


def test_verify_passes():
    result = runner.invoke(app, ["verify", "pz-gf", "--z", "1", "--order", "10"])
    assert result.exit_code == 0
    assert "1 passed, 0 failed" in result.stdout


def test_verify_json_report():
    result = runner.invoke(app, ["-f", "json", "verify", "congP", "--t", "2", "--n-max", "8"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["verdict"] == "pass"
    assert report["params"] == {"t": 2, "n_max": 8}


def test_verify_failure_exit_code(monkeypatch):
    failing = CheckReport(identity_id="pz-gf", verdict=Verdict.FAIL, max_order_checked=4,
                          witness=Witness(n=3, lhs="1", rhs="2"))
    monkeypatch.setattr("cli.commands.verify.run_check", lambda check_id, params: failing)
    result = runner.invoke(app, ["verify", "pz-gf", "--order", "4"])
    assert result.exit_code == 1
    assert "0 passed, 1 failed" in result.stdout


@pytest.mark.parametrize("args", [
    ["verify", "no-such-check"],
    ["verify", "bgt-gf", "--t", "0"],
    ["verify", "remark-counterexample", "--z", "0", "--t", "4"],
])
def test_verify_usage_errors(args):
    assert runner.invoke(app, args).exit_code == 2


def test_verify_all_uses_global_bounds(monkeypatch):
    captured = {}

    def fake_run_catalog(entries, jobs):
        captured["entries"] = entries
        return []

    monkeypatch.setattr("cli.commands.verify.run_catalog", fake_run_catalog)
    result = runner.invoke(app, ["--order", "8", "--n-max", "6", "verify", "all", "--quick"])
    assert result.exit_code == 0, result.output
    entries = captured["entries"]
    assert {e.params["order"] for e in entries if e.check_id == "bgt-gf"} == {8}
    assert {e.params["n_max"] for e in entries if e.check_id == "congP"} == {6}
