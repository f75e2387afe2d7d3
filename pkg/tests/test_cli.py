import json
import shutil
import subprocess

import jsonschema
import pytest

from qflag.cli import SCHEMAS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_nf_example(capsys):
    code, out, _ = run(capsys, "nf", "--n", "2", "u[2,2]*u[1,1]")
    assert code == 0
    assert out == "u[1,1]*u[2,2] - (q - q^-1)*u[1,2]*u[2,1]"


def test_d_example(capsys):
    code, out, _ = run(capsys, "d", "--n", "2", "u[1,1]")
    assert (code, out) == (0, "u[1,1] e0 + u[1,2] ep[1]")


def test_letters(capsys):
    _, out, _ = run(capsys, "del", "--letters", "zz[1,2]")
    assert out == "-q^-1*b^2 ep[1]"


@pytest.mark.parametrize("argv, kind", [
    (["nf", "--algebra", "su", "u[1,1]*u[2,2]"], "poly"),
    (["d", "u[2,1]"], "form"),
    (["del", "zz[2,1]"], "form"),
    (["delbar", "zz[1,2]"], "form"),
    (["theta", "u[2,1]"], "form"),
    (["nabla", "--n", "3", "zs[2]"], "form"),
    (["coset", "--n", "3", "zs[3]"], "form"),
    (["pair", "r", "u[1,1]", "u[2,2]"], "scalar"),
    (["pair", "rbar", "u[1,2]", "u[2,1]"], "scalar"),
    (["killing", "u[1,2]*u[2,1]"], "matrix"),
    (["act", "e0", "u[1,1]"], "form"),
    (["coact", "gamma", "z[1]"], "tensor"),
    (["coact", "alpha", "--n", "3", "u[2,3]"], "tensor"),
    (["degree", "zs[1]*zs[2]"], "degree"),
])
def test_json_outputs_validate(capsys, argv, kind):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == kind
    jsonschema.validate(doc, SCHEMAS[kind])


def test_form_json_layout(capsys):
    _, out, _ = run(capsys, "d", "u[1,1]", "--json")
    doc = json.loads(out)
    assert doc["basis"] == ["em[1]", "e0", "ep[1]"]
    assert doc["coefficients"][1] == [{"coefficient": "1", "monomial": "u[1,1]"}]


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "podles-recovery", "--n", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS["report"])
    assert doc["passed"] and doc["note"]


@pytest.mark.parametrize("argv", [
    ["nf", "u[3,1]"],
    ["nf", "u[1,"],
    ["del", "u[1,1]"],
    ["coset", "1"],
    ["verify", "su2-ideal", "--n", "3"],
    ["verify", "hopf-axioms", "--budget", "bogus"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_error_json(capsys):
    code, _, err = run(capsys, "nf", "u[3,1]", "--json")
    doc = json.loads(err)
    jsonschema.validate(doc, SCHEMAS["error"])
    assert code == 2 and doc["error"] == "index-out-of-range"


def test_default_n_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("QFLAG_DEFAULT_N", "3")
    _, out, _ = run(capsys, "d", "u[1,1]", "--json")
    assert len(json.loads(out)["basis"]) == 5
    monkeypatch.setenv("QFLAG_DEFAULT_N", "zero")
    code, _, _ = run(capsys, "d", "u[1,1]")
    assert code == 2


def test_failing_suite_exits_1(capsys, monkeypatch):
    from qflag import verify

    def broken(run):
        run.check("deliberately false", "test", False, "witness")
    monkeypatch.setitem(verify.SUITES, "hopf-axioms", (broken, 3))
    code, out, _ = run(capsys, "verify", "hopf-axioms")
    assert code == 1 and "FAIL" in out


@pytest.mark.skipif(shutil.which("qflag") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["qflag", "verify", "podles-recovery", "--n", "2", "--json"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["suite"] == "podles-recovery"
