import json

import pytest

from qflag.errors import InvalidElementError, ResourceGuardError, UnknownSuiteError
from qflag.verify import (NOTE, SUITES, Budget, default_budget, parse_budget, run_suite,
                          suite_names)

REQUIRED = {
    "hopf-axioms", "coquasi-triangular", "killing-closed-forms", "lambda-basis-dimension",
    "vd-submodule", "su2-ideal", "su2-3d-nonisomorphism", "sphere-relations",
    "hopf-galois-ver", "adr-compatibility", "fiber-calculi", "sphere-framing", "cpn-framing",
    "podles-recovery", "connection",
}


def test_registry_covers_required_suites():
    assert REQUIRED <= set(suite_names())


def test_budgets():
    assert default_budget(2) == Budget("exhaustive")
    assert default_budget(3) == Budget("sample", 500)
    assert default_budget(4) == Budget("dimension")
    assert parse_budget("sample:7") == Budget("sample", 7)
    assert parse_budget(None) is None
    with pytest.raises(ValueError):
        parse_budget("sample:0")


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_at_n2(name):
    report = run_suite(name, 2)
    failed = [c for c in report.checks if c.status != "pass"]
    assert not failed, failed
    assert report.checks
    assert all(c.citation for c in report.checks)


def test_reports_are_deterministic():
    a = run_suite("vd-submodule", 2, seed=5).as_dict()
    b = run_suite("vd-submodule", 2, seed=5).as_dict()
    a.pop("elapsed"), b.pop("elapsed")
    assert json.dumps(a) == json.dumps(b)
    assert a["note"] == NOTE
    descs = [c["description"] for c in a["checks"]]
    assert descs == sorted(descs)


def test_guards():
    with pytest.raises(UnknownSuiteError):
        run_suite("nope", 2)
    with pytest.raises(ResourceGuardError):
        run_suite("hopf-axioms", 4)
    with pytest.raises(ResourceGuardError):
        run_suite("cpn-framing", 4)
    with pytest.raises(InvalidElementError):
        run_suite("podles-recovery", 3)
    with pytest.raises(InvalidElementError):
        run_suite("hopf-axioms", 1)


def test_failure_keeps_witness(monkeypatch):
    def broken(run):
        run.family("x equals 1", "test", [1, 2, 3], lambda x: None if x == 1 else f"x = {x}")
    monkeypatch.setitem(SUITES, "hopf-axioms", (broken, 3))
    report = run_suite("hopf-axioms", 2)
    (check,) = report.checks
    assert check.status == "fail" and check.witness == "2: x = 2"
    assert not report.passed
