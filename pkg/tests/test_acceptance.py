"""Acceptance gate: eleven criteria, each with its time bound.

Each criterion prints one PASS/FAIL line (visible under ``pytest -v -s`` and in
the terminal summary); run this file directly for the lines alone.
"""

import time

import pytest

from qflag.calculus import calculus
from qflag.ncalg import su
from qflag.verify import Budget, run_suite

EXH = Budget("exhaustive")
S500 = Budget("sample", 500)
DIM = Budget("dimension")

RESULTS = []


def _gate(label, bound, runs, extra=None):
    t0 = time.perf_counter()
    failures = []
    for name, n, budget in runs:
        report = run_suite(name, n, 0, budget)
        failures += [f"{name} N={n}: {c.description} -- {c.witness}"
                     for c in report.checks if c.status != "pass"]
    if extra is not None:
        failures += extra()
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < bound
    line = f"{'PASS' if ok else 'FAIL'} {label} ({elapsed:.1f}s, bound {bound}s)"
    RESULTS.append(line)
    print(line)
    assert not failures, failures
    assert elapsed < bound, f"took {elapsed:.1f}s"


def test_01_hopf_axioms():
    _gate("1 Hopf axioms N=2,3 exhaustive", 10,
          [("hopf-axioms", 2, EXH), ("hopf-axioms", 3, EXH)])


def test_02_coquasi_triangular():
    _gate("2 coquasi-triangular laws", 30,
          [("coquasi-triangular", 2, EXH), ("coquasi-triangular", 3, S500)])


def test_03_killing_closed_forms():
    _gate("3 Killing closed forms", 60,
          [("killing-closed-forms", 2, EXH), ("killing-closed-forms", 3, S500)])


def test_04_lambda_dimension():
    _gate("4 basis dimension N=2,3,4", 60,
          [("lambda-basis-dimension", n, DIM) for n in (2, 3, 4)])


def test_05_su2_example():
    _gate("5 SU_2 calculus example", 5,
          [("su2-ideal", 2, EXH), ("su2-3d-nonisomorphism", 2, EXH)])


def test_06_sphere():
    _gate("6 sphere relations and framing", 60,
          [("sphere-relations", n, None) for n in (2, 3, 4)]
          + [("sphere-framing", n, EXH) for n in (2, 3)])


def test_07_hopf_galois():
    _gate("7 Hopf-Galois canonical map", 30,
          [("hopf-galois-ver", 2, EXH), ("hopf-galois-ver", 3, S500)])


def test_08_adr_compatibility():
    def rank_facts():
        # the Q-images used for basis-resolved checking must be independent
        bad = []
        for n in (2, 3):
            full, dpart = calculus(su(n)).rank_check()
            if (full, dpart) != (n * n, (n - 1) ** 2):
                bad.append(f"N={n}: ranks {full}, {dpart}")
        return bad
    _gate("8 Ad_R compatibility", 60,
          [("adr-compatibility", 2, EXH), ("adr-compatibility", 3, S500)], rank_facts)


def test_09_cp_framing():
    _gate("9 projective framing and Dolbeault relations", 120,
          [("cpn-framing", 2, EXH), ("cpn-framing", 3, S500), ("podles-recovery", 2, EXH)])


def test_10_connection():
    _gate("10 connection and fiber relations", 30,
          [("connection", 2, EXH), ("connection", 3, S500)])


def test_11_oracle_consistency():
    _gate("11 rewriting vs ideal oracle", 120,
          [("oracle-consistency", 2, EXH), ("oracle-consistency", 3, S500)])


@pytest.fixture(scope="module", autouse=True)
def _summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None and RESULTS:
        reporter.write_line("")
        for line in RESULTS:
            reporter.write_line(line)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
