import json

import pytest

from kpeterson import peterson, shapes, verify
from kpeterson.rootdata import RootSystemC
from kpeterson.verify import (
    MAX_COUNTEREXAMPLES,
    SUITES,
    CheckReport,
    check_bijection,
    check_bracket,
    check_commutations,
    check_decomposition,
    check_degree_reversal,
    check_homology,
    check_kernel,
    check_length_oracle,
    check_map_consistency,
    check_mcr,
    check_peterson_cosets,
    check_translation_steps,
    run_all,
)


def test_bijection_examples():
    r = check_bijection(1, 6)
    assert r.passed and r.cases == 7
    r = check_bijection(2, 3)
    assert r.passed and r.cases == 5
    r = check_bijection(2, 0)
    assert r.passed and r.cases == 1


@pytest.mark.parametrize("check", [
    check_decomposition, check_bracket, check_translation_steps, check_kernel,
    check_map_consistency, check_peterson_cosets, check_homology, check_degree_reversal,
])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_weight_suites_pass(check, n):
    r = check(n, 8)
    assert r.passed, r.to_text()
    assert r.cases > 0


def test_commutations_and_mcr():
    assert check_commutations(1).passed and check_commutations(1).cases == 0
    r = check_commutations(2)
    assert r.passed and r.cases == 2
    assert check_commutations(5).passed
    r = check_mcr(4)
    assert r.passed and r.cases == 16


def test_length_oracle_small():
    r = check_length_oracle(1, 8)
    assert r.passed and r.cases == 17


def test_report_text_and_dict():
    r = CheckReport("demo", {"n": 2})
    r.case(True, "a", 1, 1)
    assert r.to_text() == "PASS demo [n=2] 1 cases"
    r.case(False, "b", 1, 2)
    assert not r.passed
    assert r.to_dict()["failures"] == [{"input": "b", "expected": "1", "actual": "2"}]
    assert "1 failures" in r.to_text()


def test_counterexample_cap():
    r = CheckReport("cap", {})
    for i in range(25):
        r.case(False, i, 0, i)
    assert r.failure_count == 25
    assert len(r.failures) == MAX_COUNTEREXAMPLES


def test_reports_deterministic():
    a = run_all(2, 6, 5).to_json()
    b = run_all(2, 6, 5).to_json()
    assert a == b
    data = json.loads(a)
    assert [r["name"] for r in data["reports"]] == list(SUITES)
    assert list(data["reports"][0]) == ["name", "params", "passed", "cases", "failure_count", "failures"]


def test_run_all_subset_and_unknown():
    agg = run_all(2, 4, 4, ["bracket", "mcr"])
    assert [r.name for r in agg.reports] == ["bracket", "mcr"]
    assert agg.to_text().endswith("ALL PASS: 2 suites, " + str(sum(r.cases for r in agg.reports)) + " cases")
    with pytest.raises(KeyError):
        run_all(2, suites=["nope"])


# -- mutation tests ----------------------------------------------------------------

def test_mutation_commutation_drop_generator(monkeypatch):
    def broken(sys, i, j):
        n = sys.n
        u = lambda k: shapes.u_of_index(sys, n + 1 - k)  # noqa: E731
        return u(i) * u(j), u(j + 1) * u(i)

    monkeypatch.setattr(verify, "commutation_1_sides", broken)
    r = check_commutations(4)
    assert not r.passed
    assert r.failures


def test_mutation_commutation_2(monkeypatch):
    def broken(sys, i):
        n = sys.n
        u = lambda k: shapes.u_of_index(sys, n + 1 - k)  # noqa: E731
        return shapes.v_of_index(sys, n + 1) * u(i), u(i) * shapes.v_of_index(sys, n + 2)

    monkeypatch.setattr(verify, "commutation_2_sides", broken)
    assert not check_commutations(3).passed


def test_mutation_star_identity(monkeypatch):
    monkeypatch.setattr(shapes, "star", lambda mu: shapes.StrictPartition(mu.n, mu.parts))
    r = check_mcr(3)
    assert not r.passed and r.failures


def test_mutation_peterson_star(monkeypatch):
    monkeypatch.setattr(peterson, "star", lambda mu: shapes.StrictPartition(mu.n, mu.parts))
    assert not check_map_consistency(3, 6).passed


def test_mutation_length(monkeypatch):
    monkeypatch.setattr(verify, "length", lambda x: 0)
    assert not check_length_oracle(2, 3).passed
    assert not check_bijection(2, 3).passed


def test_mutation_peterson_rep(monkeypatch):
    monkeypatch.setattr(verify, "is_peterson_rep", lambda x: True)
    r = check_peterson_cosets(2, 6)
    assert not r.passed
    assert r.failure_count == sum(
        1 for lam in shapes.enumerate_pc(RootSystemC(2), 6) if lam.first >= 4)


def test_mutation_homology_threshold(monkeypatch):
    orig = peterson.homology_transport

    def off_by_one(ctx, lam, k=0):
        if lam.parts and lam.first == ctx.n + 1:
            return peterson.HomologyImage.zero()
        return orig(ctx, lam, k)

    monkeypatch.setattr(verify, "homology_transport", off_by_one)
    assert not check_homology(2, 6).passed


def test_mutation_xi(monkeypatch):
    orig = shapes.xi_of
    monkeypatch.setattr(shapes, "xi_of", lambda lam: orig(lam) * 2)
    assert not check_decomposition(2, 5).passed
    assert not check_bracket(2, 5).passed
    assert not check_translation_steps(2, 5).passed
