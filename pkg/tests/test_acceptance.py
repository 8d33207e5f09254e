"""Acceptance criteria, one test each; the summary prints a PASS/FAIL line per criterion."""

import random
import time

import pytest

from kpeterson.kring import LaurentCoeff, NovikovCoeff, QuantumCombo
from kpeterson.peterson import PetersonContext, transport_product
from kpeterson.rootdata import RootSystemC
from kpeterson.shapes import StrictPartition, star
from kpeterson.textio import bundled_dataset, load_relation, parse_coeff, print_quantum_relation
from kpeterson import verify

CHEVALLEY_TEXT = "O[1] * O[2,1] = (1 - e^{-2eps1 - 2eps2}) * O[2,1] + e^{-2eps1 - 2eps2} * Q * O[1]"


def chevalley_rhs():
    m = NovikovCoeff.monomial((-2, -2))
    return QuantumCombo(2, [((2, 1), 1 - m), ((1,), m.shift_q(1))])


def transport(name):
    rf = load_relation(bundled_dataset(name))
    ctx = PetersonContext.of_rank(rf.n)
    return transport_product(ctx, rf.lhs[0], rf.lhs[1], rf.rhs)


def run_suites(jobs):
    reports = [fn() for fn in jobs]
    bad = [r for r in reports if not r.passed]
    return reports, bad


def summary(reports, seconds):
    return f"{len(reports)} reports, {sum(r.cases for r in reports)} cases, {seconds:.2f}s"


@pytest.mark.criterion("1 chevalley transport, dataset 1")
def test_criterion_1(criterion):
    t0 = time.perf_counter()
    rel = transport("lg2_chevalley_affine.json")
    dt = time.perf_counter() - t0
    ok = (rel.lhs == (StrictPartition(2, (1,)), StrictPartition(2, (2, 1)))
          and rel.rhs == chevalley_rhs()
          and print_quantum_relation(rel) == CHEVALLEY_TEXT
          and dt < 1.0)
    criterion(ok, f"{dt:.3f}s")
    assert ok


@pytest.mark.criterion("2 chevalley transport, dataset 2")
def test_criterion_2(criterion):
    t0 = time.perf_counter()
    rel = transport("lg2_product_rank2.json")
    dt = time.perf_counter() - t0
    m = LaurentCoeff.monomial((-1, -1))
    identity = (1 - m) * (1 + m) == 1 - LaurentCoeff.monomial((-2, -2))
    ok = (print_quantum_relation(rel) == CHEVALLEY_TEXT
          and rel == transport("lg2_chevalley_affine.json")
          and identity and dt < 1.0)
    criterion(ok, f"{dt:.3f}s")
    assert ok


@pytest.mark.criterion("3 bijection counts")
def test_criterion_3(criterion):
    t0 = time.perf_counter()
    reports, bad = run_suites([lambda n=n: verify.check_bijection(n, 10) for n in (1, 2, 3)])
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    criterion(ok, summary(reports, dt))
    assert not bad, [r.to_text() for r in bad]
    assert dt < 60


@pytest.mark.criterion("4 structural propositions")
def test_criterion_4(criterion):
    t0 = time.perf_counter()
    jobs = []
    for n in range(1, 5):
        jobs += [lambda n=n: verify.check_decomposition(n, 12),
                 lambda n=n: verify.check_bracket(n, 12),
                 lambda n=n: verify.check_translation_steps(n, 12)]
    jobs += [lambda n=n: verify.check_commutations(n) for n in range(1, 9)]
    jobs += [lambda n=n: verify.check_mcr(n) for n in range(1, 7)]
    reports, bad = run_suites(jobs)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    criterion(ok, summary(reports, dt))
    assert not bad, [r.to_text() for r in bad]
    assert dt < 60


@pytest.mark.criterion("5 kernel and map consistency")
def test_criterion_5(criterion):
    t0 = time.perf_counter()
    jobs = []
    for n in range(1, 5):
        jobs += [lambda n=n: verify.check_kernel(n, 12),
                 lambda n=n: verify.check_map_consistency(n, 12)]
    reports, bad = run_suites(jobs)
    dt = time.perf_counter() - t0
    criterion(not bad, summary(reports, dt))
    assert not bad, [r.to_text() for r in bad]


@pytest.mark.criterion("6 peterson cosets")
def test_criterion_6(criterion):
    t0 = time.perf_counter()
    reports, bad = run_suites([lambda n=n: verify.check_peterson_cosets(n, 10) for n in (2, 3)])
    dt = time.perf_counter() - t0
    criterion(not bad, summary(reports, dt))
    assert not bad, [r.to_text() for r in bad]


@pytest.mark.criterion("7 homology limit")
def test_criterion_7(criterion):
    t0 = time.perf_counter()
    jobs = []
    for n in range(1, 5):
        jobs += [lambda n=n: verify.check_homology(n, 12),
                 lambda n=n: verify.check_degree_reversal(n, 12)]
    reports, bad = run_suites(jobs)
    dt = time.perf_counter() - t0
    criterion(not bad, summary(reports, dt))
    assert not bad, [r.to_text() for r in bad]


@pytest.mark.criterion("8 length oracle")
def test_criterion_8(criterion):
    t0 = time.perf_counter()
    reports, bad = run_suites([lambda n=n: verify.check_length_oracle(n, 8) for n in (1, 2, 3)])
    dt = time.perf_counter() - t0
    criterion(not bad, summary(reports, dt))
    assert not bad, [r.to_text() for r in bad]


def _random_coeff(rng, cls, n):
    width = n + 1 if cls is NovikovCoeff else n
    terms = [(tuple(rng.randint(-5, 5) for _ in range(width)), rng.randint(-9, 9))
             for _ in range(rng.randint(0, 8))]
    return cls(n, terms)


def _ring_axioms(rng, cases):
    fails = 0
    for i in range(cases):
        cls = LaurentCoeff if i % 2 else NovikovCoeff
        n = rng.randint(1, 4)
        a, b, c = (_random_coeff(rng, cls, n) for _ in range(3))
        ok = (a + b == b + a and (a + b) + c == a + (b + c)
              and a * b == b * a and (a * b) * c == a * (b * c)
              and a * (b + c) == a * b + a * c
              and a * cls.one(n) == a and a + cls.zero(n) == a and (a - a).is_zero())
        fails += not ok
    return fails


def _round_trip(rng, cases):
    from kpeterson.textio import print_coeff
    fails = 0
    for _ in range(cases):
        n = rng.randint(1, 4)
        x = _random_coeff(rng, NovikovCoeff, n)
        fails += parse_coeff(RootSystemC(n), print_coeff(x)) != x
    return fails


def _canonical(rng, cases):
    from kpeterson.textio import print_coeff
    fails = 0
    for _ in range(cases):
        n = rng.randint(1, 4)
        x = _random_coeff(rng, NovikovCoeff, n)
        # the same value built from shuffled, split-up terms
        pieces = []
        for key, c in x.items():
            extra = rng.randint(-3, 3)
            pieces += [(key, c - extra), (key, extra)]
        pieces.append((tuple(rng.randint(-5, 5) for _ in range(n + 1)), 0))
        rng.shuffle(pieces)
        y = NovikovCoeff(n, pieces)
        fails += not (y == x and print_coeff(y) == print_coeff(x) and y.to_json() == x.to_json())
    return fails


def _star(rng, cases):
    fails = 0
    for _ in range(cases):
        n = rng.randint(1, 10)
        parts = sorted(rng.sample(range(1, n + 1), rng.randint(0, n)), reverse=True)
        mu = StrictPartition(n, tuple(parts))
        fails += star(star(mu)) != mu
    return fails


@pytest.mark.criterion("9 property suites")
def test_criterion_9(criterion):
    cases = 1000
    rng = random.Random(20261016)
    fails = {
        "ring axioms": _ring_axioms(rng, cases),
        "parser round-trip": _round_trip(rng, cases),
        "canonical form": _canonical(rng, cases),
        "star involution": _star(rng, cases),
    }
    ok = not any(fails.values())
    criterion(ok, ", ".join(f"{k}: {cases} cases/{v} fail" for k, v in fails.items()))
    assert ok, fails
