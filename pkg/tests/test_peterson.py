import warnings

import pytest

from kpeterson.kring import AffineCombo, LaurentCoeff, NovikovCoeff, QuantumCombo
from kpeterson.peterson import (
    HomologyImage,
    NegativeQWarning,
    PetersonContext,
    degree_check,
    homology_transport,
    j_reduce,
    phi_combo,
    phi_grassmannian,
    phi_index,
    transport_product,
)
from kpeterson.shapes import PartitionPC, StrictPartition, enumerate_pc, enumerate_sp, x_of
from kpeterson.textio import DATASETS, bundled_dataset, load_relation
from kpeterson.weyl import AffineElement, simple_reflection

CTX = PetersonContext.of_rank(2)


def P(*parts, n=2):
    return PartitionPC(n, parts)


def S(*parts, n=2):
    return StrictPartition(n, parts)


def mono(*eps):
    return LaurentCoeff.monomial(eps)


def expected_chevalley():
    """O^(1) O^(2,1) = (1 - e^{-2eps1-2eps2}) O^(2,1) + e^{-2eps1-2eps2} Q O^(1)."""
    m = NovikovCoeff.monomial((-2, -2))
    return QuantumCombo(2, [(S(2, 1), 1 - m), (S(1), m.shift_q(1))])


def test_context():
    assert CTX.special == P(3)
    assert CTX.q_degree == 3
    with pytest.raises(ValueError):
        CTX.check(PartitionPC(3, (1,)))
    with pytest.raises(ValueError):
        PetersonContext.of_rank(0)


@pytest.mark.parametrize("lam, a, mu", [
    ((3, 3, 2, 1), 2, (2, 1)),
    ((2, 1), 0, (2, 1)),
    ((4, 2, 1), 1, (2, 1)),
    ((), 0, ()),
])
def test_j_reduce(lam, a, mu):
    assert j_reduce(CTX, P(*lam)) == (a, S(*mu))


@pytest.mark.parametrize("lam, k, q, mu", [
    ((3,), 0, -1, ()),
    ((2, 1), 0, -2, (2, 1)),
    ((), 0, 0, ()),
    ((3, 2), 0, -2, (1,)),
    ((3, 3, 2, 1), 1, -3, (2, 1)),
])
def test_phi_index(lam, k, q, mu):
    assert phi_index(CTX, P(*lam), k) == (q, S(*mu))


def test_phi_index_bijective_on_strict():
    for n in (1, 2, 3, 4, 5):
        ctx = PetersonContext.of_rank(n)
        images = {}
        for mu in enumerate_sp(ctx.sys):
            q, nu = phi_index(ctx, mu)
            assert q == -mu.length
            images[nu] = mu
        assert len(images) == 2 ** n


def test_phi_combo():
    x = AffineCombo(2, [((P(3, 2), 0), 1)])
    assert phi_combo(CTX, x) == QuantumCombo(2, [(S(1), NovikovCoeff.monomial((0, 0), -2))])
    assert phi_combo(CTX, AffineCombo(2)).is_zero()
    m = mono(-2, -2)
    y = AffineCombo(2, [((P(3, 3, 2), 0), m)])
    assert phi_combo(CTX, y) == QuantumCombo(2, [(S(1), m.to_novikov(-3))])
    # loc_exp d counts as k = -d
    z = AffineCombo(2, [((P(2, 1), -1), 1)])
    assert phi_combo(CTX, z) == QuantumCombo(2, [(S(2, 1), NovikovCoeff.monomial((0, 0), -1))])
    with pytest.raises(ValueError):
        phi_combo(CTX, AffineCombo(3))


def test_phi_grassmannian_examples():
    assert phi_grassmannian(CTX, AffineElement.identity(2)) == (0, S())
    assert phi_grassmannian(CTX, x_of(P(3))) == (-1, S())
    assert phi_grassmannian(CTX, x_of(P(2, 1))) == (-2, S(2, 1))
    with pytest.raises(ValueError):
        phi_grassmannian(CTX, simple_reflection(CTX.sys, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_grassmannian_matches_index(n):
    ctx = PetersonContext.of_rank(n)
    for lam in enumerate_pc(ctx.sys, 10):
        assert phi_grassmannian(ctx, x_of(lam)) == phi_index(ctx, lam)


def test_transport_chevalley():
    m = mono(-2, -2)
    rhs = AffineCombo(2, [((P(3, 3, 2, 1), 0), 1 - m), ((P(3, 3, 2), 0), m)])
    rel = transport_product(CTX, P(3, 2), P(2, 1), rhs)
    assert rel.lhs == (S(1), S(2, 1))
    assert rel.rhs == expected_chevalley()
    assert rel.min_q_exponent() == 0


def test_transport_three_term_product():
    m1, m2 = mono(-1, -1), mono(0, -2)
    rhs = AffineCombo(2, [
        ((P(3, 2), 0), mono(-2, -2)),
        ((P(3, 2, 1), 0), (m1 + m2) * (1 - m1)),
        ((P(4, 2, 1), 0), (1 - m2) * (1 - m1)),
    ])
    rel = transport_product(CTX, P(2), P(2, 1), rhs)
    assert rel.lhs == (S(1), S(2, 1))
    assert rel.rhs == expected_chevalley()


@pytest.mark.parametrize("name", DATASETS)
def test_bundled_datasets_transport(name):
    rf = load_relation(bundled_dataset(name))
    rel = transport_product(CTX, rf.lhs[0], rf.lhs[1], rf.rhs)
    assert rel.rhs == expected_chevalley()


def test_transport_single_term_has_q_zero():
    rhs = AffineCombo(2, [((P(3, 3, 2, 1), 0), 1)])
    rel = transport_product(CTX, P(3, 2), P(2, 1), rhs)
    assert rel.min_q_exponent() == 0


def test_transport_warns_on_negative_q():
    # Q exponent 2 + 2 - 1 - 5
    rhs = AffineCombo(2, [((P(1), 5), 1)])
    with pytest.warns(NegativeQWarning):
        rel = transport_product(CTX, P(3, 2), P(2, 1), rhs)
    assert rel.min_q_exponent() == -2


def test_transport_no_warning_when_fine():
    m = mono(-2, -2)
    rhs = AffineCombo(2, [((P(3, 3, 2, 1), 0), 1 - m), ((P(3, 3, 2), 0), m)])
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        transport_product(CTX, P(3, 2), P(2, 1), rhs)


def test_transport_rank_mismatch():
    with pytest.raises(ValueError):
        transport_product(CTX, P(1), P(1), AffineCombo(3))


@pytest.mark.parametrize("lam, k, want", [
    ((4,), 0, HomologyImage.zero()),
    ((3,), 0, HomologyImage(-1, S())),
    ((2, 1), 2, HomologyImage(0, S(2, 1))),
    ((4, 3), 1, HomologyImage.zero()),
])
def test_homology_transport(lam, k, want):
    assert homology_transport(CTX, P(*lam), k) == want


def test_homology_zero_flag():
    assert HomologyImage.zero().is_zero
    assert not HomologyImage(0, S()).is_zero


@pytest.mark.parametrize("lam, k", [((3,), 0), ((2, 1), 0), ((), 0), ((3, 3, 2, 1), 2), ((1,), -1)])
def test_degree_check(lam, k):
    assert degree_check(CTX, P(*lam), k)


def test_degree_check_arithmetic():
    # source |lambda| - k(n+1) and target q_exp(n+1) + |mu| cancel
    lam = P(2, 1)
    img = homology_transport(CTX, lam)
    assert (lam.size, img.q_exp * 3 + img.mu.size) == (3, -3)
