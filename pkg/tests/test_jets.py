import pytest

from supercm import jets
from supercm.core import SuperPoly, gen
from supercm.jets import (AffineSuper, InvertibilityError, SuperJet, TruncationError, compose,
                          exp_affine, factorize, invert, mat_mul, pi1, pi2, supermatrix_inv)


def test_identity_is_neutral():
    phi = SuperJet.universal(5)
    ident = SuperJet.identity(5)
    assert compose(phi, ident) == phi
    assert compose(ident, phi) == phi


def test_composition_associative():
    p = [SuperJet.universal(5, k) for k in range(3)]
    assert compose(compose(p[0], p[1]), p[2]) == compose(p[0], compose(p[1], p[2]))


def test_order_mismatch():
    with pytest.raises(TruncationError):
        compose(SuperJet.universal(4), SuperJet.universal(5))


@pytest.mark.parametrize("order", [2, 4, 6])
def test_inverse_two_sided(order):
    phi = SuperJet.universal(order)
    inv = invert(phi)
    assert compose(phi, inv) == SuperJet.identity(order)
    assert compose(inv, phi) == SuperJet.identity(order)


def test_non_invertible():
    with pytest.raises(InvertibilityError):
        invert(SuperJet([0, 0, 1], [], [], [1], 3))


@pytest.mark.parametrize("order", range(2, 8))
def test_factorization_recomposes(order):
    Phi = SuperJet.generic(order)
    sigma, phi2 = factorize(Phi)
    assert sigma == pi1(Phi)
    assert phi2 == pi2(Phi)
    assert phi2.in_G2()
    assert compose(sigma.to_jet(order), phi2) == Phi


def test_supermatrix_inverse():
    M = AffineSuper.generic().matrix()
    one, zero = SuperPoly.one(), SuperPoly.zero()
    assert mat_mul(M, supermatrix_inv(M)) == ((one, zero), (zero, one))


def test_affine_group():
    s = AffineSuper.generic()
    assert s.compose(s.inverse()) == AffineSuper()


@pytest.mark.parametrize("g", ["X", "Y", "Z"])
def test_even_exponentials_need_even_parameter(g):
    with pytest.raises(ValueError):
        exp_affine(g, gen("tau", 0))


def test_exponentials():
    t, tau = gen("t", 0), gen("tau", 0)
    assert exp_affine("X", t) == AffineSuper(e=t)
    assert exp_affine("Y", t) == AffineSuper(a=SuperPoly.one() + t)
    assert exp_affine("V", tau) == AffineSuper(c=-tau)
    assert exp_affine("W", tau) == AffineSuper(f=-tau)


def test_lemmas_report():
    rep = jets.verify_lemmas(5)
    assert rep.passed, rep.to_text()
    assert any("adopted convention" in n for n in rep.notes)


def test_antipode_coherence_report():
    rep = jets.verify_antipode_coherence(5)
    assert rep.passed, rep.to_text()
