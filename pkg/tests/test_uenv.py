import itertools

import pytest

from supercm.core import tensor
from supercm.parse import parse
from supercm.uenv import (NAMES, PARITY, UEnvElement, bracket, pbw_monomials, pbw_normalize,
                          u_antipode, u_coproduct, u_counit, verify_u)

G = {n: UEnvElement.gen(n) for n in NAMES}

TABLE = [
    ("X", "Y", "-X"), ("X", "V", "-W"), ("Y", "U", "U"), ("Y", "V", "-V"),
    ("Z", "U", "-U"), ("Z", "V", "V"), ("Z", "W", "W"), ("U", "V", "-Y - Z"), ("U", "W", "-X"),
]


@pytest.mark.parametrize("g,h,value", TABLE)
def test_bracket_table(g, h, value):
    assert bracket(G[g], G[h]) == parse(value)


def test_vanishing_brackets():
    listed = {(g, h) for g, h, _ in TABLE}
    for g, h in itertools.combinations(NAMES, 2):
        if (g, h) not in listed:
            assert not bracket(G[g], G[h]), (g, h)
    for g in ("V", "W"):
        assert not bracket(G[g], G[g])
    # U is odd, so [U, U] = 2U^2 is not a relation of the algebra
    assert bracket(G["U"], G["U"]) == (G["U"] * G["U"]).scale(2)


def test_normal_forms():
    assert str(G["V"] * G["U"]) == "-U*V - Y - Z"
    assert str(G["Y"] * G["X"]) == "X*Y + X"
    assert str(G["X"] * G["Y"]) == "X*Y"
    assert not G["V"] * G["V"]


@pytest.mark.parametrize("word", ["VU", "WVU", "XWUV", "UVWUY", "VXWZU"])
def test_rewriting_is_confluent(word):
    ins = pbw_normalize(word, "insertion")
    assert pbw_normalize(word, "leftmost") == ins
    assert pbw_normalize(word, "rightmost") == ins


def test_generators_primitive():
    one = UEnvElement.one()
    for g in NAMES:
        assert u_coproduct(G[g]) == tensor(G[g], one) + tensor(one, G[g])
        assert u_antipode(G[g]) == -G[g]
        assert u_counit(G[g]) == 0


def test_antipode_reverses_with_sign():
    u, v = G["U"], G["V"]
    # S(UV) = (-1)^{|U||V|} S(V)S(U) = -VU
    assert u_antipode(u * v) == -(v * u)


def test_pbw_basis_size():
    # degree two: even squares and pairs, distinct odd pairs, mixed pairs
    monos = pbw_monomials(2)
    assert len([m for m in monos if len(m) == 2]) == 3 * 4 // 2 + 3 + 3 * 3


def test_parity():
    assert [PARITY[i] for i in range(6)] == [0, 0, 0, 1, 1, 1]


def test_verify_u():
    rep = verify_u(sample_count=30, seed=5, max_degree=3)
    assert rep.passed, rep.to_text()
