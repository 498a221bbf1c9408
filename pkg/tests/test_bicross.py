import random

import pytest

from supercm import bicross
from supercm.bicross import (HElement, h_antipode, h_coproduct, h_counit, h2_mul,
                             lambda_antipode, jet_reversion_classical)
from supercm.core import gen
from supercm.parse import parse


def h(text):
    return parse(text, "h")


def test_cross_relation():
    # (1 # X)(a2 # 1) = a2 # X + X |> a2
    assert h("X") * h("a2") == h("a2 # X + 3*a3 - 2*a2^2 - b1*c2")
    assert h("a2") * h("X") == h("a2 # X")


def test_odd_cross_sign():
    # (1 # U)(b1 # 1) = (U |> b1) # 1 - b1 # U
    assert h("U") * h("b1") == h("-2*a2 + d1") - h("b1 # U")


def test_coproduct_of_x():
    got = h_coproduct(h("X"))
    want = parse("1 # X (x) 1 # 1 + 1 # 1 (x) 1 # X + 2*1 # Y (x) a2 # 1 + 1 # Z (x) d1 # 1"
                 " + 1 # U (x) b1 # 1 + 2*1 # V (x) c2 # 1")
    assert got == want


def test_counit():
    assert h_counit(h("3 + a2 # X")) == 3


def test_antipode_negates_lowest_generators():
    for text in ("a2", "b1", "c2", "d1"):
        assert h_antipode(h(text)) == -h(text)


def test_multiplicative_on_samples():
    rng = random.Random(1)
    for _ in range(10):
        p, q = bicross.random_h_pair(rng, 4, 5)
        assert h_coproduct(p * q) == h2_mul(h_coproduct(p), h_coproduct(q))


def test_random_pairs_are_homogeneous():
    rng = random.Random(2)
    for _ in range(30):
        p, q = bicross.random_h_pair(rng, 5)
        for x in (p, q):
            assert len(x.terms) == 1
        total = sum(bicross.h_weight(k) for x in (p, q) for k in x.terms)
        assert 0 <= total <= 5


@pytest.mark.parametrize("n,value", [
    (1, "-a2"),
    (2, "-a3 + 2*a2^2"),
    (3, "-a4 + 5*a2*a3 - 5*a2^3"),
])
def test_lambda_sum(n, value):
    assert lambda_antipode(n) == parse(value, "f")
    assert jet_reversion_classical(n) == parse(value, "f")


def test_lambda_matches_quotient_up_to_a5():
    for n in range(1, 5):
        q = bicross.project_f(bicross.ffun.antipode(gen("a", n + 1)))
        assert q == lambda_antipode(n)


def test_compatibility_small():
    rep = bicross.verify_compatibility(max_index=4, samples=20, seed=4)
    assert rep.passed, rep.to_text()


def test_hopf_small():
    rep = bicross.verify_h_hopf(max_index=3, samples=10, seed=4)
    assert rep.passed, rep.to_text()


def test_classical():
    rep = bicross.verify_classical()
    assert rep.passed, rep.to_text()


def test_pair_constructors():
    x = HElement.pair(gen("a", 2), parse("X", "u"))
    assert x == h("a2 # X")
    assert HElement.from_f(gen("b", 1)) == h("b1 # 1")
