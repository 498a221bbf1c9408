import pytest

from supercm import jets
from supercm.coaction import COACTION_TABLE, coact, coact_product, coact_word, verify_comodule
from supercm.core import FSPACE
from supercm.parse import parse
from supercm.uenv import NAMES, USPACE, UEnvElement

UF = (USPACE, FSPACE)
G = {n: UEnvElement.gen(n) for n in NAMES}


@pytest.mark.parametrize("h,value", [
    ("X", "X (x) 1 + 2*Y (x) a2 + Z (x) d1 + U (x) b1 + 2*V (x) c2"),
    ("Y", "Y (x) 1"),
    ("W", "Y (x) b1 + V (x) d1 + W (x) 1"),
])
def test_generator_coactions(h, value):
    assert COACTION_TABLE[h] == parse(value, spaces=UF)


@pytest.mark.parametrize("h", NAMES)
def test_coaction_tangent_oracle(h):
    actual, predicted = jets.oracle_coaction(h)
    assert actual == predicted


def test_vw_antisymmetry():
    assert coact_word("VW") == parse("Y*V (x) b1 + V*W (x) 1", spaces=UF)
    assert not coact_word("VW") + coact_word("WV")


def test_product_rule_on_pairs():
    for g in NAMES:
        for h in NAMES:
            assert coact(G[g] * G[h]) == coact_product(G[g], G[h]), (g, h)


def test_unit():
    assert coact(UEnvElement.one()) == parse("1 (x) 1", spaces=UF)


def test_verify_comodule():
    rep = verify_comodule(max_degree=2, samples=20, seed=9)
    assert rep.passed, rep.to_text()
