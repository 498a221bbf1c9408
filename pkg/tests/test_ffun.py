import random

import pytest

from golden import COPRODUCTS
from supercm import ffun, jets
from supercm.core import FSPACE, SuperPoly, gen
from supercm.ffun import (antipode, antipode_via_actions, coproduct, coproduct_generator,
                          counit, find_lemma_sign, generators, mul_legs)
from supercm.parse import parse

FF = (FSPACE, FSPACE)


@pytest.mark.parametrize("fam,n", sorted(COPRODUCTS))
def test_low_index_coproducts(fam, n):
    assert coproduct(gen(fam, n)) == parse(COPRODUCTS[fam, n], spaces=FF)


@pytest.mark.parametrize("fam,n", generators(6))
def test_coproduct_matches_jet_composition(fam, n):
    assert coproduct_generator(fam, n) == jets.oracle_coproduct(fam, n)


@pytest.mark.parametrize("fam,n", generators(6))
def test_antipode_matches_jet_inverse(fam, n):
    assert antipode(gen(fam, n)) == jets.oracle_antipode(fam, n)


def test_antipode_a3():
    a2, a3 = gen("a", 2), gen("a", 3)
    assert antipode(a3) == -a3 + gen("b", 1) * gen("c", 2) + (a2 * a2).scale(2)


def test_degenerate_generators():
    assert gen("a", 1) == SuperPoly.one()
    assert gen("d", 0) == SuperPoly.one()
    assert not gen("a", 0)
    assert not gen("c", 1)
    assert not gen("b", 0)


def test_index_bound():
    with pytest.raises(ffun.IndexBoundError):
        coproduct_generator("a", ffun.MAX_INDEX + 1)


def test_counit():
    assert counit(SuperPoly.one()) == 1
    assert counit(gen("a", 2) + SuperPoly.const(3)) == 3


def test_antipode_axioms_on_products():
    rng = random.Random(7)
    for _ in range(20):
        x = ffun.random_element(rng, 4) * ffun.random_element(rng, 3)
        e = SuperPoly.const(counit(x))
        d = coproduct(x)
        assert mul_legs(d, left=antipode) == e
        assert mul_legs(d, right=antipode) == e


def test_exactly_one_lemma_sign():
    valid, failures = find_lemma_sign(4)
    assert valid == [(0, 1, 0)]
    assert len(failures) == 7


def test_inductive_antipode():
    table = antipode_via_actions(6)
    for fam, n in generators(6):
        assert table[fam, n] == antipode(gen(fam, n)), (fam, n)


def test_verify_f_hopf_small():
    rep = ffun.verify_f_hopf(max_index=5, samples=15, seed=3)
    assert rep.passed, rep.to_text()
