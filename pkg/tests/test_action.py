import pytest

from supercm import jets
from supercm.action import ACTION_TABLE_SIZE, act, act_generator, verify_module_algebra
from supercm.core import SuperPoly, gen
from supercm.ffun import generators
from supercm.parse import parse
from supercm.uenv import BRACKET, NAMES, PARITY, UEnvElement

G = {n: UEnvElement.gen(n) for n in NAMES}
GENS6 = generators(6)


@pytest.mark.parametrize("g", NAMES)
def test_table_matches_derivative_oracle(g):
    for fam, n in GENS6:
        assert act_generator(g, fam, n) == jets.oracle_action(g, fam, n), (g, fam, n)


def test_table_size():
    assert ACTION_TABLE_SIZE == len(NAMES) * 4


@pytest.mark.parametrize("u,f,value", [
    ("W", "c3", "d1*a3 - d3"),
    ("X", "a2", "3*a3 - 2*a2^2 - b1*c2"),
    ("U", "b2", "-3*a3 + d2"),
    ("V", "c2", "a2 - d1"),
    ("Y", "a4", "3*a4"),
    ("Z", "c2", "-c2"),
])
def test_table_entries(u, f, value):
    assert act(G[u], parse(f, "f")) == parse(value, "f")


def _commutator(g, h, x):
    s = -1 if PARITY[NAMES.index(g)] and PARITY[NAMES.index(h)] else 1
    return act(G[g], act(G[h], x)) - act(G[h], act(G[g], x)).scale(s)


@pytest.mark.parametrize("n", range(2, 7))
def test_y_x_bracket_on_a(n):
    # [Y, X] = X, so the commutator of actions on a_n is X |> a_n
    a = gen("a", n)
    assert _commutator("Y", "X", a) == act(G["X"], a)


@pytest.mark.parametrize("n", range(1, 7))
def test_u_w_bracket_on_d(n):
    # [U, W] = -X
    d = gen("d", n)
    assert _commutator("U", "W", d) == -act(G["X"], d)


def test_all_brackets_consistent():
    for (g, h), br in BRACKET.items():
        elem = UEnvElement({(k,): c for k, c in br.items()})
        for fam, n in GENS6:
            x = gen(fam, n)
            assert act(elem, x) == _commutator(NAMES[g], NAMES[h], x), (g, h, fam, n)


def test_unit_and_counit():
    assert act(G["X"], SuperPoly.one()) == SuperPoly.zero()
    assert act(UEnvElement.one(), gen("b", 2)) == gen("b", 2)


def test_verify_module_algebra():
    rep = verify_module_algebra(max_index=5, samples=30, seed=11)
    assert rep.passed, rep.to_text()
