from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supercm import ffun
from supercm.bicross import HElement
from supercm.core import SuperPoly, gen
from supercm.parse import ParseError, parse, tokenize
from supercm.uenv import UEnvElement


def test_polynomial_with_two_terms():
    x = parse("a2*b1 + 3/2")
    assert isinstance(x, SuperPoly)
    assert len(x.terms) == 2
    assert x.constant_term() == Fraction(3, 2)


def test_degenerate_names():
    assert parse("a1", "f") == SuperPoly.one()
    assert parse("c1", "f") == SuperPoly.zero()


def test_u_elements():
    assert parse("X*Y") == parse("Y*X - X")
    assert str(parse("V*U")) == "-U*V - Y - Z"


def test_precedence():
    assert parse("-a2^2") == -(gen("a", 2) ** 2)
    assert parse("2*a2 + a3*a2") == gen("a", 2).scale(2) + gen("a", 3) * gen("a", 2)
    assert parse("(a2 + a3)^2") == (gen("a", 2) + gen("a", 3)) ** 2
    x = parse("a2 # X (x) b1 # 1")
    assert x.arity == 4


def test_mixed_products_live_in_h():
    assert isinstance(parse("X*a2"), HElement)
    assert parse("a2 + X", "h") == parse("a2 # 1 + 1 # X")


def test_tokens_have_positions():
    toks = tokenize("a2 (x) b1")
    assert [t[2] for t in toks] == [0, 3, 7, 9]


@pytest.mark.parametrize("text,pos", [
    ("a2 +", 4),
    ("(a2", 3),
    ("a2 $ b1", 3),
    ("e3", 0),
    ("a2 ^ b1", 5),
    ("a41", 0),
    ("X*Y)", 3),
    ("", 0),
])
def test_errors_report_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.pos == pos
    assert "^" in str(err.value)


def test_type_errors():
    with pytest.raises(ParseError):
        parse("X # a2")
    with pytest.raises(ParseError):
        parse("a2 / b1")
    with pytest.raises(ParseError):
        parse("1 (x) 1")


ATOMS = ["a2", "a3", "b1", "b2", "c2", "c3", "d1", "d2", "1", "2", "3/2"]


@st.composite
def f_texts(draw):
    terms = []
    for _ in range(draw(st.integers(1, 3))):
        factors = draw(st.lists(st.sampled_from(ATOMS), min_size=1, max_size=3))
        terms.append("*".join(factors))
    return " + ".join(terms)


@settings(max_examples=80)
@given(f_texts())
def test_print_parse_roundtrip_f(text):
    x = parse(text, "f")
    assert parse(str(x), "f") == x


@settings(max_examples=40)
@given(st.lists(st.sampled_from("XYZUVW"), min_size=1, max_size=4))
def test_print_parse_roundtrip_u(letters):
    x = parse("*".join(letters), "u")
    assert parse(str(x), "u") == x
    assert isinstance(x, UEnvElement)


@pytest.mark.parametrize("fam,n", ffun.generators(4))
def test_print_parse_roundtrip_tensors(fam, n):
    d = ffun.coproduct(gen(fam, n) * gen("a", 2))
    assert parse(str(d)) == d
