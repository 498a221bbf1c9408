from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supercm.core import (FSPACE, ArityError, GradedTensor, SuperPoly, format_rational, gen,
                          grading, normalize_monomial, rational, tensor, tensor_mul)

GENS = [("a", 2), ("a", 3), ("b", 1), ("b", 2), ("c", 2), ("c", 3), ("d", 1), ("d", 2)]


@st.composite
def polys(draw):
    out = SuperPoly.zero()
    for _ in range(draw(st.integers(0, 3))):
        term = SuperPoly.const(draw(st.integers(-3, 3)))
        for f, n in draw(st.lists(st.sampled_from(GENS), max_size=3)):
            term = term * gen(f, n)
        out = out + term
    return out


def test_rational_helpers():
    assert rational(Fraction(4, 2)) == 2
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(2) == "2/1"


def test_odd_generators_anticommute():
    b1, c2 = gen("b", 1), gen("c", 2)
    assert b1 * c2 == -(c2 * b1)
    assert not b1 * b1


def test_normalize_monomial_sign():
    s1, k1 = normalize_monomial([("c", 2), ("b", 1)])
    s2, k2 = normalize_monomial([("b", 1), ("c", 2)])
    assert k1 == k2 and s1 == -s2
    assert normalize_monomial([("b", 1), ("b", 1)])[0] == 0
    assert normalize_monomial([("c", 1)])[0] == 0
    assert normalize_monomial([("a", 1), ("a", 2, 2)]) == (1, ((10002, 10002), ()))


@settings(max_examples=60)
@given(polys(), polys(), polys())
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x


@settings(max_examples=60)
@given(polys(), polys())
def test_supercommutativity(x, y):
    for gx in grading(x):
        for gy in grading(y):
            px = SuperPoly._make({k: c for k, c in x.terms.items()
                                  if FSPACE.parity(k) == gx.parity})
            py = SuperPoly._make({k: c for k, c in y.terms.items()
                                  if FSPACE.parity(k) == gy.parity})
            sign = -1 if gx.parity and gy.parity else 1
            assert px * py == (py * px).scale(sign)


def test_formatting_is_canonical():
    x = gen("a", 2) ** 2 * gen("b", 1) - gen("c", 2).scale(Fraction(3, 2))
    assert str(x) == "-3/2*c2 + a2^2*b1"
    assert x.to_latex() == "-\\frac{3}{2} c_{2} + a_{2}^{2}b_{1}"


def test_json_schema():
    x = gen("a", 2) ** 2 * gen("b", 1)
    assert x.to_json() == [{"coeff": "1/1", "even": [["a", 2, 2]], "odd": [["b", 1]]}]


def test_tensor_koszul_sign():
    b1, c2 = gen("b", 1), gen("c", 2)
    one = SuperPoly.one()
    left = tensor(one, b1)
    right = tensor(c2, one)
    # (1 (x) b1)(c2 (x) 1) = (-1)^{|b1||c2|} c2 (x) b1
    assert tensor_mul(left, right) == tensor(c2, b1).scale(-1)
    assert tensor_mul(right, left) == tensor(c2, b1)


def test_tensor_arity_mismatch():
    one = SuperPoly.one()
    with pytest.raises(ArityError):
        tensor(one, one) + GradedTensor.pure(one)
