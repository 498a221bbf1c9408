import pytest
from hypothesis import given, strategies as st

from supercm import _kernels_py as py
from supercm import kernels

try:
    from supercm import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_cython = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

odd_parts = st.lists(st.integers(1000, 1010), unique=True, max_size=5).map(
    lambda xs: tuple(sorted(xs)))
even_parts = st.lists(st.sampled_from([-2001, -2002, 10002, 10003, 12004]),
                      max_size=5).map(lambda xs: tuple(sorted(xs)))
monos = st.tuples(even_parts, odd_parts)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@given(odd_parts, odd_parts)
def test_merge_odd_is_sorted_concatenation(o1, o2):
    s, m = py.merge_odd(o1, o2)
    if set(o1) & set(o2):
        assert s == 0
    else:
        s2, m2 = py.sort_odd(o1 + o2)
        assert (s, m) == (s2, m2)


@given(st.lists(st.integers(0, 8), max_size=7))
def test_sort_odd_sign_is_permutation_parity(xs):
    s, m = py.sort_odd(xs)
    if len(set(xs)) < len(xs):
        assert s == 0
        return
    inversions = sum(1 for i in range(len(xs)) for j in range(i + 1, len(xs)) if xs[i] > xs[j])
    assert s == (-1) ** inversions
    assert m == tuple(sorted(xs))


def test_square_zero_even_repeat_vanishes():
    assert py.merge_even((-2001,), (-2001,)) is None
    assert py.merge_even((10002,), (10002,)) == (10002, 10002)


@given(monos, monos, monos)
def test_mono_mul_associative(a, b, c):
    def mul(x, y):
        if x is None or y is None:
            return 0, None
        return py.mono_mul(x, y)

    s1, ab = mul(a, b)
    s2, ab_c = mul(ab, c)
    s3, bc = mul(b, c)
    s4, a_bc = mul(a, bc)
    assert s1 * s2 == s3 * s4
    if s1 * s2:
        assert ab_c == a_bc


def test_koszul_exponent():
    assert py.koszul_exponent((0, 1), (1, 0)) == 1
    assert py.koszul_exponent((1, 0), (0, 1)) == 0
    assert py.koszul_exponent((1, 1, 1), (1, 1, 1)) == 3


@needs_cython
@given(monos, monos)
def test_compiled_mono_mul_agrees(a, b):
    assert cy.mono_mul(a, b) == py.mono_mul(a, b)


@needs_cython
@given(st.lists(st.integers(0, 9), max_size=7))
def test_compiled_sort_odd_agrees(xs):
    assert cy.sort_odd(xs) == py.sort_odd(xs)


@needs_cython
@given(st.dictionaries(monos, st.integers(-3, 3), max_size=4),
       st.dictionaries(monos, st.integers(-3, 3), max_size=4))
def test_compiled_poly_mul_agrees(t1, t2):
    t1 = {k: v for k, v in t1.items() if v}
    t2 = {k: v for k, v in t2.items() if v}
    assert cy.poly_mul(t1, t2) == py.poly_mul(t1, t2)


@needs_cython
@given(st.lists(st.integers(0, 1), min_size=3, max_size=3),
       st.lists(st.integers(0, 1), min_size=3, max_size=3))
def test_compiled_koszul_agrees(x, y):
    assert cy.koszul_exponent(tuple(x), tuple(y)) == py.koszul_exponent(tuple(x), tuple(y))
