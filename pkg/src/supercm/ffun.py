"""The super Hopf algebra F(G^s_2) of coordinates on G^s_2.

Coproducts of the generators come from closed-form sums over compositions;
the antipode is solved index by index from m(S (x) id)Delta = 0.
"""

from __future__ import annotations

import random
from functools import lru_cache

from . import core
from .core import FSPACE, GradedTensor, SuperPoly, decode, gen

FAMILY_NAMES = ("a", "b", "c", "d")
MAX_INDEX = 40
FF = (FSPACE, FSPACE)


class IndexBoundError(ValueError):
    pass


def _check_index(n, bound=None):
    bound = MAX_INDEX if bound is None else bound
    if n > bound:
        raise IndexBoundError(f"index {n} exceeds configured bound {bound}")


def first_index(family):
    return {"a": 2, "b": 1, "c": 2, "d": 1}[family]


def generators(max_index):
    """Non-degenerate generators ``(family, n)`` with ``n <= max_index``."""
    return [(f, n) for f in FAMILY_NAMES for n in range(first_index(f), max_index + 1)]


@lru_cache(maxsize=None)
def comp_sum(k, i) -> SuperPoly:
    """Sum over compositions l_1+...+l_k = i (l_j >= 1) of a_{l_1}...a_{l_k}."""
    if k == 0:
        return SuperPoly.one() if i == 0 else SuperPoly.zero()
    if i < k:
        return SuperPoly.zero()
    if k == 1:
        return gen("a", i)
    acc = SuperPoly.zero()
    for first in range(1, i - k + 2):
        acc = acc + gen("a", first) * comp_sum(k - 1, i - first)
    return acc


def _t(left, right, coeff=1):
    return GradedTensor.pure(left, right, coeff=coeff)


@lru_cache(maxsize=None)
def coproduct_generator(family, n) -> GradedTensor:
    """Delta of a generator from the four general composition sums."""
    if family not in FAMILY_NAMES:
        raise core.UnknownGeneratorError(f"unknown generator family {family!r}")
    _check_index(n)
    one = SuperPoly.one()
    val = core.FAMILIES[family].fixed_value(n)
    if val is not None:
        return _t(one, one, val) if val else GradedTensor(FF)
    P = comp_sum
    out = GradedTensor(FF)
    if family in ("a", "c"):
        if family == "c":
            out = out + _t(one, gen("c", n))
        lead = "a" if family == "a" else "c"
        cross = "b" if family == "a" else "d"
        for k in range(1, n + 1):
            out = out + _t(gen(lead, k), P(k, n))
        for i in range(1, n + 1):
            for k in range(1, i + 1):
                out = out + _t(gen(cross, k), P(k, i) * gen("c", n - i))
        return out
    # b and d share one shape
    lead, lin, first = ("a", "b", "b") if family == "b" else ("c", "d", "d")
    out = out + _t(one, gen(family, n))
    for i in range(1, n + 1):
        for k in range(1, i + 1):
            out = out + _t(gen(lead, k + 1), P(k, i) * gen("b", n - i), k + 1)
            out = out + _t(gen(lin, k), P(k, i) * gen("d", n - i))
    for i in range(1, n + 1):
        out = out - _t(gen(first, 1), gen("b", i) * gen("c", n - i))
        for j in range(1, i + 1):
            for k in range(1, j + 1):
                out = out - _t(gen(lin, k + 1),
                               P(k, j) * gen("b", i - j) * gen("c", n - i), k + 1)
    return out


@lru_cache(maxsize=None)
def _coproduct_mono(m) -> GradedTensor:
    acc = GradedTensor(FF, {(core.ZERO_MONO, core.ZERO_MONO): 1})
    for g, e in core.mono_factors(m):
        fam, idx = decode(g)
        dg = coproduct_generator(fam.name, idx)
        for _ in range(e):
            acc = acc * dg
    return acc


def coproduct(x: SuperPoly) -> GradedTensor:
    """Delta as a superalgebra map; monomials expand in canonical factor order."""
    out = {}
    for k, c in x.terms.items():
        for k2, c2 in _coproduct_mono(k).terms.items():
            out[k2] = out.get(k2, 0) + c * c2
    return GradedTensor(FF, out)


def counit(x: SuperPoly):
    return x.constant_term()


@lru_cache(maxsize=None)
def antipode_generator(family, n) -> SuperPoly:
    """S on a generator from m(S (x) id)Delta(gen) = 0."""
    _check_index(n)
    val = core.FAMILIES[family].fixed_value(n)
    if val is not None:
        return SuperPoly.const(val)
    me = core.gid(family, n)
    acc = SuperPoly.zero()
    for (k1, k2), c in coproduct_generator(family, n).terms.items():
        if k1 == ((me,), ()) or k1 == ((), (me,)):
            if k2 != core.ZERO_MONO:
                raise ArithmeticError(f"{family}{n} recurs in its own coproduct")
            continue
        if me in k1[0] or me in k1[1]:
            raise ArithmeticError(f"{family}{n} recurs in its own coproduct")
        acc = acc + (antipode_mono(k1) * SuperPoly._make({k2: 1})).scale(c)
    return -acc


@lru_cache(maxsize=None)
def antipode_mono(m) -> SuperPoly:
    # F is supercommutative, so S(xy) = (-1)^{|x||y|} S(y)S(x) = S(x)S(y)
    acc = SuperPoly.one()
    for g, e in core.mono_factors(m):
        fam, idx = decode(g)
        s = antipode_generator(fam.name, idx)
        for _ in range(e):
            acc = acc * s
    return acc


def antipode(x: SuperPoly) -> SuperPoly:
    return x.map_keys(antipode_mono)


def mul_legs(t: GradedTensor, left=None, right=None) -> SuperPoly:
    """m((left (x) right) t) for maps on the legs of an F (x) F tensor."""
    out = SuperPoly.zero()
    for (k1, k2), c in t.terms.items():
        x = SuperPoly._make({k1: 1})
        y = SuperPoly._make({k2: 1})
        if left:
            x = left(x)
        if right:
            y = right(y)
        out = out + (x * y).scale(c)
    return out


# --------------------------------------------------------------------------
# the inductive route through X-actions
# --------------------------------------------------------------------------

SIGN_RULES = [(e1, e2, e3) for e1 in (0, 1) for e2 in (0, 1) for e3 in (0, 1)]


def sign_rule_name(rule):
    names = ("|g1||a|", "|g2||a|", "|g1||g2|")
    used = [n for n, e in zip(names, rule) if e]
    return "(-1)^(" + " + ".join(used) + ")" if used else "no sign"


def lemma_rhs(g, a: SuperPoly, rule, s_of=None) -> SuperPoly:
    """sum over coaction terms of sign * (g1 |> S(a)) S(g2) for homogeneous ``a``."""
    from .action import act
    from .coaction import coact
    from .uenv import UEnvElement

    s_of = s_of or antipode
    pa = a.parity() or 0
    sa = s_of(a)
    out = SuperPoly.zero()
    for (uk, fk), c in coact(UEnvElement.gen(g)).terms.items():
        p1 = sum(1 for i in uk if i >= 3) & 1
        p2 = core.mono_parity(fk)
        e = rule[0] * p1 * pa + rule[1] * p2 * pa + rule[2] * p1 * p2
        term = act(UEnvElement._make({uk: 1}), sa) * s_of(SuperPoly._make({fk: 1}))
        out = out + term.scale(c * (-1) ** e)
    return out


def find_lemma_sign(max_index=4):
    """Sign rules under which S(g |> a) = sign (g1 |> S(a)) S(g2) holds.

    Tested for every generator g of U and every generator a with index up to
    ``max_index``.  Returns ``(valid_rules, first_counterexample_per_rule)``.
    """
    from .action import act
    from .uenv import NAMES, UEnvElement

    valid = []
    failures = {}
    for rule in SIGN_RULES:
        bad = None
        for g in NAMES:
            for fam, n in generators(max_index):
                a = gen(fam, n)
                lhs = antipode(act(UEnvElement.gen(g), a))
                rhs = lemma_rhs(g, a, rule)
                if lhs != rhs:
                    bad = (g, f"{fam}{n}", str(lhs), str(rhs))
                    break
            if bad:
                break
        if bad:
            failures[rule] = bad
        else:
            valid.append(rule)
    return valid, failures


def antipode_via_actions(max_index, rule=None) -> dict:
    """S on generators by induction on the index through X-actions.

    Only the base values S(a2)=-a2, S(b1)=-b1, S(c2)=-c2, S(d1)=-d1 are
    seeded; every higher generator is solved from its X-action formula using
    the lemma with the given sign rule.
    """
    from .action import act
    from .uenv import UEnvElement

    if rule is None:
        valid, _ = find_lemma_sign(min(max_index, 4))
        if not valid:
            raise ArithmeticError("no sign rule makes the antipode lemma hold")
        rule = valid[0]
    table = {}
    for fam in FAMILY_NAMES:
        for n in range(first_index(fam)):
            table[fam, n] = SuperPoly.const(core.FAMILIES[fam].fixed_value(n))
    for fam in ("a", "b", "c", "d"):
        table[fam, first_index(fam)] = -gen(fam, first_index(fam))

    def s_of(x: SuperPoly) -> SuperPoly:
        def one(m):
            acc = SuperPoly.one()
            for g, e in core.mono_factors(m):
                fam, idx = decode(g)
                for _ in range(e):
                    acc = acc * table[fam.name, idx]
            return acc
        return x.map_keys(one)

    X = UEnvElement.gen("X")
    for n in range(1, max_index):
        for fam in FAMILY_NAMES:
            if n < first_index(fam) or (fam, n + 1) in table:
                continue
            x = gen(fam, n)
            sx = lemma_rhs("X", x, rule, s_of)
            # X |> x = (n+1) x_{n+1} + rest, so x_{n+1} = (X |> x - rest)/(n+1)
            rest = act(X, x) - gen(fam, n + 1).scale(n + 1)
            table[fam, n + 1] = (sx - s_of(rest)).scale(core.Fraction(1, n + 1))
    return {k: v for k, v in table.items() if k[1] <= max_index}


# --------------------------------------------------------------------------
# sampling and verification
# --------------------------------------------------------------------------

def monomials_of_weight(w, max_index=6, max_factors=3):
    """Canonical F monomials of total weight ``w`` with a few factors."""
    gens = [core.gid(f, n) for f, n in generators(max_index)]
    out = set()

    def rec(start, factors, weight):
        if weight == w and factors:
            sign, key = _key(factors)
            if sign:
                out.add(key)
        if len(factors) == max_factors:
            return
        for i in range(start, len(gens)):
            g = gens[i]
            gw = core.gen_weight(g)
            if weight + gw <= w:
                rec(i, factors + [g], weight + gw)

    rec(0, [], 0)
    return sorted(out, key=FSPACE.sort_key)


def _key(gids):
    ev = tuple(sorted(g for g in gids if not decode(g)[0].odd))
    od = [g for g in gids if decode(g)[0].odd]
    if len(od) != len(set(od)):
        return 0, None
    return 1, (ev, tuple(sorted(od)))


def random_element(rng: random.Random, max_weight=5, parity=None, terms=3, max_index=6):
    """Random element homogeneous in weight (and parity when given)."""
    for _ in range(50):
        w = rng.randrange(0, max_weight + 1)
        monos = [m for m in monomials_of_weight(w, max_index)
                 if parity is None or core.mono_parity(m) == parity]
        if monos:
            break
    else:
        return SuperPoly.one()
    if parity is None:
        p = core.mono_parity(rng.choice(monos))
        monos = [m for m in monos if core.mono_parity(m) == p]
    out = {}
    for m in rng.sample(monos, min(terms, len(monos))):
        out[m] = rng.choice([-2, -1, 1, 2])
    return SuperPoly(out)


def random_pair(rng: random.Random, max_weight=5, max_index=6):
    """Two homogeneous elements whose weights add up to at most ``max_weight``."""
    x = random_element(rng, max_weight, max_index=max_index)
    w = core.mono_weight(next(iter(x.terms)))
    return x, random_element(rng, max_weight - w, max_index=max_index)


def _tensor3(t: GradedTensor, first: bool) -> GradedTensor:
    out = {}
    for (k1, k2), c in t.terms.items():
        src = k1 if first else k2
        for (s1, s2), c2 in _coproduct_mono(src).terms.items():
            key = (s1, s2, k2) if first else (k1, s1, s2)
            out[key] = out.get(key, 0) + c * c2
    return GradedTensor((FSPACE,) * 3, out)


def _counit_legs(t: GradedTensor):
    one = core.ZERO_MONO
    left = SuperPoly({k2: c for (k1, k2), c in t.terms.items() if k1 == one})
    right = SuperPoly({k1: c for (k1, k2), c in t.terms.items() if k2 == one})
    return left, right


def twisted_antipode_coproduct(x: SuperPoly) -> GradedTensor:
    """(-1)^{|x1||x2|} S(x2) (x) S(x1) summed over Delta(x)."""
    out = {}
    for (k1, k2), c in coproduct(x).terms.items():
        s = -1 if core.mono_parity(k1) & core.mono_parity(k2) else 1
        for j2, c2 in antipode_mono(k2).terms.items():
            for j1, c1 in antipode_mono(k1).terms.items():
                out[j2, j1] = out.get((j2, j1), 0) + s * c * c1 * c2
    return GradedTensor(FF, out)


def verify_f_hopf(max_index=6, samples=100, seed=42):
    from .report import Report

    rep = Report("F(G^s_2)", seed=seed)
    rng = random.Random(seed)
    elems = [(f"{f}{n}", gen(f, n)) for f, n in generators(max_index)]
    pairs = [random_pair(rng, 5, max_index) for _ in range(samples)]
    elems += [(f"({x})*({y})", x * y) for x, y in pairs]

    checks = {
        "coassociativity": None,
        "counit laws": None,
        "antipode axiom m(S x id)Delta": None,
        "antipode axiom m(id x S)Delta": None,
        "S is an anti-coalgebra map": None,
        "Delta preserves weight and bc-charge": None,
        "Delta is multiplicative": None,
    }

    def fail(name, *info):
        if checks[name] is None:
            checks[name] = info

    for label, x in elems:
        d = coproduct(x)
        if _tensor3(d, True) != _tensor3(d, False):
            fail("coassociativity", label)
        left, right = _counit_legs(d)
        if left != x or right != x:
            fail("counit laws", label, str(left), str(right))
        e = SuperPoly.const(counit(x))
        r1 = mul_legs(d, left=antipode)
        if r1 != e:
            fail("antipode axiom m(S x id)Delta", label, str(r1))
        r2 = mul_legs(d, right=antipode)
        if r2 != e:
            fail("antipode axiom m(id x S)Delta", label, str(r2))
        lhs = coproduct(antipode(x))
        rhs = twisted_antipode_coproduct(x)
        if lhs != rhs:
            fail("S is an anti-coalgebra map", label, str(lhs - rhs))
        grades = {(core.mono_weight(k), core.mono_charge(k)) for k in x.terms}
        if len(grades) == 1:
            w, q = grades.pop()
            for k1, k2 in d.terms:
                if (core.mono_weight(k1) + core.mono_weight(k2),
                        core.mono_charge(k1) + core.mono_charge(k2)) != (w, q):
                    fail("Delta preserves weight and bc-charge", label)
                    break

    for x, y in pairs:
        if coproduct(x * y) != coproduct(x) * coproduct(y):
            fail("Delta is multiplicative", str(x), str(y))

    detail = f"{len(generators(max_index))} generators + {samples} random pairs"
    for name, bad in checks.items():
        rep.add(name, bad is None, detail, bad)
    return rep
