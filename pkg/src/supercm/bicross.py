"""The bicrossproduct H^s_1 = F(G^s_2) ># U(g^s_1).

Elements are sums of pure tensors a # h with a an F monomial and h a PBW
monomial.  The structure maps are

    (a # h)(b # g) = (-1)^{|h2||b|} a(h1 |> b) # h2 g
    Delta(a # h)   = (-1)^{|h1^(1)||a2|} a1 # h1^(1) (x) a2 h1^(2) # h2
    S(a # h)       = (-1)^{|h^(1)||a|} (1 # S(h^(1))) (S(a h^(2)) # 1)

with Delta_U(h) = h1 (x) h2, Delta_F(a) = a1 (x) a2 and nabla(h) = h^(1) (x) h^(2).
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from functools import lru_cache

from . import core, ffun
from .action import act, act_mono
from .coaction import UF, coact, coact_mono, coact_product
from .core import FSPACE, GradedTensor, LinComb, SuperPoly, format_sum, gen
from .uenv import (NAMES, USPACE, UEnvElement, _antipode_mono as u_antipode_mono,
                   _coproduct_mono as u_cop_mono, mono_mul as u_mono_mul,
                   mono_parity as u_par)

ONE_KEY = (core.ZERO_MONO, ())
HH = (FSPACE, USPACE, FSPACE, USPACE)


def _acc(out, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def _cross(h, b):
    """sum (-1)^{|h2||b|} (h1 |> b) # h2 over Delta(h)."""
    out = {}
    pb = core.mono_parity(b)
    for (h1, h2), c in u_cop_mono(h).terms.items():
        s = -1 if pb and u_par(h2) else 1
        for fk, fc in act_mono(h1, b).terms.items():
            _acc(out, (fk, h2), s * c * fc)
    return tuple(out.items())


@lru_cache(maxsize=None)
def mul_keys(k1, k2) -> tuple:
    (a, h), (b, g) = k1, k2
    out = {}
    for (fk, uk), c in _cross(h, b):
        sf, fm = core.kernels.mono_mul(a, fk)
        if not sf:
            continue
        for um, uc in u_mono_mul(uk, g):
            _acc(out, (fm, um), sf * c * uc)
    return tuple(out.items())


class _HSpace:
    name = "H"
    one = ONE_KEY
    legs = (FSPACE, USPACE)

    @staticmethod
    def parity(k):
        return core.mono_parity(k[0]) ^ u_par(k[1])

    @staticmethod
    def mul_keys(k1, k2):
        return dict(mul_keys(k1, k2))

    @staticmethod
    def mul_terms(t1, t2):
        out = {}
        for k1, c1 in t1.items():
            for k2, c2 in t2.items():
                for k, c in mul_keys(k1, k2):
                    _acc(out, k, c1 * c2 * c)
        return out

    @staticmethod
    def sort_key(k):
        return (FSPACE.sort_key(k[0]), USPACE.sort_key(k[1]))

    @staticmethod
    def format_key(k, style="text"):
        f = FSPACE.format_key(k[0], style) or "1"
        u = USPACE.format_key(k[1], style) or "1"
        if f == "1" and u == "1":
            return ""
        return f"{f} \\# {u}" if style == "latex" else f"{f} # {u}"

    @classmethod
    def format_terms(cls, items, style):
        return format_sum([(c, cls.format_key(k, style)) for k, c in items], style)

    @staticmethod
    def key_json(k):
        return {"f": FSPACE.key_json(k[0]), "u": USPACE.key_json(k[1])}


HSPACE = _HSpace()


class HElement(LinComb):
    """Element of H^s_1 as a sum of F-monomial # PBW-monomial pairs."""

    __slots__ = ()
    space = HSPACE

    @classmethod
    def pair(cls, a: SuperPoly, h: UEnvElement):
        out = {}
        for fk, fc in a.terms.items():
            for uk, uc in h.terms.items():
                _acc(out, (fk, uk), fc * uc)
        return cls._make(out)

    @classmethod
    def from_f(cls, a: SuperPoly):
        return cls.pair(a, UEnvElement.one())

    @classmethod
    def from_u(cls, h: UEnvElement):
        return cls.pair(SuperPoly.one(), h)


def h_mul(p: HElement, q: HElement) -> HElement:
    return p * q


def h_bracket(p: HElement, q: HElement) -> HElement:
    s = -1 if (p.parity() or 0) & (q.parity() or 0) else 1
    return p * q - (q * p).scale(s)


@lru_cache(maxsize=None)
def _coproduct_key(k) -> tuple:
    a, h = k
    out = {}
    da = ffun.coproduct(SuperPoly._make({a: 1})).terms
    for (h1, h2), hc in u_cop_mono(h).terms.items():
        for (u1, f1), nc in coact_mono(h1).terms.items():
            pu1 = u_par(u1)
            for (a1, a2), ac in da.items():
                s = -1 if pu1 and core.mono_parity(a2) else 1
                sf, fm = core.kernels.mono_mul(a2, f1)
                if sf:
                    _acc(out, (a1, u1, fm, h2), s * sf * hc * nc * ac)
    return tuple(out.items())


def h_coproduct(p: HElement) -> GradedTensor:
    out = {}
    for k, c in p.terms.items():
        for k2, c2 in _coproduct_key(k):
            _acc(out, k2, c * c2)
    return GradedTensor(HH, out)


def h_counit(p: HElement):
    return p.terms.get(ONE_KEY, 0)


@lru_cache(maxsize=None)
def _antipode_key(k) -> HElement:
    a, h = k
    pa = core.mono_parity(a)
    out = HElement.zero()
    for (u1, f1), c in coact_mono(h).terms.items():
        s = -1 if pa and u_par(u1) else 1
        left = HElement.from_u(u_antipode_mono(u1))
        sf, fm = core.kernels.mono_mul(a, f1)
        if not sf:
            continue
        right = HElement.from_f(ffun.antipode_mono(fm))
        out = out + (left * right).scale(s * sf * c)
    return out


def h_antipode(p: HElement) -> HElement:
    return p.map_keys(_antipode_key)


def h2_mul(s: GradedTensor, t: GradedTensor) -> GradedTensor:
    """Product in H (x) H: (x1 (x) x2)(y1 (x) y2) = (-1)^{|x2||y1|} x1y1 (x) x2y2."""
    out = {}
    for (f1, u1, f2, u2), c1 in s.terms.items():
        px2 = core.mono_parity(f2) ^ u_par(u2)
        for (g1, v1, g2, v2), c2 in t.terms.items():
            py1 = core.mono_parity(g1) ^ u_par(v1)
            sign = -1 if px2 & py1 else 1
            left = mul_keys((f1, u1), (g1, v1))
            if not left:
                continue
            right = mul_keys((f2, u2), (g2, v2))
            for (l1, l2), lc in left:
                for (r1, r2), rc in right:
                    _acc(out, (l1, l2, r1, r2), sign * c1 * c2 * lc * rc)
    return GradedTensor(HH, out)


def _mul_legs(t: GradedTensor, left=None, right=None) -> HElement:
    """m(left (x) right) applied to an H (x) H tensor."""
    out = {}
    for (f1, u1, f2, u2), c in t.terms.items():
        x = HElement._make({(f1, u1): 1})
        y = HElement._make({(f2, u2): 1})
        if left:
            x = left(x)
        if right:
            y = right(y)
        for k, v in HSPACE.mul_terms(x.terms, y.terms).items():
            _acc(out, k, c * v)
    return HElement(out)


def _coassoc_sides(t: GradedTensor):
    left = {}
    right = {}
    for (f1, u1, f2, u2), c in t.terms.items():
        for k, c2 in _coproduct_key((f1, u1)):
            _acc(left, k + (f2, u2), c * c2)
        for k, c2 in _coproduct_key((f2, u2)):
            _acc(right, (f1, u1) + k, c * c2)
    spaces = HH + (FSPACE, USPACE)
    return GradedTensor(spaces, left), GradedTensor(spaces, right)


def _counit_sides(t: GradedTensor):
    left = {}
    right = {}
    for (f1, u1, f2, u2), c in t.terms.items():
        if (f1, u1) == ONE_KEY:
            _acc(left, (f2, u2), c)
        if (f2, u2) == ONE_KEY:
            _acc(right, (f1, u1), c)
    return HElement(left), HElement(right)


# --------------------------------------------------------------------------
# the compatibility conditions
# --------------------------------------------------------------------------

def cond_delta_action(h: UEnvElement, a: SuperPoly):
    """Both sides of Delta(h|>a) = (-1)^{|a1|(|h1^(2)|+|h2|)} h1^(1)|>a1 (x) h1^(2)(h2|>a2)."""
    lhs = ffun.coproduct(act(h, a))
    out = {}
    da = ffun.coproduct(a).terms
    for hk, hc in h.terms.items():
        for (h1, h2), c1 in u_cop_mono(hk).terms.items():
            ph2 = u_par(h2)
            for (u1, f1), c2 in coact_mono(h1).terms.items():
                pf1 = core.mono_parity(f1)
                for (a1, a2), ca in da.items():
                    s = -1 if core.mono_parity(a1) & (pf1 ^ ph2) else 1
                    x = act_mono(u1, a1)
                    if not x:
                        continue
                    y = SuperPoly._make({f1: 1}) * act_mono(h2, a2)
                    for xk, xc in x.terms.items():
                        for yk, yc in y.terms.items():
                            _acc(out, (xk, yk), s * hc * c1 * c2 * ca * xc * yc)
    return lhs, GradedTensor(ffun.FF, out)


def cond_counit_action(h: UEnvElement, a: SuperPoly):
    return act(h, a).constant_term(), h.constant_term() * a.constant_term()


def cond_coaction_product(g: UEnvElement, h: UEnvElement):
    return coact(g * h), coact_product(g, h)


def cond_mixed(h: UEnvElement, a: SuperPoly):
    """Both sides of the mixed condition in U (x) F.

    (-1)^{|h1||h2^(1)| + |a||h2^(2)|} h2^(1) (x) (h1|>a) h2^(2)
        = h1^(1) (x) h1^(2) (h2|>a)
    """
    pa = a.parity() or 0
    left = {}
    right = {}
    for hk, hc in h.terms.items():
        for (h1, h2), c in u_cop_mono(hk).terms.items():
            ph1 = u_par(h1)
            ha = act(UEnvElement._make({h1: 1}), a)
            for (v1, v2), cv in coact_mono(h2).terms.items():
                s = (-1) ** (ph1 * u_par(v1) + pa * core.mono_parity(v2))
                prod = ha * SuperPoly._make({v2: 1})
                for fk, fc in prod.terms.items():
                    _acc(left, (v1, fk), s * hc * c * cv * fc)
            h2a = act(UEnvElement._make({h2: 1}), a)
            for (v1, v2), cv in coact_mono(h1).terms.items():
                prod = SuperPoly._make({v2: 1}) * h2a
                for fk, fc in prod.terms.items():
                    _acc(right, (v1, fk), hc * c * cv * fc)
    return GradedTensor(UF, left), GradedTensor(UF, right)


# --------------------------------------------------------------------------
# sampling
# --------------------------------------------------------------------------

def u_weight(m) -> int:
    """Eigenvalue of ad Y on a PBW monomial."""
    w = {0: 1, 1: 0, 2: 0, 3: 1, 4: -1, 5: 0}
    return sum(w[g] for g in m)


def random_pair(rng: random.Random, max_weight=5, max_index=6):
    """Random U element and homogeneous F element."""
    from .uenv import random_element as u_random

    h = u_random(rng, 2, terms=2)
    a = ffun.random_element(rng, max_weight, max_index=max_index)
    return h, a


def random_h(rng: random.Random, max_weight=5, max_index=6, parity=None):
    """Random parity-homogeneous element of H with F weight at most ``max_weight``."""
    from .uenv import pbw_monomials

    if parity is None:
        parity = rng.randrange(2)
    monos = pbw_monomials(2)
    out = {}
    for _ in range(2):
        u = rng.choice(monos)
        a = ffun.random_element(rng, max_weight, parity=parity ^ u_par(u),
                                terms=2, max_index=max_index)
        for fk, fc in a.terms.items():
            _acc(out, (fk, u), fc * rng.choice([-2, -1, 1, 2]))
    return HElement(out)


def random_h_monomial(rng: random.Random, max_weight=5, max_index=6, max_degree=2,
                      weight=None):
    """Random a # u with total weight (F weight plus ad Y eigenvalue) at most ``max_weight``."""
    from .uenv import pbw_monomials

    while True:
        u = rng.choice(pbw_monomials(max_degree))
        total = rng.randrange(0, max_weight + 1) if weight is None else weight
        w = total - u_weight(u)
        if w < 0:
            continue
        monos = ffun.monomials_of_weight(w, max_index)
        if w == 0:
            monos = sorted(monos) + [core.ZERO_MONO]
        if monos:
            return HElement._make({(rng.choice(sorted(monos)), u): rng.choice([-2, -1, 1, 2])})


def random_h_pair(rng: random.Random, max_weight=5, max_index=6):
    """Two random monomials whose weights add up to at most ``max_weight``."""
    total = rng.randrange(0, max_weight + 1)
    w1 = rng.randrange(0, total + 1)
    return (random_h_monomial(rng, max_index=max_index, weight=w1),
            random_h_monomial(rng, max_index=max_index, weight=total - w1))


def h_weight(k) -> int:
    return core.mono_weight(k[0]) + u_weight(k[1])


def h_generators(max_index):
    out = [(f"{f}{n}", HElement.from_f(gen(f, n))) for f, n in ffun.generators(max_index)]
    out += [(g, HElement.from_u(UEnvElement.gen(g))) for g in NAMES]
    return out


# --------------------------------------------------------------------------
# verification suites
# --------------------------------------------------------------------------

def verify_compatibility(max_index=6, samples=100, seed=42):
    from .report import Report

    rep = Report("compatibility conditions", seed=seed)
    ugens = [UEnvElement.gen(g) for g in NAMES]
    fgens = [gen(f, n) for f, n in ffun.generators(max_index)]
    rng = random.Random(seed)
    rand = [random_pair(rng, 5, max_index) for _ in range(samples)]
    pairs = [(h, a) for h in ugens for a in fgens] + rand

    def run(name, fn, items, detail):
        bad = None
        for h, a in items:
            lhs, rhs = fn(h, a)
            if lhs != rhs:
                bad = (str(h), str(a), str(lhs), str(rhs))
                break
        rep.add(name, bad is None, detail, bad)

    detail = f"{len(ugens) * len(fgens)} generator pairs + {samples} random pairs"
    run("Delta(h|>a) condition", cond_delta_action, pairs, detail)
    run("eps(h|>a) = eps(h)eps(a)", cond_counit_action, pairs, detail)
    run("mixed action/coaction condition", cond_mixed, pairs, detail)

    from .uenv import random_element as u_random
    upairs = [(g, h) for g in ugens for h in ugens]
    upairs += [(u_random(rng, 2, terms=2), u_random(rng, 2, terms=2)) for _ in range(samples)]
    run("nabla(gh) condition", cond_coaction_product, upairs,
        f"36 generator pairs + {samples} random pairs")
    one = coact(UEnvElement.one())
    rep.add("nabla(1) = 1 (x) 1", one.terms == {((), core.ZERO_MONO): 1})
    return rep


def verify_h_hopf(max_index=6, samples=100, seed=42):
    from .report import Report

    rep = Report("H^s_1 super Hopf axioms", seed=seed)
    gens = h_generators(max_index)
    rng = random.Random(seed)
    pairs = [(f"{l1}, {l2}", p, q) for (l1, p), (l2, q) in itertools.product(gens, repeat=2)]
    for _ in range(samples):
        p, q = random_h_pair(rng, 5, max_index)
        pairs.append((f"{p}, {q}", p, q))

    names = ("associativity", "Delta is multiplicative", "coassociativity", "counit laws",
             "eps is multiplicative", "antipode m(S x id)Delta", "antipode m(id x S)Delta",
             "S is an anti-homomorphism")
    bad = {k: None for k in names}

    def fail(name, info):
        if bad[name] is None:
            bad[name] = info

    for label, p, q in pairs:
        x = p * q
        r = gens[rng.randrange(len(gens))][1]
        if x * r != p * (q * r):
            fail("associativity", f"{label}, {r}")
        d = h_coproduct(x)
        if d != h2_mul(h_coproduct(p), h_coproduct(q)):
            fail("Delta is multiplicative", label)
        if h_counit(x) != h_counit(p) * h_counit(q):
            fail("eps is multiplicative", label)
        lhs, rhs = _coassoc_sides(d)
        if lhs != rhs:
            fail("coassociativity", label)
        left, right = _counit_sides(d)
        if left != x or right != x:
            fail("counit laws", label)
        e = HElement.const(h_counit(x))
        if _mul_legs(d, left=h_antipode) != e:
            fail("antipode m(S x id)Delta", label)
        if _mul_legs(d, right=h_antipode) != e:
            fail("antipode m(id x S)Delta", label)
        sign = -1 if (p.parity() or 0) & (q.parity() or 0) else 1
        if h_antipode(x) != (h_antipode(q) * h_antipode(p)).scale(sign):
            fail("S is an anti-homomorphism", label)

    detail = f"{len(gens) ** 2} generator pairs + {samples} random pairs"
    for name in names:
        rep.add(name, bad[name] is None, detail, bad[name])
    return rep


# --------------------------------------------------------------------------
# classical limit
# --------------------------------------------------------------------------

KERNEL_F = ("b", "c", "d")
KERNEL_U = (2, 3, 4, 5)


def project_f(x: SuperPoly) -> SuperPoly:
    """Kill every term with a b, c or d factor."""
    kill = {core.FAMILIES[f].rank for f in KERNEL_F}
    return x.substitute_zero(lambda g: core.decode(g)[0].rank in kill)


def project_u_key(m) -> bool:
    return not any(g in KERNEL_U for g in m)


def project_h(p: HElement) -> HElement:
    out = {}
    for (fk, uk), c in p.terms.items():
        if not project_u_key(uk):
            continue
        for k2, c2 in project_f(SuperPoly._make({fk: 1})).terms.items():
            _acc(out, (k2, uk), c * c2)
    return HElement(out)


def project_hh(t: GradedTensor) -> GradedTensor:
    out = {}
    for (f1, u1, f2, u2), c in t.terms.items():
        if not (project_u_key(u1) and project_u_key(u2)):
            continue
        p1 = project_f(SuperPoly._make({f1: 1}))
        p2 = project_f(SuperPoly._make({f2: 1}))
        if p1 and p2:
            _acc(out, (f1, u1, f2, u2), c)
    return GradedTensor(HH, out)


def lambda_antipode(n) -> SuperPoly:
    """Classical S(a_{n+1}) by the sum over Lambda."""
    out = SuperPoly.zero()
    for cs in _lambda_set(n):
        c1 = cs[0]
        coeff = Fraction((-1) ** (n - c1) * math.factorial(2 * n - c1) * math.factorial(c1),
                         math.factorial(n + 1) * math.prod(math.factorial(c) for c in cs))
        term = SuperPoly.const(coeff)
        for j, c in enumerate(cs, start=1):
            term = term * gen("a", j) ** c
        out = out + term
    return out


def _lambda_set(n):
    """Tuples (c_1..c_{n+1}) with sum c_j = n and sum j c_j = 2n."""
    out = []

    def rec(j, left, wleft, acc):
        if j > n + 1:
            if left == 0 and wleft == 0:
                out.append(tuple(acc))
            return
        for c in range(0, min(left, wleft // j) + 1):
            rec(j + 1, left - c, wleft - j * c, acc + [c])

    rec(1, n, 2 * n, [])
    return out


def jet_reversion_classical(n) -> SuperPoly:
    """Classical S(a_{n+1}) by reverting the even jet x + a_2 x^2 + ..."""
    from .jets import SuperJet, invert

    order = n + 1
    phi = SuperJet.universal(order)
    even = SuperJet(phi.A, [], [], [1], order)
    return invert(even).coefficient("a", n + 1)


def verify_classical(max_n=4, max_index=6):
    """Classical quotient checks; ``max_n`` bounds the delta relations."""
    from .report import Report

    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    rep = Report("classical limit")
    X = HElement.from_u(UEnvElement.gen("X"))
    Y = HElement.from_u(UEnvElement.gen("Y"))
    deltas = [None, HElement.from_f(gen("a", 2).scale(2))]
    for n in range(1, max_n):
        deltas.append(h_bracket(X, deltas[n]))
    rep.add("[Y, X] = X", h_bracket(Y, X) == X)
    bad = [n for n in range(1, max_n + 1) if h_bracket(Y, deltas[n]) != deltas[n].scale(n)]
    rep.add(f"[Y, delta_n] = n delta_n for n <= {max_n}", not bad, counterexample=bad or None)
    bad = [(m, n) for m in range(1, max_n + 1) for n in range(1, max_n + 1)
           if h_bracket(deltas[m], deltas[n])]
    rep.add(f"[delta_m, delta_n] = 0 for m, n <= {max_n}", not bad, counterexample=bad or None)

    one = HElement.one()
    want = (GradedTensor.pure(X, one) + GradedTensor.pure(one, X)
            + GradedTensor.pure(Y, deltas[1]))
    want = GradedTensor(HH, {(k[0][0], k[0][1], k[1][0], k[1][1]): c for k, c in
                             _pairs(want).items()})
    got = project_hh(h_coproduct(X))
    rep.add("quotient of Delta(X) = X(x)1 + 1(x)X + Y(x)delta_1", got == want,
            counterexample=None if got == want else str(got))
    d1 = project_hh(h_coproduct(deltas[1]))
    prim = _from_pairs({((deltas[1], one)): 1, ((one, deltas[1])): 1})
    rep.add("quotient of Delta(delta_1) is primitive", d1 == prim)
    s_x = project_h(h_antipode(X))
    rep.add("quotient of S(X) = Y delta_1 - X", s_x == project_h(Y * deltas[1] - X),
            counterexample=str(s_x))

    bad = None
    for n in range(1, max_n + 1):
        q = project_f(ffun.antipode(gen("a", n + 1)))
        lam = lambda_antipode(n)
        rev = jet_reversion_classical(n)
        if not (q == lam == rev):
            bad = bad or (f"a{n + 1}", str(q), str(lam), str(rev))
    rep.add(f"Lambda-sum antipode for a_2..a_{max_n + 1}", bad is None,
            "quotient of S, Lambda enumeration and jet reversion agree", bad)

    a2, a3, a4 = gen("a", 2), gen("a", 3), gen("a", 4)
    s3 = project_f(ffun.antipode(a3))
    s4 = project_f(ffun.antipode(a4))
    rep.add("S(a_3) maps to -a_3 + 2a_2^2", s3 == -a3 + (a2 * a2).scale(2), counterexample=str(s3))
    rep.add("S(a_4) maps to -a_4 + 5a_2a_3 - 5a_2^3",
            s4 == -a4 + (a2 * a3).scale(5) - (a2 ** 3).scale(5), counterexample=str(s4))

    # kernel is a coideal on both sides
    bad = None
    for f, n in ffun.generators(max_index):
        if f not in KERNEL_F:
            continue
        for (k1, k2) in ffun.coproduct_generator(f, n).terms:
            if project_f(SuperPoly._make({k1: 1})) and project_f(SuperPoly._make({k2: 1})):
                bad = bad or (f"{f}{n}", FSPACE.format_key(k1), FSPACE.format_key(k2))
    for g in KERNEL_U:
        for (k1, k2) in u_cop_mono((g,)).terms:
            if project_u_key(k1) and project_u_key(k2):
                bad = bad or (NAMES[g],)
    rep.add("kernel generators have a kernel leg in every coproduct term", bad is None,
            counterexample=bad)
    # [U, V] = -(Y + Z) puts Y in the ideal generated by Z, U, V, W
    uv = (UEnvElement.gen("U") * UEnvElement.gen("V") + UEnvElement.gen("V") * UEnvElement.gen("U")
          + UEnvElement.gen("Z"))
    rep.add("two-sided ideal of Z, U, V, W in U contains Y (projection on U is linear only)",
            uv == -UEnvElement.gen("Y"))
    rep.note("the U-side quotient map is the linear projection killing PBW monomials "
             "that contain Z, U, V or W")
    return rep


def _pairs(t: GradedTensor):
    return t.terms


def _from_pairs(d) -> GradedTensor:
    out = {}
    for (p, q), c in d.items():
        for k1, c1 in p.terms.items():
            for k2, c2 in q.terms.items():
                _acc(out, k1 + k2, c * c1 * c2)
    return GradedTensor(HH, out)
