"""Right coaction of F(G^s_2) on U(g^s_1).

Values on the six Lie generators are tabulated; on PBW monomials the
coaction is built by peeling off the leftmost letter with the rule

    nabla(gh) = (-1)^{|h1|(|g_(1)2| + |g_(2)|)} g_(1)1 h1 (x) g_(1)2 (g_(2) |> h2)

where nabla(h) = h1 (x) h2.
"""

from __future__ import annotations

import random
from functools import lru_cache

from . import core, ffun
from .action import act_mono
from .core import FSPACE, GradedTensor, SuperPoly, gen
from .uenv import (INDEX, NAMES, PARITY, USPACE, UEnvElement, _coproduct_mono as u_cop_mono,
                   mono_mul as u_mono_mul, mono_parity as u_par, pbw_monomials)

UF = (USPACE, FSPACE)
ONE_F = core.ZERO_MONO


def _uf(u_name_or_key, f: SuperPoly, c=1):
    key = (INDEX[u_name_or_key],) if isinstance(u_name_or_key, str) else u_name_or_key
    return GradedTensor(UF, {(key, fk): fc * c for fk, fc in f.terms.items()})


def _table():
    one = SuperPoly.one()
    t = {}
    t["X"] = (_uf("Y", gen("a", 2), 2) + _uf("X", one) + _uf("Z", gen("d", 1))
              + _uf("U", gen("b", 1)) + _uf("V", gen("c", 2), 2))
    for g in ("Y", "Z", "U", "V"):
        t[g] = _uf(g, one)
    t["W"] = _uf("Y", gen("b", 1)) + _uf("V", gen("d", 1)) + _uf("W", one)
    return t


COACTION_TABLE = _table()


def _acc(out, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _peel(gterms, hterms, g_index):
    """nabla(g h) from nabla(g) for a single generator g and nabla(h) = hterms.

    Delta(g) = g (x) 1 + 1 (x) g, so the rule splits into the coaction of g
    against h and the action of g on the F leg of nabla(h).
    """
    out = {}
    pg = PARITY[g_index]
    for (h1, h2), hc in hterms.items():
        ph1 = u_par(h1)
        # g_(1) = g, g_(2) = 1
        for (g1, g2), gc in gterms.items():
            s = -1 if ph1 & core.mono_parity(g2) else 1
            fprod = core.kernels.mono_mul(g2, h2)
            if not fprod[0]:
                continue
            for uk, uc in u_mono_mul(g1, h1):
                _acc(out, (uk, fprod[1]), s * fprod[0] * gc * hc * uc)
        # g_(1) = 1, g_(2) = g
        s = -1 if ph1 & pg else 1
        for fk, fc in act_mono((g_index,), h2).terms.items():
            _acc(out, (h1, fk), s * hc * fc)
    return out


@lru_cache(maxsize=None)
def coact_mono(m) -> GradedTensor:
    if not m:
        return GradedTensor(UF, {((), ONE_F): 1})
    g = m[0]
    rest = coact_mono(m[1:])
    return GradedTensor(UF, _peel(COACTION_TABLE[NAMES[g]].terms, rest.terms, g))


def coact(h: UEnvElement) -> GradedTensor:
    out = {}
    for k, c in h.terms.items():
        for k2, c2 in coact_mono(k).terms.items():
            _acc(out, k2, c * c2)
    return GradedTensor(UF, out)


def coact_word(letters) -> GradedTensor:
    """Coaction of a raw word, peeling letters without normalizing first."""
    cur = GradedTensor(UF, {((), ONE_F): 1})
    for g in reversed([INDEX[x] if isinstance(x, str) else x for x in letters]):
        cur = GradedTensor(UF, _peel(COACTION_TABLE[NAMES[g]].terms, cur.terms, g))
    return cur


def coact_product(g: UEnvElement, h: UEnvElement) -> GradedTensor:
    """Right-hand side of the extension rule for arbitrary g and h."""
    from .uenv import u_coproduct

    out = {}
    nh = coact(h)
    for (ga, gb), gc in u_coproduct(g).terms.items():
        pgb = u_par(gb)
        for (ga1, ga2), c1 in coact_mono(ga).terms.items():
            pga2 = core.mono_parity(ga2)
            for (h1, h2), hc in nh.terms.items():
                s = -1 if u_par(h1) & (pga2 ^ pgb) else 1
                acted = act_mono(gb, h2)
                if not acted:
                    continue
                left = SuperPoly._make({ga2: 1}) * acted
                for uk, uc in u_mono_mul(ga1, h1):
                    for fk, fc in left.terms.items():
                        _acc(out, (uk, fk), s * gc * c1 * hc * uc * fc)
    return GradedTensor(UF, out)


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------

def _coassoc_sides(t: GradedTensor):
    """((nabla x id)nabla, (id x Delta_F)nabla) as U (x) F (x) F tensors."""
    left = {}
    right = {}
    for (u, f), c in t.terms.items():
        for (u1, f1), c1 in coact_mono(u).terms.items():
            _acc(left, (u1, f1, f), c * c1)
        for (f1, f2), c2 in ffun.coproduct(SuperPoly._make({f: 1})).terms.items():
            _acc(right, (u, f1, f2), c * c2)
    spaces = (USPACE, FSPACE, FSPACE)
    return GradedTensor(spaces, left), GradedTensor(spaces, right)


def _comodule_coalgebra_sides(h_key):
    """Both sides of the comodule-coalgebra identity in U (x) U (x) F.

    LHS: h1_(1) (x) h1_(2) (x) h2.
    RHS: (-1)^{|h_(2)1||h_(1)2|} h_(1)1 (x) h_(2)1 (x) h_(1)2 h_(2)2.
    """
    left = {}
    for (u, f), c in coact_mono(h_key).terms.items():
        for (u1, u2), c1 in u_cop_mono(u).terms.items():
            _acc(left, (u1, u2, f), c * c1)
    right = {}
    for (x, y), c in u_cop_mono(h_key).terms.items():
        for (x1, x2), cx in coact_mono(x).terms.items():
            for (y1, y2), cy in coact_mono(y).terms.items():
                s = -1 if u_par(y1) & core.mono_parity(x2) else 1
                sm, fm = core.kernels.mono_mul(x2, y2)
                if sm:
                    _acc(right, (x1, y1, fm), s * sm * c * cx * cy)
    spaces = (USPACE, USPACE, FSPACE)
    return GradedTensor(spaces, left), GradedTensor(spaces, right)


def verify_comodule(max_degree=3, samples=100, seed=42):
    from .report import Report
    from .uenv import BRACKET, random_element, u_counit

    rep = Report("F(G^s_2)-comodule coalgebra U(g^s_1)", seed=seed)
    monos = pbw_monomials(max_degree)
    rng = random.Random(seed)
    samples_u = [UEnvElement({m: 1}) for m in monos]
    samples_u += [random_element(rng, max_degree, terms=3) for _ in range(samples)]

    bad = {k: None for k in ("coassociativity", "counit law", "comodule coalgebra",
                             "counit compatibility")}
    for idx, h in enumerate(samples_u):
        t = coact(h)
        lhs, rhs = _coassoc_sides(t)
        if lhs != rhs and bad["coassociativity"] is None:
            bad["coassociativity"] = (str(h), str(lhs - rhs))
        back = UEnvElement({u: c for (u, f), c in t.terms.items() if f == ONE_F})
        if back != h and bad["counit law"] is None:
            bad["counit law"] = (str(h), str(back))
        # eps_U(h1) h2 = eps_U(h) 1
        eps = SuperPoly({f: c for (u, f), c in t.terms.items() if u == ()})
        if eps != SuperPoly.const(u_counit(h)) and bad["counit compatibility"] is None:
            bad["counit compatibility"] = (str(h), str(eps))
        if idx < len(monos):
            l, r = _comodule_coalgebra_sides(monos[idx])
            if l != r and bad["comodule coalgebra"] is None:
                bad["comodule coalgebra"] = (USPACE.format_key(monos[idx]), str(l - r))
    rep.add("right comodule coassociativity", bad["coassociativity"] is None,
            f"{len(samples_u)} elements", bad["coassociativity"])
    rep.add("counit law (id x eps)nabla = id", bad["counit law"] is None,
            counterexample=bad["counit law"])
    rep.add("eps(h1)h2 = eps(h)1", bad["counit compatibility"] is None,
            counterexample=bad["counit compatibility"])
    rep.add("comodule coalgebra condition", bad["comodule coalgebra"] is None,
            f"PBW monomials of degree <= {max_degree}", bad["comodule coalgebra"])

    # extension rule against the PBW-defined coaction, and brackets
    b_ext = None
    for gi in range(6):
        g = UEnvElement.gen(NAMES[gi])
        for m in pbw_monomials(max_degree - 1):
            h = UEnvElement({m: 1})
            if coact(g * h) != coact_product(g, h):
                b_ext = b_ext or (NAMES[gi], USPACE.format_key(m))
    rep.add("extension rule is consistent with PBW relations", b_ext is None,
            counterexample=b_ext)
    b_br = None
    for gi in range(6):
        for hi in range(6):
            g, h = UEnvElement.gen(NAMES[gi]), UEnvElement.gen(NAMES[hi])
            s = -1 if PARITY[gi] & PARITY[hi] else 1
            word_side = coact_word((gi, hi)) - coact_word((hi, gi)).scale(s)
            br = UEnvElement({(k,): c for k, c in BRACKET[gi, hi].items()})
            if word_side != coact(br):
                b_br = b_br or (NAMES[gi] + NAMES[hi], str(word_side), str(coact(br)))
    rep.add("bracket consistency of nabla on generator pairs", b_br is None, counterexample=b_br)
    vw = coact_word("VW") + coact_word("WV")
    rep.add("nabla(VW) + nabla(WV) = 0", not vw, counterexample=str(vw) if vw else None)
    return rep
