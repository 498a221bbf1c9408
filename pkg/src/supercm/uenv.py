"""The enveloping superalgebra U(g^s_1) in PBW normal form.

A PBW monomial is stored as a non-decreasing tuple of generator indices
(0..5 for X, Y, Z, U, V, W); odd generators occur at most once.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .core import GradedTensor, LinComb, format_sum

NAMES = ("X", "Y", "Z", "U", "V", "W")
INDEX = {n: i for i, n in enumerate(NAMES)}
PARITY = (0, 0, 0, 1, 1, 1)


def parity_of(g) -> int:
    return PARITY[g]


# Brackets [g, h] for g < h in the fixed order; everything unlisted vanishes.
_BRACKET_SRC = {
    ("X", "Y"): {"X": -1},
    ("X", "V"): {"W": -1},
    ("Y", "U"): {"U": 1},
    ("Y", "V"): {"V": -1},
    ("Z", "U"): {"U": -1},
    ("Z", "V"): {"V": 1},
    ("Z", "W"): {"W": 1},
    ("U", "V"): {"Y": -1, "Z": -1},
    ("U", "W"): {"X": -1},
}


def _build_brackets():
    table = {}
    for g in range(6):
        for h in range(6):
            table[g, h] = {}
    for (gn, hn), val in _BRACKET_SRC.items():
        g, h = INDEX[gn], INDEX[hn]
        table[g, h] = {INDEX[k]: c for k, c in val.items()}
        s = -1 if PARITY[g] & PARITY[h] else 1
        table[h, g] = {INDEX[k]: -s * c for k, c in val.items()}
    return table


BRACKET = _build_brackets()


def bracket_gens(g, h) -> dict:
    """[g, h] as ``{generator index: coeff}``."""
    return dict(BRACKET[g, h])


def mono_parity(m) -> int:
    return sum(PARITY[g] for g in m) & 1


def _add(out, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def mono_times_gen(m: tuple, g: int) -> tuple:
    """PBW form of ``m * g`` as a tuple of ``(monomial, coeff)`` pairs."""
    if not m or m[-1] < g:
        return ((m + (g,), 1),)
    last = m[-1]
    if last == g:
        if PARITY[g]:
            return ()
        return ((m + (g,), 1),)
    # m' l g = +/- m' g l + m' [l, g]
    rest = m[:-1]
    sign = -1 if PARITY[last] & PARITY[g] else 1
    out = {}
    for k, c in mono_times_gen(rest, g):
        for k2, c2 in mono_times_gen(k, last):
            _add(out, k2, sign * c * c2)
    for h, c in BRACKET[last, g].items():
        for k2, c2 in mono_times_gen(rest, h):
            _add(out, k2, c * c2)
    return tuple(out.items())


@lru_cache(maxsize=None)
def mono_mul(m1: tuple, m2: tuple) -> tuple:
    cur = {m1: 1}
    for g in m2:
        nxt = {}
        for k, c in cur.items():
            for k2, c2 in mono_times_gen(k, g):
                _add(nxt, k2, c * c2)
        cur = nxt
    return tuple(cur.items())


class _USpace:
    name = "U"
    one = ()

    @staticmethod
    def parity(k):
        return mono_parity(k)

    @staticmethod
    def mul_keys(k1, k2):
        return dict(mono_mul(k1, k2))

    @staticmethod
    def mul_terms(t1, t2):
        out = {}
        for k1, c1 in t1.items():
            for k2, c2 in t2.items():
                for k, c in mono_mul(k1, k2):
                    _add(out, k, c1 * c2 * c)
        return out

    @staticmethod
    def sort_key(m):
        return (-len(m), m)

    @staticmethod
    def format_key(m, style="text"):
        parts = []
        for g, grp in itertools.groupby(m):
            e = len(list(grp))
            if style == "latex":
                parts.append(NAMES[g] if e == 1 else f"{NAMES[g]}^{{{e}}}")
            else:
                parts.append(NAMES[g] if e == 1 else f"{NAMES[g]}^{e}")
        return ("" if style == "latex" else "*").join(parts)

    @classmethod
    def format_terms(cls, items, style):
        return format_sum([(c, cls.format_key(k, style)) for k, c in items], style)

    @staticmethod
    def key_json(m):
        return {"pbw": [[NAMES[g], len(list(grp))] for g, grp in itertools.groupby(m)]}


USPACE = _USpace()


class UEnvElement(LinComb):
    """Element of U(g^s_1) kept in PBW normal form."""

    __slots__ = ()
    space = USPACE

    @classmethod
    def gen(cls, name):
        return cls._make({(INDEX[name],): 1})

    @classmethod
    def word(cls, letters):
        return pbw_normalize(letters)

    def degree(self):
        return max((len(k) for k in self.terms), default=0)


def _as_indices(word):
    out = []
    for w in word:
        out.append(INDEX[w] if isinstance(w, str) else int(w))
    return out


def pbw_normalize(word, strategy="insertion") -> UEnvElement:
    """Normal form of a word in the generators.

    ``strategy`` selects how out-of-order adjacent pairs are rewritten:
    ``insertion`` multiplies letters onto a normal prefix; ``leftmost`` and
    ``rightmost`` rewrite raw words at the first or last offending pair.
    """
    letters = _as_indices(word)
    if strategy == "insertion":
        cur = {(): 1}
        for g in letters:
            nxt = {}
            for k, c in cur.items():
                for k2, c2 in mono_times_gen(k, g):
                    _add(nxt, k2, c * c2)
            cur = nxt
        return UEnvElement(cur)
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pending = {tuple(letters): 1}
    done = {}
    while pending:
        w, c = pending.popitem()
        positions = [i for i in range(len(w) - 1)
                     if w[i] > w[i + 1] or (w[i] == w[i + 1] and PARITY[w[i]])]
        if not positions:
            _add(done, w, c)
            continue
        i = positions[0] if strategy == "leftmost" else positions[-1]
        g, h = w[i], w[i + 1]
        if g == h:
            continue
        sign = -1 if PARITY[g] & PARITY[h] else 1
        _add(pending, w[:i] + (h, g) + w[i + 2:], sign * c)
        for k, ck in BRACKET[g, h].items():
            _add(pending, w[:i] + (k,) + w[i + 2:], c * ck)
    return UEnvElement(done)


def u_mul(x: UEnvElement, y: UEnvElement) -> UEnvElement:
    return x * y


def bracket(x: UEnvElement, y: UEnvElement) -> UEnvElement:
    """Super commutator of homogeneous elements."""
    px, py = x.parity(), y.parity()
    s = -1 if px & py else 1
    return x * y - (y * x).scale(s)


def u_counit(x: UEnvElement):
    return x.constant_term()


@lru_cache(maxsize=None)
def _coproduct_mono(m):
    spaces = (USPACE, USPACE)
    acc = GradedTensor(spaces, {((), ()): 1})
    for g in m:
        dg = GradedTensor(spaces, {((g,), ()): 1, ((), (g,)): 1})
        acc = acc * dg
    return acc


def u_coproduct(x: UEnvElement) -> GradedTensor:
    """Coproduct with primitive generators, extended multiplicatively."""
    out = GradedTensor((USPACE, USPACE))
    for k, c in x.terms.items():
        out = out + _coproduct_mono(k).scale(c)
    return out


@lru_cache(maxsize=None)
def _antipode_mono(m):
    k = sum(PARITY[g] for g in m)
    sign = (-1) ** len(m) * (-1) ** (k * (k - 1) // 2)
    return pbw_normalize(tuple(reversed(m))).scale(sign)


def u_antipode(x: UEnvElement) -> UEnvElement:
    return x.map_keys(_antipode_mono)


def pbw_monomials(max_degree):
    """All PBW monomials of degree at most ``max_degree``."""
    out = [()]
    for d in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(6), d):
            odd = [g for g in combo if PARITY[g]]
            if len(odd) == len(set(odd)):
                out.append(combo)
    return out


def random_element(rng: random.Random, max_degree=3, terms=3, parity=None):
    """Random element, homogeneous in parity when ``parity`` is given."""
    monos = [m for m in pbw_monomials(max_degree)
             if parity is None or mono_parity(m) == parity]
    out = {}
    for m in rng.sample(monos, min(terms, len(monos))):
        c = rng.choice([-2, -1, 1, 2])
        out[m] = c
    return UEnvElement(out)


def verify_u(sample_count=100, seed=42, max_degree=4):
    from .report import Report

    rep = Report("U(g^s_1)", seed=seed)
    gens = [UEnvElement.gen(n) for n in NAMES]

    # super antisymmetry of the table and agreement with commutators in U
    bad = None
    for g in range(6):
        for h in range(6):
            s = -1 if PARITY[g] & PARITY[h] else 1
            lhs = {k: c for k, c in BRACKET[g, h].items()}
            rhs = {k: -s * c for k, c in BRACKET[h, g].items()}
            if lhs != rhs:
                bad = bad or (NAMES[g], NAMES[h], lhs, rhs)
            comm = bracket(gens[g], gens[h])
            want = UEnvElement({(k,): c for k, c in BRACKET[g, h].items()})
            if comm != want:
                bad = bad or (NAMES[g] + NAMES[h], str(comm), str(want))
    rep.add("bracket antisymmetry and commutators", bad is None, counterexample=bad)

    # super Jacobi on the 56 triples (repetition allowed)
    bad = None
    triples = list(itertools.combinations_with_replacement(range(6), 3))
    for g, h, k in triples:
        xg, xh, xk = gens[g], gens[h], gens[k]
        pg, ph, pk = PARITY[g], PARITY[h], PARITY[k]
        total = (bracket(xg, bracket(xh, xk)).scale((-1) ** (pg * pk))
                 + bracket(xh, bracket(xk, xg)).scale((-1) ** (ph * pg))
                 + bracket(xk, bracket(xg, xh)).scale((-1) ** (pk * ph)))
        if total:
            bad = (NAMES[g], NAMES[h], NAMES[k], str(total))
            break
    rep.add("super Jacobi identity", bad is None, f"{len(triples)} triples", bad)

    # confluence: three rewriting strategies agree on random words
    rng = random.Random(seed)
    bad = None
    for _ in range(sample_count):
        w = [rng.randrange(6) for _ in range(8)]
        forms = {s: pbw_normalize(w, s) for s in ("insertion", "leftmost", "rightmost")}
        if len(set(forms.values())) != 1:
            bad = ("".join(NAMES[i] for i in w), {s: str(v) for s, v in forms.items()})
            break
    rep.add("PBW confluence on random 8-letter words", bad is None, counterexample=bad)

    # associativity on random triples
    bad = None
    for _ in range(sample_count // 4 or 1):
        x, y, z = (random_element(rng, 2) for _ in range(3))
        if (x * y) * z != x * (y * z):
            bad = (str(x), str(y), str(z))
            break
    rep.add("associativity", bad is None, counterexample=bad)

    monos = pbw_monomials(max_degree)
    bad_co = bad_cu = bad_s = None
    for m in monos:
        x = UEnvElement({m: 1})
        d = u_coproduct(x)
        left = _tensor3(d, first=True)
        right = _tensor3(d, first=False)
        if left != right and bad_co is None:
            bad_co = (USPACE.format_key(m), str(left), str(right))
        # counit laws
        l1 = UEnvElement({k[1]: c for k, c in d.terms.items() if not k[0]})
        l2 = UEnvElement({k[0]: c for k, c in d.terms.items() if not k[1]})
        if (l1 != x or l2 != x) and bad_cu is None:
            bad_cu = (USPACE.format_key(m), str(l1), str(l2))
        # antipode axioms
        a1 = UEnvElement.zero()
        a2 = UEnvElement.zero()
        for (k1, k2), c in d.terms.items():
            a1 = a1 + (u_antipode(UEnvElement({k1: 1})) * UEnvElement({k2: 1})).scale(c)
            a2 = a2 + (UEnvElement({k1: 1}) * u_antipode(UEnvElement({k2: 1}))).scale(c)
        e = UEnvElement.const(u_counit(x))
        if (a1 != e or a2 != e) and bad_s is None:
            bad_s = (USPACE.format_key(m), str(a1), str(a2))
    rep.add(f"coassociativity (degree <= {max_degree})", bad_co is None, counterexample=bad_co)
    rep.add(f"counit laws (degree <= {max_degree})", bad_cu is None, counterexample=bad_cu)
    rep.add(f"antipode axioms (degree <= {max_degree})", bad_s is None, counterexample=bad_s)
    return rep


def _tensor3(d: GradedTensor, first: bool) -> GradedTensor:
    """(Delta x id) Delta or (id x Delta) Delta of a U (x) U tensor."""
    out = {}
    for (k1, k2), c in d.terms.items():
        src = k1 if first else k2
        for (s1, s2), c2 in _coproduct_mono(src).terms.items():
            key = (s1, s2, k2) if first else (k1, s1, s2)
            out[key] = out.get(key, 0) + c * c2
    return GradedTensor((USPACE,) * 3, out)
