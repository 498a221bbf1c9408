"""Exact supercommutative polynomial arithmetic and Koszul-signed tensors.

Every algebra in the package is a finite linear combination of hashable basis
keys with exact rational coefficients (``int`` or :class:`fractions.Fraction`).
:class:`SuperPoly` is the supercommutative polynomial ring that houses
F(G^s_2) together with the auxiliary symbol families used by the jet oracle;
:class:`GradedTensor` is the parity-graded tensor product of such algebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from numbers import Rational

from . import kernels

IDX_SPAN = 1000
ZERO_MONO = ((), ())


def rational(c) -> int | Fraction:
    """Coerce to an exact rational, demoting integral fractions to ``int``."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return rational(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return rational(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def format_rational(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class UnknownGeneratorError(ValueError):
    pass


# --------------------------------------------------------------------------
# generator families
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    name: str
    rank: int
    odd: bool
    nilpotent: bool = False
    weight_offset: int = 0
    charge: int = 0
    fixed: tuple = ()

    def fixed_value(self, index):
        for i, v in self.fixed:
            if i == index:
                return v
        return None


FAMILIES: dict[str, Family] = {}
_BY_RANK: dict[int, Family] = {}


def register_family(name, rank=None, odd=False, nilpotent=False,
                    weight_offset=0, charge=0, fixed=()) -> Family:
    """Declare a generator family; re-registering an identical family is a no-op."""
    if name in FAMILIES:
        fam = FAMILIES[name]
        if (fam.odd, fam.nilpotent) != (odd, nilpotent):
            raise ValueError(f"family {name!r} already registered differently")
        return fam
    if rank is None:
        rank = max(_BY_RANK, default=99) + 1
        rank = max(rank, 100)
    if rank in _BY_RANK:
        raise ValueError(f"rank {rank} taken by {_BY_RANK[rank].name!r}")
    if odd and nilpotent:
        raise ValueError("odd generators are square-zero already")
    fam = Family(name, rank, odd, nilpotent, weight_offset, charge, tuple(fixed))
    FAMILIES[name] = fam
    _BY_RANK[rank] = fam
    return fam


# Deformation parameters first so an odd parameter sorts leftmost.
register_family("tau", rank=1, odd=True)
register_family("t", rank=2, nilpotent=True)
register_family("a", rank=10, weight_offset=-1, fixed=((0, 0), (1, 1)))
register_family("b", rank=11, odd=True, weight_offset=-1, charge=1, fixed=((0, 0),))
register_family("c", rank=12, odd=True, charge=-1, fixed=((0, 0), (1, 0)))
register_family("d", rank=13, fixed=((0, 1),))


def gid(family: str, index: int) -> int:
    try:
        fam = FAMILIES[family]
    except KeyError:
        raise UnknownGeneratorError(f"unknown generator family {family!r}") from None
    if not 0 <= index < IDX_SPAN:
        raise ValueError(f"generator index out of range: {index}")
    g = fam.rank * IDX_SPAN + index
    return -g if fam.nilpotent else g


def decode(g: int) -> tuple[Family, int]:
    rank, index = divmod(abs(g), IDX_SPAN)
    return _BY_RANK[rank], index


def gen_weight(g: int) -> int:
    fam, index = decode(g)
    return index + fam.weight_offset


def gen_charge(g: int) -> int:
    return decode(g)[0].charge


def gen_name(g: int) -> str:
    fam, index = decode(g)
    return f"{fam.name}{index}"


@dataclass(frozen=True)
class GeneratorId:
    family: str
    index: int

    @property
    def id(self) -> int:
        return gid(self.family, self.index)

    @property
    def odd(self) -> bool:
        return FAMILIES[self.family].odd

    @property
    def weight(self) -> int:
        return self.index + FAMILIES[self.family].weight_offset

    def value(self):
        """The constant a degenerate generator resolves to, else ``None``."""
        return FAMILIES[self.family].fixed_value(self.index)


def normalize_monomial(factors):
    """Canonicalize a product of generators.

    ``factors`` holds ``(family, index)`` or ``(family, index, exponent)``
    items in written order.  Returns ``(sign, key)`` where sign is -1, 0 or 1;
    degenerate generators are replaced by their constant values.
    """
    evens = []
    odds = []
    for f in factors:
        family, index = f[0], f[1]
        exp = f[2] if len(f) > 2 else 1
        g = gid(family, index)
        val = FAMILIES[family].fixed_value(index)
        if val is not None:
            if val == 0 and exp > 0:
                return 0, None
            continue
        if FAMILIES[family].odd:
            if exp > 1:
                return 0, None
            if exp == 1:
                odds.append(g)
        else:
            evens.extend([g] * exp)
    sign, odd = kernels.sort_odd(odds)
    if not sign:
        return 0, None
    ev = kernels.merge_even(tuple(sorted(evens)), ())
    if ev is None:
        return 0, None
    return sign, (ev, odd)


# --------------------------------------------------------------------------
# linear combinations
# --------------------------------------------------------------------------

class LinComb:
    """Immutable finite linear combination of basis keys."""

    __slots__ = ("terms", "_hash")
    space = None

    def __init__(self, terms=None, _clean=False):
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {k: rational(c) for k, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def _make(cls, terms):
        return cls(terms, _clean=True)

    @classmethod
    def zero(cls):
        return cls._make({})

    @classmethod
    def one(cls):
        return cls._make({cls.space.one: 1})

    @classmethod
    def const(cls, c):
        c = rational(c)
        return cls._make({cls.space.one: c} if c else {})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return self.const(other)
        return NotImplemented

    # linear structure ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return self._make(out)

    __radd__ = __add__

    def __neg__(self):
        return self._make({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = rational(c)
        if not c:
            return self.zero()
        return self._make({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, type(self)):
            return self._make(self.space.mul_terms(self.terms, other.terms))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(Fraction(1) / rational(other))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        return reduce(lambda x, y: x * y, [self] * n, self.one())

    # comparison ----------------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    # inspection ----------------------------------------------------------
    def sorted_terms(self):
        key = self.space.sort_key
        return sorted(self.terms.items(), key=lambda kc: key(kc[0]))

    def constant_term(self):
        return self.terms.get(self.space.one, 0)

    def parity(self):
        """0 or 1 when homogeneous (zero counts as even), else ``None``."""
        pars = {self.space.parity(k) for k in self.terms}
        if len(pars) > 1:
            return None
        return pars.pop() if pars else 0

    def parity_part(self, p):
        par = self.space.parity
        return self._make({k: c for k, c in self.terms.items() if par(k) == p})

    def map_keys(self, fn):
        """Linear extension of ``key -> LinComb`` (or ``None`` for zero)."""
        out = {}
        for k, c in self.terms.items():
            img = fn(k)
            if img is None:
                continue
            for k2, c2 in img.terms.items():
                out[k2] = out.get(k2, 0) + c * c2
        return self._make({k: v for k, v in out.items() if v})

    def __str__(self):
        return self.space.format_terms(self.sorted_terms(), "text")

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def to_latex(self):
        return self.space.format_terms(self.sorted_terms(), "latex")

    def to_json(self):
        return [dict(coeff=format_rational(c), **self.space.key_json(k))
                for k, c in self.sorted_terms()]


def format_sum(pieces, style="text"):
    """Join ``(coeff, body)`` pairs, ``body`` empty for the unit."""
    if not pieces:
        return "0"
    out = []
    for i, (c, body) in enumerate(pieces):
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        if style == "latex":
            if a.denominator != 1:
                num = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
            else:
                num = str(a.numerator)
            if body:
                glue = "" if a.denominator == 1 and not body[0].isdigit() else " "
                txt = body if a == 1 else f"{num}{glue}{body}"
            else:
                txt = num
        else:
            num = str(a)
            if body:
                txt = body if a == 1 else f"{num}*{body}"
            else:
                txt = num
        if i == 0:
            out.append(("-" if neg else "") + txt)
        else:
            out.append((" - " if neg else " + ") + txt)
    return "".join(out)


# --------------------------------------------------------------------------
# the supercommutative ring
# --------------------------------------------------------------------------

def mono_parity(m) -> int:
    return len(m[1]) & 1


def mono_factors(m):
    """``[(gid, exponent)]`` in canonical order: evens then odds."""
    out = []
    for g in m[0]:
        if out and out[-1][0] == g:
            out[-1] = (g, out[-1][1] + 1)
        else:
            out.append((g, 1))
    out.extend((g, 1) for g in m[1])
    return out


def mono_weight(m) -> int:
    return sum(gen_weight(g) for g in m[0]) + sum(gen_weight(g) for g in m[1])


def mono_charge(m) -> int:
    return sum(gen_charge(g) for g in m[0]) + sum(gen_charge(g) for g in m[1])


def mono_index_degree(m) -> int:
    return sum(decode(g)[1] for g in m[0]) + sum(decode(g)[1] for g in m[1])


class _FSpace:
    name = "F"
    one = ZERO_MONO

    @staticmethod
    def parity(k):
        return len(k[1]) & 1

    @staticmethod
    def mul_terms(t1, t2):
        return kernels.poly_mul(t1, t2)

    @staticmethod
    def mul_keys(k1, k2):
        s, m = kernels.mono_mul(k1, k2)
        return {m: s} if s else {}

    @staticmethod
    def sort_key(m):
        lex = tuple((abs(g), e) for g, e in mono_factors(m))
        return (mono_index_degree(m), mono_weight(m), lex)

    @staticmethod
    def format_key(m, style="text"):
        parts = []
        for g, e in mono_factors(m):
            fam, idx = decode(g)
            if style == "latex":
                s = f"{fam.name}_{{{idx}}}"
                parts.append(s if e == 1 else f"{s}^{{{e}}}")
            else:
                s = f"{fam.name}{idx}"
                parts.append(s if e == 1 else f"{s}^{e}")
        return ("" if style == "latex" else "*").join(parts)

    @classmethod
    def format_terms(cls, items, style):
        return format_sum([(c, cls.format_key(k, style)) for k, c in items], style)

    @staticmethod
    def key_json(m):
        even = []
        odd = []
        for g, e in mono_factors(m):
            fam, idx = decode(g)
            if fam.odd:
                odd.append([fam.name, idx])
            else:
                even.append([fam.name, idx, e])
        return {"even": even, "odd": odd}


FSPACE = _FSpace()


class SuperPoly(LinComb):
    """Element of the supercommutative polynomial ring over the rationals."""

    __slots__ = ()
    space = FSPACE

    @classmethod
    def gen(cls, family: str, index: int) -> "SuperPoly":
        """The generator ``family_index``; degenerate indices give constants."""
        val = FAMILIES[family].fixed_value(index) if family in FAMILIES else None
        if val is not None:
            return cls.const(val)
        g = gid(family, index)
        if FAMILIES[family].odd:
            return cls._make({((), (g,)): 1})
        return cls._make({((g,), ()): 1})

    @classmethod
    def monomial(cls, factors, coeff=1):
        sign, key = normalize_monomial(factors)
        if not sign:
            return cls.zero()
        return cls._make({key: rational(coeff) * sign})

    def weight_part(self, w):
        return self._make({k: c for k, c in self.terms.items() if mono_weight(k) == w})

    def generators(self):
        """Set of generator ids occurring in the polynomial."""
        out = set()
        for ev, od in self.terms:
            out.update(ev)
            out.update(od)
        return out

    def substitute_zero(self, pred):
        """Drop every term containing a generator id for which ``pred`` holds."""
        return self._make({k: c for k, c in self.terms.items()
                           if not any(pred(g) for g in k[0] + k[1])})


def gen(family, index):
    return SuperPoly.gen(family, index)


def mul(x: SuperPoly, y: SuperPoly) -> SuperPoly:
    return x * y


@dataclass(frozen=True)
class TermGrading:
    monomial: str
    parity: int
    weight: int
    charge: int


def grading(x: SuperPoly) -> list[TermGrading]:
    """Per-term parity, weight (Y-eigenvalue) and bc-charge (Z-eigenvalue)."""
    return [TermGrading(FSPACE.format_key(k) or "1", mono_parity(k),
                        mono_weight(k), mono_charge(k))
            for k, _ in x.sorted_terms()]


# --------------------------------------------------------------------------
# graded tensors
# --------------------------------------------------------------------------

class ArityError(ValueError):
    pass


class GradedTensor:
    """Sum of pure tensors over a fixed tuple of leg spaces.

    Multiplication is legwise with the Koszul sign
    ``(x1 ⊗ ... ⊗ xn)(y1 ⊗ ... ⊗ yn) = (-1)^{sum_{i<j} |x_j||y_i|} x1y1 ⊗ ... ⊗ xnyn``.
    """

    __slots__ = ("spaces", "terms")

    def __init__(self, spaces, terms=None):
        self.spaces = tuple(spaces)
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @property
    def arity(self):
        return len(self.spaces)

    @classmethod
    def pure(cls, *elements, coeff=1):
        """Tensor product of elements (each a LinComb)."""
        spaces = tuple(e.space for e in elements)
        terms = {(): rational(coeff)}
        for e in elements:
            nxt = {}
            for k, c in terms.items():
                for k2, c2 in e.terms.items():
                    nk = k + (k2,)
                    nxt[nk] = nxt.get(nk, 0) + c * c2
            terms = nxt
        return cls(spaces, terms)

    @classmethod
    def zero(cls, spaces):
        return cls(spaces, {})

    def _check(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        if other.spaces != self.spaces:
            raise ArityError("tensor legs do not match")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GradedTensor(self.spaces, out)

    def __neg__(self):
        return GradedTensor(self.spaces, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = rational(c)
        return GradedTensor(self.spaces, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return tensor_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        return self.spaces == other.spaces and self.terms == other.terms

    def __hash__(self):
        return hash((self.spaces, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def parity_of(self, key):
        return sum(s.parity(k) for s, k in zip(self.spaces, key)) & 1

    def sorted_terms(self):
        sk = [s.sort_key for s in self.spaces]
        return sorted(self.terms.items(),
                      key=lambda kc: tuple(f(k) for f, k in zip(sk, kc[0])))

    def map_legs(self, fn):
        """Apply ``fn(key_tuple) -> {key_tuple: coeff}`` linearly."""
        out = {}
        for k, c in self.terms.items():
            for k2, c2 in fn(k).items():
                out[k2] = out.get(k2, 0) + c * c2
        return out

    def format(self, style="text"):
        sep = " \\ot " if style == "latex" else " (x) "
        pair = " \\# " if style == "latex" else " # "
        # an F leg followed by a U leg is one element of the bicrossproduct
        seps = [pair if (a.name, b.name) == ("F", "U") else sep
                for a, b in zip(self.spaces, self.spaces[1:])]
        pieces = []
        for key, c in self.sorted_terms():
            body = ""
            for i, (s, k) in enumerate(zip(self.spaces, key)):
                leg = s.format_key(k, style) or "1"
                body = leg if i == 0 else body + seps[i - 1] + leg
            pieces.append((c, body))
        return format_sum(pieces, style)

    def __str__(self):
        return self.format("text")

    __repr__ = __str__

    def to_latex(self):
        return self.format("latex")

    def to_json(self):
        return [{"coeff": format_rational(c),
                 "legs": [s.key_json(k) for s, k in zip(self.spaces, key)]}
                for key, c in self.sorted_terms()]


def tensor_mul(s: GradedTensor, t: GradedTensor) -> GradedTensor:
    if s.spaces != t.spaces:
        raise ArityError(f"arity mismatch: {len(s.spaces)} vs {len(t.spaces)}")
    spaces = s.spaces
    if spaces == (FSPACE, FSPACE):
        return GradedTensor(spaces, kernels.tensor2_mul(s.terms, t.terms))
    pars = [sp.parity for sp in spaces]
    muls = [sp.mul_keys for sp in spaces]
    n = len(spaces)
    out = {}
    tpar = {k: tuple(p(x) for p, x in zip(pars, k)) for k in t.terms}
    for k1, c1 in s.terms.items():
        xpar = tuple(p(x) for p, x in zip(pars, k1))
        for k2, c2 in t.terms.items():
            sign = -1 if kernels.koszul_exponent(xpar, tpar[k2]) & 1 else 1
            partial = {(): c1 * c2 * sign}
            for i in range(n):
                prod = muls[i](k1[i], k2[i])
                if not prod:
                    partial = {}
                    break
                nxt = {}
                for pk, pc in partial.items():
                    for mk, mc in prod.items():
                        nk = pk + (mk,)
                        nxt[nk] = nxt.get(nk, 0) + pc * mc
                partial = nxt
            for k, c in partial.items():
                out[k] = out.get(k, 0) + c
    return GradedTensor(spaces, out)


def tensor(*elements, coeff=1) -> GradedTensor:
    return GradedTensor.pure(*elements, coeff=coeff)
