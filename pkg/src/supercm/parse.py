"""Expression parser for elements of F, U, H and tensor products.

Grammar, loosest binding first::

    sum     := tensor (('+' | '-') tensor)*
    tensor  := pair ('(x)' pair)*
    pair    := product ('#' product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := NUMBER | NAME | '(' sum ')'

Names a2, b1, c3, d4 are generators of F; X, Y, Z, U, V, W are generators
of U.  ``a # h`` builds the element a # h of the bicrossproduct and
``x (x) y`` a pure tensor.  Sums and products that mix F, U and H
elements are evaluated in H, so ``X*a2`` is the product (1 # X)(a2 # 1).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bicross import HElement
from .core import GradedTensor, LinComb, SuperPoly, gen
from .ffun import FAMILY_NAMES, MAX_INDEX
from .uenv import NAMES, UEnvElement


class ParseError(ValueError):
    def __init__(self, message, text=None, pos=0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(self.__str__())

    def __str__(self):
        if self.text is None:
            return self.message
        return f"{self.message} at position {self.pos}\n  {self.text}\n  {' ' * self.pos}^"


_TOKEN = re.compile(r"\s*(?:(\(x\))|(\d+)|([A-Za-z]+\d*)|(.))")


def tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or not text[pos:].strip():
            break
        start = m.start(m.lastindex)
        tok, num, name, sym = m.groups()
        if tok:
            out.append(("op", "(x)", start))
        elif num:
            out.append(("num", int(num), start))
        elif name:
            out.append(("name", name, start))
        elif sym in "+-*/^#()":
            out.append(("op", sym, start))
        else:
            raise ParseError(f"unexpected character {sym!r}", text, start)
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, pos=None):
        return ParseError(msg, self.text, self.peek()[2] if pos is None else pos)

    def expect(self, sym):
        t = self.peek()
        if t[0] != "op" or t[1] != sym:
            raise self.error(f"expected {sym!r}")
        self.take()

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        v = self.sum()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return v

    def _binary(self, sub, ops, combine):
        v = sub()
        while self.peek()[0] == "op" and self.peek()[1] in ops:
            op, pos = self.take()[1:]
            if self.peek()[0] == "end":
                raise self.error(f"missing operand after {op!r}")
            w = sub()
            v = combine(op, v, w, pos)
        return v

    def sum(self):
        return self._binary(self.tensor, ("+", "-"), self._add)

    def tensor(self):
        return self._binary(self.pair, ("(x)",), self._tensor)

    def pair(self):
        return self._binary(self.product, ("#",), self._tensor)

    def product(self):
        return self._binary(self.unary, ("*", "/"), self._mul)

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.peek()
            if e[0] != "num":
                raise self.error("exponent must be a non-negative integer")
            self.take()
            return v ** e[1]
        return v

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Fraction(val)
        if kind == "name":
            return self._name(val, pos)
        if kind == "op" and val == "(":
            v = self.sum()
            self.expect(")")
            return v
        if kind == "end":
            raise ParseError("unexpected end of input", self.text, pos)
        raise ParseError(f"unexpected {val!r}", self.text, pos)

    def _name(self, name, pos):
        if name in NAMES:
            return UEnvElement.gen(name)
        m = re.fullmatch(r"([a-z])(\d+)", name)
        if not m or m.group(1) not in FAMILY_NAMES:
            raise ParseError(f"unknown generator {name!r}", self.text, pos)
        n = int(m.group(2))
        if n < 1 or n > MAX_INDEX:
            raise ParseError(f"index of {name!r} outside 1..{MAX_INDEX}", self.text, pos)
        return gen(m.group(1), n)

    # combination rules --------------------------------------------------

    def _add(self, op, v, w, pos):
        v, w = _align(v, w, self.text, pos)
        return v + w if op == "+" else v - w

    def _mul(self, op, v, w, pos):
        if op == "/":
            if not isinstance(w, Fraction):
                raise ParseError("can only divide by a number", self.text, pos)
            if w == 0:
                raise ParseError("division by zero", self.text, pos)
            return v / w if isinstance(v, Fraction) else v.scale(1 / w)
        if isinstance(v, Fraction) or isinstance(w, Fraction):
            return v * w
        v, w = _lift(v, w)
        if type(v) is not type(w):
            raise ParseError(f"cannot multiply {_kind(v)} by {_kind(w)}", self.text, pos)
        if isinstance(v, GradedTensor):
            v, w = _unify(v, w, self.text, pos)
            if v.spaces != w.spaces:
                raise ParseError("tensor legs do not match", self.text, pos)
        return v * w

    def _tensor(self, op, v, w, pos):
        if op == "#":
            if isinstance(v, Fraction):
                v = SuperPoly.const(v)
            if isinstance(w, Fraction):
                w = UEnvElement.const(w)
            if not (isinstance(v, SuperPoly) and isinstance(w, UEnvElement)):
                raise ParseError("'#' needs an F element on the left and a U element "
                                 "on the right", self.text, pos)
            return HElement.pair(v, w)
        return _pure(v, w)


class _NumberLeg:
    """Space of a tensor leg written as a bare number, fixed by later sums."""

    name = "?"

    @staticmethod
    def parity(k):
        return 0


NUMBER_LEG = _NumberLeg()


def _pure(v, w) -> GradedTensor:
    terms = {}
    spaces = []
    parts = []
    for x in (v, w):
        if isinstance(x, GradedTensor):
            spaces.extend(x.spaces)
            parts.append(x.terms)
        elif isinstance(x, Fraction):
            spaces.append(NUMBER_LEG)
            parts.append({(None,): x})
        elif isinstance(x, HElement):
            spaces.extend(HElement.space.legs)
            parts.append(dict(x.terms))
        else:
            spaces.append(x.space)
            parts.append({(k,): c for k, c in x.terms.items()})
    for k1, c1 in parts[0].items():
        for k2, c2 in parts[1].items():
            terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
    return GradedTensor(spaces, terms)


def _unify(v, w, text, pos):
    """Give numeric legs the space of the corresponding leg of the other tensor."""
    if v.arity != w.arity:
        raise ParseError(f"cannot combine tensors with {v.arity} and {w.arity} legs", text, pos)
    spaces = [a if a is not NUMBER_LEG else b for a, b in zip(v.spaces, w.spaces)]
    return _resolve(v, spaces), _resolve(w, spaces)


def _resolve(t, spaces):
    if list(t.spaces) == spaces:
        return t
    terms = {}
    for key, c in t.terms.items():
        nk = tuple(spaces[i].one if old is NUMBER_LEG and spaces[i] is not NUMBER_LEG
                   else k for i, (old, k) in enumerate(zip(t.spaces, key)))
        terms[nk] = terms.get(nk, 0) + c
    return GradedTensor([s if old is NUMBER_LEG else old
                         for old, s in zip(t.spaces, spaces)], terms)


def _lift(v, w):
    """Mixed F, U and H operands are read inside H."""
    kinds = (SuperPoly, UEnvElement, HElement)
    if type(v) is type(w) or not (isinstance(v, kinds) and isinstance(w, kinds)):
        return v, w
    return _to_h(v), _to_h(w)


def _to_h(x):
    if isinstance(x, SuperPoly):
        return HElement.from_f(x)
    if isinstance(x, UEnvElement):
        return HElement.from_u(x)
    return x


def _kind(v):
    return {Fraction: "a number", SuperPoly: "an F element", UEnvElement: "a U element",
            HElement: "an H element", GradedTensor: "a tensor"}.get(type(v), type(v).__name__)


def _align(v, w, text, pos):
    if isinstance(v, Fraction) and isinstance(w, Fraction):
        return v, w
    if isinstance(v, Fraction):
        return _const_like(w, v, text, pos), w
    if isinstance(w, Fraction):
        return v, _const_like(v, w, text, pos)
    v, w = _lift(v, w)
    if isinstance(v, GradedTensor) and isinstance(w, GradedTensor):
        v, w = _unify(v, w, text, pos)
    if type(v) is not type(w) or (isinstance(v, GradedTensor) and v.spaces != w.spaces):
        raise ParseError(f"cannot add {_kind(v)} and {_kind(w)}", text, pos)
    return v, w


def _const_like(x, c, text, pos):
    if isinstance(x, LinComb):
        return type(x).const(c)
    raise ParseError("cannot add a number to a tensor", text, pos)


KINDS = {"f": SuperPoly, "u": UEnvElement, "h": HElement}


def parse(text: str, kind: str | None = None, spaces=None):
    """Parse ``text``; ``kind`` in {'f', 'u', 'h'} coerces the result.

    ``spaces`` gives the leg spaces of a tensor whose legs are bare numbers,
    as in ``parse("1 (x) 1", spaces=(FSPACE, FSPACE))``.
    """
    v = _Parser(text).parse()
    if isinstance(v, GradedTensor) and spaces is not None:
        if len(spaces) != v.arity:
            raise ParseError(f"expected {len(spaces)} tensor legs, got {v.arity}")
        v = _resolve(v, list(spaces))
        if list(v.spaces) != list(spaces):
            raise ParseError("tensor legs do not match the requested spaces")
    if isinstance(v, GradedTensor) and NUMBER_LEG in v.spaces:
        raise ParseError("cannot tell which algebra a numeric tensor leg belongs to")
    if kind is None:
        return v
    cls = KINDS[kind]
    if isinstance(v, Fraction):
        return cls.const(v)
    if kind == "h":
        v = _to_h(v)
    if not isinstance(v, cls):
        raise ParseError(f"expected {_kind(cls.zero())}, got {_kind(v)}")
    return v


def parse_f(text):
    return parse(text, "f")


def parse_u(text):
    return parse(text, "u")


def parse_h(text):
    return parse(text, "h")
