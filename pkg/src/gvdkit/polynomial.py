"""Exact multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients, tied to a :class:`PolynomialRing` that fixes the variable
names and their canonical order.  Monomials are plain exponent tuples.

Monomial orders turn an exponent tuple into a flat tuple of ints whose
lexicographic comparison realizes the order, so ``max(terms, key=...)``
picks the leading monomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]
OrderKey = Callable[[Monomial], Tuple[int, ...]]

_VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    """Malformed polynomial text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownVariableError(ValueError):
    def __init__(self, name: str, offset: Optional[int] = None):
        where = "" if offset is None else f" at offset {offset}"
        super().__init__(f"unknown variable {name!r}{where}")
        self.name = name
        self.offset = offset


class RingMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class PolynomialRing:
    """``K[x_1, ..., x_n]`` with the variables in canonical order."""

    variables: Tuple[str, ...]

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        for v in names:
            if not isinstance(v, str) or not _VAR_RE.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "variables", names)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @property
    def n(self) -> int:
        return len(self.variables)

    def __len__(self) -> int:
        return len(self.variables)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(name) from None

    def gen(self, name: str) -> "Polynomial":
        e = [0] * self.n
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.n: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): Fraction(coeff)})

    def drop(self, name: str) -> "PolynomialRing":
        self.index(name)
        return PolynomialRing(v for v in self.variables if v != name)

    def extend(self, names: Iterable[str]) -> "PolynomialRing":
        return PolynomialRing(self.variables + tuple(names))

    def fresh_names(self, count: int, stem: str = "aux") -> Tuple[str, ...]:
        """Names not already in the ring, for auxiliary variables."""
        out = []
        i = 0
        while len(out) < count:
            cand = f"{stem}_{i}"
            if cand not in self and cand not in out:
                out.append(cand)
            i += 1
        return tuple(out)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def __repr__(self) -> str:
        return f"PolynomialRing({list(self.variables)!r})"


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """Base class; subclasses build a key function for a given ring.

    ``_parts`` receives the positions (into the ring's exponent tuple) this
    order is responsible for and returns a key on the full exponent tuple.
    """

    def key(self, ring: PolynomialRing) -> OrderKey:
        return self._parts(ring, tuple(range(ring.n)))

    def _parts(self, ring: PolynomialRing, positions: Tuple[int, ...]) -> OrderKey:
        raise NotImplementedError

    def is_y_compatible(self, y: str) -> bool:
        return False

    @staticmethod
    def _ranked(ring, positions, names):
        if names is None:
            return positions
        ranked = tuple(ring.index(v) for v in names)
        if sorted(ranked) != sorted(positions):
            raise ValueError(
                f"order variables {list(names)} do not match ring variables "
                f"{[ring.variables[i] for i in positions]}"
            )
        return ranked


@dataclass(frozen=True)
class Lex(MonomialOrder):
    """Lexicographic order; ``variables`` lists them from largest to smallest
    (default: ring order)."""

    variables: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.variables is not None:
            object.__setattr__(self, "variables", tuple(self.variables))

    def _parts(self, ring, positions):
        idx = self._ranked(ring, positions, self.variables)
        return lambda e: tuple(e[i] for i in idx)

    def is_y_compatible(self, y):
        return self.variables is not None and self.variables[:1] == (y,)


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    """Graded reverse lexicographic order (default ranking: ring order)."""

    variables: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.variables is not None:
            object.__setattr__(self, "variables", tuple(self.variables))

    def _parts(self, ring, positions):
        idx = self._ranked(ring, positions, self.variables)
        rev = idx[::-1]
        return lambda e: (sum(e[i] for i in idx),) + tuple(-e[i] for i in rev)


@dataclass(frozen=True)
class YBlock(MonomialOrder):
    """Compare the exponent of ``y`` first, then ``tail`` on the other variables."""

    y: str
    tail: MonomialOrder = GrevLex()

    def _parts(self, ring, positions):
        yi = ring.index(self.y)
        if yi not in positions:
            raise ValueError(f"{self.y} not among the variables of this block")
        rest = self.tail._parts(ring, tuple(p for p in positions if p != yi))
        return lambda e: (e[yi],) + rest(e)

    def is_y_compatible(self, y):
        return y == self.y


@dataclass(frozen=True)
class Elimination(MonomialOrder):
    """Block order: ``first`` (grevlex on its variables) dominates ``tail`` on the rest."""

    first: Tuple[str, ...]
    tail: MonomialOrder = GrevLex()

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(self.first))

    def _parts(self, ring, positions):
        lead = tuple(ring.index(v) for v in self.first)
        head = GrevLex(tuple(self.first))._parts(ring, lead)
        rest = self.tail._parts(ring, tuple(p for p in positions if p not in lead))
        return lambda e: head(e) + rest(e)

    def is_y_compatible(self, y):
        return self.first == (y,)


def compare(a: Monomial, b: Monomial, order: MonomialOrder, ring: PolynomialRing) -> int:
    """-1, 0 or 1 as ``a`` is smaller, equal or larger than ``b``."""
    if len(a) != ring.n or len(b) != ring.n:
        raise RingMismatchError("monomial length differs from the ring's variable count")
    key = order.key(ring)
    ka, kb = key(a), key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Monomial, Fraction]):
        self.ring = ring
        clean = {}
        for m, c in terms.items():
            if c:
                if len(m) != ring.n:
                    raise RingMismatchError(f"monomial {m} has wrong length for {ring}")
                clean[m] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms: Dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def support(self) -> Tuple[str, ...]:
        used = [False] * self.ring.n
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.variables, used) if u)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((m[i] for m in self.terms), default=-1)

    # -- arithmetic
    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            if not c0:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {m: c * c0 for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- order-dependent
    def sorted_terms(self, order: Optional[MonomialOrder] = None):
        key = (order or GrevLex()).key(self.ring)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder) -> Tuple[Fraction, Monomial]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        key = order.key(self.ring)
        m = max(self.terms, key=key)
        return self.terms[m], m

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        c, _ = self.leading_term(order)
        return self * (1 / c)

    # -- ring changes
    def initial_y_form(self, y: str) -> "Polynomial":
        """Sum of the terms carrying the highest power of ``y``."""
        i = self.ring.index(y)
        if not self.terms:
            return self
        d = max(m[i] for m in self.terms)
        return Polynomial._raw(self.ring, {m: c for m, c in self.terms.items() if m[i] == d})

    def restrict(self, drop: str) -> "Polynomial":
        """Re-index over the ring without ``drop``; ``drop`` must not occur."""
        i = self.ring.index(drop)
        if any(m[i] for m in self.terms):
            raise ValueError(f"{drop} occurs in {self}; cannot restrict")
        ring = self.ring.drop(drop)
        return Polynomial._raw(ring, {m[:i] + m[i + 1:]: c for m, c in self.terms.items()})

    def to_ring(self, ring: PolynomialRing) -> "Polynomial":
        """Map into another ring by variable name; every used variable must exist there."""
        if ring == self.ring:
            return self
        pos = []
        for v in self.ring.variables:
            pos.append(ring._index.get(v))
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.n
            for i, k in enumerate(m):
                if k:
                    if pos[i] is None:
                        raise UnknownVariableError(self.ring.variables[i])
                    e[pos[i]] = k
            out[tuple(e)] = c
        return Polynomial._raw(ring, out)

    # -- text
    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def initial_y_form(f: Polynomial, y: str) -> Polynomial:
    return f.initial_y_form(y)


def leading_term(f: Polynomial, order: MonomialOrder) -> Tuple[Fraction, Monomial]:
    return f.leading_term(order)


def restrict_ring(f: Polynomial, drop: str) -> Polynomial:
    return f.restrict(drop)


def _format_monomial(ring: PolynomialRing, m: Monomial) -> str:
    parts = []
    for v, e in zip(ring.variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: Optional[MonomialOrder] = None) -> str:
    if not f.terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(f.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(f.ring, m)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# parser


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))?")


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing):
        self.text = text
        self.ring = ring
        self.tokens = []
        pos = 0
        n = len(text)
        while pos < n:
            mt = _TOKEN_RE.match(text, pos)
            if mt.lastindex is None:
                break
            start = mt.start(mt.lastindex)
            if mt.group(1) is not None:
                self.tokens.append(("int", mt.group(1), start))
            elif mt.group(2) is not None:
                self.tokens.append(("var", mt.group(2), start))
            else:
                ch = mt.group(3)
                if ch not in "+-*/^()":
                    raise ParseError(f"unexpected character {ch!r}", len(text[:start].encode()))
                self.tokens.append((ch, ch, start))
            pos = mt.end()
        self.i = 0

    def _offset(self, tok=None) -> int:
        char_pos = tok[2] if tok else len(self.text)
        return len(self.text[:char_pos].encode())

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, kind=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self._offset())
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", self._offset(tok))
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty polynomial", 0)
        p = self.poly()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", self._offset(tok))
        return p

    def poly(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok is not None and tok[0] in "+-":
            self.take()
            sign = -1 if tok[0] == "-" else 1
        acc = self.term() * sign
        while True:
            tok = self.peek()
            if tok is None or tok[0] not in "+-":
                return acc
            self.take()
            t = self.term()
            acc = acc - t if tok[0] == "-" else acc + t

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() is not None and self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            value = Fraction(int(tok[1]))
            nxt = self.peek()
            if nxt is not None and nxt[0] == "/":
                self.take()
                den = self.take("int")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", self._offset(den))
                value /= int(den[1])
            base = self.ring.constant(value)
        elif kind == "var":
            if tok[1] not in self.ring:
                raise UnknownVariableError(tok[1], self._offset(tok))
            base = self.ring.gen(tok[1])
        elif kind == "(":
            base = self.poly()
            self.take(")")
        elif kind == "-":
            return -self.factor()
        else:
            raise ParseError(f"unexpected {tok[1]!r}", self._offset(tok))
        nxt = self.peek()
        if nxt is not None and nxt[0] == "^":
            self.take()
            exp = self.take("int")
            base = base ** int(exp[1])
        return base


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``text`` (``+ - * ^ /`` and parentheses) into a polynomial of ``ring``."""
    return _Parser(text, ring).parse()
