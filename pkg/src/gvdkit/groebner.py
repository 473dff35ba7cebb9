"""Buchberger's algorithm and the ideal operations built on it.

Internally polynomials are plain ``{exponent: Fraction}`` dicts and a monomial
order is a key function; :class:`Ideal` and :class:`GroebnerBasis` wrap these
with the ring bookkeeping.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .polynomial import (
    Elimination,
    GrevLex,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    RingMismatchError,
)

Terms = Dict[Monomial, Fraction]

DEFAULT_ORDER = GrevLex()


# ---------------------------------------------------------------------------
# monomial helpers


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _disjoint(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# raw kernels


class _Basis:
    """Leading data for a list of monic polynomials, used by the reducer."""

    __slots__ = ("lms", "polys", "tails")

    def __init__(self, polys: Sequence[Terms], lms: Sequence[Monomial]):
        self.polys = list(polys)
        self.lms = list(lms)
        # the non-leading part of each (monic) element
        self.tails = [[(m, c) for m, c in p.items() if m != lm] for p, lm in zip(polys, lms)]

    def find(self, m: Monomial) -> int:
        for i, lm in enumerate(self.lms):
            if _divides(lm, m):
                return i
        return -1


def _reduce(p: Terms, basis: _Basis, key, full: bool = True) -> Terms:
    """Multivariate division remainder of ``p`` by a list of monic polynomials."""
    if not basis.lms:
        return dict(p)
    p = dict(p)
    rem: Terms = {}
    heap = [(_neg(key(m)), m) for m in p]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        i = basis.find(m)
        if i < 0:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
            continue
        q = _sub(m, basis.lms[i])
        for gm, gc in basis.tails[i]:
            t = tuple(x + y for x, y in zip(gm, q))
            old = p.get(t)
            if old is None:
                p[t] = -c * gc
                heapq.heappush(heap, (_neg(key(t)), t))
            else:
                v = old - c * gc
                if v:
                    p[t] = v
                else:
                    del p[t]
    return rem


def _neg(k: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(-x for x in k)


def _monic(p: Terms, lm: Monomial) -> Terms:
    c = p[lm]
    if c == 1:
        return p
    inv = 1 / c
    return {m: v * inv for m, v in p.items()}


def _spoly(f: Terms, flm: Monomial, g: Terms, glm: Monomial) -> Terms:
    # both monic
    l = _lcm(flm, glm)
    qf, qg = _sub(l, flm), _sub(l, glm)
    out: Terms = {}
    for m, c in f.items():
        out[tuple(x + y for x, y in zip(m, qf))] = c
    for m, c in g.items():
        t = tuple(x + y for x, y in zip(m, qg))
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _is_monomial_input(polys: Sequence[Terms]) -> bool:
    return all(len(p) == 1 for p in polys)


def _minimal_monomials(mons: Iterable[Monomial]) -> List[Monomial]:
    uniq = sorted(set(mons), key=sum)
    kept: List[Monomial] = []
    for m in uniq:
        if not any(_divides(k, m) for k in kept):
            kept.append(m)
    return kept


def buchberger(polys: Sequence[Terms], key) -> List[Terms]:
    """Reduced Gröbner basis (monic, sorted by decreasing leading monomial).

    Normal selection strategy with the Gebauer–Möller criteria.
    """
    polys = [p for p in polys if p]
    if not polys:
        return []
    if _is_monomial_input(polys):
        mins = _minimal_monomials(next(iter(p)) for p in polys)
        mins.sort(key=key, reverse=True)
        return [{m: Fraction(1)} for m in mins]

    lm_of = lambda p: max(p, key=key)  # noqa: E731
    store: List[Terms] = []
    lms: List[Monomial] = []
    active: List[int] = []
    pairs: List[Tuple[int, int]] = []

    def update(h: int) -> None:
        nonlocal active, pairs
        mh = lms[h]
        cands = list(active)
        keep: List[int] = []
        # new pairs (h, g): drop those whose lcm is a multiple of another candidate lcm
        lcms = {g: _lcm(mh, lms[g]) for g in cands}
        for idx, g in enumerate(cands):
            lg = lcms[g]
            if _disjoint(mh, lms[g]):
                keep.append(g)
                continue
            redundant = False
            for g2 in cands[idx + 1:]:
                if _divides(lcms[g2], lg):
                    redundant = True
                    break
            if not redundant:
                for g2 in keep:
                    if _divides(lcms[g2], lg):
                        redundant = True
                        break
            if not redundant:
                keep.append(g)
        new = [(g, h) for g in keep if not _disjoint(mh, lms[g])]
        old = []
        for (a, b) in pairs:
            lab = _lcm(lms[a], lms[b])
            if _divides(mh, lab) and _lcm(lms[a], mh) != lab and _lcm(lms[b], mh) != lab:
                continue
            old.append((a, b))
        pairs = old + new
        active = [g for g in active if not _divides(mh, lms[g])] + [h]

    def add(p: Terms) -> None:
        lm = lm_of(p)
        store.append(_monic(p, lm))
        lms.append(lm)
        update(len(store) - 1)

    # seed: interreduce-ish insertion of the generators, smallest first
    for p in sorted(polys, key=lambda p: key(lm_of(p))):
        r = _reduce(p, _Basis([store[i] for i in active], [lms[i] for i in active]), key)
        if r:
            add(r)

    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda k: _pair_rank(pairs[k], lms, key),
        )
        a, b = pairs.pop(best)
        s = _spoly(store[a], lms[a], store[b], lms[b])
        r = _reduce(s, _Basis([store[i] for i in active], [lms[i] for i in active]), key)
        if r:
            add(r)

    # minimal basis, then interreduce
    lead = [(lms[i], store[i]) for i in active]
    lead.sort(key=lambda t: key(t[0]))
    minimal = []
    for lm, p in lead:
        if not any(_divides(olm, lm) for olm, _ in minimal):
            minimal.append((lm, p))
    out = []
    for i, (lm, p) in enumerate(minimal):
        others = [q for j, q in enumerate(minimal) if j != i]
        b = _Basis([q for _, q in others], [m for m, _ in others])
        tail = {m: c for m, c in p.items() if m != lm}
        r = _reduce(tail, b, key)
        r[lm] = Fraction(1)
        out.append((lm, r))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return [p for _, p in out]


def _pair_rank(pair, lms, key):
    l = _lcm(lms[pair[0]], lms[pair[1]])
    return (sum(l), key(l), pair)


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolynomialRing
    order: MonomialOrder
    elements: Tuple[Polynomial, ...]
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> List[Monomial]:
        key = self.order.key(self.ring)
        return [max(g.terms, key=key) for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def _basis(self) -> _Basis:
        lms = self.leading_monomials()
        return _Basis([_monic(dict(g.terms), lm) for g, lm in zip(self.elements, lms)], lms)

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatchError(f"{f.ring} vs {self.ring}")
        return Polynomial._raw(self.ring, _reduce(f.terms, self._basis(), self.order.key(self.ring)))


class Ideal:
    """An ideal given by generators, with reduced Gröbner bases cached per order.

    The cache is a write-once map: concurrent fills of the same order compute
    equal bases, so a lost race only costs time.
    """

    def __init__(self, ring: PolynomialRing, generators: Iterable = (), *, tags: Iterable[str] = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            elif isinstance(g, (int, Fraction)):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} lives in {g.ring}, not {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self.tags = frozenset(tags)
        self._gb_cache: Dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_strings(cls, variables: Sequence[str], generators: Sequence[str]) -> "Ideal":
        ring = PolynomialRing(variables)
        return cls(ring, generators)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal<{gens}> in K[{', '.join(self.ring.variables)}]"

    # -- derived ideals
    def __add__(self, other: "Ideal") -> "Ideal":
        _same_ring(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _same_ring(self, other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def plus(self, *polys) -> "Ideal":
        return Ideal(self.ring, list(self.generators) + list(polys))

    def to_ring(self, ring: PolynomialRing) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def restrict(self, drop: str) -> "Ideal":
        return Ideal(self.ring.drop(drop), [g.restrict(drop) for g in self.generators])

    def support(self) -> Tuple[str, ...]:
        used = set()
        for g in self.generators:
            used.update(g.support())
        return tuple(v for v in self.ring.variables if v in used)

    def is_zero(self) -> bool:
        return not self.generators

    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    # -- Gröbner bases
    def groebner(self, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        order = order or DEFAULT_ORDER
        gb = self._gb_cache.get(order)
        if gb is not None:
            return gb
        key = order.key(self.ring)
        raw = buchberger([g.terms for g in self.generators], key)
        gb = GroebnerBasis(self.ring, order, tuple(Polynomial._raw(self.ring, p) for p in raw))
        with self._lock:
            self._gb_cache.setdefault(order, gb)
        return self._gb_cache[order]

    def is_unit(self) -> bool:
        for gb in list(self._gb_cache.values()):
            return gb.is_unit()
        if any(g.is_constant() for g in self.generators):
            return True
        return self.groebner().is_unit()

    def contains(self, f: Polynomial) -> bool:
        return contains(self, f)

    def signature(self) -> Tuple:
        """Canonical hashable form: ring plus reduced grevlex basis."""
        gb = self.groebner()
        return (self.ring.variables, tuple(tuple(sorted(g.terms.items())) for g in gb.elements))


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


# ---------------------------------------------------------------------------
# operations


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``gb``."""
    return gb.reduce(f)


def reduced_groebner(I: Ideal, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    return I.groebner(order)


def contains(I: Ideal, f: Polynomial) -> bool:
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    if not f:
        return True
    return not normal_form(f, I.groebner())


def is_subset(I: Ideal, J: Ideal) -> bool:
    """I ⊆ J."""
    _same_ring(I, J)
    gb = J.groebner()
    return all(not gb.reduce(g) for g in I.generators)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I.groebner().elements == J.groebner().elements


def eliminate(I: Ideal, variables: Iterable[str]) -> Ideal:
    """``I ∩ K[remaining variables]``, returned over the smaller ring."""
    elim = tuple(v for v in I.ring.variables if v in set(variables))
    if not elim:
        return I
    rest = PolynomialRing(v for v in I.ring.variables if v not in elim)
    order = Elimination(elim, GrevLex())
    idx = [I.ring.index(v) for v in elim]
    keep = [i for i in range(I.ring.n) if i not in idx]
    out = []
    for g in I.groebner(order).elements:
        if all(not any(m[i] for i in idx) for m in g.terms):
            out.append(Polynomial._raw(rest, {tuple(m[i] for i in keep): c for m, c in g.terms.items()}))
    return Ideal(rest, out)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t·I + (1 − t)·J``."""
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring)
    if I.is_monomial() and J.is_monomial():
        lcms = [_lcm(next(iter(f.terms)), next(iter(g.terms))) for f in I.generators for g in J.generators]
        return Ideal(I.ring, [I.ring.monomial(m) for m in _minimal_monomials(lcms)])
    (t,) = I.ring.fresh_names(1, "t")
    big = I.ring.extend([t])
    tv = big.gen(t)
    gens = [tv * f.to_ring(big) for f in I.generators]
    gens += [(1 - tv) * g.to_ring(big) for g in J.generators]
    return eliminate(Ideal(big, gens), [t])


def in_radical(f: Polynomial, I: Ideal) -> bool:
    """``f ∈ √I`` via ``1 ∈ I + ⟨1 − w·f⟩`` with a fresh variable ``w``."""
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    if not f:
        return True
    if I.is_monomial() and len(f) == 1:
        # a monomial lies in √I iff its support product is divisible by some generator's support
        (m,) = f.terms
        sup = tuple(1 if e else 0 for e in m)
        return any(_divides(tuple(1 if e else 0 for e in next(iter(g.terms))), sup) for g in I.generators)
    (w,) = I.ring.fresh_names(1, "w")
    big = I.ring.extend([w])
    J = Ideal(big, [g.to_ring(big) for g in I.generators] + [1 - big.gen(w) * f.to_ring(big)])
    return J.is_unit()


def is_variable_generated(I: Ideal) -> bool:
    """True iff the reduced grevlex basis consists of single variables (⟨0⟩ included)."""
    for g in I.groebner().elements:
        if len(g) != 1:
            return False
        (m,) = g.terms
        if sum(m) != 1:
            return False
    return True


def initial_ideal(I: Ideal, order: Optional[MonomialOrder] = None) -> Ideal:
    """Monomial ideal of leading monomials of the reduced basis."""
    gb = I.groebner(order)
    return Ideal(I.ring, [I.ring.monomial(m) for m in gb.leading_monomials()])


def s_polynomials_reduce_to_zero(gb: GroebnerBasis) -> bool:
    """Buchberger's criterion checked over every pair."""
    key = gb.order.key(gb.ring)
    basis = gb._basis()
    for i, j in combinations(range(len(basis.polys)), 2):
        s = _spoly(basis.polys[i], basis.lms[i], basis.polys[j], basis.lms[j])
        if _reduce(s, basis, key):
            return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    lms = gb.leading_monomials()
    for g, lm in zip(gb.elements, lms):
        if g.terms[lm] != 1:
            return False
        for m in g.terms:
            for other in lms:
                if other is not lm and other != lm and _divides(other, m):
                    return False
    return True
