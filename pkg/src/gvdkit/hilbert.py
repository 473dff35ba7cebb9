"""Hilbert series, h-polynomials and the invariants read off them.

Integer polynomials in ``t`` are lists of coefficients, constant term first.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .groebner import Ideal, _divides, _minimal_monomials, initial_ideal, is_variable_generated
from .polynomial import Monomial, MonomialOrder

TPoly = List[int]

UNIT_DIM = -1
"""Dimension sentinel for the unit ideal (empty quotient); never fed to formulas."""


class CMStatus(str, enum.Enum):
    CERTIFIED = "certified"
    ASSERTED = "asserted"
    UNKNOWN = "unknown"


class Hilbertian(str, enum.Enum):
    HILBERTIAN = "Hilbertian"
    ALMOST = "AlmostHilbertian"
    NEITHER = "Neither"
    UNKNOWN = "Unknown"


# ---------------------------------------------------------------------------
# t-polynomial helpers


def _trim(p: TPoly) -> TPoly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def tpoly_add(a: Sequence[int], b: Sequence[int]) -> TPoly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def tpoly_sub(a: Sequence[int], b: Sequence[int]) -> TPoly:
    return tpoly_add(a, [-c for c in b])


def tpoly_mul(a: Sequence[int], b: Sequence[int]) -> TPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def tpoly_shift(a: Sequence[int], k: int = 1) -> TPoly:
    return [0] * k + list(a) if a else []


def one_minus_t_pow(k: int) -> TPoly:
    """(1 − t)^k."""
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


def tpoly_eval(a: Sequence[int], x) -> int:
    return sum(c * x**i for i, c in enumerate(a))


def divide_one_minus_t(a: Sequence[int]) -> TPoly:
    """Exact quotient by (1 − t); requires a(1) = 0."""
    if tpoly_eval(a, 1) != 0:
        raise ValueError("polynomial is not divisible by 1 - t")
    # a = (1 - t) q  ⇒  q_i = a_0 + ... + a_i
    q, s = [], 0
    for c in a[:-1]:
        s += c
        q.append(s)
    return _trim(q)


# ---------------------------------------------------------------------------
# numerator of monomial ideals


class _NumeratorMemo:
    def __init__(self):
        self._table: Dict[Tuple[Monomial, ...], TPoly] = {}
        self._lock = threading.Lock()

    def get(self, k):
        return self._table.get(k)

    def put(self, k, v):
        with self._lock:
            self._table.setdefault(k, v)

    def clear(self):
        with self._lock:
            self._table.clear()


_memo = _NumeratorMemo()


def _numerator(gens: List[Monomial]) -> TPoly:
    if not gens:
        return [1]
    if any(not any(m) for m in gens):
        return []
    key = tuple(sorted(gens))
    hit = _memo.get(key)
    if hit is not None:
        return hit
    # pairwise coprime generators: product of (1 - t^deg)
    support_counts = [0] * len(gens[0])
    for m in gens:
        for i, e in enumerate(m):
            if e:
                support_counts[i] += 1
    if max(support_counts) <= 1:
        out = [1]
        for m in gens:
            d = sum(m)
            out = tpoly_mul(out, [1] + [0] * (d - 1) + [-1])
        _memo.put(key, out)
        return out
    # pivot on the variable in most generators; ties by ring order
    x = max(range(len(support_counts)), key=lambda i: (support_counts[i], -i))
    unit = tuple(1 if i == x else 0 for i in range(len(gens[0])))
    plus = _minimal_monomials([m for m in gens if not m[x]] + [unit])
    colon = _minimal_monomials([m[:x] + (max(m[x] - 1, 0),) + m[x + 1:] for m in gens])
    out = tpoly_add(_numerator(plus), tpoly_shift(_numerator(colon), 1))
    _memo.put(key, out)
    return out


def hilbert_numerator(M: Ideal) -> TPoly:
    """Numerator of the Hilbert series of R/M over (1 − t)^n, M monomial.

    Pivot recursion HN(M) = HN(M + ⟨x⟩) + t·HN(M : x).
    """
    if not M.is_monomial():
        raise ValueError("hilbert_numerator needs a monomial ideal")
    gens = _minimal_monomials(next(iter(g.terms)) for g in M.generators)
    return list(_numerator(gens))


@dataclass(frozen=True)
class HilbertData:
    numerator: Tuple[int, ...]
    h: Tuple[int, ...]
    dim: int
    ambient: int

    @property
    def is_unit(self) -> bool:
        return not self.numerator

    @property
    def degree(self) -> int:
        return len(self.h) - 1

    @property
    def multiplicity(self) -> int:
        return sum(self.h)

    @property
    def a_invariant(self) -> int:
        return self.degree - self.dim

    def series(self, upto: int) -> List[int]:
        """Hilbert function values HF(0..upto) from the first-form numerator."""
        n = self.ambient
        out = []
        for t in range(upto + 1):
            out.append(sum(c * comb(t - i + n - 1, n - 1) for i, c in enumerate(self.numerator) if i <= t))
        return out


def reduce_series(numerator: Sequence[int], ambient: int) -> HilbertData:
    """Cancel the full power of (1 − t) from ``numerator / (1 − t)^ambient``."""
    num = _trim(numerator)
    if not num:
        return HilbertData((), (), UNIT_DIM, ambient)
    h, k = num, 0
    while tpoly_eval(h, 1) == 0:
        h = divide_one_minus_t(h)
        k += 1
    return HilbertData(tuple(num), tuple(h), ambient - k, ambient)


def hilbert_data(I: Ideal, order: Optional[MonomialOrder] = None) -> HilbertData:
    """Hilbert data of R/I via the initial ideal (grevlex unless ``order`` given)."""
    M = I if I.is_monomial() else initial_ideal(I, order)
    return reduce_series(hilbert_numerator(M), I.ring.n)


def hilbert_function_oracle(I: Ideal, degree: int) -> int:
    """Brute-force count of standard monomials of the given degree."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    lms = I.groebner().leading_monomials()
    n = I.ring.n
    count = 0
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        m = tuple(e)
        if not any(_divides(lm, m) for lm in lms):
            count += 1
    return count


def hilbert_polynomial(hd: HilbertData) -> List[Fraction]:
    """Coefficients (constant first) of HP(t) = Σ h_i·C(t − i + d − 1, d − 1)."""
    d = hd.dim
    if d <= 0:
        return []
    out: List[Fraction] = []
    for i, hi in enumerate(hd.h):
        # C(t - i + d - 1, d - 1) = prod_{k=1}^{d-1} (t - i + k) / (d-1)!
        poly = [Fraction(1)]
        for k in range(1, d):
            shift = Fraction(k - i)
            nxt = [Fraction(0)] * (len(poly) + 1)
            for j, c in enumerate(poly):
                nxt[j] += c * shift
                nxt[j + 1] += c
            poly = nxt
        scale = Fraction(hi, factorial(d - 1))
        for j, c in enumerate(poly):
            if j >= len(out):
                out.append(Fraction(0))
            out[j] += c * scale
    while out and out[-1] == 0:
        out.pop()
    return out


def eval_hp(coeffs: Sequence[Fraction], t: int) -> Fraction:
    return sum((c * t**j for j, c in enumerate(coeffs)), Fraction(0))


def hilbertian_by_comparison(hd: HilbertData) -> Hilbertian:
    """HF against HP on 0..deg(h)+dim+1; past the a-invariant they agree."""
    hp = hilbert_polynomial(hd)
    hi = max(hd.degree + hd.dim + 1, 1)
    hf = hd.series(hi)
    bad = [t for t in range(hi + 1) if hf[t] != eval_hp(hp, t)]
    if not bad:
        return Hilbertian.HILBERTIAN
    if bad == [0]:
        return Hilbertian.ALMOST
    return Hilbertian.NEITHER


# ---------------------------------------------------------------------------
# reports


@dataclass
class InvariantReport:
    h: Tuple[int, ...]
    dim: int
    reg: Optional[int]
    e: int
    a: int
    hilbertian: Hilbertian
    provenance: str
    cm_status: CMStatus = CMStatus.UNKNOWN
    notes: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "hPoly": list(self.h) if self.h else None,
            "dim": self.dim,
            "reg": self.reg,
            "e": self.e,
            "a": self.a,
            "hilbertian": self.hilbertian.value,
            "provenance": self.provenance,
            "cm_status": self.cm_status.value,
        }
        out.update(self.notes)
        return out

    def same_invariants(self, other: "InvariantReport") -> bool:
        return (self.reg, self.e, self.a) == (other.reg, other.e, other.a)


def classify_hilbertian(report: InvariantReport, cm_status: CMStatus = None,
                        hd: Optional[HilbertData] = None) -> Hilbertian:
    cm_status = CMStatus(cm_status or report.cm_status)
    if cm_status is not CMStatus.UNKNOWN:
        if report.a < 0:
            return Hilbertian.HILBERTIAN
        if report.a == 0:
            return Hilbertian.ALMOST
        return Hilbertian.NEITHER
    if hd is None:
        return Hilbertian.UNKNOWN
    return hilbertian_by_comparison(hd)


def report_from_hilbert(hd: HilbertData, cm_status: CMStatus, provenance: str = "direct") -> InvariantReport:
    if hd.is_unit:
        raise ValueError("invariants are undefined for the unit ideal")
    cm_status = CMStatus(cm_status)
    reg = hd.degree if cm_status is not CMStatus.UNKNOWN else None
    rep = InvariantReport(hd.h, hd.dim, reg, hd.multiplicity, hd.a_invariant,
                          Hilbertian.UNKNOWN, provenance, cm_status)
    rep.hilbertian = classify_hilbertian(rep, cm_status, hd)
    return rep


def structurally_cm(I: Ideal) -> bool:
    """Zero, principal and variable-generated ideals have Cohen–Macaulay quotients."""
    gb = I.groebner().elements
    return len(gb) <= 1 or is_variable_generated(I)


def invariants_direct(I: Ideal, cm_status=CMStatus.UNKNOWN) -> InvariantReport:
    """reg (only when CM is certified or asserted), e and a from the Hilbert series.

    An unknown status is upgraded to certified for structurally CM ideals.
    """
    hd = hilbert_data(I)
    if hd.is_unit:
        raise ValueError("invariants are undefined for the unit ideal")
    cm_status = CMStatus(cm_status)
    if cm_status is CMStatus.UNKNOWN and structurally_cm(I):
        cm_status = CMStatus.CERTIFIED
    return report_from_hilbert(hd, cm_status, "direct")
