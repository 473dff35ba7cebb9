"""Geometric vertex decomposition: one-step splits, the recursive certifier,
and the invariant recursions for regularity, multiplicity and a-invariant.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .groebner import (
    Ideal,
    initial_ideal,
    ideals_equal,
    in_radical,
    intersect,
    is_variable_generated,
)
from .hilbert import (
    CMStatus,
    Hilbertian,
    InvariantReport,
    classify_hilbertian,
    hilbert_data,
    hilbert_numerator,
    invariants_direct,
    tpoly_add,
    tpoly_shift,
)
from .polynomial import GrevLex, Lex, MonomialOrder, Polynomial, YBlock

log = logging.getLogger(__name__)


class Degeneracy(str, enum.Enum):
    NONDEGENERATE = "NondegenerateSplit"
    UNIT_C = "DegenerateUnitC"
    EQUAL_RADICALS = "DegenerateEqualRadicals"


class UnmixedPolicy(str, enum.Enum):
    """How unmixedness is settled at each node.

    ``structural``: certify principal, variable, toric-of-bipartite and
    squarefree monomial ideals; anything else is assumed and annotated.
    ``assume``: skip all checks, annotate every node as assumed.
    ``strict``: like ``structural`` but an uncertifiable node fails.
    """

    STRUCTURAL = "structural"
    ASSUME = "assume"
    STRICT = "strict"


ORDER_FAMILIES = ("yblock", "lex")


def canonical_order(y: str) -> MonomialOrder:
    return YBlock(y, GrevLex())


def _order_for(y: str, family: str, ring) -> MonomialOrder:
    if family == "yblock":
        return canonical_order(y)
    if family == "lex":
        return Lex((y,) + tuple(v for v in ring.variables if v != y))
    raise ValueError(f"unknown order family {family!r}")


def is_y_compatible(order: MonomialOrder, y: str, ring) -> bool:
    if isinstance(order, Lex) and order.variables is None:
        return ring.variables[:1] == (y,)
    return order.is_y_compatible(y)


# ---------------------------------------------------------------------------
# one step


@dataclass
class GVDSplit:
    ideal: Ideal
    y: str
    order: MonomialOrder
    in_y: Ideal
    C: Ideal
    N: Ideal
    valid: bool
    degeneracy: Degeneracy

    def contracted(self) -> Tuple[Ideal, Ideal]:
        """C and N over the ring without ``y``."""
        return self.C.restrict(self.y), self.N.restrict(self.y)

    def to_json(self) -> dict:
        return {
            "y": self.y,
            "order": describe_order(self.order),
            "valid": self.valid,
            "degeneracy": self.degeneracy.value,
            "C": [str(g) for g in self.C.generators],
            "N": [str(g) for g in self.N.generators],
        }


def describe_order(order: MonomialOrder) -> str:
    if isinstance(order, YBlock):
        return f"YBlock({order.y}, {describe_order(order.tail)})"
    if isinstance(order, Lex):
        return "Lex" if order.variables is None else "Lex(" + ">".join(order.variables) + ")"
    if isinstance(order, GrevLex):
        return "GrevLex" if order.variables is None else "GrevLex(" + ">".join(order.variables) + ")"
    return repr(order)


def _radicals_equal(C: Ideal, N: Ideal) -> bool:
    # N ⊆ C always; screen on dimension before any radical membership
    if ideals_equal(C, N):
        return True
    if hilbert_data(C).dim != hilbert_data(N).dim:
        return False
    return all(in_radical(g, N) for g in C.groebner().elements) and all(
        in_radical(g, C) for g in N.groebner().elements
    )


def one_step_split(I: Ideal, y: str, order: Optional[MonomialOrder] = None) -> GVDSplit:
    """C, N and in_y(I) from the reduced basis under a y-compatible order."""
    ring = I.ring
    yi = ring.index(y)
    order = order or canonical_order(y)
    if not is_y_compatible(order, y, ring):
        raise ValueError(f"order {describe_order(order)} is not {y}-compatible")
    c_gens, n_gens, in_gens = [], [], []
    for g in I.groebner(order).elements:
        lead = g.initial_y_form(y)
        d = next(iter(lead.terms))[yi]
        q = Polynomial._raw(ring, {m[:yi] + (0,) + m[yi + 1:]: c for m, c in lead.terms.items()})
        c_gens.append(q)
        if d == 0:
            n_gens.append(q)
        in_gens.append(lead)
    C, N, inY = Ideal(ring, c_gens), Ideal(ring, n_gens), Ideal(ring, in_gens)
    valid = ideals_equal(inY, intersect(C, N.plus(ring.gen(y))))
    if C.is_unit():
        deg = Degeneracy.UNIT_C
    elif _radicals_equal(C, N):
        deg = Degeneracy.EQUAL_RADICALS
    else:
        deg = Degeneracy.NONDEGENERATE
    return GVDSplit(I, y, order, inY, C, N, valid, deg)


def verify_series_identity(I: Ideal, split: GVDSplit) -> bool:
    """H(R/I) = H(R/(N + ⟨y⟩)) + t·H(R/C), compared as numerators over (1 − t)^n."""
    if not split.valid:
        raise ValueError("series identity needs a valid geometric vertex decomposition")
    lhs = _num(I)
    rhs = tpoly_add(_num(split.N.plus(I.ring.gen(split.y))), tpoly_shift(_num(split.C), 1))
    return lhs == rhs


def verify_h_identity(I: Ideal, split: GVDSplit) -> bool:
    """h(R/I) = h(R/N) + t·h(R/C) for a nondegenerate split."""
    if split.degeneracy is not Degeneracy.NONDEGENERATE:
        raise ValueError("the h-polynomial identity is stated for nondegenerate splits")
    h = list(hilbert_data(I).h)
    hN, hC = list(hilbert_data(split.N).h), list(hilbert_data(split.C).h)
    return h == tpoly_add(hN, tpoly_shift(hC, 1))


def _num(I: Ideal):
    M = I if I.is_monomial() else initial_ideal(I)
    return hilbert_numerator(M)


# ---------------------------------------------------------------------------
# unmixedness


def _squarefree_monomial(I: Ideal) -> bool:
    return I.is_monomial() and all(max(next(iter(g.terms))) <= 1 for g in I.generators)


def minimal_vertex_covers(edges: Sequence[frozenset]) -> List[frozenset]:
    """Minimal transversals of a hypergraph (minimal primes of a squarefree monomial ideal)."""
    edges = sorted({frozenset(e) for e in edges}, key=len)
    found: List[frozenset] = []

    def grow(cover: frozenset, start: int):
        for k in range(start, len(edges)):
            if not (edges[k] & cover):
                for v in sorted(edges[k]):
                    grow(cover | {v}, k + 1)
                return
        if not any(f <= cover for f in found):
            found[:] = [f for f in found if not cover <= f]
            found.append(cover)

    grow(frozenset(), 0)
    # the search can reach a non-minimal cover before its subset; prune again
    return [c for c in found if not any(o < c for o in found)]


def unmixed_outcome(I: Ideal, policy: UnmixedPolicy) -> str:
    policy = UnmixedPolicy(policy)
    if policy is UnmixedPolicy.ASSUME:
        return "assumed"
    gens = I.groebner().elements
    if not gens or I.is_unit():
        return "certified:trivial"
    if "toric-bipartite" in I.tags or "toric" in I.tags:
        return "certified:toric-prime"
    if len(gens) == 1:
        return "certified:principal"
    if is_variable_generated(I):
        return "certified:variables"
    if all(len(g) == 1 for g in gens):
        if all(max(next(iter(g.terms))) <= 1 for g in gens):
            supports = [frozenset(i for i, e in enumerate(next(iter(g.terms))) if e) for g in gens]
            sizes = {len(c) for c in minimal_vertex_covers(supports)}
            return "certified:squarefree" if len(sizes) == 1 else "failed:mixed-squarefree"
    if policy is UnmixedPolicy.STRICT:
        return "failed:uncertified"
    return "assumed"


# ---------------------------------------------------------------------------
# the certifier


class Verdict(str, enum.Enum):
    BASE_UNIT = "BaseUnit"
    BASE_VARIABLES = "BaseVariables"
    DECOMPOSED = "Decomposed"
    FAILED = "Failed"


@dataclass
class GVDTree:
    ideal: Ideal
    verdict: Verdict
    unmixed: str = "assumed"
    split: Optional[GVDSplit] = None
    c_branch: Optional["GVDTree"] = None
    n_branch: Optional["GVDTree"] = None
    reasons: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.verdict is not Verdict.FAILED

    def depth(self) -> int:
        if self.verdict is not Verdict.DECOMPOSED:
            return 0
        return 1 + max(self.c_branch.depth(), self.n_branch.depth())

    def nodes(self):
        yield self
        if self.verdict is Verdict.DECOMPOSED:
            yield from self.c_branch.nodes()
            yield from self.n_branch.nodes()

    def splits(self) -> List[GVDSplit]:
        return [n.split for n in self.nodes() if n.verdict is Verdict.DECOMPOSED]

    def assumptions(self) -> List[str]:
        return sorted({n.unmixed for n in self.nodes() if n.unmixed == "assumed"})

    def to_json(self) -> dict:
        out = {
            "ring": list(self.ideal.ring.variables),
            "ideal": [str(g) for g in self.ideal.generators],
            "verdict": self.verdict.value,
            "unmixed": self.unmixed,
        }
        if self.verdict is Verdict.DECOMPOSED:
            out.update(self.split.to_json())
            out["C_branch"] = self.c_branch.to_json()
            out["N_branch"] = self.n_branch.to_json()
        if self.verdict is Verdict.FAILED:
            out["reasons"] = [{"y": y, "reason": r} for y, r in self.reasons]
        return out


class _Search:
    def __init__(self, policy: UnmixedPolicy, orders: Sequence[str]):
        self.policy = UnmixedPolicy(policy)
        self.orders = tuple(orders)
        for o in self.orders:
            if o not in ORDER_FAMILIES:
                raise ValueError(f"unknown order family {o!r}; choose from {ORDER_FAMILIES}")
        self.memo: Dict[tuple, GVDTree] = {}
        self.splits: Dict[tuple, GVDSplit] = {}

    def split(self, I: Ideal, y: str, family: str) -> GVDSplit:
        k = (I.signature(), y, family)
        s = self.splits.get(k)
        if s is None:
            s = one_step_split(I, y, _order_for(y, family, I.ring))
            self.splits[k] = s
        return s

    def run(self, I: Ideal) -> GVDTree:
        sig = I.signature()
        hit = self.memo.get(sig)
        if hit is not None:
            return hit
        tree = self._decide(I)
        self.memo[sig] = tree
        return tree

    def _decide(self, I: Ideal) -> GVDTree:
        unmixed = unmixed_outcome(I, self.policy)
        if unmixed.startswith("failed"):
            return GVDTree(I, Verdict.FAILED, unmixed, reasons=[("*", f"unmixedness {unmixed}")])
        if I.is_unit():
            return GVDTree(I, Verdict.BASE_UNIT, unmixed)
        if is_variable_generated(I):
            return GVDTree(I, Verdict.BASE_VARIABLES, unmixed)
        reasons = []
        for y in I.ring.variables:
            for family in self.orders:
                s = self.split(I, y, family)
                if not s.valid:
                    reasons.append((y, f"{family}: in_y(I) differs from C ∩ (N + <y>)"))
                    continue
                Cc, Nc = s.contracted()
                ct = self.run(Cc)
                if not ct.certified:
                    reasons.append((y, f"{family}: C-ideal not GVD"))
                    continue
                nt = self.run(Nc)
                if not nt.certified:
                    reasons.append((y, f"{family}: N-ideal not GVD"))
                    continue
                return GVDTree(I, Verdict.DECOMPOSED, unmixed, s, ct, nt)
        return GVDTree(I, Verdict.FAILED, unmixed, reasons=reasons)


def is_gvd(I: Ideal, policy: UnmixedPolicy = UnmixedPolicy.STRUCTURAL,
           orders: Sequence[str] = ("yblock",)) -> GVDTree:
    """Search for a geometric vertex decomposition process of ``I``.

    Variables are tried in ring order; subproblems are memoized on their
    reduced grevlex basis.  Failure is a verdict carrying per-variable reasons.
    """
    return _Search(policy, orders).run(I)


# ---------------------------------------------------------------------------
# recursions


@dataclass(frozen=True)
class _Inv:
    h: Tuple[int, ...]
    dim: int
    reg: int
    e: int
    a: int


def _combine(split: GVDSplit, inv_c: Optional[_Inv], inv_n: _Inv) -> _Inv:
    """Invariants of R/I from those of R'/C and R'/N (R' = ring without y)."""
    if split.degeneracy is Degeneracy.UNIT_C:
        # R/I has the Hilbert series of R/(N + <y>) = R'/N
        return inv_n
    if split.degeneracy is Degeneracy.EQUAL_RADICALS:
        # I = N, extended by the free variable y
        return _Inv(inv_n.h, inv_n.dim + 1, inv_n.reg, inv_n.e, inv_n.a - 1)
    h = tuple(tpoly_add(list(inv_n.h), tpoly_shift(list(inv_c.h), 1)))
    return _Inv(
        h,
        inv_n.dim,
        max(inv_n.reg, inv_c.reg + 1),
        inv_n.e + inv_c.e,
        max(inv_n.a, inv_c.a),
    )


def _from_direct(I: Ideal) -> _Inv:
    hd = hilbert_data(I)
    return _Inv(hd.h, hd.dim, hd.degree, hd.multiplicity, hd.a_invariant)


def _eval(tree: GVDTree) -> Optional[_Inv]:
    if tree.verdict is Verdict.BASE_UNIT:
        return None
    if tree.verdict is Verdict.BASE_VARIABLES:
        k = len(tree.ideal.groebner().elements)
        d = tree.ideal.ring.n - k
        return _Inv((1,), d, 0, 1, -d)
    if tree.verdict is Verdict.DECOMPOSED:
        inv_n = _eval(tree.n_branch)
        inv_c = _eval(tree.c_branch)
        return _combine(tree.split, inv_c, inv_n)
    raise ValueError("cannot evaluate a failed decomposition tree")


def _report(inv: _Inv, cm: CMStatus, notes: dict) -> InvariantReport:
    rep = InvariantReport(inv.h, inv.dim, inv.reg, inv.e, inv.a, Hilbertian.UNKNOWN,
                          "recursion", cm, dict(notes))
    rep.hilbertian = classify_hilbertian(rep, cm)
    return rep


def first_usable_split(I: Ideal, orders: Sequence[str] = ("yblock",)) -> Optional[GVDSplit]:
    """First valid nondegenerate split in ring order (for CM-asserted use)."""
    fallback = None
    for y in I.ring.variables:
        for family in orders:
            s = one_step_split(I, y, _order_for(y, family, I.ring))
            if s.valid and s.degeneracy is Degeneracy.NONDEGENERATE:
                return s
            if s.valid and fallback is None and y in I.support():
                fallback = s
    return fallback


def invariants_via_split(I: Ideal, split: Optional[GVDSplit] = None) -> InvariantReport:
    """One recursion step under asserted Cohen–Macaulayness of I and its C, N ideals.

    Child invariants come from their Hilbert series; results are labeled asserted.
    """
    split = split or first_usable_split(I)
    if split is None or not split.valid:
        raise ValueError("no geometric vertex decomposition available for the recursion")
    Cc, Nc = split.contracted()
    inv_c = None if Cc.is_unit() else _from_direct(Cc)
    inv = _combine(split, inv_c, _from_direct(Nc))
    return _report(inv, CMStatus.ASSERTED, {"split_variable": split.y,
                                            "order": describe_order(split.order)})


def invariants_via_recursion(tree: GVDTree, assume_cm: bool = False) -> InvariantReport:
    """Bottom-up reg/e/a through the decomposition tree.

    A certified tree gives CM-certified values.  A failed tree is only
    evaluated with ``assume_cm``: one split, children measured directly.
    """
    if tree.certified:
        if tree.verdict is Verdict.BASE_UNIT:
            raise ValueError("invariants are undefined for the unit ideal")
        notes = {"unmixed_assumptions": len([n for n in tree.nodes() if n.unmixed == "assumed"])}
        if tree.verdict is Verdict.DECOMPOSED:
            notes["split_variable"] = tree.split.y
            notes["order"] = describe_order(tree.split.order)
        return _report(_eval(tree), CMStatus.CERTIFIED, notes)
    if not assume_cm:
        raise ValueError("tree is not GVD-certified; pass assume_cm to use the recursion anyway")
    return invariants_via_split(tree.ideal)


# ---------------------------------------------------------------------------
# C-saturated processes


@dataclass
class CSatResult:
    ok: bool
    ideal: Ideal
    kind: str = ""
    split: Optional[GVDSplit] = None
    children: Tuple["CSatResult", ...] = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def c_ideals(self) -> List[Ideal]:
        out = []
        if self.split is not None:
            out.append(self.split.contracted()[0])
        for ch in self.children:
            out.extend(ch.c_ideals())
        return out


def is_irrelevant(I: Ideal) -> bool:
    """Generated by every variable of its ring (for n = 0 this is ⟨0⟩)."""
    gb = I.groebner().elements
    if I.is_unit():
        return False
    return is_variable_generated(I) and len(gb) == I.ring.n


def is_c_saturated(I: Ideal, policy: UnmixedPolicy = UnmixedPolicy.STRUCTURAL,
                   orders: Sequence[str] = ("yblock",)) -> CSatResult:
    """Search for a GVD process in which no contracted C-ideal is irrelevant."""
    search = _Search(policy, orders)
    memo: Dict[tuple, CSatResult] = {}

    def go(J: Ideal) -> CSatResult:
        sig = J.signature()
        if sig in memo:
            return memo[sig]
        memo[sig] = CSatResult(False, J, reason="cycle")
        res = decide(J)
        memo[sig] = res
        return res

    def decide(J: Ideal) -> CSatResult:
        if J.is_unit():
            return CSatResult(False, J, reason="unit ideal")
        if is_irrelevant(J):
            return CSatResult(False, J, reason="irrelevant ideal")
        if unmixed_outcome(J, search.policy).startswith("failed"):
            return CSatResult(False, J, reason="not unmixed")
        if is_variable_generated(J):
            return CSatResult(True, J, "base")
        for y in J.ring.variables:
            for family in search.orders:
                s = search.split(J, y, family)
                if not s.valid:
                    continue
                Cc, Nc = s.contracted()
                if s.degeneracy is not Degeneracy.NONDEGENERATE:
                    n_res = go(Nc)
                    if n_res:
                        return CSatResult(True, J, "degenerate", s, (n_res,))
                    continue
                c_res = go(Cc)
                if not c_res:
                    continue
                n_res = go(Nc)
                if n_res:
                    return CSatResult(True, J, "nondegenerate", s, (c_res, n_res))
        return CSatResult(False, J, reason="no C-saturated decomposition")

    return go(I)


# ---------------------------------------------------------------------------
# audit


@dataclass
class AuditRow:
    label: str
    gvd: bool
    c_saturated: bool
    a: Optional[int]
    ok: bool
    message: str = ""


def nonpositivity_audit(corpus: Iterable[Tuple[str, Ideal]],
                        policy: UnmixedPolicy = UnmixedPolicy.STRUCTURAL) -> List[AuditRow]:
    """a ≤ 0 on GVD-certified ideals, a < 0 on C-saturated ones; rows flag violations."""
    rows = []
    for label, I in corpus:
        tree = is_gvd(I, policy)
        if not tree.certified or I.is_unit():
            rows.append(AuditRow(label, False, False, None, True, "not certified; skipped"))
            continue
        a = invariants_direct(I, CMStatus.CERTIFIED).a
        csat = bool(is_c_saturated(I, policy))
        ok = a <= 0 and (a < 0 or not csat)
        msg = "" if ok else f"a = {a} violates {'a < 0' if csat else 'a <= 0'}"
        rows.append(AuditRow(label, True, csat, a, ok, msg))
    return rows
