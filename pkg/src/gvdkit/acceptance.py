"""Acceptance criteria as runnable checks, shared by the CLI and the test suite."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from .corpus import random_ideal_corpus
from .fixtures import (
    NONRADICAL_ORDER,
    cubic_six,
    irrelevant_c,
    nonradical_four,
    quadric_six,
    triangle_boundary,
)
from .groebner import Ideal, ideals_equal
from .gvd import (
    Degeneracy,
    Verdict,
    invariants_via_recursion,
    invariants_via_split,
    is_c_saturated,
    is_gvd,
    nonpositivity_audit,
    one_step_split,
    verify_h_identity,
    verify_series_identity,
)
from .hilbert import (
    CMStatus,
    Hilbertian,
    hilbert_data,
    hilbert_function_oracle,
    hilbertian_by_comparison,
    invariants_direct,
)
from .simplicial import (
    boundary_of_triangle,
    is_vertex_decomposable_pure,
    random_complex_corpus,
    reg_via_vd_recursion,
    stanley_reisner_ideal,
)
from .toric import (
    Graph,
    even_cycles,
    ferrers_graph,
    ferrers_invariants,
    glue_cycle,
    grd_expected,
    grd_graph,
    grd_known_generators,
    partitions,
    random_bipartite_corpus,
    toric_ideal,
)

Outcome = Tuple[bool, str, str, str]  # ok, expected, actual, detail


@dataclass
class Result:
    id: int
    group: str
    name: str
    ok: bool
    expected: str
    actual: str
    seconds: float
    limit: Optional[float]
    detail: str = ""

    def to_json(self) -> dict:
        return {"id": self.id, "group": self.group, "name": self.name, "ok": self.ok,
                "expected": self.expected, "actual": self.actual,
                "seconds": round(self.seconds, 3), "limit": self.limit, "detail": self.detail}

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"[{status}] {self.id:>2} {self.name}: expected {self.expected}; "
                f"actual {self.actual} ({self.seconds:.2f}s)")


@dataclass(frozen=True)
class Criterion:
    id: int
    group: str
    name: str
    run: Callable[[int], Outcome]
    limit: Optional[float] = None


# ---------------------------------------------------------------------------
# shared corpora


def fixture_ideals() -> List[Tuple[str, Ideal]]:
    return [
        ("cubic_six", cubic_six()),
        ("quadric_six", quadric_six()),
        ("nonradical_four", nonradical_four()),
        ("irrelevant_c", irrelevant_c()),
        ("triangle_boundary", triangle_boundary()),
    ]


@lru_cache(maxsize=None)
def toric_corpus(seed: int, count: int = 30, max_edges: int = 8) -> Tuple[Tuple[str, Graph, Ideal], ...]:
    graphs = random_bipartite_corpus(seed + 101, count, max_edges)
    return tuple((f"bipartite[{k}]", G, toric_ideal(G)) for k, G in enumerate(graphs))


@lru_cache(maxsize=None)
def complex_corpus(seed: int, count: int = 60):
    return tuple(random_complex_corpus(seed + 202, count, 8))


def ideal_corpus(seed: int) -> List[Tuple[str, Ideal]]:
    out = fixture_ideals()
    out += [(label, I) for label, _, I in toric_corpus(seed)]
    for k, D in enumerate(complex_corpus(seed)[:20]):
        out.append((f"stanley-reisner[{k}]", stanley_reisner_ideal(D)))
    return out


def _fmt(xs) -> str:
    return ", ".join(str(x) for x in xs)


# ---------------------------------------------------------------------------
# criteria


def c01_groebner_golden(seed: int) -> Outcome:
    I = nonradical_four()
    gb = I.groebner(NONRADICAL_ORDER)
    got = sorted(str(g) for g in gb.elements)
    want = sorted(str(I.ring.parse(s)) for s in ["x*w - y*z", "x*y", "y^2*z"])
    return got == want, _fmt(want), _fmt(got), "reduced basis under lex x > y > z > w"


def c02_hilbert_oracle(seed: int) -> Outcome:
    ideals = random_ideal_corpus(seed + 2, 50, max_vars=5, max_degree=4)
    bad = []
    for k, I in enumerate(ideals):
        series = hilbert_data(I).series(12)
        brute = [hilbert_function_oracle(I, d) for d in range(13)]
        if series != brute:
            bad.append(k)
    return not bad, "50 ideals agree in degrees 0..12", f"{50 - len(bad)} agree", f"mismatches: {bad}"


def c03_series_identity(seed: int) -> Outcome:
    checked, bad = 0, []
    for label, I in ideal_corpus(seed)[: 5 + 30]:
        for y in I.ring.variables:
            s = one_step_split(I, y)
            if not s.valid:
                continue
            checked += 1
            if not verify_series_identity(I, s):
                bad.append(f"{label}@{y}")
    return not bad and checked > 0, "identity on every valid split", f"{checked - len(bad)}/{checked} hold", _fmt(bad)


def c04_h_identity(seed: int) -> Outcome:
    checked, bad = 0, []
    for label, I in ideal_corpus(seed):
        tree = is_gvd(I)
        if not tree.certified:
            continue
        for node in tree.nodes():
            if node.verdict is Verdict.DECOMPOSED and node.split.degeneracy is Degeneracy.NONDEGENERATE:
                checked += 1
                if not verify_h_identity(node.ideal, node.split):
                    bad.append(f"{label}@{node.split.y}")
    return not bad and checked > 0, "h-identity on every nondegenerate certified split", \
        f"{checked - len(bad)}/{checked} hold", _fmt(bad)


def c05_worked_examples(seed: int) -> Outcome:
    got = {}
    t = is_gvd(cubic_six())
    r = invariants_via_recursion(t)
    got["cubic_six"] = (t.certified, r.reg, r.e)
    t = is_gvd(quadric_six())
    r = invariants_via_recursion(t, assume_cm=True)
    got["quadric_six"] = (t.certified, r.reg + 1)
    I = nonradical_four()
    t = is_gvd(I)
    r = invariants_via_split(I, one_step_split(I, "x", NONRADICAL_ORDER))
    got["nonradical_four"] = (t.certified, r.reg, r.e)
    want = {"cubic_six": (True, 3, 8), "quadric_six": (False, 4), "nonradical_four": (False, 2, 4)}
    return got == want, str(want), str(got), "(gvd, reg(R/I), e); quadric shows reg of the ideal"


def c06_recursion_direct(seed: int) -> Outcome:
    checked, bad = 0, []
    for label, I in ideal_corpus(seed):
        tree = is_gvd(I)
        if not tree.certified or I.is_unit():
            continue
        checked += 1
        rec = invariants_via_recursion(tree)
        direct = invariants_direct(I, CMStatus.CERTIFIED)
        if not rec.same_invariants(direct) or rec.h != direct.h:
            bad.append(label)
    return not bad and checked > 0, "recursion = direct on certified ideals", \
        f"{checked - len(bad)}/{checked} agree", _fmt(bad)


def c07_ferrers(seed: int) -> Outcome:
    bad = []
    count = 0
    for cells in range(1, 10):
        for lam in partitions(cells):
            count += 1
            I = toric_ideal(ferrers_graph(lam))
            cm = CMStatus.CERTIFIED if is_gvd(I).certified else CMStatus.UNKNOWN
            direct = invariants_direct(I, cm)
            if cm is not CMStatus.CERTIFIED or not direct.same_invariants(ferrers_invariants(lam)):
                bad.append(lam)
    anchor = invariants_direct(toric_ideal(ferrers_graph((3, 3, 3, 2))), CMStatus.CERTIFIED).reg
    kbad = []
    for n in range(1, 5):
        for m in range(1, 5):
            reg = invariants_direct(toric_ideal(ferrers_graph([m] * n)), CMStatus.CERTIFIED).reg
            if reg != min(n, m) - 1:
                kbad.append((n, m, reg))
    ok = not bad and anchor == 2 and not kbad
    return ok, f"{count} partitions agree; (3,3,3,2) reg 2; K_n,m reg min-1", \
        f"{count - len(bad)} agree; (3,3,3,2) reg {anchor}; {16 - len(kbad)}/16 K_n,m", \
        f"partition mismatches {bad}; K mismatches {kbad}"


def c08_grd(seed: int) -> Outcome:
    got, want = {}, {}
    gens_ok = True
    for r in (3, 4):
        for d in (1, 2, 3):
            I = toric_ideal(grd_graph(r, d))
            gens_ok &= ideals_equal(I, grd_known_generators(r, d))
            rep = invariants_direct(I, CMStatus.CERTIFIED if is_gvd(I).certified else CMStatus.UNKNOWN)
            got[(r, d)] = (None if rep.reg is None else rep.reg + 1, rep.e, rep.a)
            exp = grd_expected(r, d)
            want[(r, d)] = (exp["reg_ideal"], exp["e"], exp["a"])
    return got == want and gens_ok, str(want), str(got), "(reg of the ideal, e, a)"


def c09_gluing(seed: int) -> Outcome:
    G = Graph.cycle(4)
    IG = toric_ideal(G)
    base = invariants_via_recursion(is_gvd(IG))
    rows, ok = [], True
    for d in (2, 3):
        H = glue_cycle(G, "e1", 2 * d)
        IH = toric_ideal(H)
        tree = is_gvd(IH)
        direct = invariants_direct(IH, CMStatus.CERTIFIED if tree.certified else CMStatus.UNKNOWN)
        rec = invariants_via_recursion(tree) if tree.certified else None
        formula = (base.reg + d - 1, d * base.e, base.a - (d - 1))
        sizes = (len(H.vertices) == len(G.vertices) + 2 * d - 2,
                 len(H.edges) == len(G.edges) + 2 * d - 1)
        this = (direct.reg, direct.e, direct.a) == formula and rec is not None \
            and (rec.reg, rec.e, rec.a) == formula and all(sizes)
        ok &= this
        rows.append(f"d={d}: formula {formula} direct {(direct.reg, direct.e, direct.a)}")
    return ok, "formula = direct = recursion for d = 2, 3", "; ".join(rows), ""


def c10_monotonicity(seed: int) -> Outcome:
    graphs = random_bipartite_corpus(seed + 10, 25, 8)
    checked, bad = 0, []
    for k, G in enumerate(graphs):
        ring = G.ring()
        IG = toric_ideal(G)
        rg = invariants_direct(IG, CMStatus.CERTIFIED if is_gvd(IG).certified else CMStatus.UNKNOWN)
        on_cycle = {l for c in even_cycles(G) for l in c}
        for label in G.labels:
            IH = toric_ideal(G.delete_edge(label)).to_ring(ring)
            rh = invariants_direct(IH, CMStatus.CERTIFIED if is_gvd(IH).certified else CMStatus.UNKNOWN)
            checked += 1
            # an edge on an even cycle gives a nondegenerate split, where a drops by at least 1
            drop = 1 if label in on_cycle else 0
            if rg.reg is None or rh.reg is None or not (
                    rh.reg <= rg.reg and rh.a <= rg.a - drop and rh.e <= rg.e):
                bad.append(f"graph {k} minus {label}")
    return not bad, "reg, a, e monotone under edge deletion (a strictly on cycle edges)", \
        f"{checked - len(bad)}/{checked} deletions satisfy", _fmt(bad)


def c11_nonpositivity(seed: int) -> Outcome:
    rows = nonpositivity_audit(ideal_corpus(seed))
    violations = [r.label for r in rows if not r.ok]
    audited = sum(r.gvd for r in rows)
    csat = sum(r.c_saturated for r in rows)
    hil_bad = []
    for label, G, I in toric_corpus(seed):
        if G.is_connected():
            rep = invariants_direct(I, CMStatus.CERTIFIED)
            if rep.hilbertian is not Hilbertian.HILBERTIAN:
                hil_bad.append(label)
    J = irrelevant_c()
    j_csat = bool(is_c_saturated(J))
    j_a = invariants_direct(J).a
    ok = not violations and not hil_bad and not j_csat and j_a == 0 and audited > 0
    return ok, "no violations; bipartite Hilbertian; <yz, x+z> not C-saturated (a = 0)", \
        f"{audited} GVD audited ({csat} C-saturated), {len(violations)} violations; " \
        f"{len(hil_bad)} non-Hilbertian; <yz, x+z> C-saturated={j_csat}, a={j_a}", \
        _fmt(violations + hil_bad)


def c12_simplicial(seed: int) -> Outcome:
    checked, bad = 0, []
    for k, D in enumerate(complex_corpus(seed)):
        trace = is_vertex_decomposable_pure(D)
        if trace is None:
            continue
        checked += 1
        I = stanley_reisner_ideal(D)
        if reg_via_vd_recursion(D, trace) != invariants_direct(I, CMStatus.CERTIFIED).reg:
            bad.append(k)
    D = boundary_of_triangle()
    I = stanley_reisner_ideal(D)
    rep = invariants_direct(I, CMStatus.CERTIFIED)
    rec = reg_via_vd_recursion(D, is_vertex_decomposable_pure(D))
    by_series = hilbertian_by_comparison(hilbert_data(I))
    triangle = (rec, rep.reg, rep.a, rep.hilbertian.value, by_series.value)
    want = (2, 2, 0, "AlmostHilbertian", "AlmostHilbertian")
    ok = not bad and checked > 0 and triangle == want
    return ok, f"recursion = direct on VD complexes; triangle {want}", \
        f"{checked - len(bad)}/{checked} agree; triangle {triangle}", f"mismatches {bad}"


CRITERIA: Sequence[Criterion] = (
    Criterion(1, "groebner", "Groebner golden basis", c01_groebner_golden, 1.0),
    Criterion(2, "hilbert", "Hilbert series vs standard-monomial count", c02_hilbert_oracle, 30.0),
    Criterion(3, "gvd", "Series identity on valid splits", c03_series_identity),
    Criterion(4, "gvd", "h-polynomial identity on nondegenerate splits", c04_h_identity),
    Criterion(5, "gvd", "Worked examples reproduce", c05_worked_examples),
    Criterion(6, "gvd", "Recursion equals direct", c06_recursion_direct),
    Criterion(7, "ferrers", "Ferrers closed forms", c07_ferrers, 180.0),
    Criterion(8, "grd", "G_{r,d} invariants", c08_grd, 120.0),
    Criterion(9, "glue", "Cycle gluing", c09_gluing),
    Criterion(10, "toric", "Edge-deletion monotonicity", c10_monotonicity),
    Criterion(11, "gvd", "Non-positivity of the a-invariant", c11_nonpositivity),
    Criterion(12, "simplicial", "Vertex-decomposable regularity", c12_simplicial),
)


def run_one(c: Criterion, seed: int = 0) -> Result:
    start = time.perf_counter()
    try:
        ok, expected, actual, detail = c.run(seed)
    except TimeoutError:
        raise  # the global time limit aborts the whole run
    except Exception as exc:  # a crash is a failed row, not a harness abort
        ok, expected, actual, detail = False, "no error", f"{type(exc).__name__}: {exc}", ""
    secs = time.perf_counter() - start
    if c.limit is not None and secs > c.limit:
        ok = False
        detail = f"{detail}; exceeded {c.limit}s".strip("; ")
    return Result(c.id, c.group, c.name, ok, expected, actual, secs, c.limit, detail)


def select(only: Optional[Sequence[str]] = None) -> List[Criterion]:
    if not only:
        return list(CRITERIA)
    keys = {k.lower() for k in only}
    return [c for c in CRITERIA if str(c.id) in keys or c.group in keys]


def run_all(only: Optional[Sequence[str]] = None, threads: int = 1, seed: int = 0) -> List[Result]:
    chosen = select(only)
    if threads <= 1:
        return [run_one(c, seed) for c in chosen]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda c: run_one(c, seed), chosen))


def format_table(results: Sequence[Result]) -> str:
    lines = [r.line() for r in results]
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines)
