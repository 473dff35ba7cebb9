"""Simplicial complexes, Stanley–Reisner ideals and pure vertex decomposability."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .groebner import Ideal
from .polynomial import PolynomialRing, _VAR_RE

Face = FrozenSet[str]


class ComplexError(ValueError):
    pass


def _maximal(faces: Iterable[Face]) -> Tuple[Face, ...]:
    faces = sorted(set(faces), key=lambda f: (-len(f), sorted(f)))
    out: List[Face] = []
    for f in faces:
        if not any(f <= g for g in out):
            out.append(f)
    return tuple(sorted(out, key=lambda f: (len(f), sorted(f))))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on a named vertex set, stored by its facets.

    ``facets == (frozenset(),)`` is the empty complex {∅}; a complex with no
    facets at all (the void complex) is rejected.  Vertices in no facet are
    allowed and behave as non-faces.
    """

    vertices: Tuple[str, ...]
    facets: Tuple[Face, ...]

    def __init__(self, vertices: Iterable, facets: Iterable[Iterable]):
        facets = [frozenset(str(v) for v in f) for f in facets]
        if not facets:
            raise ComplexError("the void complex (no faces) is not supported")
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise ComplexError("duplicate vertex names")
        missing = set().union(*facets) - set(vertices)
        if missing:
            raise ComplexError(f"facets use unknown vertices {sorted(missing)}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "facets", _maximal(facets))

    @classmethod
    def simplex(cls, vertices: Sequence) -> "SimplicialComplex":
        return cls(vertices, [vertices])

    def __repr__(self):
        fs = ", ".join("{" + ",".join(sorted(f)) + "}" for f in self.facets)
        return f"SimplicialComplex([{fs}] on {list(self.vertices)})"

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def is_face(self, s: Iterable[str]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def used_vertices(self) -> Tuple[str, ...]:
        used = set().union(*self.facets)
        return tuple(v for v in self.vertices if v in used)

    def _check(self, v: str) -> None:
        if v not in self.vertices:
            raise ComplexError(f"{v} is not a vertex")

    def link(self, v: str) -> "SimplicialComplex":
        self._check(v)
        faces = [f - {v} for f in self.facets if v in f]
        rest = tuple(w for w in self.vertices if w != v)
        if not faces:
            raise ComplexError(f"{v} is not a face, so its link is void")
        return SimplicialComplex(rest, faces)

    def deletion(self, v: str) -> "SimplicialComplex":
        self._check(v)
        rest = tuple(w for w in self.vertices if w != v)
        return SimplicialComplex(rest, [f - {v} for f in self.facets])

    def star(self, v: str) -> "SimplicialComplex":
        self._check(v)
        return SimplicialComplex(self.vertices, [f for f in self.facets if v in f])

    def is_cone(self, v: str) -> bool:
        return all(v in f for f in self.facets)

    def is_shedding(self, v: str) -> bool:
        """No facet of lk(v) is a facet of del(v)."""
        if not any(v in f for f in self.facets):
            return False
        lk = set(self.link(v).facets)
        return not any(f in lk for f in self.deletion(v).facets)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [sorted(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        try:
            return cls(data["vertices"], data["facets"])
        except KeyError as exc:
            raise ComplexError(f"malformed complex JSON: missing {exc}") from exc


# ---------------------------------------------------------------------------
# Stanley–Reisner ideals


def variable_name(v: str) -> str:
    return v if _VAR_RE.match(v) else f"x{v}"


def sr_ring(D: SimplicialComplex) -> PolynomialRing:
    return PolynomialRing([variable_name(v) for v in D.vertices])


def minimal_nonfaces(D: SimplicialComplex) -> List[Face]:
    out = []
    for k in range(1, len(D.vertices) + 1):
        for s in combinations(D.vertices, k):
            s = frozenset(s)
            if D.is_face(s) or any(m <= s for m in out):
                continue
            out.append(s)
    return out


def stanley_reisner_ideal(D: SimplicialComplex, ring: Optional[PolynomialRing] = None) -> Ideal:
    """⟨squarefree monomials of minimal non-faces⟩."""
    ring = ring or sr_ring(D)
    gens = []
    for s in minimal_nonfaces(D):
        m = ring.one()
        for v in sorted(s, key=D.vertices.index):
            m = m * ring.gen(variable_name(v))
        gens.append(m)
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# vertex decomposability


@dataclass
class VDTrace:
    complex: SimplicialComplex
    vertex: Optional[str] = None
    link: Optional["VDTrace"] = None
    deletion: Optional["VDTrace"] = None

    @property
    def is_base(self) -> bool:
        return self.vertex is None

    def to_json(self) -> dict:
        out = {"facets": [sorted(f) for f in self.complex.facets]}
        if self.vertex is not None:
            out["shedding_vertex"] = self.vertex
            out["link"] = self.link.to_json()
            out["deletion"] = self.deletion.to_json()
        return out


def _core(D: SimplicialComplex) -> SimplicialComplex:
    """Drop vertices in no facet; they do not affect decomposability."""
    return SimplicialComplex(D.used_vertices(), D.facets)


def is_vertex_decomposable_pure(D: SimplicialComplex) -> Optional[VDTrace]:
    """Shedding-vertex search; a trace on success, None on failure.

    Simplices (including the empty complex) are the base cases.
    """
    if not D.is_pure():
        raise ComplexError("vertex decomposability is checked for pure complexes only")
    memo: Dict[Tuple[Face, ...], Optional[VDTrace]] = {}

    def go(C: SimplicialComplex) -> Optional[VDTrace]:
        C = _core(C)
        if C.facets in memo:
            return memo[C.facets]
        memo[C.facets] = None
        res = None
        if C.is_simplex():
            res = VDTrace(C)
        else:
            for v in C.vertices:
                if not C.is_shedding(v):
                    continue
                lk = go(C.link(v))
                if lk is None:
                    continue
                dl = go(C.deletion(v))
                if dl is None:
                    continue
                res = VDTrace(C, v, lk, dl)
                break
        memo[C.facets] = res
        return res

    return go(D)


def reg_via_vd_recursion(D: SimplicialComplex, trace: VDTrace) -> int:
    """reg(R/I_Δ) = max{reg of the deletion, reg of the link + 1}, bottom up."""
    if _core(D).facets != trace.complex.facets:
        raise ComplexError("trace does not belong to this complex")
    if trace.is_base:
        if not trace.complex.is_simplex():
            raise ComplexError("trace base is not a simplex")
        return 0
    v = trace.vertex
    if not trace.complex.is_shedding(v):
        raise ComplexError(f"trace vertex {v} does not shed")
    return max(
        reg_via_vd_recursion(trace.complex.deletion(v), trace.deletion),
        reg_via_vd_recursion(trace.complex.link(v), trace.link) + 1,
    )


# ---------------------------------------------------------------------------
# fixtures and corpus


def boundary_of_triangle() -> SimplicialComplex:
    return SimplicialComplex(["x", "y", "z"], [["x", "y"], ["y", "z"], ["x", "z"]])


def projective_plane() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane (pure, not shellable)."""
    facets = ["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]
    return SimplicialComplex("123456", [list(f) for f in facets])


def random_pure_complex(rng: random.Random, max_vertices: int = 8) -> SimplicialComplex:
    n = rng.randint(2, max_vertices)
    k = rng.randint(1, min(3, n - 1))
    vs = [f"v{i}" for i in range(1, n + 1)]
    pool = list(combinations(vs, k + 1))
    rng.shuffle(pool)
    facets = pool[: rng.randint(1, min(len(pool), 8))]
    return SimplicialComplex(vs, facets)


def random_complex_corpus(seed: int, count: int, max_vertices: int = 8) -> List[SimplicialComplex]:
    rng = random.Random(seed)
    return [random_pure_complex(rng, max_vertices) for _ in range(count)]


def load_complex(path: str) -> SimplicialComplex:
    with open(path) as fh:
        return SimplicialComplex.from_json(json.load(fh))
