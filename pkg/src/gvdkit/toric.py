"""Toric ideals of graphs, Ferrers graphs, cycle gluing and the G_{r,d} family."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .groebner import Ideal
from .hilbert import CMStatus, Hilbertian, InvariantReport
from .polynomial import GrevLex, Polynomial, PolynomialRing

Edge = Tuple[str, Tuple[str, str]]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Finite simple graph with labeled edges; labels are the variables of K[E]."""

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((l, tuple(e)) for l, e in self.edges))
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise GraphError("duplicate vertex names")
        labels, pairs = set(), set()
        for label, (u, v) in self.edges:
            if u not in vs or v not in vs:
                raise GraphError(f"edge {label} uses an unknown vertex")
            if u == v:
                raise GraphError(f"edge {label} is a loop")
            pair = frozenset((u, v))
            if pair in pairs:
                raise GraphError(f"edge {label} duplicates an existing edge")
            if label in labels:
                raise GraphError(f"duplicate edge label {label}")
            labels.add(label)
            pairs.add(pair)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, str]], stem: str = "e",
                   vertices: Optional[Sequence[str]] = None) -> "Graph":
        pairs = [tuple(p) for p in pairs]
        if vertices is None:
            seen: Dict[str, None] = {}
            for u, v in pairs:
                seen.setdefault(u)
                seen.setdefault(v)
            vertices = list(seen)
        return cls(tuple(vertices), tuple((f"{stem}{k + 1}", p) for k, p in enumerate(pairs)))

    @classmethod
    def cycle(cls, length: int, stem: str = "e", vstem: str = "x") -> "Graph":
        if length < 3:
            raise GraphError("a cycle needs at least three vertices")
        vs = [f"{vstem}{i + 1}" for i in range(length)]
        return cls.from_pairs([(vs[i], vs[(i + 1) % length]) for i in range(length)], stem, vs)

    @classmethod
    def complete_bipartite(cls, n: int, m: int) -> "Graph":
        return ferrers_graph([m] * n)

    # -- basic queries
    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(l for l, _ in self.edges)

    def ends(self, label: str) -> Tuple[str, str]:
        for l, e in self.edges:
            if l == label:
                return e
        raise GraphError(f"{label} is not an edge")

    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.labels)

    def nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for label, (u, v) in self.edges:
            g.add_edge(u, v, label=label)
        return g

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.nx())

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and nx.is_connected(self.nx())

    def components(self) -> int:
        return nx.number_connected_components(self.nx())

    def degree(self, v: str) -> int:
        return sum(v in e for _, e in self.edges)

    def delete_edge(self, label: str) -> "Graph":
        self.ends(label)
        return Graph(self.vertices, tuple(e for e in self.edges if e[0] != label))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [{"label": l, "ends": list(e)} for l, e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            return cls(tuple(data["vertices"]),
                       tuple((e["label"], tuple(e["ends"])) for e in data["edges"]))
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph JSON: missing {exc}") from exc


# ---------------------------------------------------------------------------
# cycles and binomials


def even_cycles(G: Graph) -> List[Tuple[str, ...]]:
    """Every even simple cycle as its edge-label sequence, deduplicated.

    Each cycle is rotated to start at its smallest label (in ring order) and
    oriented toward the smaller neighbour, so output is deterministic.
    """
    g = G.nx()
    pos = {l: i for i, l in enumerate(G.labels)}
    seen = set()
    out = []
    for cyc in nx.simple_cycles(g):
        if len(cyc) % 2 or len(cyc) < 4:
            continue
        labels = [g.edges[cyc[i], cyc[(i + 1) % len(cyc)]]["label"] for i in range(len(cyc))]
        key = frozenset(labels)
        if key in seen:
            continue
        seen.add(key)
        out.append(_canonical_cycle(labels, pos))
    out.sort(key=lambda c: (len(c), [pos[l] for l in c]))
    return out


def _canonical_cycle(labels: List[str], pos: Dict[str, int]) -> Tuple[str, ...]:
    k = min(range(len(labels)), key=lambda i: pos[labels[i]])
    rot = labels[k:] + labels[:k]
    rev = [rot[0]] + rot[1:][::-1]
    return tuple(min(rot, rev, key=lambda c: [pos[l] for l in c]))


def cycle_binomial(ring: PolynomialRing, cycle: Sequence[str]) -> Polynomial:
    """f = e_{i1} e_{i3} ⋯ − e_{i2} e_{i4} ⋯ for an even closed walk."""
    odd = ring.one()
    even = ring.one()
    for k, label in enumerate(cycle):
        if k % 2 == 0:
            odd = odd * ring.gen(label)
        else:
            even = even * ring.gen(label)
    return odd - even


def closed_even_walks(G: Graph, bound: int) -> List[Tuple[str, ...]]:
    """Closed walks of even length ≤ bound, as edge-label sequences."""
    adj: Dict[str, List[Tuple[str, str]]] = {v: [] for v in G.vertices}
    for label, (u, v) in G.edges:
        adj[u].append((label, v))
        adj[v].append((label, u))
    walks = []

    def step(start, here, path):
        if path and len(path) % 2 == 0 and here == start:
            walks.append(tuple(path))
        if len(path) == bound:
            return
        for label, nxt in adj[here]:
            step(start, nxt, path + [label])

    for v in G.vertices:
        step(v, v, [])
    return walks


def toric_ideal(G: Graph, walk_bound: Optional[int] = None) -> Ideal:
    """Toric ideal I_G in K[E].

    Bipartite input: all even-cycle binomials, a complete generating set.
    Other input: binomials of closed even walks up to ``walk_bound`` edges,
    tagged ``generators-not-certified``.
    """
    ring = G.ring()
    if G.is_bipartite():
        gens = [cycle_binomial(ring, c) for c in even_cycles(G)]
        return Ideal(ring, gens, tags=("toric", "toric-bipartite"))
    if walk_bound is None:
        raise GraphError("non-bipartite graph: a walk bound is required")
    gens = {}
    for w in closed_even_walks(G, walk_bound):
        f = cycle_binomial(ring, w)
        if f:
            # a walk read backwards gives −f; keep one sign
            gens.setdefault(f.monic(GrevLex()), None)
    return Ideal(ring, list(gens), tags=("generators-not-certified",))


def edge_split(G: Graph, label: str) -> Tuple[Ideal, Ideal]:
    """(N, C) for the edge variable: N = I_{G∖e}, C = I_{G∖e} + ⟨M_e⟩ in K[E(G)].

    M_e holds, for each even cycle through e, the product of the other edges
    in e's parity class.
    """
    if not G.is_bipartite():
        raise GraphError("edge_split needs a bipartite graph")
    G.ends(label)
    ring = G.ring()
    N = toric_ideal(G.delete_edge(label)).to_ring(ring)
    ms = []
    for c in even_cycles(G):
        if label not in c:
            continue
        k = c.index(label)
        m = ring.one()
        for i, l in enumerate(c):
            if i != k and (i - k) % 2 == 0:
                m = m * ring.gen(l)
        ms.append(m)
    return N, Ideal(ring, list(N.generators) + ms)


def strip_leaves(G: Graph) -> Tuple[Graph, List[str]]:
    """Repeatedly drop leaf edges and isolated vertices; returns the removed items."""
    removed = []
    while True:
        deg = {v: G.degree(v) for v in G.vertices}
        leaf = next((l for l, (u, v) in G.edges if deg[u] == 1 or deg[v] == 1), None)
        if leaf is not None:
            G = G.delete_edge(leaf)
            removed.append(leaf)
            continue
        iso = [v for v in G.vertices if deg[v] == 0]
        if iso:
            G = Graph(tuple(v for v in G.vertices if v not in iso), G.edges)
            removed.extend(iso)
            continue
        return G, removed


def is_chordal_bipartite(G: Graph) -> bool:
    """Bipartite, and every cycle of length ≥ 6 has a chord."""
    if not G.is_bipartite():
        return False
    g = G.nx()
    for cyc in nx.simple_cycles(g):
        if len(cyc) < 6:
            continue
        k = len(cyc)
        where = {v: i for i, v in enumerate(cyc)}
        chord = any(
            (where[u] - where[v]) % k not in (1, k - 1)
            for u, v in g.subgraph(cyc).edges
        )
        if not chord:
            return False
    return True


def bipartite_a(G: Graph, reg_of_quotient: int) -> int:
    """a(K[E]/I_G) = reg(K[E]/I_G) − dim, with dim = |V| − #components."""
    if not G.is_bipartite():
        raise GraphError("bipartite_a needs a bipartite graph")
    return reg_of_quotient - (len(G.vertices) - G.components())


# ---------------------------------------------------------------------------
# Ferrers graphs


def _check_partition(lam: Sequence[int]) -> Tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if not lam:
        raise GraphError("empty partition")
    if any(x < 1 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise GraphError(f"{lam} is not a partition (weakly decreasing, positive)")
    return lam


def ferrers_graph(lam: Sequence[int]) -> Graph:
    """T_λ: v_i joined to u_1..u_{λ_i}; edge {v_i, u_j} is labeled e{i}_{j}."""
    lam = _check_partition(lam)
    n, m = len(lam), lam[0]
    vs = [f"v{i}" for i in range(1, n + 1)] + [f"u{j}" for j in range(1, m + 1)]
    edges = [(f"e{i}_{j}", (f"v{i}", f"u{j}")) for i in range(1, n + 1) for j in range(1, lam[i - 1] + 1)]
    return Graph(tuple(vs), tuple(edges))


def ferrers_reg(lam: Sequence[int]) -> int:
    lam = _check_partition(lam)
    if len(lam) == 1 or lam[1] == 1:
        return 0
    s = max(j for j in range(1, len(lam) + 1) if lam[j - 1] >= 2)
    return min([s - 1] + [lam[j - 1] + j - 3 for j in range(2, s + 1)])


def ferrers_multiplicity(lam: Sequence[int]) -> int:
    """Nested sum: j_{n−2} from λ_2 − λ_n + 1 to λ_2, each inner j_k from λ_2 − λ_{k+2} + 1 to j_{k+1}; summand j_1."""
    lam = _check_partition(lam)
    n = len(lam)
    if n == 1:
        return 1
    L = lambda i: lam[i - 1]  # noqa: E731  (1-indexed)

    def inner(k: int, upper: int) -> int:
        if k == 0:
            return upper
        return sum(inner(k - 1, j) for j in range(L(2) - L(k + 2) + 1, upper + 1))

    return inner(n - 2, L(2))


def ferrers_invariants(lam: Sequence[int]) -> InvariantReport:
    """Closed-form reg, e and a of K[E]/I_λ."""
    lam = _check_partition(lam)
    n, m = len(lam), lam[0]
    reg = ferrers_reg(lam)
    dim = n + m - 1
    a = reg - dim
    hil = Hilbertian.HILBERTIAN if a < 0 else (Hilbertian.ALMOST if a == 0 else Hilbertian.NEITHER)
    return InvariantReport((), dim, reg, ferrers_multiplicity(lam), a, hil,
                           "closed-form", CMStatus.CERTIFIED, {"partition": list(lam)})


def partitions(cells: int) -> List[Tuple[int, ...]]:
    """All partitions of ``cells``, largest part first."""
    out = []

    def go(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            go(rest - p, p, acc + [p])

    go(cells, cells, [])
    return out


# ---------------------------------------------------------------------------
# gluing and G_{r,d}


def _fresh(taken: Iterable[str], stem: str, count: int) -> List[str]:
    taken = set(taken)
    out, k = [], 1
    while len(out) < count:
        name = f"{stem}{k}"
        if name not in taken:
            out.append(name)
        k += 1
    return out


def glue_cycle(G: Graph, label: str, length: int) -> Graph:
    """Glue an even cycle C_{2d} along edge ``label`` (identified with its last edge f_{2d}).

    The 2d − 2 new vertices and 2d − 1 new edges f_1..f_{2d−1} are appended.
    """
    if length < 4 or length % 2:
        raise GraphError("cycle length must be even and at least 4")
    p, q = G.ends(label)
    inner = _fresh(G.vertices, "w", length - 2)
    labels = _fresh(G.labels, "f", length - 1)
    path = [q] + inner + [p]
    new_edges = tuple((labels[k], (path[k], path[k + 1])) for k in range(length - 1))
    return Graph(G.vertices + tuple(inner), G.edges + new_edges)


def grd_graph(r: int, d: int) -> Graph:
    """K_{2,d} on x1, x2, y1..yd with a path of length 2r − 2 from x1 to x2.

    Edges a_i = {x1, y_i}, b_i = {x2, y_i}, e_1 = {x1, z1},
    e_k = {z_{k−1}, z_k}, e_{2r−2} = {z_{2r−3}, x2}.
    """
    if r < 3 or d < 1:
        raise GraphError("G_{r,d} needs r ≥ 3 and d ≥ 1")
    zs = [f"z{k}" for k in range(1, 2 * r - 2)]
    ys = [f"y{i}" for i in range(1, d + 1)]
    vs = ("x1", "x2", *ys, *zs)
    edges = [(f"a{i}", ("x1", f"y{i}")) for i in range(1, d + 1)]
    edges += [(f"b{i}", ("x2", f"y{i}")) for i in range(1, d + 1)]
    path = ["x1"] + zs + ["x2"]
    edges += [(f"e{k + 1}", (path[k], path[k + 1])) for k in range(2 * r - 2)]
    return Graph(vs, tuple(edges))


def grd_expected(r: int, d: int) -> Dict[str, int]:
    """Closed forms for G_{r,d}: reg(I) = r, e = dr − (d − 1), a = 1 − d − r."""
    return {"reg_ideal": r, "reg": r - 1, "e": d * r - (d - 1), "a": 1 - d - r}


def grd_known_generators(r: int, d: int) -> Ideal:
    """Universal Gröbner basis of I_{G_{r,d}} from the literature, for cross-checks."""
    G = grd_graph(r, d)
    ring = G.ring()
    gens = [f"a{i}*b{j} - a{j}*b{i}" for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    evens = "*".join(f"e{k}" for k in range(2, 2 * r - 1, 2))
    odds = "*".join(f"e{k}" for k in range(1, 2 * r - 2, 2))
    gens += [f"a{i}*{evens} - b{i}*{odds}" for i in range(1, d + 1)]
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# corpus


def random_bipartite_graph(rng: random.Random, max_edges: int = 8, max_side: int = 4) -> Graph:
    """Connected bipartite graph: random spanning tree, then extra cross edges."""
    n = rng.randint(2, max_side)
    m = rng.randint(2, max_side)
    while n + m - 1 > max_edges:
        m = max(1, m - 1) if m >= n else m
        n = max(1, n - 1) if n > m else n
    left = [f"p{i}" for i in range(1, n + 1)]
    right = [f"q{j}" for j in range(1, m + 1)]
    side = {v: v[0] for v in left + right}
    placed = [left[0]]
    rest = left[1:] + right
    pairs = []
    while rest:
        ready = [v for v in rest if any(side[w] != side[v] for w in placed)]
        v = rng.choice(ready)
        w = rng.choice([w for w in placed if side[w] != side[v]])
        pairs.append((w, v))
        placed.append(v)
        rest.remove(v)
    have = {frozenset(p) for p in pairs}
    extra = [(u, w) for u in left for w in right if frozenset((u, w)) not in have]
    rng.shuffle(extra)
    budget = max(0, max_edges - len(pairs))
    pairs += extra[: rng.randint(min(1, budget), budget)]
    return Graph.from_pairs(pairs, "e", vertices=left + right)


def random_bipartite_corpus(seed: int, count: int, max_edges: int = 8) -> List[Graph]:
    rng = random.Random(seed)
    return [random_bipartite_graph(rng, max_edges) for _ in range(count)]


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        return Graph.from_json(json.load(fh))
