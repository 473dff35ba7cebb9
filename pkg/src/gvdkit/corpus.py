"""Seeded corpus generators (all deterministic for a fixed seed)."""

from __future__ import annotations

import random
from typing import List

from .groebner import Ideal
from .polynomial import Polynomial, PolynomialRing
from .simplicial import random_complex_corpus
from .toric import random_bipartite_corpus

__all__ = [
    "random_bipartite_corpus",
    "random_complex_corpus",
    "random_homogeneous_ideal",
    "random_ideal_corpus",
    "random_monomial_ideal",
]


def _monomials_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for k in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - k):
            yield (k,) + rest


def random_homogeneous_ideal(rng: random.Random, max_vars: int = 5, max_degree: int = 4,
                             max_gens: int = 4, max_terms: int = 3) -> Ideal:
    """Homogeneous ideal with small integer coefficients."""
    n = rng.randint(1, max_vars)
    ring = PolynomialRing([f"x{i}" for i in range(1, n + 1)])
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_degree)
        mons = list(_monomials_of_degree(n, d))
        picked = rng.sample(mons, min(len(mons), rng.randint(1, max_terms)))
        terms = {m: rng.choice([-3, -2, -1, 1, 2, 3]) for m in picked}
        gens.append(Polynomial(ring, terms))
    return Ideal(ring, gens)


def random_ideal_corpus(seed: int, count: int, **kw) -> List[Ideal]:
    rng = random.Random(seed)
    return [random_homogeneous_ideal(rng, **kw) for _ in range(count)]


def random_monomial_ideal(rng: random.Random, n: int = 4, max_degree: int = 3,
                          max_gens: int = 4, squarefree: bool = False) -> Ideal:
    ring = PolynomialRing([f"x{i}" for i in range(1, n + 1)])
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        if squarefree:
            e = tuple(rng.randint(0, 1) for _ in range(n))
        else:
            e = tuple(rng.randint(0, max_degree) for _ in range(n))
        if any(e):
            gens.append(Polynomial(ring, {e: 1}))
    return Ideal(ring, gens)
