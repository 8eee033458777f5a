"""Random instance generators shared by the test modules."""

import random
from itertools import combinations, permutations

from equimat.exact_linalg import RationalMatrix
from equimat.matroid import from_graph, from_vectors
from equimat.perm_group import Permutation, generate_group, symmetric_group
from equimat.simplicial import SimplicialComplex

# one "criterion N: PASS|FAIL ..." line per acceptance check, printed at the end of the run
ACCEPTANCE: list = []


def record(criterion, label: str, ok: bool, detail: str = ""):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE.append(line)
    print(line)
    return ok


def random_perm(rng: random.Random, n: int) -> Permutation:
    img = list(range(1, n + 1))
    rng.shuffle(img)
    return Permutation(img)


def symmetric_complex(rng: random.Random, n: int, g: Permutation, k: int = 3, max_size: int | None = None):
    """A complex stable under ``g`` with no face equal to the full vertex set.

    ``k`` random seed faces are closed up under the cyclic group of ``g``.
    """
    max_size = n - 1 if max_size is None else min(max_size, n - 1)
    H = generate_group([g], n=n)
    facets = set()
    for _ in range(k):
        size = rng.randint(1, max_size)
        seed = tuple(sorted(rng.sample(range(1, n + 1), size)))
        for h in H.elements:
            facets.add(tuple(sorted(h.apply_set(seed))))
    return SimplicialComplex.from_facets(n, facets), H


def brute_automorphisms(n: int, facets) -> list:
    """Every vertex permutation that maps the facet set onto itself."""
    fs = {frozenset(f) for f in facets}
    out = []
    for img in permutations(range(1, n + 1)):
        p = Permutation(img)
        if {p.apply_set(f) for f in fs} == fs:
            out.append(p)
    return out


def random_graph(rng: random.Random, m: int, p: float = 0.6) -> list:
    edges = [e for e in combinations(range(1, m + 1), 2) if rng.random() < p]
    return edges or [(1, 2)]


def graph_with_group(m: int, edges):
    """Graphic matroid and the group of edge permutations induced by graph automorphisms."""
    edges = [tuple(sorted(e)) for e in edges]
    idx = {e: k for k, e in enumerate(edges, start=1)}
    es = set(edges)
    gens = []
    for g in symmetric_group(m).elements:
        img = [tuple(sorted((g(a), g(b)))) for a, b in edges]
        if set(img) == es:
            gens.append(Permutation([idx[e] for e in img]))
    M = from_graph(m, edges)
    return M, generate_group(gens, n=len(edges))


def random_vector_matroid(rng: random.Random, rows: int, cols: int, lo: int = -2, hi: int = 2):
    columns = [[rng.randint(lo, hi) for _ in range(rows)] for _ in range(cols)]
    return from_vectors(RationalMatrix.from_columns(columns, rows))


def mobius_by_sum_over_top(L, x, y):
    """Independent oracle: mu(z, y) = -sum over z < w <= y of mu(w, y), descending."""
    interval = [z for z in range(len(L)) if L.leq[x, z] and L.leq[z, y]]
    mu = {}
    for z in reversed(interval):
        mu[z] = 1 if z == y else -sum(mu[w] for w in interval if w != z and L.leq[z, w])
    return mu[x]
