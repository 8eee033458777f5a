"""Acceptance criteria 1-8.

Every check is exact: characters are compared as cyclotomic numbers and
dimensions as integers, so the tolerance is zero throughout.  Each check
prints one ``criterion N: PASS|FAIL`` line; the lines are collected again
in the pytest terminal summary.  Run directly with ``python3
tests/test_acceptance.py`` for the same lines without pytest.
"""

import random
import time
from itertools import permutations
from math import factorial

import pytest

from equimat.characters import (
    Character,
    cyclic_character,
    decompose,
    dimension_of,
    induced_character,
    inner_product,
    irreducible_character,
    partitions,
    restrict,
    sign_character,
)
from equimat.errors import CompleteGraphViolation, NotSimple
from equimat.exact_linalg import RationalMatrix
from equimat.homology import (
    betti,
    graded_character,
    homology_character_exact,
)
from equimat.lattice import (
    boolean_lattice,
    flat_action,
    flats_lattice,
    ground_action,
    order_complex_action,
    partition_lattice,
    proper_part_order_complex,
)
from equimat.matroid import (
    braid_vectors,
    check_automorphism,
    complete_graph,
    dual,
    edge_action,
    fano,
    independence_complex,
    non_spanning_complex,
    uniform,
)
from equimat.perm_group import Permutation, cyclic_group, generate_group, sign, symmetric_group, trivial_group
from equimat.simplicial import (
    barycentric_subdivision,
    chain_map_commutes,
    complement,
    p_sign,
    reorder_sign,
    subdivision_action,
)
from equimat.theorems import (
    complete_graph_report,
    verify_alexander_duality,
    verify_arrangement_theorem,
    verify_crosscut_theorem,
    verify_main_theorem,
)

from helpers import graph_with_group, mobius_by_sum_over_top, random_graph, random_perm, record, symmetric_complex


def _fano_automorphisms():
    F = fano()
    auts = [p for p in map(Permutation, permutations(range(1, 8))) if check_automorphism(F, p)]
    return generate_group(auts, n=7)


# 1. complete graphs

@pytest.mark.parametrize("m", [3, 4, 5])
def test_criterion_1_complete_graph(m):
    t = time.perf_counter()
    r = complete_graph_report(m)
    elapsed = time.perf_counter() - t
    d = r.degrees[0]
    ok = (
        r.passed
        and r.sides["homology"][d] == r.sides["induced"][d]
        and r.info["dimension"] == factorial(m - 1)
        and r.info["support"] == [d]
    )
    record(1, f"complete graph m={m}", ok, f"dim {r.info['dimension']}, degree {d}, {elapsed:.2f}s")
    assert ok


@pytest.mark.slow
def test_criterion_1_complete_graph_m6_against_induced():
    """Homology of IN(M*(K_6)) against ind from C_6 of zeta_6, exactly.

    This fails.  Both sides are computed correctly; they differ by the sign
    character of S_6.  The duality twist is by the sign of the permutation
    induced on the 15 edges, not by the sign of the vertex permutation.  A
    transposition, or a product of three disjoint transpositions, is odd on
    vertices but even on edges.  For m <= 5 the values of ind vanish
    wherever the two signs differ, which hides the discrepancy; on S_6 they
    do not vanish at cycle types (2,2,2) and (6).  The companion test checks
    the statement with both twists applied.
    """
    t = time.perf_counter()
    try:
        r = complete_graph_report(6)
        ok, detail = True, ""
    except CompleteGraphViolation as exc:
        r = exc.report
        cls, deg = exc.mismatch
        hom = r.sides["homology"][deg].integer_values()
        ind = r.sides["induced"][deg].integer_values()
        ok = False
        detail = f"first mismatch at class {r.class_labels()[cls]}: {hom[cls]} vs {ind[cls]}"
    elapsed = time.perf_counter() - t
    record(1, "complete graph m=6 equals ind_{C_6}(zeta_6)", ok, f"{detail}, {elapsed:.1f}s".lstrip(", "))
    assert ok, detail


@pytest.mark.slow
def test_criterion_1_complete_graph_m6_corrected():
    try:
        r = complete_graph_report(6)
    except CompleteGraphViolation as exc:
        r = exc.report
    d = r.degrees[0]
    ok = (
        r.info["homology_equals_corrected_prediction"]
        and r.sides["homology"][d] == r.sides["sgn x partition lattice"][d]
        and r.info["dimension"] == 120
        and not r.info["vertex_twist_matches_edge_twist"]
    )
    record(1, "complete graph m=6 equals edge-sign x vertex-sign x ind", ok, f"dim {r.info['dimension']}")
    assert ok


# 2 and 3. main theorem and agreement of the two methods

def _random_graph_cases(rng, count):
    out = []
    while len(out) < count:
        m = rng.randint(3, 5)
        edges = random_graph(rng, m)
        M, H = graph_with_group(m, edges)
        if M.r < 2:
            continue
        out.append((f"random graph {sorted(edges)}", M, H, None))
    return out


MAIN_CASES = [
    ("M(K_3), S_3", complete_graph(3), symmetric_group(3), lambda g: edge_action(3, g)),
    ("M(K_4), S_4", complete_graph(4), symmetric_group(4), lambda g: edge_action(4, g)),
    ("U_{2,4}, S_4", uniform(2, 4), symmetric_group(4), None),
    ("U_{3,5}, S_5", uniform(3, 5), symmetric_group(5), None),
    ("F_7, trivial", fano(), trivial_group(7), None),
] + _random_graph_cases(random.Random(2024), 20)


@pytest.mark.parametrize("label, M, G, action", MAIN_CASES, ids=[c[0] for c in MAIN_CASES])
def test_criterion_2_main_theorem(label, M, G, action):
    r = verify_main_theorem(M, G, action)
    chars = list(r.sides.values())
    ok = (
        r.passed
        and all(c == chars[0] for c in chars)
        and chars[0].support() == [M.r - 2]
        and r.info["dimension"] == abs(r.info["mobius"])
    )
    record(2, label, ok, f"|G|={G.order}, dim {r.info['dimension']} in degree {M.r - 2}")
    assert ok


@pytest.mark.parametrize("label, M, G, action", MAIN_CASES, ids=[c[0] for c in MAIN_CASES])
def test_criterion_3_methods_agree_on_main_cases(label, M, G, action):
    lef = verify_main_theorem(M, G, action, method="lefschetz")
    exa = verify_main_theorem(M, G, action, method="exact")
    ok = all(lef.sides[k] == exa.sides[k] for k in lef.sides)
    record(3, f"exact = Lefschetz on {label}", ok)
    assert ok


def _random_matroid_complexes(rng, count):
    """Complexes built from random matroids, with a group acting on each."""
    out = []
    kinds = ["IN", "NS", "IN-dual", "flats"]
    while len(out) < count:
        choice = rng.random()
        if choice < 0.6:
            m = rng.randint(3, 5)
            M, H = graph_with_group(m, random_graph(rng, m))
        else:
            r = rng.randint(1, 4)
            n = rng.randint(r, 6)
            M, H = uniform(r, n), symmetric_group(n) if n <= 4 else generate_group([random_perm(rng, n)], n=n)
        kind = kinds[len(out) % 4]
        if kind == "IN":
            out.append((kind, independence_complex(M), H, None))
        elif kind == "NS":
            out.append((kind, non_spanning_complex(M), H, None))
        elif kind == "IN-dual":
            out.append((kind, independence_complex(dual(M)), H, None))
        else:
            try:
                L, _ = flats_lattice(M)
            except NotSimple:
                continue
            act = lambda g, L=L: order_complex_action(L, flat_action(L, g))
            out.append((kind, proper_part_order_complex(L), H, act))
    return out


def test_criterion_3_methods_agree_on_random_matroid_complexes():
    rng = random.Random(3)
    cases = _random_matroid_complexes(rng, 50)
    bad = [
        kind for kind, K, H, act in cases
        if graded_character(K, H, act, method="exact") != graded_character(K, H, act, method="lefschetz")
    ]
    kinds = {k: sum(1 for c in cases if c[0] == k) for k in ("IN", "NS", "IN-dual", "flats")}
    ok = not bad
    record(3, f"exact = Lefschetz on {len(cases)} random matroid complexes", ok, f"kinds {kinds}, failures {bad}")
    assert ok


# 4. sign lemma and chain-level commutation

def test_criterion_4_sign_lemma():
    rng = random.Random(4)
    failures = 0
    for _ in range(1000):
        n = rng.randint(1, 10)
        g = random_perm(rng, n)
        s = tuple(sorted(rng.sample(range(1, n + 1), rng.randint(0, n))))
        lhs = p_sign(s) * sign(g) * reorder_sign(g, complement(n, s))
        rhs = reorder_sign(g, s) * p_sign(g.apply_set(s))
        failures += lhs != rhs
    ok = failures == 0
    record(4, "sign lemma on 1000 random (n, g, sigma)", ok, f"{failures} failures")
    assert ok


def test_criterion_4_chain_commutation():
    rng = random.Random(44)
    failures = 0
    for _ in range(200):
        n = rng.randint(2, 7)
        g = random_perm(rng, n)
        K, H = symmetric_complex(rng, n, g, k=rng.randint(1, 3))
        h = rng.choice(H.elements)
        i = rng.randint(-1, n - 2)
        failures += not chain_map_commutes(K, h, i)
    ok = failures == 0
    record(4, "chain-level commutation on 200 random (K, g, i)", ok, f"{failures} failures")
    assert ok


# 5. equivariant Alexander duality on general complexes

def test_criterion_5_alexander_duality():
    rng = random.Random(5)
    passed = non_concentrated = 0
    for _ in range(50):
        n = rng.randint(3, 8)
        g = random_perm(rng, n)
        while g == Permutation.identity(n):
            g = random_perm(rng, n)
        K, H = symmetric_complex(rng, n, g, k=rng.randint(1, 4), max_size=rng.randint(1, n - 1))
        passed += verify_alexander_duality(K, H, method="exact").passed
        non_concentrated += sum(1 for b in betti(K) if b) > 1
    ok = passed == 50 and non_concentrated > 0
    record(5, "Alexander duality on 50 random complexes", ok, f"{passed} passed, {non_concentrated} non-concentrated")
    assert ok


# 6. cross-cut theorem

def _crosscut_cases():
    B3, B4, P3, P4 = boolean_lattice(3), boolean_lattice(4), partition_lattice(3), partition_lattice(4)
    LU, _ = flats_lattice(uniform(2, 4))
    LF, _ = flats_lattice(fano())
    return [
        ("B_3, S_3", B3, symmetric_group(3), lambda g: ground_action(B3, g)),
        ("B_4, S_4", B4, symmetric_group(4), lambda g: ground_action(B4, g)),
        ("Pi_3, S_3", P3, symmetric_group(3), lambda g: ground_action(P3, g)),
        ("Pi_4, S_4", P4, symmetric_group(4), lambda g: ground_action(P4, g)),
        ("L(U_{2,4}), S_4", LU, symmetric_group(4), lambda g: flat_action(LU, g)),
        ("L(F_7), Aut(F_7)", LF, _fano_automorphisms(), lambda g: flat_action(LF, g)),
    ]


def test_criterion_6_crosscut():
    for label, L, G, act in _crosscut_cases():
        r = verify_crosscut_theorem(L, L.atoms, G, act)
        record(6, f"atom cross-cut of {label}", r.passed, f"|G|={G.order}, betti {r.info['betti_order_complex']}")
        assert r.passed
    assert G.order == 168


def test_criterion_6_barycentric_invariance():
    rng = random.Random(6)
    failures = 0
    for _ in range(30):
        n = rng.randint(2, 6)
        g = random_perm(rng, n)
        K, H = symmetric_complex(rng, n, g, k=rng.randint(1, 3), max_size=3)
        sd = barycentric_subdivision(K)
        failures += homology_character_exact(K, H) != homology_character_exact(sd, H, lambda h: subdivision_action(K, h))
    ok = failures == 0
    record(6, "barycentric invariance on 30 random complexes", ok, f"{failures} failures")
    assert ok


# 7. arrangements

@pytest.mark.parametrize("label, vectors, G, action, expected", [
    ("braid m=3", braid_vectors(3), symmetric_group(3), lambda g: edge_action(3, g), 2),
    ("braid m=4", braid_vectors(4), symmetric_group(4), lambda g: edge_action(4, g), 6),
    ("generic 4 lines in rank 2", RationalMatrix.from_columns([[1, 0], [0, 1], [1, 1], [1, -1]], 2),
     symmetric_group(4), None, 3),
])
def test_criterion_7_arrangements(label, vectors, G, action, expected):
    from equimat.matroid import from_vectors

    r = verify_arrangement_theorem(vectors, G, action)
    L, _ = flats_lattice(from_vectors(vectors))
    mu = mobius_by_sum_over_top(L, L.bottom, L.top)
    ok = r.passed and r.info["dimension"] == abs(mu) == expected
    record(7, label, ok, f"dim {r.info['dimension']}, mu {mu}")
    assert ok


# 8. character theory

def test_criterion_8_orthogonality():
    for m in range(1, 7):
        G = symmetric_group(m)
        irr = [irreducible_character(G, lam) for lam in partitions(m)]
        ok = all(inner_product(a, b) == (1 if i == j else 0) for i, a in enumerate(irr) for j, b in enumerate(irr))
        record(8, f"first orthogonality for S_{m}", ok, f"{len(irr)} irreducibles")
        assert ok


def test_criterion_8_induced_from_c4():
    S4 = symmetric_group(4)
    d = decompose(induced_character(S4, cyclic_group(4), cyclic_character(4, 1)))
    ok = all(isinstance(k, int) and k >= 0 for k in d.values()) and dimension_of(d) == 6
    record(8, "decompose ind_{C_4}(i)", ok, ", ".join(f"{','.join(map(str, lam))}: {k}" for lam, k in d.items()))
    assert ok


def test_criterion_8_frobenius_reciprocity():
    rng = random.Random(8)
    failures = noncyclic = 0
    for t in range(20):
        m = rng.randint(3, 5)
        G = symmetric_group(m)
        gens = [random_perm(rng, m) for _ in range(1 + t % 2)]
        H = generate_group(gens, n=m)
        noncyclic += len(gens) > 1 and not any(h.order == H.order for h in H.elements)
        # a character of H: an irreducible of S_m restricted, times the sign of H
        xi = restrict(irreducible_character(G, rng.choice(partitions(m))), H)
        if rng.random() < 0.5:
            xi = Character(H, [a * b for a, b in zip(xi.values, sign_character(H).values)])
        chi = irreducible_character(G, rng.choice(partitions(m)))
        failures += inner_product(induced_character(G, H, xi), chi) != inner_product(xi, restrict(chi, H))
    ok = failures == 0 and noncyclic > 0
    record(8, "Frobenius reciprocity on 20 random (H, xi)", ok, f"{failures} failures, {noncyclic} non-cyclic H")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
