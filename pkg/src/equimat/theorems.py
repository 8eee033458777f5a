"""Verifiers for the equivariant isomorphisms between matroid complexes.

Each verifier computes every side through its own pipeline, compares the
characters class by class and degree by degree, and returns a
:class:`Report`.  A disagreement raises the matching
:class:`~equimat.errors.TheoremViolation` subclass carrying the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable

from .characters import decompose, induced_character, cyclic_character
from .errors import (
    ArrangementTheoremViolation,
    CompleteGraphViolation,
    CrosscutTheoremViolation,
    DualityViolation,
    MainTheoremViolation,
    NotAnAutomorphism,
    NotSimple,
    PreconditionFailed,
)
from .exact_linalg import RationalMatrix, rank as matrix_rank
from .homology import GradedCharacter, betti, graded_character, twist_by_sign, twist_graded
from .lattice import (
    FiniteLattice,
    crosscut_action,
    crosscut_complex,
    flat_action,
    flats_lattice,
    is_crosscut,
    is_g_stable,
    mobius,
    order_complex_action,
    proper_part_order_complex,
)
from .matroid import (
    Matroid,
    check_automorphism,
    complete_graph,
    dual,
    edge_action,
    from_vectors,
    independence_complex,
    nbc_bases,
    non_spanning_complex,
)
from .perm_group import FiniteGroup, cycle_type, cyclic_group, symmetric_group
from .simplicial import SimplicialComplex, alexander_dual

from . import __version__ as VERSION


@dataclass
class Report:
    """Comparison table: ``sides[name][degree]`` is a :class:`Character`."""

    name: str
    group: FiniteGroup
    sides: dict = field(default_factory=dict)
    degrees: list = field(default_factory=list)
    passed: bool = True
    mismatch: tuple | None = None
    info: dict = field(default_factory=dict)

    def class_labels(self) -> list:
        G = self.group
        if G.is_symmetric():
            return [",".join(map(str, cycle_type(r))) for r in G.representatives]
        return [",".join(map(str, r.image)) for r in G.representatives]

    def to_json(self) -> dict:
        labels = self.class_labels()
        table = {}
        for d in self.degrees:
            row = {}
            for name, graded in self.sides.items():
                chi = graded[d]
                row[name] = {lab: v.to_json() for lab, v in zip(labels, chi.values)}
            table[str(d)] = row
        return {
            "check": self.name,
            "verdict": "pass" if self.passed else "fail",
            "group_order": self.group.order,
            "classes": labels,
            "class_sizes": list(self.group.class_sizes),
            "table": table,
            "mismatch": None if self.mismatch is None else {"class": self.mismatch[0], "degree": self.mismatch[1]},
            "info": self.info,
            "version": VERSION,
        }


def _compare(report: Report, error_cls):
    """Fill in the verdict; raise ``error_cls`` at the first disagreement."""
    names = list(report.sides)
    first = report.sides[names[0]]
    for d in report.degrees:
        ref = first[d]
        for other in names[1:]:
            chi = report.sides[other][d]
            for k, (a, b) in enumerate(zip(ref.values, chi.values)):
                if a != b:
                    report.passed = False
                    report.mismatch = (k, d)
                    raise error_cls(
                        f"{report.name}: {names[0]} and {other} differ at class {k} in degree {d}: {a} != {b}",
                        mismatch=(k, d),
                        report=report,
                    )
    return report


def _reindex(chi: GradedCharacter, f: Callable[[int], int]) -> GradedCharacter:
    return GradedCharacter(chi.group, {f(i): c for i, c in chi.characters.items()})


def verify_alexander_duality(K: SimplicialComplex, G: FiniteGroup, action=None, method: str = "exact") -> Report:
    """Homology of ``K`` in degree i against sign-twisted homology of its dual in degree n-i-3.

    The dual side is computed as homology of the Alexander dual: with field
    coefficients and rational characters, cohomology has the same character.
    """
    n = K.n
    if tuple(range(1, n + 1)) in K.face_set:
        raise PreconditionFailed("the full vertex set must not be a face")
    Kd = alexander_dual(K)
    lhs = graded_character(K, G, action, method=method) if not K.is_void else GradedCharacter(G, {})
    rhs = graded_character(Kd, G, action, method=method) if not Kd.is_void else GradedCharacter(G, {})
    rhs = _reindex(twist_graded(rhs, action), lambda j: n - j - 3)
    report = Report("alexander_duality", G, {"K": lhs, "sgn x dual": rhs}, list(range(-1, n - 1)))
    report.info = {"n": n, "betti_K": betti(K), "betti_dual": betti(Kd)}
    return _compare(report, DualityViolation)


def verify_crosscut_theorem(L: FiniteLattice, C, G: FiniteGroup, action, method: str = "exact") -> Report:
    """Order complex of the proper part against the cross-cut complex.

    ``action`` maps group elements to permutations of the lattice elements
    (label ``k + 1`` is element index ``k``).
    """
    C = sorted(set(C))
    if not is_crosscut(L, C):
        raise PreconditionFailed(f"{C} is not a cross-cut")
    if not is_g_stable(L, C, G, action):
        raise PreconditionFailed("cross-cut is not stable under the group")
    K_L = proper_part_order_complex(L)
    K_C = crosscut_complex(L, C, check=False)
    a_L = lambda g: order_complex_action(L, action(g))
    a_C = lambda g: crosscut_action(L, C, action(g))
    lhs = graded_character(K_L, G, a_L, method=method)
    rhs = graded_character(K_C, G, a_C, method=method)
    top = max(K_L.dim, K_C.dim)
    report = Report("crosscut", G, {"order_complex": lhs, "crosscut_complex": rhs}, list(range(-1, top + 1)))
    report.info = {"betti_order_complex": betti(K_L), "betti_crosscut": betti(K_C)}
    return _compare(report, CrosscutTheoremViolation)


def _ground_action(M: Matroid, G: FiniteGroup, action):
    act = (lambda g: g) if action is None else action
    for g in G.generators:
        p = act(g)
        if p.n != M.n or not check_automorphism(M, p):
            raise NotAnAutomorphism(f"{g!r} does not act as a matroid automorphism")
    return act


def verify_main_theorem(M: Matroid, G: FiniteGroup, action=None, method: str = "lefschetz") -> Report:
    """Three routes to one graded character of a simple matroid.

    (a) sign-twisted homology of IN(M*) in degree n-3-i,
    (b) homology of NS(M) in degree i,
    (c) homology of the proper part of the lattice of flats in degree i.
    All must agree and be supported in degree r-2 only.
    """
    if not M.is_simple():
        raise NotSimple("main theorem needs a simple matroid; call simplify() first")
    act = _ground_action(M, G, action)
    n, r = M.n, M.r
    IN_dual = independence_complex(dual(M))
    NS = non_spanning_complex(M)
    L, _ = flats_lattice(M)
    K_L = proper_part_order_complex(L)
    a = graded_character(IN_dual, G, act, method=method)
    a = _reindex(twist_graded(a, act), lambda j: n - 3 - j)
    b = graded_character(NS, G, act, method=method)
    c = graded_character(K_L, G, lambda g: order_complex_action(L, flat_action(L, act(g))), method=method)
    report = Report(
        "main",
        G,
        {"sgn x IN(M*)": a, "NS(M)": b, "lattice of flats": c},
        list(range(-1, max(n - 2, r - 2) + 1)),
    )
    mu = mobius(L, L.bottom, L.top)
    report.info = {"n": n, "rank": r, "expected_degree": r - 2, "mobius": mu, "nbc_bases": len(nbc_bases(M))}
    _compare(report, MainTheoremViolation)
    for name, chi in report.sides.items():
        supp = chi.support()
        if supp and supp != [r - 2]:
            report.passed = False
            raise MainTheoremViolation(f"{name} supported in degrees {supp}, expected only {r - 2}", report=report)
    dim = report.sides["NS(M)"][r - 2].degree
    if dim != abs(mu):
        report.passed = False
        raise MainTheoremViolation(f"dimension {dim} differs from |mu| = {abs(mu)}", report=report)
    report.info["dimension"] = abs(mu)
    return report


def verify_arrangement_theorem(vectors: RationalMatrix, G: FiniteGroup, action=None, method: str = "lefschetz") -> Report:
    """Top cohomology of the arrangement complement, through its lattice, against IN(M*).

    The arrangement side is the homology of the intersection lattice in
    degree r-2; the other side is sign-twisted homology of IN(M*) in degree
    n-r-1.  The common dimension is checked against |mu(0, 1)| and against
    the number of nbc bases.
    """
    M = from_vectors(vectors)
    if not M.is_simple():
        raise NotSimple("arrangement must consist of distinct hyperplanes")
    r = matrix_rank(vectors)
    act = _ground_action(M, G, action)
    n = M.n
    L, _ = flats_lattice(M)
    K_L = proper_part_order_complex(L)
    arr = graded_character(K_L, G, lambda g: order_complex_action(L, flat_action(L, act(g))), method=method)
    ind = graded_character(independence_complex(dual(M)), G, act, method=method)
    ind = twist_graded(ind, act)
    top_arr = GradedCharacter(G, {r: arr[r - 2]})
    top_ind = GradedCharacter(G, {r: ind[n - r - 1]})
    report = Report("arrangement", G, {"H^r(complement)": top_arr, "sgn x IN(M*)": top_ind}, [r])
    mu = mobius(L, L.bottom, L.top)
    nbc = len(nbc_bases(M))
    report.info = {"n": n, "rank": r, "mobius": mu, "nbc_bases": nbc}
    _compare(report, ArrangementTheoremViolation)
    dim = top_arr[r].degree
    if dim != abs(mu) or nbc != abs(mu):
        report.passed = False
        raise ArrangementTheoremViolation(f"dimension {dim}, |mu| {abs(mu)}, nbc {nbc} disagree", report=report)
    report.info["dimension"] = abs(mu)
    return report


def complete_graph_report(m: int, method: str = "lefschetz") -> Report:
    """S_m on IN(M*(K_m)) in degree C(m,2)-m against ind from C_m of zeta_m.

    A third column is the top homology of the partition lattice twisted by
    the sign of the edge permutation.  The report also records the
    prediction obtained by twisting with the S_m sign instead of the edge
    sign, and the irreducible decomposition of the homology character.
    """
    G = symmetric_group(m)
    act = lambda g: edge_action(m, g)
    n = comb(m, 2)
    d = n - m
    M = complete_graph(m)
    K = independence_complex(dual(M))
    hom = graded_character(K, G, act, method=method)
    ind = induced_character(G, cyclic_group(m), cyclic_character(m, 1))
    L, _ = flats_lattice(M)
    K_L = proper_part_order_complex(L)
    pi = graded_character(K_L, G, lambda g: order_complex_action(L, flat_action(L, act(g))), method=method)
    pi_twisted = twist_by_sign(pi[m - 3], act)
    report = Report(
        "complete_graph",
        G,
        {
            "homology": GradedCharacter(G, {d: hom[d]}),
            "induced": GradedCharacter(G, {d: ind}),
            "sgn x partition lattice": GradedCharacter(G, {d: pi_twisted}),
        },
        [d],
    )
    # The twist in the duality theorem uses the sign of the edge permutation.
    # Swapping it for the sign of the vertex permutation is harmless exactly
    # when the two twists agree on ind; the corrected prediction applies both.
    corrected = twist_by_sign(twist_by_sign(ind), act)
    report.info = {
        "m": m,
        "n": n,
        "degree": d,
        "dimension": int(hom[d].degree.to_rational()),
        "expected_dimension": factorial(m - 1),
        "support": hom.support(),
        "vertex_twist_matches_edge_twist": corrected == ind,
        "homology_equals_corrected_prediction": hom[d] == corrected,
    }
    try:
        report.info["decomposition"] = {
            ",".join(map(str, lam)): k for lam, k in decompose(hom[d]).items()
        }
    except Exception as exc:  # a broken character is reported, not hidden
        report.info["decomposition_error"] = str(exc)
    if report.info["dimension"] != factorial(m - 1) or hom.support() != [d]:
        report.passed = False
        raise CompleteGraphViolation(
            f"homology of dimension {report.info['dimension']} in degrees {hom.support()}", report=report
        )
    return _compare(report, CompleteGraphViolation)
