"""Reduced rational homology and the characters of group actions on it.

Two independent routes give the character of a group acting on a complex:

* :func:`homology_character_exact` builds explicit cycle representatives
  and dual cocycles, pushes each cycle through the induced chain map and
  reads off the trace.  Works in every degree.
* :func:`homology_character_lefschetz` only counts signed fixed faces.  It
  is valid when the reduced homology is concentrated in one degree.

Degrees run from -1 (the empty face) upward.  ``action`` always maps a group
element to a permutation of the complex's vertex labels; ``None`` means the
group already acts on those labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .characters import Character, sign_character
from .errors import HomologyNotConcentrated, NotAnAutomorphism, ValidationError
from .exact_linalg import EchelonBasis, nullspace_basis, rank, sparse
from .perm_group import FiniteGroup, Permutation, sign
from .simplicial import SimplicialComplex, boundary_matrix, chain_trace, is_automorphism, reorder_sign

Action = Optional[Callable[[Permutation], Permutation]]


def _act(action: Action, g: Permutation) -> Permutation:
    return g if action is None else action(g)


def betti(K: SimplicialComplex) -> list:
    """Reduced Betti numbers; ``betti(K)[i + 1]`` is the degree-``i`` number.

    The list covers degrees -1 .. dim K.  The void complex gives ``[0]``.
    """
    if K.is_void:
        return [0]
    ranks = {d: rank(boundary_matrix(K, d)) for d in range(0, K.dim + 1)}
    out = []
    for d in range(-1, K.dim + 1):
        out.append(len(K.faces(d)) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return out


def betti_at(bettis: Sequence[int], i: int) -> int:
    k = i + 1
    return bettis[k] if 0 <= k < len(bettis) else 0


@dataclass
class HomologyBasis:
    """Cycle representatives of reduced homology in one degree.

    ``cycles`` are sparse vectors over the canonical face basis of that
    degree; ``functionals`` are cocycles normalised so that
    ``functionals[a] . cycles[b] == (a == b)``.  A cocycle kills every
    boundary, so ``[f . z for f in functionals]`` are the coordinates of any
    cycle ``z`` in this basis.
    """

    degree: int
    cycles: list
    functionals: list

    def __len__(self):
        return len(self.cycles)

    def coordinates(self, z: dict) -> list:
        return [_dot(f, z) for f in self.functionals]


def _dot(f: dict, v: dict) -> Fraction:
    if len(f) > len(v):
        f, v = v, f
    s = Fraction(0)
    for k, x in f.items():
        y = v.get(k)
        if y:
            s += x * y
    return s


def _invert(M: list) -> list:
    """Inverse of a square dense Fraction matrix by Gauss-Jordan elimination."""
    n = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ValidationError("singular pairing matrix")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def homology_basis(K: SimplicialComplex, i: int) -> HomologyBasis:
    if K.is_void or not K.faces(i):
        return HomologyBasis(i, [], [])
    d_i = boundary_matrix(K, i)
    d_up = boundary_matrix(K, i + 1)
    bspan = EchelonBasis(len(K.faces(i)))
    for c, col in _columns(d_up).items():
        bspan.add(col)
    cycles = []
    for z in nullspace_basis(d_i):
        zs = sparse(z)
        if bspan.add(zs):
            cycles.append(zs)
    if not cycles:
        return HomologyBasis(i, [], [])
    # cocycles pairing nondegenerately with the chosen cycles
    chosen, pairing = [], []
    rows = EchelonBasis(len(cycles))
    for f in nullspace_basis(d_up.transpose()):
        fs = sparse(f)
        prow = [_dot(fs, z) for z in cycles]
        if rows.add(sparse(prow)):
            chosen.append(fs)
            pairing.append(prow)
            if len(chosen) == len(cycles):
                break
    inv = _invert(pairing)
    functionals = []
    for a in range(len(cycles)):
        acc: dict = {}
        for b, fs in enumerate(chosen):
            coef = inv[a][b]
            if coef:
                for k, x in fs.items():
                    acc[k] = acc.get(k, 0) + coef * x
        functionals.append({k: x for k, x in acc.items() if x})
    return HomologyBasis(i, cycles, functionals)


def _columns(A) -> dict:
    cols: dict = {}
    for (r, c), v in A.entries.items():
        cols.setdefault(c, {})[r] = v
    return cols


def _push(K: SimplicialComplex, g: Permutation, i: int, z: dict) -> dict:
    faces = K.faces(i)
    out = {}
    for k, x in z.items():
        t = faces[k]
        img = tuple(sorted(g.apply_set(t)))
        out[K.index(img)] = reorder_sign(g, t) * x
    return out


class GradedCharacter:
    """Characters of one group on every degree of a graded space (missing degrees are zero)."""

    def __init__(self, group: FiniteGroup, characters: dict):
        self.group = group
        self.characters = dict(characters)

    def __getitem__(self, i: int) -> Character:
        chi = self.characters.get(i)
        return chi if chi is not None else Character(self.group, [0] * len(self.group.classes))

    def degrees(self) -> list:
        return sorted(self.characters)

    def support(self) -> list:
        return [i for i, chi in sorted(self.characters.items()) if any(v for v in chi.values)]

    def dimensions(self) -> dict:
        return {i: int(chi.degree.to_rational()) for i, chi in sorted(self.characters.items())}

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        degs = set(self.characters) | set(other.characters)
        return all(self[i] == other[i] for i in degs)

    def __repr__(self):
        parts = ", ".join(f"{i}: {list(chi.values)}" for i, chi in sorted(self.characters.items()))
        return f"GradedCharacter({{{parts}}})"

    def to_json(self) -> dict:
        return {str(i): chi.to_json() for i, chi in sorted(self.characters.items())}


def _check_action(K: SimplicialComplex, G: FiniteGroup, action: Action):
    for s in G.generators:
        p = _act(action, s)
        if not is_automorphism(K, p):
            raise NotAnAutomorphism(f"{s!r} acts as {p!r}, which is not an automorphism of {K!r}")


def homology_character_exact(
    K: SimplicialComplex,
    G: FiniteGroup,
    action: Action = None,
    degrees: Sequence[int] | None = None,
    check_class_function: bool = True,
) -> GradedCharacter:
    """Characters on reduced homology from explicit cycles, in every degree.

    For each class representative the trace of the induced map on a basis
    of cycles is computed modulo boundaries.  With ``check_class_function``
    a second member of each nontrivial class is evaluated as well and must
    give the same value.
    """
    _check_action(K, G, action)
    if degrees is None:
        degrees = range(-1, K.dim + 1) if not K.is_void else []
    chars = {}
    for i in degrees:
        hb = homology_basis(K, i)
        if not len(hb):
            chars[i] = Character(G, [0] * len(G.classes))
            continue

        def trace(g, hb=hb, i=i):
            p = _act(action, g)
            return sum((_dot(f, _push(K, p, i, z)) for f, z in zip(hb.functionals, hb.cycles)), Fraction(0))

        values = []
        for cls in G.classes:
            v = trace(cls[0])
            if check_class_function and len(cls) > 1 and trace(cls[-1]) != v:
                raise ValidationError(f"trace differs within the class of {cls[0]!r}; action is not a homomorphism")
            values.append(v)
        chars[i] = Character(G, values)
    return GradedCharacter(G, chars)


def lefschetz_number(K: SimplicialComplex, g: Permutation) -> int:
    """Reduced Lefschetz number: sum over i >= -1 of (-1)^i trace(g on C_i)."""
    if K.is_void:
        return 0
    total = 0
    for i in range(-1, K.dim + 1):
        total += (-1) ** (i % 2) * chain_trace(K, g, i)
    return total


def concentration_degree(bettis: Sequence[int]) -> int:
    nz = [k - 1 for k, b in enumerate(bettis) if b]
    if len(nz) != 1:
        raise HomologyNotConcentrated(f"reduced Betti numbers {list(bettis)} are not concentrated in one degree")
    return nz[0]


def homology_character_lefschetz(
    K: SimplicialComplex,
    G: FiniteGroup,
    action: Action = None,
    d: int | None = None,
    bettis: Sequence[int] | None = None,
) -> Character:
    """Character on the only nonzero reduced homology group, from fixed faces.

    ``d`` defaults to the degree where the homology lives; passing it makes
    the call fail unless the homology lives exactly there.
    """
    _check_action(K, G, action)
    bettis = betti(K) if bettis is None else bettis
    conc = concentration_degree(bettis)
    if d is not None and d != conc:
        raise HomologyNotConcentrated(f"homology lives in degree {conc}, not {d}")
    s = -1 if conc % 2 else 1
    return Character(G, [s * lefschetz_number(K, _act(action, g)) for g in G.representatives])


def graded_character(
    K: SimplicialComplex,
    G: FiniteGroup,
    action: Action = None,
    method: str = "exact",
    bettis: Sequence[int] | None = None,
) -> GradedCharacter:
    """Graded character of ``G`` on reduced homology.

    ``method`` is ``"exact"``, ``"lefschetz"``, ``"both"`` (the two must
    agree) or ``"auto"`` (Lefschetz when the homology is concentrated,
    exact otherwise).  With Lefschetz and vanishing homology every reduced
    Lefschetz number must be zero, which is checked.
    """
    if method not in ("exact", "lefschetz", "both", "auto"):
        raise ValidationError(f"unknown method {method!r}")
    if method == "exact":
        return homology_character_exact(K, G, action)
    bettis = betti(K) if bettis is None else bettis
    degrees = range(-1, K.dim + 1) if not K.is_void else []
    nonzero = [k - 1 for k, b in enumerate(bettis) if b]
    if len(nonzero) > 1:
        if method == "auto":
            return homology_character_exact(K, G, action)
        raise HomologyNotConcentrated(f"reduced Betti numbers {list(bettis)} are not concentrated in one degree")
    zero = Character(G, [0] * len(G.classes))
    chars = {i: zero for i in degrees}
    if nonzero:
        chars[nonzero[0]] = homology_character_lefschetz(K, G, action, bettis=bettis)
    else:
        _check_action(K, G, action)
        for g in G.representatives:
            if lefschetz_number(K, _act(action, g)):
                raise ValidationError("nonzero Lefschetz number on acyclic complex")
    lef = GradedCharacter(G, chars)
    if method == "both":
        ex = homology_character_exact(K, G, action)
        if ex != lef:
            raise ValidationError(f"methods disagree: exact {ex} vs lefschetz {lef}")
    return lef


def twist_by_sign(chi: Character, action: Action = None) -> Character:
    """Multiply by the sign of each element, taken as a permutation of its labels.

    With ``action`` the sign is that of ``action(g)``; this is how the sign
    of the ground set enters when a group acts on a matroid through another
    representation (for instance vertices of K_m acting on edges).
    """
    if action is None:
        return chi * sign_character(chi.group)
    return chi * Character.from_function(chi.group, lambda g: sign(action(g)))


def twist_graded(chi: GradedCharacter, action: Action = None) -> GradedCharacter:
    return GradedCharacter(chi.group, {i: twist_by_sign(c, action) for i, c in chi.characters.items()})
