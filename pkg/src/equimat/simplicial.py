"""Abstract simplicial complexes on the labelled vertex set {1..n}.

A complex always carries its ambient ``n`` even when some vertices are not
used: the Alexander dual and all sign conventions depend on ``n``.  Faces are
sorted tuples; within each dimension they are listed lexicographically and
that order fixes every matrix basis in this package.

The complex ``{()}`` (only the empty face) and the void complex (no faces at
all) are different values.  The first has reduced homology Q in degree -1,
the second has none.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import ElementNotInFace, NotAnAutomorphism, ValidationError, VertexOutOfRange
from .exact_linalg import RationalMatrix
from .perm_group import Permutation, sign


class SimplicialComplex:
    def __init__(self, n: int, faces: Iterable[Sequence[int]], *, check: bool = True):
        """Build from an explicit face family.

        ``faces`` must already be closed under taking subsets; with
        ``check=True`` that is verified.  Use :meth:`from_facets` to take a
        downward closure instead.
        """
        if n < 0:
            raise ValidationError("negative vertex count")
        self.n = n
        by_dim: dict[int, set] = {}
        for f in faces:
            t = tuple(sorted(f))
            if len(set(t)) != len(t):
                raise ValidationError(f"repeated vertex in face {f}")
            if t and not (1 <= t[0] and t[-1] <= n):
                raise VertexOutOfRange(f"face {t} not inside 1..{n}")
            by_dim.setdefault(len(t) - 1, set()).add(t)
        self._faces = {d: tuple(sorted(s)) for d, s in sorted(by_dim.items())}
        self.is_void = not self._faces
        if check and not self.is_void:
            allf = self.face_set
            if () not in allf:
                raise ValidationError("non-void complex must contain the empty face")
            for t in allf:
                for k in range(len(t)):
                    if t[:k] + t[k + 1:] not in allf:
                        raise ValidationError(f"face {t} present but its facet {t[:k] + t[k + 1:]} is not")

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Sequence[int]]) -> "SimplicialComplex":
        facets = [tuple(sorted(set(f))) for f in facets]
        for f in facets:
            if f and not (1 <= f[0] and f[-1] <= n):
                raise VertexOutOfRange(f"facet {f} not inside 1..{n}")
        faces = {()}
        for f in set(facets):
            for k in range(1, len(f) + 1):
                faces.update(combinations(f, k))
        return cls(n, faces, check=False)

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, [], check=False)

    @classmethod
    def full_simplex(cls, n: int) -> "SimplicialComplex":
        return cls.from_facets(n, [range(1, n + 1)])

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        """Build from faces given as bitmasks (bit j-1 set means vertex j)."""
        faces = []
        for m in masks:
            faces.append(tuple(j + 1 for j in range(n) if m >> j & 1))
        return cls(n, faces, check=False)

    @cached_property
    def face_set(self) -> frozenset:
        return frozenset(t for fs in self._faces.values() for t in fs)

    def faces(self, d: int) -> tuple:
        """Faces of dimension ``d`` (``d = -1`` gives the empty face) in canonical order."""
        return self._faces.get(d, ())

    @cached_property
    def _index(self) -> dict:
        return {d: {t: i for i, t in enumerate(fs)} for d, fs in self._faces.items()}

    def index(self, face: Sequence[int]) -> int:
        t = tuple(sorted(face))
        return self._index[len(t) - 1][t]

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.face_set

    @property
    def dim(self) -> int:
        """Dimension; -1 for ``{()}`` and -2 by convention for the void complex."""
        return max(self._faces) if self._faces else -2

    @property
    def f_vector(self) -> tuple:
        """Face counts in dimensions -1 .. dim."""
        return tuple(len(self.faces(d)) for d in range(-1, self.dim + 1))

    @property
    def num_faces(self) -> int:
        return sum(len(fs) for fs in self._faces.values())

    @cached_property
    def facets(self) -> tuple:
        out = []
        for d in sorted(self._faces, reverse=True):
            for t in self._faces[d]:
                if not any(tuple(sorted(t + (v,))) in self.face_set
                           for v in range(1, self.n + 1) if v not in t):
                    out.append(t)
        return tuple(sorted(out))

    def vertices(self) -> tuple:
        return tuple(t[0] for t in self.faces(0))

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self.is_void == other.is_void
            and self._faces == other._faces
        )

    def __hash__(self):
        return hash((self.n, self.face_set))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex.void({self.n})"
        return f"SimplicialComplex(n={self.n}, dim={self.dim}, f={self.f_vector})"

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets] if not self.is_void else [],
                "void": self.is_void}

    @classmethod
    def from_json(cls, obj: dict) -> "SimplicialComplex":
        if obj.get("void"):
            return cls.void(int(obj["n"]))
        return cls.from_facets(int(obj["n"]), obj.get("facets", []))


def complement(n: int, face: Iterable[int]) -> tuple:
    s = set(face)
    return tuple(j for j in range(1, n + 1) if j not in s)


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """All subsets of {1..n} whose complement is not a face of ``K``."""
    n = K.n
    faces = K.face_set
    dual = []
    for k in range(n + 1):
        for s in combinations(range(1, n + 1), k):
            if complement(n, s) not in faces:
                dual.append(s)
    return SimplicialComplex(n, dual, check=False)


def sign_pos(j: int, face: Sequence[int]) -> int:
    """(-1)^(i-1) where ``j`` is the i-th smallest element of ``face``."""
    t = sorted(face)
    if j not in t:
        raise ElementNotInFace(f"{j} not in {tuple(t)}")
    return -1 if t.index(j) % 2 else 1


def p_sign(face: Iterable[int]) -> int:
    """Product of (-1)^(j-1) over the elements of ``face``."""
    return -1 if sum(1 for j in face if j % 2 == 0) % 2 else 1


def reorder_sign(g: Permutation, face: Iterable[int]) -> int:
    """Sign of the permutation sorting (g(j_1), ..., g(j_k)) for j_1 < ... < j_k."""
    img = [g(j) for j in sorted(face)]
    inv = 0
    for a in range(len(img)):
        for b in range(a + 1, len(img)):
            if img[a] > img[b]:
                inv += 1
    return -1 if inv % 2 else 1


def boundary_matrix(K: SimplicialComplex, i: int) -> RationalMatrix:
    """Augmented boundary map from i-faces to (i-1)-faces.

    Entry at (sigma minus k, sigma) is ``sign_pos(k, sigma)``.  In degree 0
    this is the all-ones row onto the empty face; in degree -1 the map to
    the zero space.
    """
    if K.is_void:
        raise ValidationError("boundary of the void complex is undefined")
    cols = K.faces(i)
    if i < 0:
        return RationalMatrix(0, len(cols))
    rows = K.faces(i - 1)
    ridx = {t: r for r, t in enumerate(rows)}
    ent = {}
    for c, t in enumerate(cols):
        for pos in range(len(t)):
            ent[ridx[t[:pos] + t[pos + 1:]], c] = -1 if pos % 2 else 1
    return RationalMatrix(len(rows), len(cols), ent)


def is_automorphism(K: SimplicialComplex, g: Permutation) -> bool:
    if g.n != K.n:
        return False
    faces = K.face_set
    return all(tuple(sorted(g.apply_set(t))) in faces for t in faces)


def _check_automorphism(K, g):
    if not is_automorphism(K, g):
        raise NotAnAutomorphism(f"{g!r} does not map faces of {K!r} to faces")


def _signed_permutation(faces: Sequence[tuple], g: Permutation, extra_sign: int = 1) -> RationalMatrix:
    idx = {t: r for r, t in enumerate(faces)}
    ent = {}
    for c, t in enumerate(faces):
        img = tuple(sorted(g.apply_set(t)))
        if img not in idx:
            raise NotAnAutomorphism(f"{g!r} sends face {t} outside the basis")
        ent[idx[img], c] = extra_sign * reorder_sign(g, t)
    return RationalMatrix(len(faces), len(faces), ent)


def induced_chain_map(K: SimplicialComplex, g: Permutation, i: int, *, check: bool = True) -> RationalMatrix:
    """Matrix of g on C_i(K): column sigma holds ``reorder_sign(g, sigma)`` at row g.sigma."""
    if check:
        _check_automorphism(K, g)
    return _signed_permutation(K.faces(i), g)


def chain_trace(K: SimplicialComplex, g: Permutation, i: int) -> int:
    """Trace of g on C_i(K): signed count of g-fixed i-faces."""
    total = 0
    for t in K.faces(i):
        if g.apply_set(t) == frozenset(t):
            total += reorder_sign(g, t)
    return total


# Relative chains of (2^V, K) and cochains of the Alexander dual.

def relative_faces(K: SimplicialComplex, i: int) -> tuple:
    """Subsets of {1..n} of dimension ``i`` that are not faces of ``K``."""
    if i < -1 or i >= K.n:
        return ()
    faces = K.face_set
    return tuple(s for s in combinations(range(1, K.n + 1), i + 1) if s not in faces)


def relative_boundary(K: SimplicialComplex, i: int) -> RationalMatrix:
    """``d_i`` of the pair (2^V, K): drops terms landing inside ``K``."""
    cols = relative_faces(K, i)
    rows = relative_faces(K, i - 1)
    ridx = {t: r for r, t in enumerate(rows)}
    ent = {}
    for c, t in enumerate(cols):
        for pos in range(len(t)):
            sub = t[:pos] + t[pos + 1:]
            r = ridx.get(sub)
            if r is not None:
                ent[r, c] = -1 if pos % 2 else 1
    return RationalMatrix(len(rows), len(cols), ent)


def coboundary_matrix(K: SimplicialComplex, j: int) -> RationalMatrix:
    """``delta_j``: C^(j-1)(K) -> C^j(K), e*_s maps to the sum of sign_pos(k, s+k) e*_(s+k)."""
    cols = K.faces(j - 1)
    rows = K.faces(j)
    ridx = {t: r for r, t in enumerate(rows)}
    ent = {}
    for c, t in enumerate(cols):
        for k in range(1, K.n + 1):
            if k in t:
                continue
            up = tuple(sorted(t + (k,)))
            r = ridx.get(up)
            if r is not None:
                ent[r, c] = sign_pos(k, up)
    return RationalMatrix(len(rows), len(cols), ent)


def duality_isomorphism(K: SimplicialComplex, i: int, Kdual: SimplicialComplex | None = None) -> RationalMatrix:
    """``phi_i``: R_i(2^V, K) -> C^(n-i-2)(K*), e_s maps to p(s) e*_(complement of s)."""
    Kdual = Kdual if Kdual is not None else alexander_dual(K)
    cols = relative_faces(K, i)
    rows = Kdual.faces(K.n - i - 2)
    ridx = {t: r for r, t in enumerate(rows)}
    ent = {}
    for c, t in enumerate(cols):
        ent[ridx[complement(K.n, t)], c] = p_sign(t)
    return RationalMatrix(len(rows), len(cols), ent)


def chain_map_commutes(K: SimplicialComplex, g: Permutation, i: int) -> bool:
    """Check every chain-level identity that the equivariant duality rests on.

    * g commutes with the boundary of ``K`` in degree ``i``;
    * ``phi_(i-1) d_i == delta_(n-i-1) phi_i`` for the pair (2^V, K) against
      the cochains of the Alexander dual;
    * ``phi_i`` intertwines the action on relative chains with the
      sign-twisted action on dual cochains.
    """
    _check_automorphism(K, g)
    n = K.n
    ok = True
    if not K.is_void:
        gi = induced_chain_map(K, g, i, check=False)
        gprev = induced_chain_map(K, g, i - 1, check=False)
        bd = boundary_matrix(K, i)
        ok &= bd @ gi == gprev @ bd
    Kd = alexander_dual(K)
    phi_i = duality_isomorphism(K, i, Kd)
    phi_prev = duality_isomorphism(K, i - 1, Kd)
    ok &= phi_prev @ relative_boundary(K, i) == coboundary_matrix(Kd, n - i - 1) @ phi_i
    rho1 = _signed_permutation(relative_faces(K, i), g)
    rho2 = _signed_permutation(Kd.faces(n - i - 2), g, extra_sign=sign(g))
    ok &= rho2 @ phi_i == phi_i @ rho1
    return bool(ok)


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """First barycentric subdivision.

    New vertex ``k`` stands for the k-th nonempty face of ``K`` in
    lexicographic order of sorted tuples (see :func:`subdivision_labels`).
    Faces are chains of faces ordered by inclusion.
    """
    if K.is_void:
        raise ValidationError("cannot subdivide the void complex")
    labels = subdivision_labels(K)
    lab = {t: k for k, t in enumerate(labels, start=1)}
    facets = []
    for F in K.facets:
        if not F:
            continue
        for order in permutations(F):
            facets.append([lab[tuple(sorted(order[:k]))] for k in range(1, len(F) + 1)])
    return SimplicialComplex.from_facets(len(labels), facets)


def subdivision_labels(K: SimplicialComplex) -> list:
    return sorted(t for t in K.face_set if t)


def subdivision_action(K: SimplicialComplex, g: Permutation) -> Permutation:
    """Permutation of the subdivision's vertices induced by an automorphism of ``K``."""
    labels = subdivision_labels(K)
    lab = {t: k for k, t in enumerate(labels, start=1)}
    return Permutation([lab[tuple(sorted(g.apply_set(t)))] for t in labels])
