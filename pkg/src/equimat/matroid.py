"""Matroids on {1..n} given by their list of bases.

Subsets are handled internally as bitmasks (bit j-1 for element j); the
public surface speaks sorted tuples.  Ranks are computed as the largest
intersection with a basis, vectorised over the basis list with numpy.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyBasisList, ExchangeAxiomViolation, ValidationError
from .exact_linalg import RationalMatrix, rank as matrix_rank
from .perm_group import Permutation
from .simplicial import SimplicialComplex


def to_mask(subset: Iterable[int]) -> int:
    m = 0
    for j in subset:
        m |= 1 << (j - 1)
    return m


def from_mask(mask: int) -> tuple:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


class Matroid:
    def __init__(self, n: int, bases: Iterable[Sequence[int]], *, check: bool = True):
        masks = set()
        for b in bases:
            b = tuple(b)
            if any(not 1 <= j <= n for j in b):
                raise ValidationError(f"basis {b} not inside 1..{n}")
            if len(set(b)) != len(b):
                raise ValidationError(f"repeated element in basis {b}")
            masks.add(to_mask(b))
        if not masks:
            raise EmptyBasisList("a matroid needs at least one basis")
        sizes = {bin(m).count("1") for m in masks}
        if len(sizes) != 1:
            raise ExchangeAxiomViolation(f"bases of different sizes {sorted(sizes)}")
        self.n = n
        self.r = sizes.pop()
        self._masks = frozenset(masks)
        self.bases = tuple(sorted(from_mask(m) for m in masks))
        self._np_masks = np.array(sorted(masks), dtype=np.uint64)
        if check:
            bad = exchange_violation(self._masks)
            if bad is not None:
                b1, b2, x = bad
                raise ExchangeAxiomViolation(
                    f"no exchange for {from_mask(b1)} - {x} from {from_mask(b2)}"
                )

    @property
    def ground_set(self) -> tuple:
        return tuple(range(1, self.n + 1))

    @property
    def basis_masks(self) -> frozenset:
        return self._masks

    def rank_mask(self, mask: int) -> int:
        return int(np.bitwise_count(self._np_masks & np.uint64(mask)).max())

    def rank_of(self, subset: Iterable[int]) -> int:
        subset = tuple(subset)
        if any(not 1 <= j <= self.n for j in subset):
            raise ValidationError(f"{subset} not inside 1..{self.n}")
        return self.rank_mask(to_mask(subset))

    def is_independent(self, subset: Iterable[int]) -> bool:
        subset = tuple(subset)
        return self.rank_of(subset) == len(set(subset))

    def closure(self, subset: Iterable[int]) -> tuple:
        mask = to_mask(subset)
        rk = self.rank_mask(mask)
        out = mask
        for j in range(self.n):
            bit = 1 << j
            if not mask & bit and self.rank_mask(mask | bit) == rk:
                out |= bit
        return from_mask(out)

    @cached_property
    def loops(self) -> tuple:
        return tuple(j for j in self.ground_set if self.rank_mask(1 << (j - 1)) == 0)

    def is_simple(self) -> bool:
        if self.loops:
            return False
        return all(self.rank_mask(to_mask(p)) == 2 for p in combinations(self.ground_set, 2))

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.n == other.n and self._masks == other._masks

    def __hash__(self):
        return hash((self.n, self._masks))

    def __repr__(self):
        return f"Matroid(n={self.n}, r={self.r}, bases={len(self.bases)})"

    def to_json(self) -> dict:
        return {"n": self.n, "bases": [list(b) for b in self.bases]}

    @classmethod
    def from_json(cls, obj: dict, check: bool = True) -> "Matroid":
        return cls(int(obj["n"]), obj["bases"], check=check)


def exchange_violation(masks: frozenset):
    """First ``(B1, B2, x)`` breaking basis exchange, or ``None``."""
    ordered = sorted(masks)
    for b1 in ordered:
        for b2 in ordered:
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            x = 0
            while only1 >> x:
                if only1 >> x & 1:
                    base = b1 & ~(1 << x)
                    y = 0
                    found = False
                    while only2 >> y:
                        if only2 >> y & 1 and (base | (1 << y)) in masks:
                            found = True
                            break
                        y += 1
                    if not found:
                        return b1, b2, x + 1
                x += 1
    return None


def from_bases(n: int, bases: Iterable[Sequence[int]], check: bool = True) -> Matroid:
    return Matroid(n, bases, check=check)


def uniform(r: int, n: int) -> Matroid:
    return Matroid(n, combinations(range(1, n + 1), r), check=False)


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def fano() -> Matroid:
    """The Fano plane: every triple except its seven lines is a basis."""
    lines = set(FANO_LINES)
    return Matroid(7, [t for t in combinations(range(1, 8), 3) if t not in lines])


def _forest(m: int, edges: Sequence[tuple]) -> bool:
    parent = list(range(m + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def from_graph(m: int, edges: Sequence[Sequence[int]]) -> Matroid:
    """Graphic matroid; edge ``k`` (1-based, input order) is element ``k``.

    Bases are the spanning forests of maximal size.
    """
    edges = [tuple(e) for e in edges]
    for u, v in edges:
        if u == v or not (1 <= u <= m and 1 <= v <= m):
            raise ValidationError(f"bad edge {(u, v)} for {m} vertices")
    if len({frozenset(e) for e in edges}) != len(edges):
        raise ValidationError("graph must be simple")
    # forest size = m - number of components
    comp = list(range(m + 1))

    def find(a):
        while comp[a] != a:
            a = comp[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            comp[ru] = rv
    r = m - len({find(v) for v in range(1, m + 1)})
    n = len(edges)
    bases = [
        c for c in combinations(range(1, n + 1), r) if _forest(m, [edges[k - 1] for k in c])
    ]
    return Matroid(n, bases, check=False)


def complete_graph_edges(m: int) -> list:
    """Edges of K_m in lexicographic order; edge ``k`` is the k-th pair."""
    return list(combinations(range(1, m + 1), 2))


def complete_graph(m: int) -> Matroid:
    return from_graph(m, complete_graph_edges(m))


def from_vectors(matrix: RationalMatrix) -> Matroid:
    """Column matroid of a rational matrix: element j is column j (1-based)."""
    n = matrix.cols
    r = matrix_rank(matrix)
    cols = [
        {row: v for (row, c), v in matrix.entries.items() if c == j} for j in range(n)
    ]
    bases = []
    for c in combinations(range(n), r):
        sub = RationalMatrix(matrix.rows, r, {(row, k): v for k, j in enumerate(c) for row, v in cols[j].items()})
        if matrix_rank(sub) == r:
            bases.append(tuple(j + 1 for j in c))
    return Matroid(n, bases, check=False)


def braid_vectors(m: int) -> RationalMatrix:
    """Columns e_i - e_j for i < j in lexicographic order (the braid arrangement)."""
    ent = {}
    for k, (i, j) in enumerate(complete_graph_edges(m)):
        ent[i - 1, k] = 1
        ent[j - 1, k] = -1
    return RationalMatrix(m, len(ent) // 2, ent)


def dual(M: Matroid) -> Matroid:
    full = (1 << M.n) - 1
    return Matroid(M.n, [from_mask(full & ~b) for b in M.basis_masks], check=False)


def independence_complex(M: Matroid) -> SimplicialComplex:
    faces = set(M.basis_masks)
    frontier = list(faces)
    while frontier:
        nxt = []
        for f in frontier:
            rest = f
            while rest:
                low = rest & -rest
                sub = f & ~low
                if sub not in faces:
                    faces.add(sub)
                    nxt.append(sub)
                rest &= rest - 1
        frontier = nxt
    return SimplicialComplex.from_masks(M.n, faces)


def _spanning_masks(M: Matroid) -> set:
    spanning = set(M.basis_masks)
    frontier = list(spanning)
    full = (1 << M.n) - 1
    while frontier:
        nxt = []
        for f in frontier:
            rest = full & ~f
            while rest:
                low = rest & -rest
                sup = f | low
                if sup not in spanning:
                    spanning.add(sup)
                    nxt.append(sup)
                rest &= rest - 1
        frontier = nxt
    return spanning


def non_spanning_complex(M: Matroid) -> SimplicialComplex:
    """Subsets whose rank is below the rank of the matroid."""
    spanning = _spanning_masks(M)
    return SimplicialComplex.from_masks(M.n, (m for m in range(1 << M.n) if m not in spanning))


def is_nonspanning_dual_check(M: Matroid, subset: Iterable[int]) -> bool:
    """Whether ``subset`` is non-spanning in the dual matroid.

    Computed from dual ranks and compared against dependence of the
    complement in ``M``; an ``AssertionError`` means the two disagree.
    """
    subset = tuple(subset)
    A = to_mask(subset)
    full = (1 << M.n) - 1
    Md = dual(M)
    lhs = Md.rank_mask(A) < Md.r
    comp = full & ~A
    rhs = M.rank_mask(comp) < bin(comp).count("1")
    assert lhs == rhs, f"non-spanning in dual ({lhs}) but complement dependent is {rhs}"
    return lhs


def circuits(M: Matroid) -> list:
    """Minimal dependent sets, sorted by size then lexicographically."""
    found = []
    for k in range(1, M.r + 2):
        for c in combinations(M.ground_set, k):
            mask = to_mask(c)
            if M.rank_mask(mask) == k:
                continue
            if any(f & mask == f for f in found):
                continue
            found.append(mask)
    return sorted((from_mask(f) for f in found), key=lambda t: (len(t), t))


def nbc_bases(M: Matroid) -> list:
    """Bases containing no broken circuit (a circuit minus its least element).

    Their number is |mu(0, 1)| of the lattice of flats, which makes this an
    independent count for the top homology dimension.
    """
    broken = [to_mask(c[1:]) for c in circuits(M)]
    out = [b for b in M.bases if not any(bc & to_mask(b) == bc for bc in broken)]
    return out


def simplify(M: Matroid):
    """Drop loops and keep the least element of each parallel class.

    Returns ``(simple_matroid, label_map)`` where ``label_map[j]`` is the new
    label of old element ``j``, or ``None`` for a loop.
    """
    loops = set(M.loops)
    classes: list[list[int]] = []
    for j in M.ground_set:
        if j in loops:
            continue
        for cls in classes:
            if M.rank_mask(to_mask((cls[0], j))) == 1:
                cls.append(j)
                break
        else:
            classes.append([j])
    label_map = {j: None for j in loops}
    for new, cls in enumerate(classes, start=1):
        for j in cls:
            label_map[j] = new
    reps = [cls[0] for cls in classes]
    r = M.r
    bases = [c for c in combinations(range(1, len(reps) + 1), r)
             if M.rank_mask(to_mask(reps[k - 1] for k in c)) == r]
    return Matroid(len(reps), bases, check=False), label_map


def check_automorphism(M: Matroid, g: Permutation) -> bool:
    if g.n != M.n:
        raise ValidationError(f"permutation of degree {g.n} on a matroid with {M.n} elements")
    masks = M.basis_masks
    return all(to_mask(g.apply_set(from_mask(b))) in masks for b in masks)


def edge_action(m: int, g: Permutation) -> Permutation:
    """Permutation of the C(m, 2) edges of K_m induced by a vertex permutation."""
    if g.n != m:
        raise ValidationError(f"vertex permutation of degree {g.n}, expected {m}")
    edges = complete_graph_edges(m)
    idx = {e: k for k, e in enumerate(edges, start=1)}
    return Permutation([idx[tuple(sorted((g(a), g(b))))] for a, b in edges])
