"""Finite lattices, lattices of flats, order complexes and cross-cuts.

Elements are stored in canonical order: sorted by height (length of the
longest chain down to the bottom) and then by label, so index 0 is the
bottom and the last index is the top.  Group actions on a lattice are
permutations of degree ``len(L)`` where label ``k + 1`` stands for element
index ``k``.

The order complex of a lattice here always means the order complex of its
proper part, the lattice with bottom and top removed.  With them kept the
complex is a cone and has no reduced homology.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ActionNotOrderPreserving, NotACrosscut, NotALattice, NotComparable, NotSimple, ValidationError
from .matroid import Matroid, from_mask
from .perm_group import FiniteGroup, Permutation
from .simplicial import SimplicialComplex


def _sort_key(label):
    # labels may be tuples of ints or strings; compare within a type
    return (0, label) if isinstance(label, tuple) else (1, str(label))


class FiniteLattice:
    def __init__(self, labels: Sequence, leq: np.ndarray):
        """``leq[a, b]`` is True iff element ``a <= b``; must be a partial order.

        Elements are re-sorted canonically; the meet and join tables are
        derived from ``leq`` and validated.
        """
        leq = np.array(leq, dtype=bool)
        N = len(labels)
        if leq.shape != (N, N) or N == 0:
            raise NotALattice("order matrix shape does not match the labels")
        if not leq.diagonal().all():
            raise NotALattice("order relation is not reflexive")
        if (leq & leq.T & ~np.eye(N, dtype=bool)).any():
            raise NotALattice("order relation is not antisymmetric")
        li = leq.astype(np.int64)
        if ((li @ li > 0) & ~leq).any():
            raise NotALattice("order relation is not transitive")
        height = _heights(leq)
        order = sorted(range(N), key=lambda k: (height[k], _sort_key(labels[k])))
        self.elements = [labels[k] for k in order]
        self.leq = leq[np.ix_(order, order)]
        self.height = [height[k] for k in order]
        if not self.leq[0].all():
            raise NotALattice("no unique minimum")
        if not self.leq[:, -1].all():
            raise NotALattice("no unique maximum")
        self.meet = self._bound_table(self.leq.T, greatest=True)
        self.join = self._bound_table(self.leq, greatest=False)
        self._spot_check()

    def _bound_table(self, rel: np.ndarray, greatest: bool) -> np.ndarray:
        # rel[a, b]: b is an upper bound of a for joins (transposed for meets)
        N = len(self.elements)
        table = np.zeros((N, N), dtype=np.int64)
        for a in range(N):
            for b in range(a, N):
                cands = np.flatnonzero(rel[a] & rel[b])
                if greatest:
                    cands = cands[::-1]
                # the bound must lie on the correct side of every other bound
                best = None
                for z in cands:
                    if rel[z, cands].all():
                        best = z
                        break
                if best is None:
                    raise NotALattice(f"elements {self.elements[a]} and {self.elements[b]} have no bound")
                table[a, b] = table[b, a] = best
        return table

    def _spot_check(self, samples: int = 200):
        N = len(self.elements)
        rng = np.random.default_rng(0)
        for _ in range(min(samples, N ** 3)):
            a, b, c = (int(x) for x in rng.integers(0, N, size=3))
            m, j = self.meet, self.join
            if m[a, m[b, c]] != m[m[a, b], c] or j[a, j[b, c]] != j[j[a, b], c]:
                raise NotALattice("meet/join not associative")
            if m[a, j[a, b]] != a or j[a, m[a, b]] != a:
                raise NotALattice("absorption fails")

    def __len__(self):
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def index(self, label) -> int:
        if not hasattr(self, "_pos"):
            self._pos = {lab: k for k, lab in enumerate(self.elements)}
        try:
            return self._pos[label]
        except KeyError:
            raise ValueError(f"{label!r} is not an element") from None

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def meet_of(self, idxs: Iterable[int]) -> int:
        out = self.top
        for k in idxs:
            out = int(self.meet[out, k])
        return out

    def join_of(self, idxs: Iterable[int]) -> int:
        out = self.bottom
        for k in idxs:
            out = int(self.join[out, k])
        return out

    @cached_property
    def atoms(self) -> list:
        return [k for k in range(1, len(self)) if self._covers(0, k)]

    def _covers(self, a: int, b: int) -> bool:
        if a == b or not self.leq[a, b]:
            return False
        between = self.leq[a] & self.leq[:, b]
        return int(between.sum()) == 2

    def proper_elements(self) -> list:
        return list(range(1, len(self) - 1))

    def is_order_automorphism(self, g: Permutation) -> bool:
        N = len(self)
        if g.n != N:
            return False
        p = np.array([g(k + 1) - 1 for k in range(N)])
        return bool((self.leq[np.ix_(p, p)] == self.leq).all())

    def to_json(self) -> dict:
        pairs = [[int(a), int(b)] for a, b in zip(*np.nonzero(self.leq)) if a != b]
        return {"elements": [list(e) if isinstance(e, tuple) else e for e in self.elements], "leq_pairs": pairs}

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteLattice":
        labels = [tuple(e) if isinstance(e, list) else e for e in obj["elements"]]
        return from_relation(labels, obj.get("leq_pairs", []))

    def __repr__(self):
        return f"FiniteLattice({len(self)} elements)"


def _heights(leq: np.ndarray) -> list:
    N = leq.shape[0]
    below = [np.flatnonzero(leq[:, k]) for k in range(N)]
    order = sorted(range(N), key=lambda k: len(below[k]))
    h = [0] * N
    for k in order:
        h[k] = max((h[j] + 1 for j in below[k] if j != k), default=0)
    return h


def from_relation(labels: Sequence, pairs: Iterable[Sequence[int]]) -> FiniteLattice:
    """Lattice from index pairs ``(i, j)`` meaning ``labels[i] <= labels[j]``.

    The reflexive-transitive closure of ``pairs`` is taken first.
    """
    N = len(labels)
    leq = np.eye(N, dtype=bool)
    for i, j in pairs:
        leq[int(i), int(j)] = True
    while True:
        li = leq.astype(np.int64)
        nxt = leq | (li @ li > 0)
        if (nxt == leq).all():
            break
        leq = nxt
    return FiniteLattice(list(labels), leq)


def from_order(labels: Sequence, le: Callable[[object, object], bool]) -> FiniteLattice:
    leq = np.array([[bool(le(a, b)) for b in labels] for a in labels], dtype=bool)
    return FiniteLattice(list(labels), leq)


def boolean_lattice(k: int) -> FiniteLattice:
    subsets = [c for r in range(k + 1) for c in combinations(range(1, k + 1), r)]
    return from_order(subsets, lambda a, b: set(a) <= set(b))


def partition_lattice(m: int) -> FiniteLattice:
    """Set partitions of {1..m} ordered by refinement; labels are tuples of blocks."""

    def set_partitions(elems):
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        for part in set_partitions(rest):
            yield [(first,)] + part
            for i in range(len(part)):
                yield part[:i] + [tuple(sorted((first,) + part[i]))] + part[i + 1:]

    parts = [tuple(sorted(p)) for p in set_partitions(list(range(1, m + 1)))]

    def refines(a, b):
        return all(any(set(x) <= set(y) for y in b) for x in a)

    return from_order(parts, refines)


def chain_lattice(k: int) -> FiniteLattice:
    """Totally ordered lattice 0 < 1 < ... < k."""
    return from_order([(j,) for j in range(k + 1)], lambda a, b: a[0] <= b[0])


def flats(M: Matroid) -> list:
    """All flats of ``M`` as bitmasks."""
    full = (1 << M.n) - 1

    def closure(mask):
        rk = M.rank_mask(mask)
        out = mask
        rest = full & ~mask
        while rest:
            low = rest & -rest
            if M.rank_mask(mask | low) == rk:
                out |= low
            rest &= rest - 1
        return out

    start = closure(0)
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for F in frontier:
            rest = full & ~F
            while rest:
                low = rest & -rest
                rest &= rest - 1
                G = closure(F | low)
                if G not in found:
                    found.add(G)
                    nxt.append(G)
        frontier = nxt
    return sorted(found)


def flats_lattice(M: Matroid):
    """Lattice of flats of a simple matroid.

    Returns ``(L, atom_of)`` where ``atom_of[j]`` is the index in ``L`` of
    the atom ``{j}``.
    """
    if not M.is_simple():
        raise NotSimple("lattice of flats needs a simple matroid; call simplify() first")
    masks = flats(M)
    labels = [from_mask(m) for m in masks]
    arr = np.array(masks, dtype=np.uint64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    L = FiniteLattice(labels, leq)
    atom_of = {j: L.index((j,)) for j in range(1, M.n + 1)}
    return L, atom_of


def flat_action(L: FiniteLattice, g: Permutation) -> Permutation:
    """Permutation of a lattice of flats induced by a ground-set automorphism."""
    idx = {lab: k for k, lab in enumerate(L.elements)}
    try:
        return Permutation([idx[tuple(sorted(g.apply_set(lab)))] + 1 for lab in L.elements])
    except KeyError as exc:
        raise ActionNotOrderPreserving(f"{g!r} does not map flats to flats") from exc


def _relabel(label, g: Permutation):
    if isinstance(label, tuple):
        return tuple(sorted(_relabel(x, g) for x in label))
    return g(label)


def ground_action(L: FiniteLattice, g: Permutation) -> Permutation:
    """Lattice permutation induced by permuting the integers inside the labels.

    Works for labels that are subsets (flats, Boolean lattices) and for set
    partitions; the image of every label must again be a label.
    """
    try:
        return Permutation([L.index(_relabel(lab, g)) + 1 for lab in L.elements])
    except (KeyError, ValueError, TypeError) as exc:
        raise ActionNotOrderPreserving(f"{g!r} does not permute the lattice labels") from exc


def _chains(L: FiniteLattice, elems: Sequence[int]) -> list:
    """All chains (as increasing index tuples, including the empty chain) among ``elems``."""
    elems = list(elems)
    above = {a: [b for b in elems if b != a and L.leq[a, b]] for a in elems}
    out = [()]

    def extend(chain):
        for b in above[chain[-1]]:
            c = chain + (b,)
            out.append(c)
            extend(c)

    for a in elems:
        out.append((a,))
        extend((a,))
    return out


def proper_part_order_complex(L: FiniteLattice) -> SimplicialComplex:
    """Chains of the proper part; vertex ``k`` is element index ``k``."""
    if len(L) < 2:
        raise ValidationError("lattice needs a distinct bottom and top")
    return SimplicialComplex(len(L) - 2, _chains(L, L.proper_elements()), check=False)


def order_complex_action(L: FiniteLattice, lattice_perm: Permutation) -> Permutation:
    N = len(L)
    return Permutation([lattice_perm(k + 1) - 1 for k in range(1, N - 1)])


def maximal_chains(L: FiniteLattice) -> list:
    N = len(L)
    covers = {a: [b for b in range(N) if L._covers(a, b)] for a in range(N)}
    out = []

    def walk(chain):
        nxt = covers[chain[-1]]
        if not nxt:
            out.append(tuple(chain))
            return
        for b in nxt:
            walk(chain + [b])

    walk([0])
    return out


def is_crosscut(L: FiniteLattice, C: Iterable[int], exhaustive: bool = True, chain_cap: int = 200_000) -> bool:
    """Cross-cut axioms: avoids bottom and top, antichain, every chain extends to meet ``C``.

    With ``exhaustive`` every chain of the proper part is tested for an
    element of ``C`` comparable to all its members (skipped past
    ``chain_cap`` chains); every maximal chain is always checked.
    """
    C = sorted(set(C))
    if not C or L.bottom in C or L.top in C:
        return False
    for a, b in combinations(C, 2):
        if L.leq[a, b] or L.leq[b, a]:
            return False
    Cset = set(C)
    for ch in maximal_chains(L):
        if not Cset.intersection(ch):
            return False
    if exhaustive:
        chains = _chains(L, L.proper_elements())
        if len(chains) <= chain_cap:
            comparable = L.leq | L.leq.T
            Carr = np.array(C)
            for ch in chains:
                ok = np.ones(len(C), dtype=bool)
                for x in ch:
                    ok &= comparable[x, Carr]
                if not ok.any():
                    return False
    return True


def spans(L: FiniteLattice, subset: Iterable[int]) -> bool:
    subset = list(subset)
    return L.meet_of(subset) == L.bottom and L.join_of(subset) == L.top


def crosscut_complex(L: FiniteLattice, C: Iterable[int], check: bool = True) -> SimplicialComplex:
    """Subsets of ``C`` that do not span; vertex ``j`` is the j-th element of sorted ``C``."""
    C = sorted(set(C))
    if check and not is_crosscut(L, C):
        raise NotACrosscut(f"{C} is not a cross-cut")
    faces = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for f in frontier:
            start = f[-1] + 1 if f else 0
            for j in range(start, len(C)):
                g = f + (j,)
                if not spans(L, [C[k] for k in g]):
                    faces.add(g)
                    nxt.append(g)
        frontier = nxt
    return SimplicialComplex(len(C), [tuple(k + 1 for k in f) for f in faces], check=False)


def crosscut_action(L: FiniteLattice, C: Iterable[int], lattice_perm: Permutation) -> Permutation:
    C = sorted(set(C))
    pos = {c: j for j, c in enumerate(C, start=1)}
    try:
        return Permutation([pos[lattice_perm(c + 1) - 1] for c in C])
    except KeyError as exc:
        raise ValidationError("action does not preserve the cross-cut") from exc


def mobius(L: FiniteLattice, x: int, y: int) -> int:
    """mu(x, y) by the recursion mu(x, x) = 1, mu(x, y) = -sum over x <= z < y of mu(x, z)."""
    if not L.leq[x, y]:
        raise NotComparable(f"{L.elements[x]} is not below {L.elements[y]}")
    memo = {}
    interval = [z for z in range(len(L)) if L.leq[x, z] and L.leq[z, y]]
    # canonical order is a linear extension
    for z in interval:
        if z == x:
            memo[z] = 1
        else:
            memo[z] = -sum(memo[w] for w in interval if w != z and L.leq[w, z] and w in memo)
    return memo[y]


def is_g_stable(L: FiniteLattice, C: Iterable[int], G: FiniteGroup, action: Callable[[Permutation], Permutation]) -> bool:
    """Whether ``C`` is a union of orbits of ``G`` acting through ``action``."""
    C = set(C)
    for g in G.generators:
        if not L.is_order_automorphism(action(g)):
            raise ActionNotOrderPreserving(f"{g!r} does not act by a lattice automorphism")
    for g in G.elements:
        p = action(g)
        if {p(c + 1) - 1 for c in C} != C:
            return False
    return True
