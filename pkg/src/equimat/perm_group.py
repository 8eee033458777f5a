"""Permutations of {1..n} and explicitly enumerated permutation groups.

Labels are 1-based.  A :class:`Permutation` stores the image tuple, so
``Permutation((2, 3, 1))`` is the 3-cycle 1 -> 2 -> 3 -> 1.  Products follow
function composition: ``(g * h)(j) == g(h(j))``.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DegreeMismatch, OrderCapExceeded, ValidationError

DEFAULT_ORDER_CAP = 1_000_000


class Permutation:
    def __init__(self, image: Sequence[int]):
        image = tuple(int(x) for x in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValidationError(f"not a permutation of 1..{len(image)}: {image}")
        self.image = image

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(4, (1, 2), (3, 4))``."""
        image = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n or a in seen:
                    raise ValidationError(f"bad cycle {cyc} for degree {n}")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                image[a - 1] = b
        return cls(image)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise DegreeMismatch(f"degrees {self.n} and {other.n}")
        img = self.image
        return Permutation._raw(tuple(img[j - 1] for j in other.image))

    @classmethod
    def _raw(cls, image: tuple) -> "Permutation":
        obj = cls.__new__(cls)
        obj.image = image
        return obj

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, gj in enumerate(self.image, start=1):
            inv[gj - 1] = j
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def apply_set(self, subset: Iterable[int]) -> frozenset:
        img = self.image
        return frozenset(img[j - 1] for j in subset)

    def is_identity(self) -> bool:
        return all(j == gj for j, gj in enumerate(self.image, start=1))

    @cached_property
    def cycles(self) -> tuple:
        """Cycle decomposition including fixed points, each cycle led by its minimum."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles)) if self.n else 1

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __lt__(self, other):
        return self.image < other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        moved = [c for c in self.cycles if len(c) > 1]
        if not moved:
            return f"Permutation.identity({self.n})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in moved)
        return f"<{body} in S_{self.n}>"

    def to_json(self) -> list:
        return list(self.image)


def sign(g: Permutation) -> int:
    """Parity of ``g``: +1 for even, -1 for odd."""
    return -1 if (g.n - len(g.cycles)) % 2 else 1


def cycle_type(g: Permutation) -> tuple:
    return tuple(sorted((len(c) for c in g.cycles), reverse=True))


class FiniteGroup:
    """A fully enumerated permutation group.

    ``elements`` is sorted lexicographically by image, so ``elements[0]`` is
    the identity.  ``classes`` lists conjugacy classes ordered by
    (cycle type, representative); each representative is the
    lexicographically least member of its class.
    """

    def __init__(self, degree: int, elements: Sequence[Permutation], generators: Sequence[Permutation]):
        self.degree = degree
        self.elements = tuple(sorted(elements))
        self.generators = tuple(generators)
        self._index = {g: i for i, g in enumerate(self.elements)}
        self.classes = conjugacy_classes(self)
        self.representatives = tuple(c[0] for c in self.classes)
        self._class_of = {}
        for k, cls in enumerate(self.classes):
            for g in cls:
                self._class_of[g] = k

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def class_index(self, g: Permutation) -> int:
        return self._class_of[g]

    @property
    def class_sizes(self) -> tuple:
        return tuple(len(c) for c in self.classes)

    def class_labels(self) -> list:
        """Cycle types of the representatives (unique labels when the group is a full S_m)."""
        return [cycle_type(r) for r in self.representatives]

    def is_symmetric(self) -> bool:
        from math import factorial

        return self.order == factorial(self.degree)

    def is_subgroup_of(self, other: "FiniteGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.elements)

    def __repr__(self):
        return f"FiniteGroup(degree={self.degree}, order={self.order}, classes={len(self.classes)})"


def generate_group(gens: Iterable[Permutation], cap: int = DEFAULT_ORDER_CAP, n: int | None = None) -> FiniteGroup:
    """Closure of ``gens`` under composition by breadth-first search.

    ``n`` is only needed when ``gens`` is empty.  Raises
    :class:`OrderCapExceeded` as soon as more than ``cap`` elements appear.
    """
    gens = list(gens)
    degrees = {g.n for g in gens}
    if n is not None:
        degrees.add(n)
    if len(degrees) > 1:
        raise DegreeMismatch(f"generators of mixed degrees {sorted(degrees)}")
    if not degrees:
        raise ValidationError("cannot infer degree of a group with no generators")
    (deg,) = degrees
    gens = [g for g in sorted(set(gens)) if not g.is_identity()]
    ident = Permutation.identity(deg)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s * x
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise OrderCapExceeded(f"group order exceeds cap {cap}")
                queue.append(y)
    return FiniteGroup(deg, seen, gens)


def conjugacy_classes(G: FiniteGroup) -> tuple:
    """Orbits of conjugation, as tuples sorted with the least element first.

    Orbits are closed under conjugation by the generators, which suffices
    because the generators generate ``G``.
    """
    gens = list(G.generators)
    gens_inv = [s.inverse() for s in gens]
    assigned = set()
    classes = []
    for x in G.elements:
        if x in assigned:
            continue
        orbit = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for s, si in zip(gens, gens_inv):
                z = s * y * si
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        assigned |= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: (cycle_type(c[0]), c[0].image))
    return tuple(classes)


def symmetric_group(m: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if m <= 1:
        return generate_group([], n=max(m, 1), cap=cap)
    gens = [Permutation.from_cycles(m, (1, 2)), Permutation.from_cycles(m, tuple(range(1, m + 1)))]
    return generate_group(gens, cap=cap)


def cyclic_group(m: int) -> FiniteGroup:
    """The cyclic group generated by the m-cycle (1 2 ... m)."""
    if m == 1:
        return generate_group([], n=1)
    return generate_group([Permutation.from_cycles(m, tuple(range(1, m + 1)))])


def trivial_group(n: int) -> FiniteGroup:
    return generate_group([], n=n)


def image_group(G: FiniteGroup, action, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """The group generated by the images of ``G``'s generators under ``action``."""
    imgs = [action(s) for s in G.generators]
    if not imgs:
        return generate_group([], n=action(G.identity).n, cap=cap)
    return generate_group(imgs, cap=cap)
