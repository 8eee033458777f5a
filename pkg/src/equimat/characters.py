"""Class functions on permutation groups with exact cyclotomic values.

Also: induced characters by brute force, symmetric-group irreducibles via
the Murnaghan-Nakayama rule, inner products and decomposition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Iterable, Sequence

from .cyclotomic import CyclotomicNumber
from .errors import GroupMismatch, NotACharacter, NotASubgroup, PartitionMismatch, ValidationError
from .perm_group import FiniteGroup, Permutation, cycle_type, cyclic_group, sign


def _cyc(x) -> CyclotomicNumber:
    return x if isinstance(x, CyclotomicNumber) else CyclotomicNumber.rational(x)


def _same_group(G: FiniteGroup, H: FiniteGroup) -> bool:
    return G is H or (G.degree == H.degree and G.elements == H.elements)


class Character:
    """One value per conjugacy class of ``group``, in ``group.classes`` order."""

    def __init__(self, group: FiniteGroup, values: Sequence):
        if len(values) != len(group.classes):
            raise ValidationError(f"{len(values)} values for {len(group.classes)} classes")
        self.group = group
        self.values = tuple(_cyc(v) for v in values)

    @classmethod
    def from_function(cls, group: FiniteGroup, f: Callable[[Permutation], object]) -> "Character":
        return cls(group, [f(r) for r in group.representatives])

    def __call__(self, g: Permutation) -> CyclotomicNumber:
        return self.values[self.group.class_index(g)]

    @property
    def degree(self) -> CyclotomicNumber:
        return self.values[0]

    @property
    def conductor(self) -> int:
        return lcm(*(v.conductor for v in self.values))

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.values)

    def rational_values(self) -> tuple:
        return tuple(v.to_rational() for v in self.values)

    def integer_values(self) -> tuple:
        out = []
        for q in self.rational_values():
            if q.denominator != 1:
                raise ValueError(f"non-integral value {q}")
            out.append(int(q))
        return tuple(out)

    def _check(self, other: "Character"):
        if not _same_group(self.group, other.group):
            raise GroupMismatch("characters of different groups")

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, Character):
            self._check(other)
            return Character(self.group, [a * b for a, b in zip(self.values, other.values)])
        return Character(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> "Character":
        return Character(self.group, [v.conjugate() for v in self.values])

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and _same_group(self.group, other.group)
            and self.values == other.values
        )

    def __repr__(self):
        return f"Character({list(self.values)})"

    def to_json(self) -> dict:
        """Values keyed by cycle type for a full symmetric group, else by representative."""
        G = self.group
        if G.is_symmetric():
            keys = [",".join(map(str, cycle_type(r))) for r in G.representatives]
        else:
            keys = [",".join(map(str, r.image)) for r in G.representatives]
        return {k: v.to_json() for k, v in zip(keys, self.values)}


def trivial_character(G: FiniteGroup) -> Character:
    return Character(G, [1] * len(G.classes))


def sign_character(G: FiniteGroup) -> Character:
    return Character.from_function(G, sign)


def twist_by_sign(chi: Character) -> Character:
    """Tensor with the sign of each group element as a permutation of its degree."""
    return chi * sign_character(chi.group)


def regular_character(G: FiniteGroup) -> Character:
    return Character(G, [G.order] + [0] * (len(G.classes) - 1))


def permutation_character(G: FiniteGroup) -> Character:
    return Character.from_function(G, lambda g: sum(1 for j in range(1, g.n + 1) if g(j) == j))


def cyclic_character(m: int, k: int) -> Character:
    """Character of C_m = <(1 2 ... m)> sending the j-th power of the generator to zeta_m^(jk)."""
    C = cyclic_group(m)
    if m == 1:
        return trivial_character(C)
    c = Permutation.from_cycles(m, tuple(range(1, m + 1)))
    values = {}
    x = Permutation.identity(m)
    for j in range(m):
        values[x] = CyclotomicNumber.zeta(m, j * k)
        x = c * x
    return Character.from_function(C, lambda g: values[g])


def cyclic_subgroup_character(gen: Permutation, k: int):
    """``(H, xi)`` with H = <gen> and xi(gen^j) = zeta_order^(jk)."""
    from .perm_group import generate_group

    H = generate_group([gen], n=gen.n)
    order = gen.order
    values = {}
    x = Permutation.identity(gen.n)
    for j in range(order):
        values[x] = CyclotomicNumber.zeta(order, j * k)
        x = gen * x
    return H, Character.from_function(H, lambda g: values[g])


def restrict(chi: Character, H: FiniteGroup) -> Character:
    if not H.is_subgroup_of(chi.group):
        raise NotASubgroup("restriction to a non-subgroup")
    return Character.from_function(H, chi)


def induced_character(G: FiniteGroup, H: FiniteGroup, xi: Character) -> Character:
    """ind_H^G xi(g) = (1/|H|) * sum of xi(x^-1 g x) over x in G with x^-1 g x in H."""
    if not _same_group(xi.group, H):
        raise GroupMismatch("xi is not a character of H")
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not contained in G")
    inverses = [x.inverse() for x in G.elements]
    values = []
    for g in G.representatives:
        total = CyclotomicNumber.rational(0)
        for x, xi_ in zip(G.elements, inverses):
            y = xi_ * g * x
            if y in H:
                total = total + xi(y)
        values.append(total / H.order)
    return Character(G, values)


def inner_product(chi1: Character, chi2: Character):
    """(1/|G|) sum over g of chi1(g) * conj(chi2(g)); a Fraction when rational."""
    chi1._check(chi2)
    G = chi1.group
    total = CyclotomicNumber.rational(0)
    for size, a, b in zip(G.class_sizes, chi1.values, chi2.values):
        total = total + a * b.conjugate() * size
    total = total / G.order
    return total.to_rational() if total.is_rational() else total


# Symmetric group irreducibles

def partitions(m: int) -> list:
    """Partitions of m in reverse lexicographic order: (m), (m-1, 1), ..., (1^m)."""
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, maxpart), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(m, m, [])
    return out


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        new_lam = tuple(x - (ell - 1 - i) for i, x in enumerate(new))
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi^lam at cycle type mu by border-strip removal."""
    lam = tuple(sorted((int(p) for p in lam if p), reverse=True))
    mu = tuple(sorted((int(p) for p in mu if p), reverse=True))
    if sum(lam) != sum(mu):
        raise PartitionMismatch(f"{lam} and {mu} partition different integers")
    return _mn(lam, mu)


def irreducible_character(G: FiniteGroup, lam: Sequence[int]) -> Character:
    """chi^lam on a full symmetric group ``G``."""
    if not G.is_symmetric():
        raise ValidationError("irreducible characters by partition need a full symmetric group")
    return Character(G, [mn_character(lam, cycle_type(r)) for r in G.representatives])


@lru_cache(maxsize=None)
def character_table(m: int, cap: int = 9) -> tuple:
    """``(partitions, class cycle types, table)`` with table[i][j] = chi^lambda_i(mu_j)."""
    if m > cap:
        raise ValidationError(f"character tables capped at m={cap}")
    lams = partitions(m)
    mus = sorted(lams)
    table = tuple(tuple(mn_character(l, u) for u in mus) for l in lams)
    return tuple(lams), tuple(mus), table


def decompose(chi: Character) -> dict:
    """Multiplicities of irreducibles in a character of a full symmetric group.

    Returns ``{partition: multiplicity}`` with zero multiplicities dropped.
    Raises :class:`NotACharacter` on a negative or non-integral multiplicity.
    """
    G = chi.group
    if not G.is_symmetric():
        raise ValidationError("decompose needs a character of a full symmetric group")
    if not chi.is_rational():
        raise NotACharacter("values must be rational integers")
    vals = chi.rational_values()
    if any(v.denominator != 1 for v in vals):
        raise NotACharacter("values must be rational integers")
    out = {}
    for lam in partitions(G.degree):
        irr = [mn_character(lam, cycle_type(r)) for r in G.representatives]
        mult = sum(Fraction(s) * v * x for s, v, x in zip(G.class_sizes, vals, irr)) / G.order
        if mult.denominator != 1 or mult < 0:
            raise NotACharacter(f"multiplicity {mult} of {lam}")
        if mult:
            out[lam] = int(mult)
    return out


def dimension_of(decomposition: dict) -> int:
    """Sum of multiplicity times dimension of each irreducible."""
    return sum(k * mn_character(lam, (1,) * sum(lam)) for lam, k in decomposition.items())


def character_from_cycle_types(G: FiniteGroup, values: dict) -> Character:
    """Build a character of a symmetric group from ``{cycle_type: value}``."""
    out = []
    for r in G.representatives:
        ct = cycle_type(r)
        if ct not in values:
            raise ValidationError(f"missing value for cycle type {ct}")
        out.append(values[ct])
    return Character(G, out)


def is_class_function(G: FiniteGroup, f: Callable[[Permutation], object], sample: Iterable[int] | None = None) -> bool:
    """Check that ``f`` is constant on the given conjugacy classes (all by default)."""
    idx = range(len(G.classes)) if sample is None else sample
    for k in idx:
        cls = G.classes[k]
        v = f(cls[0])
        if any(f(x) != v for x in cls[1:]):
            return False
    return True
