import random
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from equimat.errors import DegreeMismatch, OrderCapExceeded, ValidationError
from equimat.perm_group import (
    Permutation,
    conjugacy_classes,
    cycle_type,
    cyclic_group,
    generate_group,
    image_group,
    sign,
    symmetric_group,
    trivial_group,
)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(Permutation)


def test_composition_convention():
    g = Permutation.from_cycles(3, (1, 2))
    h = Permutation.from_cycles(3, (2, 3))
    # (g*h)(j) = g(h(j))
    assert all((g * h)(j) == g(h(j)) for j in (1, 2, 3))
    assert (g * h).image == (2, 3, 1)


def test_invalid_images_rejected():
    with pytest.raises(ValidationError):
        Permutation([1, 1, 2])
    with pytest.raises(ValidationError):
        Permutation([0, 1])
    with pytest.raises(DegreeMismatch):
        Permutation.identity(3) * Permutation.identity(4)


@pytest.mark.parametrize(
    "g, expected",
    [
        (Permutation.identity(5), 1),
        (Permutation.from_cycles(2, (1, 2)), -1),
        (Permutation.from_cycles(3, (1, 2, 3)), 1),
    ],
)
def test_sign_examples(g, expected):
    assert sign(g) == expected


@pytest.mark.parametrize(
    "g, expected",
    [
        (Permutation.identity(4), (1, 1, 1, 1)),
        (Permutation.from_cycles(4, (1, 2, 3, 4)), (4,)),
        (Permutation.from_cycles(4, (1, 2), (3, 4)), (2, 2)),
    ],
)
def test_cycle_type_examples(g, expected):
    assert cycle_type(g) == expected


def _inversions(g):
    img = g.image
    return sum(1 for i in range(len(img)) for j in range(i + 1, len(img)) if img[i] > img[j])


@given(perms, st.data())
def test_sign_is_inversion_parity_and_multiplicative(g, data):
    assert sign(g) == (-1) ** _inversions(g)
    h = Permutation(data.draw(st.permutations(list(range(1, g.n + 1)))))
    assert sign(g * h) == sign(g) * sign(h)


@given(perms)
def test_inverse_and_order(g):
    e = Permutation.identity(g.n)
    assert g * g.inverse() == e and g.inverse() * g == e
    assert g ** g.order == e
    assert all(g ** k != e for k in range(1, g.order))
    assert sum(cycle_type(g)) == g.n


def test_generate_examples():
    assert generate_group([Permutation.from_cycles(3, (1, 2)), Permutation.from_cycles(3, (1, 2, 3))]).order == 6
    assert generate_group([], n=4).order == 1
    C = generate_group([Permutation.from_cycles(4, (1, 2, 3, 4))])
    assert C.order == 4 and len(C.classes) == 4


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        symmetric_group(5, cap=100)


def _brute_classes(G):
    """Classes from the full conjugation table, as a set of frozensets."""
    out = set()
    for g in G.elements:
        out.add(frozenset(x * g * x.inverse() for x in G.elements))
    return out


@pytest.mark.parametrize("m, sizes", [(3, (1, 3, 2)), (4, (1, 6, 3, 8, 6))])
def test_symmetric_classes_match_conjugation_table(m, sizes):
    G = symmetric_group(m)
    assert G.class_sizes == sizes
    assert {frozenset(c) for c in G.classes} == _brute_classes(G)
    assert G.is_symmetric()


def test_cyclic_group_abelian():
    C = cyclic_group(4)
    assert C.class_sizes == (1, 1, 1, 1)


def test_random_subgroup_classes():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(3, 5)
        gens = []
        for _ in range(rng.randint(1, 2)):
            img = list(range(1, n + 1))
            rng.shuffle(img)
            gens.append(Permutation(img))
        G = generate_group(gens, n=n)
        assert {frozenset(c) for c in G.classes} == _brute_classes(G)
        assert {frozenset(c) for c in conjugacy_classes(G)} == _brute_classes(G)
        # closure
        els = set(G.elements)
        assert all(a * b in els for a in G.elements for b in G.elements)
        assert G.elements[0] == G.identity


def test_class_index_and_membership():
    G = symmetric_group(4)
    for k, cls in enumerate(G.classes):
        assert all(G.class_index(g) == k for g in cls)
    assert Permutation.identity(4) in G
    assert trivial_group(4).is_subgroup_of(G)


def test_image_group_is_homomorphic_image():
    from equimat.matroid import edge_action

    G = symmetric_group(4)
    E = image_group(G, lambda g: edge_action(4, g))
    assert E.order == 24 and E.degree == 6


def test_from_cycles_and_json():
    g = Permutation.from_cycles(5, (1, 3, 5))
    assert g.image == (3, 2, 5, 4, 1)
    assert Permutation(g.to_json()) == g
    assert g.cycles == ((1, 3, 5),) or (1, 3, 5) in g.cycles


def test_all_of_s4_have_consistent_sign_and_type():
    for img in permutations(range(1, 5)):
        g = Permutation(img)
        ct = cycle_type(g)
        assert sign(g) == (-1) ** (4 - len(ct))
