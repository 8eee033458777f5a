"""Equivariant Alexander duality on a small complex that is not a matroid complex."""

from equimat.perm_group import Permutation, generate_group
from equimat.simplicial import SimplicialComplex, alexander_dual
from equimat.homology import betti
from equimat.theorems import verify_alexander_duality

# a hexagon plus a disjoint triangle boundary; the rotation by two steps preserves it
hexagon = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]
triangle = [(7, 8), (8, 9), (7, 9)]
K = SimplicialComplex.from_facets(9, hexagon + triangle)
g = Permutation.from_cycles(9, (1, 3, 5), (2, 4, 6), (7, 8, 9))
G = generate_group([g], n=9)

print("betti K :", betti(K))
print("betti K*:", betti(alexander_dual(K)))
r = verify_alexander_duality(K, G)
for deg in r.degrees:
    a, b = (side[deg].integer_values() for side in r.sides.values())
    if any(a):
        print(f"degree {deg}: {a} == {b}")
print("verdict:", "pass" if r.passed else "fail")
