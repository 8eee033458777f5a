"""The Fano plane: its automorphism group of order 168 acting on the top homology of its flats."""

from itertools import permutations

from equimat.characters import decompose
from equimat.matroid import check_automorphism, fano
from equimat.perm_group import Permutation, generate_group
from equimat.theorems import verify_main_theorem

F = fano()
auts = [p for p in map(Permutation, permutations(range(1, 8))) if check_automorphism(F, p)]
G = generate_group(auts, n=7)
print("|Aut(F_7)| =", G.order)

r = verify_main_theorem(F, G)
print("mobius(0, 1) =", r.info["mobius"], " nbc bases:", r.info["nbc_bases"])
chi = r.sides["NS(M)"][1]
print("character on", len(G.representatives), "classes:", chi.integer_values())
print("sides agree:", r.passed)
