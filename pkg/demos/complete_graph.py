"""Homology of IN(M*(K_m)) under S_m, next to ind from C_m of a primitive character.

For m <= 5 the two agree.  At m = 6 they differ by the sign character,
because the duality twist uses the sign of the permutation on the edges of
K_m while the partition-lattice identity carries the sign on the vertices.
Run with an argument to pick m (default 5; m = 6 takes a few seconds).
"""

import sys

from equimat.errors import CompleteGraphViolation
from equimat.theorems import complete_graph_report

m = int(sys.argv[1]) if len(sys.argv) > 1 else 5
try:
    r = complete_graph_report(m)
except CompleteGraphViolation as exc:
    r = exc.report
    print("mismatch:", exc)

d = r.degrees[0]
print(f"m={m}: n={r.info['n']} edges, homology in degree {d}, dimension {r.info['dimension']}")
print("classes :", r.class_labels())
for name, chi in r.sides.items():
    print(f"{name:24}", chi[d].integer_values())
print("edge twist agrees with vertex twist on ind:", r.info["vertex_twist_matches_edge_twist"])
print("homology = edge sign x vertex sign x ind:", r.info["homology_equals_corrected_prediction"])
print("irreducible constituents:", r.info["decomposition"])
