"""Exact group characters on the homology of matroid complexes."""

__version__ = "0.1.0"

from .characters import (
    Character,
    character_table,
    cyclic_character,
    decompose,
    induced_character,
    inner_product,
    irreducible_character,
    mn_character,
    partitions,
    restrict,
    sign_character,
    trivial_character,
)
from .cyclotomic import CyclotomicNumber
from .errors import *  # noqa: F401,F403
from .exact_linalg import EchelonBasis, RationalMatrix, nullity, nullspace_basis, rank, solve_in_span
from .homology import (
    GradedCharacter,
    betti,
    graded_character,
    homology_basis,
    homology_character_exact,
    homology_character_lefschetz,
    lefschetz_number,
    twist_by_sign,
)
from .lattice import (
    FiniteLattice,
    boolean_lattice,
    crosscut_complex,
    flats_lattice,
    ground_action,
    is_crosscut,
    mobius,
    partition_lattice,
    proper_part_order_complex,
)
from .matroid import (
    Matroid,
    complete_graph,
    dual,
    edge_action,
    fano,
    from_graph,
    from_vectors,
    independence_complex,
    nbc_bases,
    non_spanning_complex,
    simplify,
    uniform,
)
from .perm_group import FiniteGroup, Permutation, cyclic_group, generate_group, symmetric_group, trivial_group
from .simplicial import SimplicialComplex, alexander_dual, barycentric_subdivision, boundary_matrix
from .theorems import (
    Report,
    complete_graph_report,
    verify_alexander_duality,
    verify_arrangement_theorem,
    verify_crosscut_theorem,
    verify_main_theorem,
)
