"""JSON readers for the input formats and the canonical report writer."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

from .errors import EquimatError, ValidationError
from .exact_linalg import RationalMatrix
from .lattice import FiniteLattice
from .matroid import Matroid, complete_graph_edges, edge_action, from_graph
from .perm_group import (
    DEFAULT_ORDER_CAP,
    Permutation,
    generate_group,
    symmetric_group,
    trivial_group,
)
from .simplicial import SimplicialComplex


class ParseError(EquimatError):
    """Malformed input: not JSON, or not in any of the accepted shapes."""


def read_json(path) -> tuple:
    """``(object, sha256 hex digest of the raw bytes)``."""
    raw = Path(path).read_bytes()
    try:
        return json.loads(raw), hashlib.sha256(raw).hexdigest()
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _require(obj, keys, what):
    if not isinstance(obj, dict) or any(k not in obj for k in keys):
        raise ParseError(f"{what} needs keys {keys}")


def parse_complex(obj) -> SimplicialComplex:
    _require(obj, ("n", "facets"), "complex")
    return SimplicialComplex.from_json(obj)


def parse_matroid(obj) -> Matroid:
    """Matroid from ``{"n", "bases"}`` or a graph ``{"vertices", "edges"}``."""
    if isinstance(obj, dict) and "bases" in obj:
        _require(obj, ("n", "bases"), "matroid")
        return Matroid.from_json(obj)
    if isinstance(obj, dict) and "edges" in obj:
        _require(obj, ("vertices", "edges"), "graph")
        return from_graph(int(obj["vertices"]), [tuple(e) for e in obj["edges"]])
    raise ParseError("expected a matroid {n, bases} or a graph {vertices, edges}")


def parse_lattice(obj) -> FiniteLattice:
    _require(obj, ("elements", "leq_pairs"), "lattice")
    return FiniteLattice.from_json(obj)


def parse_vectors(obj) -> RationalMatrix:
    """Arrangement normals as ``{"vectors": [[p/q, ...], ...]}``, one column per hyperplane."""
    _require(obj, ("vectors",), "arrangement")
    cols = [[Fraction(x) for x in v] for v in obj["vectors"]]
    if not cols or len({len(c) for c in cols}) != 1:
        raise ParseError("vectors must be a nonempty list of equal-length lists")
    return RationalMatrix.from_columns(cols, len(cols[0]))


def parse_permutations(obj) -> list:
    if not isinstance(obj, list) or not all(isinstance(p, list) for p in obj):
        raise ParseError("generators must be a list of image arrays")
    return [Permutation(p) for p in obj]


def parse_group(spec: str, n: int | None, cap: int = DEFAULT_ORDER_CAP):
    """``(group, action)`` from a group spec.

    ``symmetric:m``, ``cyclic:m``, ``trivial`` (needs ``n``),
    ``edge-action:m`` (S_m acting on the edges of K_m through its vertices),
    or a path to a JSON list of generators.
    """
    if spec == "trivial":
        if n is None:
            raise ValidationError("trivial group needs a ground set size")
        return trivial_group(n), None
    kind, _, arg = spec.partition(":")
    if kind in ("symmetric", "edge-action", "cyclic") and arg:
        try:
            m = int(arg)
        except ValueError as exc:
            raise ParseError(f"bad group spec {spec!r}") from exc
        if kind == "symmetric":
            return symmetric_group(m, cap=cap), None
        if kind == "cyclic":
            c = Permutation.from_cycles(m, tuple(range(1, m + 1)))
            return generate_group([c], cap=cap, n=m), None
        return symmetric_group(m, cap=cap), lambda g: edge_action(m, g)
    obj, _ = read_json(spec)
    gens = parse_permutations(obj)
    degree = gens[0].n if gens else n
    if degree is None:
        raise ValidationError("empty generator list and unknown degree")
    return generate_group(gens, cap=cap, n=degree), None


def edge_labels(m: int) -> dict:
    return {k: list(e) for k, e in enumerate(complete_graph_edges(m), start=1)}


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": "), default=_default) + "\n"


def _default(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")
