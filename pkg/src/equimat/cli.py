"""Command line: ``equimat {homology, verify, complete-graph, decompose}``.

Exit codes: 0 pass, 2 parse error, 3 validation error, 4 theorem violation.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from fractions import Fraction

from . import __version__
from .characters import Character, decompose, dimension_of
from .cyclotomic import CyclotomicNumber
from .errors import EquimatError, TheoremViolation, ValidationError
from .homology import betti, graded_character
from .io import (
    ParseError,
    dumps,
    parse_complex,
    parse_group,
    parse_lattice,
    parse_matroid,
    parse_vectors,
    read_json,
)
from .lattice import (
    boolean_lattice,
    flats_lattice,
    ground_action,
    order_complex_action,
    partition_lattice,
    proper_part_order_complex,
)
from .matroid import braid_vectors, dual, independence_complex, non_spanning_complex
from .perm_group import DEFAULT_ORDER_CAP, Permutation, cycle_type, symmetric_group
from .theorems import (
    complete_graph_report,
    verify_alexander_duality,
    verify_arrangement_theorem,
    verify_crosscut_theorem,
    verify_main_theorem,
)

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_VIOLATION = 0, 2, 3, 4


def _load(spec: str) -> tuple:
    """``(kind, object, hash)`` for a file or a builtin like ``boolean:3``."""
    kind, _, arg = spec.partition(":")
    if kind in ("boolean", "partition", "braid") and arg.isdigit():
        return kind, int(arg), hashlib.sha256(spec.encode()).hexdigest()
    try:
        obj, digest = read_json(spec)
    except OSError as exc:
        raise ParseError(f"cannot read {spec}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("input must be a JSON object")
    for key, kind in (("facets", "complex"), ("bases", "matroid"), ("edges", "matroid"),
                      ("elements", "lattice"), ("vectors", "vectors"), ("values", "character")):
        if key in obj:
            return kind, obj, digest
    raise ParseError("unrecognised input format")


def _lattice_source(kind, obj):
    """``(lattice, ground size, how the group acts)``."""
    if kind == "boolean":
        return boolean_lattice(obj), obj, "ground"
    if kind == "partition":
        return partition_lattice(obj), obj, "ground"
    if kind == "matroid":
        M = parse_matroid(obj)
        return flats_lattice(M)[0], M.n, "ground"
    if kind == "lattice":
        L = parse_lattice(obj)
        return L, len(L), ("positions", obj["elements"])
    raise ParseError(f"a lattice is needed, got {kind}")


def _lattice_action(L, how, action):
    act = (lambda g: g) if action is None else action
    if how == "ground":
        return lambda g: ground_action(L, act(g))
    # generators permute the element positions of the input file
    labels = [tuple(e) if isinstance(e, list) else e for e in how[1]]
    to_canon = [L.index(lab) for lab in labels]
    from_canon = {c: p for p, c in enumerate(to_canon)}

    def lat(g):
        p = act(g)
        return Permutation([to_canon[p(from_canon[k] + 1) - 1] + 1 for k in range(len(L))])

    return lat


def _complex_for(args, kind, obj):
    """``(complex, ground size, vertex action adapter)``."""
    if kind == "complex":
        K = parse_complex(obj)
        return K, K.n, None
    if kind == "matroid":
        M = parse_matroid(obj)
        which = args.complex
        table = {
            "IN": lambda: independence_complex(M),
            "IN-dual": lambda: independence_complex(dual(M)),
            "NS": lambda: non_spanning_complex(M),
            "NS-dual": lambda: non_spanning_complex(dual(M)),
        }
        if which == "flats":
            L = flats_lattice(M)[0]
            return proper_part_order_complex(L), M.n, ("lattice", L, "ground")
        return table[which](), M.n, None
    if kind in ("lattice", "boolean", "partition"):
        L, size, how = _lattice_source(kind, obj)
        return proper_part_order_complex(L), size, ("lattice", L, how)
    raise ParseError(f"no complex can be built from a {kind} input")


def cmd_homology(args) -> dict:
    kind, obj, digest = _load(args.input)
    K, size, adapter = _complex_for(args, kind, obj)
    G, action = parse_group(args.group, size, args.max_group_order)
    if adapter is not None:
        lat = _lattice_action(adapter[1], adapter[2], action)
        action = lambda g: order_complex_action(adapter[1], lat(g))
    chi = graded_character(K, G, action, method=args.method)
    bettis = betti(K)
    degrees = chi.degrees() if args.degree == "all" else [int(args.degree)]
    return {
        "command": "homology",
        "input_sha256": digest,
        "f_vector": list(K.f_vector),
        "betti": {str(i - 1): b for i, b in enumerate(bettis)},
        "characters": {str(d): chi[d].to_json() for d in degrees},
        "group_order": G.order,
        "verdict": "pass",
    }


def cmd_verify(args) -> dict:
    kind, obj, digest = _load(args.input)
    target = args.target
    if target == "duality":
        K = parse_complex(obj) if kind == "complex" else None
        if K is None:
            raise ParseError("duality needs a complex input")
        G, action = parse_group(args.group, K.n, args.max_group_order)
        report = verify_alexander_duality(K, G, action, method=args.method)
    elif target == "crosscut":
        L, size, how = _lattice_source(kind, obj)
        G, action = parse_group(args.group, size if how == "ground" else len(L), args.max_group_order)
        if args.crosscut == "atoms":
            C = L.atoms
        elif args.crosscut == "coatoms":
            C = [k for k in L.proper_elements() if L._covers(k, L.top)]
        else:
            cobj, _ = read_json(args.crosscut)
            C = [L.index(tuple(e) if isinstance(e, list) else e) for e in cobj]
        report = verify_crosscut_theorem(L, C, G, _lattice_action(L, how, action), method=args.method)
    elif target == "main":
        M = parse_matroid(obj) if kind == "matroid" else None
        if M is None:
            raise ParseError("main needs a matroid or graph input")
        G, action = parse_group(args.group, M.n, args.max_group_order)
        report = verify_main_theorem(M, G, action, method=args.method)
    else:
        A = braid_vectors(obj) if kind == "braid" else parse_vectors(obj) if kind == "vectors" else None
        if A is None:
            raise ParseError("arrangement needs {vectors} or braid:m")
        G, action = parse_group(args.group, A.shape[1], args.max_group_order)
        report = verify_arrangement_theorem(A, G, action, method=args.method)
    out = report.to_json()
    out.update(command=f"verify {target}", input_sha256=digest)
    return out


def cmd_complete_graph(args) -> dict:
    if not 3 <= args.m <= args.max_m:
        raise ValidationError(f"m must lie in 3..{args.max_m}")
    report = complete_graph_report(args.m, method=args.method)
    out = report.to_json()
    out.update(command="complete-graph", input_sha256=hashlib.sha256(str(args.m).encode()).hexdigest())
    return out


def _value(v):
    if isinstance(v, dict):
        return CyclotomicNumber.from_json(v)
    if isinstance(v, (int, str)):
        return Fraction(v)
    raise ParseError(f"bad character value {v!r}")


def cmd_decompose(args) -> dict:
    kind, obj, digest = _load(args.input)
    if kind != "character":
        raise ParseError("decompose needs {values: {cycle type: value}}")
    values = obj["values"]
    try:
        table = {tuple(int(x) for x in str(k).split(",")): _value(v) for k, v in values.items()}
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    m = args.m or obj.get("m") or sum(next(iter(table)))
    G = symmetric_group(int(m), cap=args.max_group_order)
    missing = {cycle_type(r) for r in G.representatives} - set(table)
    if missing or len(table) != len(G.classes):
        raise ValidationError(f"values must cover exactly the cycle types of S_{m}")
    chi = Character(G, [table[cycle_type(r)] for r in G.representatives])
    mult = decompose(chi)
    return {
        "command": "decompose",
        "input_sha256": digest,
        "m": int(m),
        "multiplicities": {",".join(map(str, lam)): k for lam, k in mult.items()},
        "dimension": dimension_of(mult),
        "verdict": "pass",
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--method", choices=("lefschetz", "exact", "both", "auto"), default=None)
    common.add_argument("--output", help="also write the JSON report here")
    common.add_argument("--json", action="store_true", help="print the JSON report instead of a summary")
    common.add_argument("--max-group-order", type=int, default=DEFAULT_ORDER_CAP)

    p = argparse.ArgumentParser(prog="equimat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", parents=[common], help="graded Betti numbers and characters")
    h.add_argument("--input", required=True)
    h.add_argument("--group", default="trivial")
    h.add_argument("--complex", choices=("IN", "IN-dual", "NS", "NS-dual", "flats"), default="IN-dual",
                   help="complex built from a matroid input")
    h.add_argument("--degree", default="all")
    h.set_defaults(func=cmd_homology, default_method="exact")

    v = sub.add_parser("verify", parents=[common], help="check one isomorphism theorem")
    v.add_argument("target", choices=("duality", "crosscut", "main", "arrangement"))
    v.add_argument("--input", required=True)
    v.add_argument("--group", default="trivial")
    v.add_argument("--crosscut", default="atoms", help="atoms, coatoms, or a JSON list of element labels")
    v.set_defaults(func=cmd_verify, default_method=None)

    c = sub.add_parser("complete-graph", parents=[common], help="S_m on IN(M*(K_m)) against ind from C_m")
    c.add_argument("m", type=int)
    c.add_argument("--max-m", type=int, default=7)
    c.set_defaults(func=cmd_complete_graph, default_method="lefschetz")

    d = sub.add_parser("decompose", parents=[common], help="irreducible multiplicities of an S_m character")
    d.add_argument("--input", required=True)
    d.add_argument("m", type=int, nargs="?")
    d.set_defaults(func=cmd_decompose, default_method="exact")
    return p


def _summary(out: dict) -> str:
    lines = [f"{out.get('command')}: {out.get('verdict')}"]
    if "betti" in out:
        lines.append("betti " + " ".join(f"{d}:{b}" for d, b in out["betti"].items()))
    for d, chi in out.get("characters", {}).items():
        vals = ", ".join(f"{k}={CyclotomicNumber.from_json(v)!r}" for k, v in chi.items())
        lines.append(f"degree {d}: {vals}")
    if "multiplicities" in out:
        lines.append(f"dimension {out['dimension']}: {out['multiplicities']}")
    if "mismatch" in out and out["mismatch"]:
        lines.append(f"first mismatch at {out['mismatch']}")
    if "error" in out:
        lines.append(out["error"])
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.method is None:
        args.method = args.default_method
        if args.method is None:
            args.method = "exact" if args.target in ("duality", "crosscut") else "lefschetz"
    code = EXIT_OK
    try:
        out = args.func(args)
    except ParseError as exc:
        out, code = {"verdict": "error", "error": f"parse error: {exc}"}, EXIT_PARSE
    except TheoremViolation as exc:
        out = exc.report.to_json() if exc.report is not None else {}
        out.update(verdict="fail", error=str(exc))
        code = EXIT_VIOLATION
    except (ValidationError, EquimatError) as exc:
        out, code = {"verdict": "error", "error": f"{type(exc).__name__}: {exc}"}, EXIT_VALIDATION
    out.setdefault("command", args.command)
    out["version"] = __version__
    text = dumps(out)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    sys.stdout.write(text if args.json else _summary(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
