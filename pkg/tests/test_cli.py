import json
import random
import subprocess
import sys

import pytest

from equimat.cli import main

from helpers import symmetric_complex, random_perm


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def _run(capsys, *argv):
    code = main([*argv, "--json"])
    out = json.loads(capsys.readouterr().out)
    return code, out


def test_homology_points(tmp_path, capsys):
    f = _write(tmp_path, "pts.json", {"n": 3, "facets": [[1], [2], [3]], "void": False})
    code, out = _run(capsys, "homology", "--input", f, "--group", "symmetric:3")
    assert code == 0
    vals = out["characters"]["0"]
    assert {k: v["coeffs"][0] for k, v in vals.items()} == {"1,1,1": "2/1", "2,1": "0/1", "3": "-1/1"}
    assert len(out["input_sha256"]) == 64 and out["version"]


def test_homology_matroid_trivial_group(tmp_path, capsys):
    f = _write(tmp_path, "u23.json", {"n": 3, "bases": [[1, 2], [1, 3], [2, 3]]})
    code, out = _run(capsys, "homology", "--input", f, "--complex", "IN")
    assert code == 0 and out["betti"] == {"-1": 0, "0": 0, "1": 1}


def test_homology_both_methods(tmp_path, capsys):
    f = _write(tmp_path, "k4.json", {"vertices": 4, "edges": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]})
    code, out = _run(capsys, "homology", "--input", f, "--group", "edge-action:4", "--method", "both", "--degree", "2")
    assert code == 0
    assert {k: v["coeffs"][0] for k, v in out["characters"]["2"].items()} == {
        "1,1,1,1": "6/1", "2,1,1": "0/1", "2,2": "-2/1", "3,1": "0/1", "4": "0/1"
    }


def test_verify_main_and_crosscut(tmp_path, capsys):
    f = _write(tmp_path, "k4.json", {"vertices": 4, "edges": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]})
    assert _run(capsys, "verify", "main", "--input", f, "--group", "edge-action:4")[0] == 0
    code, out = _run(capsys, "verify", "crosscut", "--input", "boolean:3", "--group", "symmetric:3")
    assert code == 0 and out["verdict"] == "pass"


def test_verify_duality_random_eight_vertices(tmp_path, capsys):
    rng = random.Random(41)
    g = random_perm(rng, 8)
    while g.order != 2:
        g = random_perm(rng, 8)
    K, _ = symmetric_complex(rng, 8, g, k=3, max_size=4)
    f = _write(tmp_path, "k.json", K.to_json())
    gens = _write(tmp_path, "gens.json", [list(g.image)])
    code, out = _run(capsys, "verify", "duality", "--input", f, "--group", gens)
    assert code == 0 and out["group_order"] == 2


def test_crosscut_on_lattice_file_uses_file_positions(tmp_path, capsys):
    # B_2 listed top first; generator swaps the two atoms at file positions 2 and 3
    obj = {"elements": ["top", "a", "b", "bottom"], "leq_pairs": [[3, 1], [3, 2], [1, 0], [2, 0]]}
    f = _write(tmp_path, "l.json", obj)
    gens = _write(tmp_path, "g.json", [[1, 3, 2, 4]])
    code, out = _run(capsys, "verify", "crosscut", "--input", f, "--group", gens)
    assert code == 0 and out["group_order"] == 2


def test_arrangement(tmp_path, capsys):
    assert _run(capsys, "verify", "arrangement", "--input", "braid:4", "--group", "edge-action:4")[0] == 0
    f = _write(tmp_path, "v.json", {"vectors": [[1, 0], [0, 1], [1, 1], [1, -1]]})
    code, out = _run(capsys, "verify", "arrangement", "--input", f, "--group", "symmetric:4")
    assert code == 0 and out["info"]["dimension"] == 3


@pytest.mark.parametrize("m", [3, 4, 5])
def test_complete_graph(capsys, m):
    code, out = _run(capsys, "complete-graph", str(m))
    assert code == 0 and out["info"]["dimension"] == [2, 6, 24][m - 3]


@pytest.mark.parametrize("values, expected", [
    ({"1,1,1": 6, "2,1": 0, "3": 0}, {"3": 1, "2,1": 2, "1,1,1": 1}),
    ({"1,1,1": 2, "2,1": 0, "3": -1}, {"2,1": 1}),
    ({"1,1,1,1": 1, "2,1,1": -1, "2,2": 1, "3,1": 1, "4": -1}, {"1,1,1,1": 1}),
])
def test_decompose(tmp_path, capsys, values, expected):
    f = _write(tmp_path, "c.json", {"values": values})
    code, out = _run(capsys, "decompose", "--input", f)
    assert code == 0 and out["multiplicities"] == expected


def test_exit_codes(tmp_path, capsys):
    assert _run(capsys, "homology", "--input", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert _run(capsys, "homology", "--input", str(bad))[0] == 2
    f = _write(tmp_path, "pts.json", {"n": 3, "facets": [[1, 2], [3]], "void": False})
    assert _run(capsys, "homology", "--input", f, "--group", "symmetric:3")[0] == 3
    c = _write(tmp_path, "c.json", {"values": {"1,1,1": 2, "2,1": 1, "3": -1}})
    assert _run(capsys, "decompose", "--input", c)[0] == 3
    full = _write(tmp_path, "full.json", {"n": 2, "facets": [[1, 2]], "void": False})
    assert _run(capsys, "verify", "duality", "--input", full)[0] == 3
    assert _run(capsys, "homology", "--input", "boolean:5", "--group", "symmetric:5", "--max-group-order", "10")[0] == 3


def test_output_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        main(["verify", "crosscut", "--input", "partition:4", "--group", "symmetric:4", "--output", str(p)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["verdict"] == "pass"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "equimat", "complete-graph", "3"], capture_output=True, text=True)
    assert r.returncode == 0 and "pass" in r.stdout
