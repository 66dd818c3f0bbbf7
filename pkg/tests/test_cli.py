from __future__ import annotations

import json
import subprocess
import sys

import pytest

from orepair.cli import EXIT_INVARIANT, EXIT_OK, EXIT_PRECONDITION, EXIT_SCHEMA, run

F3 = {"p": 3, "m": 1}
F4 = {"p": 2, "m": 2}


def _run(tmp_path, capsys, command, doc, *extra):
    path = tmp_path / "in.json"
    path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    code = run([command, "-i", str(path), *extra])
    captured = capsys.readouterr()
    out = json.loads(captured.out) if code == EXIT_OK and "--format" not in extra else captured.out
    return code, out, captured.err


def test_pair_gram(tmp_path, capsys):
    f = {"q": 3, "field": F3, "terms": [{"n": 1, "coeff": 1}, {"n": 0, "coeff": 2}]}
    code, out, _ = _run(tmp_path, capsys, "pair", {"f": f})
    assert code == EXIT_OK
    assert out["gram"] == [[2]] and out["perfect"] and out["schema"] == "ore-pair/1"


def test_pair_single_value(tmp_path, capsys):
    f = {"q": 2, "field": F4, "terms": [{"n": 0, "coeff": [0, 1]}, {"n": 1, "coeff": 1}]}
    doc = {"f": f, "ambient": F4, "alpha": [0, 1], "beta": [0, 1]}
    code, out, _ = _run(tmp_path, capsys, "pair", doc)
    assert code == EXIT_OK and out["value"] == 1


def test_pair_text(tmp_path, capsys):
    f = {"q": 3, "field": F3, "terms": [{"n": 1, "coeff": 1}, {"n": 0, "coeff": 2}]}
    code, out, _ = _run(tmp_path, capsys, "pair", {"f": f}, "--format", "text")
    assert code == EXIT_OK and "a0" in out and "2" in out


def test_kernel_of_scalar(tmp_path, capsys):
    f = {"q": 3, "field": F3, "terms": [{"n": 0, "coeff": 2}]}
    code, out, _ = _run(tmp_path, capsys, "kernel", {"f": f})
    assert code == EXIT_OK and out["dim"] == 0 and out["basis"] == []


def test_compose_and_adjoint(tmp_path, capsys):
    f = {"q": 3, "field": F3, "terms": [{"n": 1, "coeff": 1}, {"n": 0, "coeff": 1}]}
    g = {"q": 3, "field": F3, "terms": [{"n": 1, "coeff": 1}, {"n": 0, "coeff": 2}]}
    code, out, _ = _run(tmp_path, capsys, "compose", {"f": f, "g": g})
    assert code == EXIT_OK
    assert sorted((t["n"], t["coeff"]) for t in out["result"]["terms"]) == [(0, [2]), (2, [1])]
    code, out, _ = _run(tmp_path, capsys, "adjoint", {"f": f})
    assert sorted(t["n"] for t in out["result"]["terms"]) == [-1, 0]


def test_newton_outputs(tmp_path, capsys):
    cloud = [
        {"e_num": 0, "e_pdenom": 0, "v_num": 2, "v_den": 1},
        {"e_num": 1, "e_pdenom": 0, "v_num": 0, "v_den": 1},
        {"e_num": 3, "e_pdenom": 0, "v_num": 1, "v_den": 1},
    ]
    svg, csv = tmp_path / "h.svg", tmp_path / "h.csv"
    code, out, _ = _run(tmp_path, capsys, "newton", {"p": 3, "cloud": cloud, "s_cut": "0"},
                        "--svg", str(svg), "--csv", str(csv))
    assert code == EXIT_OK
    assert [(s["slope"], s["length"]) for s in out["segments"]] == [(-2, 1), ("1/2", 2)]
    assert out["ell_r"] == 1 and out["total_measure"] == 3
    assert svg.read_text().startswith("<svg") and csv.read_text().count("\n") >= 3


def test_annihilator_command(tmp_path, capsys):
    doc = {
        "q": 2,
        "field": {"type": "puiseux", "base": {"p": 2, "m": 1}},
        "lambdas": [[{"num": 0, "pdenom": 0, "coeff": [1]}], [{"num": 1, "pdenom": 0, "coeff": [1]}]],
    }
    code, out, _ = _run(tmp_path, capsys, "annihilator", doc)
    assert code == EXIT_OK and out["matches_product"] and out["bounds_monotone"]


def test_drinfeld_command(tmp_path, capsys):
    doc = {"field": F4, "q": 2, "phi_t": [[0, 1], 1], "a": [0, 1]}
    code, out, _ = _run(tmp_path, capsys, "drinfeld-pair", doc)
    assert code == EXIT_OK
    assert out["gram"] == [[[1]]] and out["perfectness"]["passed"] and out["compatibility"]["passed"]


def test_exit_codes(tmp_path, capsys):
    assert _run(tmp_path, capsys, "kernel", "{not json")[0] == EXIT_SCHEMA
    assert _run(tmp_path, capsys, "kernel", {"g": 1})[0] == EXIT_SCHEMA
    bad_q = {"f": {"q": 4, "field": F3, "terms": []}}
    assert _run(tmp_path, capsys, "kernel", bad_q)[0] == EXIT_PRECONDITION
    zero = {"f": {"q": 3, "field": F3, "terms": []}}
    code, _, err = _run(tmp_path, capsys, "pair", zero)
    assert code == EXIT_PRECONDITION and "error" in err
    # tau + 1 over F_3: 1 is not a kernel point
    off_kernel = {"f": {"q": 3, "field": F3, "terms": [{"n": 1, "coeff": 1}, {"n": 0, "coeff": 1}]},
                  "ambient": F3, "alpha": 1, "beta": 0}
    assert _run(tmp_path, capsys, "pair", off_kernel)[0] == EXIT_PRECONDITION
    assert _run(tmp_path, capsys, "pair", {**off_kernel, "alpha": 0})[0] == EXIT_OK
    assert EXIT_INVARIANT not in (EXIT_OK, EXIT_SCHEMA, EXIT_PRECONDITION)


def test_module_entry_point(tmp_path):
    doc = {"f": {"q": 3, "field": F3, "terms": [{"n": 0, "coeff": 1}]}}
    proc = subprocess.run([sys.executable, "-m", "orepair.cli", "kernel"], input=json.dumps(doc),
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["dim"] == 0
