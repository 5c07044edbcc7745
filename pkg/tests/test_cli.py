from __future__ import annotations

import json
import subprocess
import sys

import pytest

from borelorbits import fixtures
from borelorbits.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,count",
    [(("--family", "A", "--n", "4", "--r", "2"), 12), (("--family", "C", "--n", "2", "--r", "2"), 8),
     (("--family", "min", "--type", "G2"), 6), (("--family", "F4O2",), 6), (("--family", "BD3", "--n", "5"), 8)],
)
def test_enumerate_counts(capsys, argv, count):
    code, out, err = run(capsys, "enumerate", *argv)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == len(data["orbits"]) == count
    assert f"{count} orbits" in err


def test_enumerate_type_a_has_matrices_and_link_patterns(capsys):
    _, out, _ = run(capsys, "enumerate", "--family", "A", "--n", "4", "--r", "2")
    orbit = json.loads(out)["orbits"][0]
    assert len(orbit["representative"]) == 4
    assert len(orbit["link_pattern"]) == 2


@pytest.mark.parametrize(
    "argv",
    [("enumerate", "--family", "A", "--n", "3", "--r", "2"), ("enumerate", "--family", "min"),
     ("enumerate",), ("graph", "--family", "BD2", "--n", "7", "--s", "2"), ("bogus",),
     ("verify", "--only", "nope"), ("classify", "--type", "Q3", "--parabolic", "1")],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_graph_weak_dot_c22(capsys):
    code, out, _ = run(capsys, "graph", "--family", "C", "--n", "2", "--r", "2", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("black:invis:black") == 2


def test_graph_closure_json_a42(capsys):
    _, out, _ = run(capsys, "graph", "--family", "A", "--n", "4", "--r", "2", "--kind", "closure")
    data = json.loads(out)
    assert data["exact"] is True
    assert len(data["nodes"]) == 12
    assert len(data["leq"]) == 12 and all(len(row) == 12 for row in data["leq"])
    assert all(data["leq"][i][i] == 1 for i in range(12))


def test_graph_min_f4_dot(capsys):
    _, out, _ = run(capsys, "graph", "--family", "min", "--type", "F4", "--format", "dot")
    assert out.count("\\ndim ") == 24


def test_closure_for_orthogonal_family_prints_banner(capsys):
    code, out, err = run(capsys, "graph", "--family", "BD3", "--n", "5", "--kind", "closure")
    assert code == 0
    assert "weak-order lower bound only" in err
    assert json.loads(out)["exact"] is False


def test_enumerate_output_feeds_graph(capsys, tmp_path):
    path = tmp_path / "c22.json"
    run(capsys, "enumerate", "--family", "C", "--n", "2", "--r", "2", "--out", str(path))
    _, direct, _ = run(capsys, "graph", "--family", "C", "--n", "2", "--r", "2")
    _, via_file, _ = run(capsys, "graph", "--from", str(path))
    assert direct == via_file
    gpath = tmp_path / "graph.json"
    gpath.write_text(direct)
    _, again, _ = run(capsys, "graph", "--from", str(gpath), "--format", "dot")
    assert again.count("black:invis:black") == 2


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "graph", "--family", "C", "--n", "3", "--r", "2", "--format", "dot")[1] for _ in range(2)}
    assert len(outs) == 1


def test_check_normality(capsys):
    _, out, _ = run(capsys, "check-normality", "--family", "C", "--n", "2", "--r", "2")
    certs = json.loads(out)["certificates"]
    assert [c["nonnormal"] for c in certs] == ["(c1c2, 1)", "(c2c1c2, 1)"]
    _, out, err = run(capsys, "check-normality", "--family", "A", "--n", "4", "--r", "2")
    assert json.loads(out)["certificates"] == []
    assert "no obstruction found (not a normality proof)" in err + out


def test_verify_all_and_only(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert out.count("PASS") == len(fixtures.FIXTURES)
    code, out, _ = run(capsys, "verify", "--only", "toric")
    assert code == 0 and out.splitlines()[0].startswith("PASS toric")
    assert "1/1 fixtures passed" in out


def test_verify_fault_injection(capsys, monkeypatch):
    broken = fixtures.F4_LONG_POSITIVE[:-1] + ((0, 0, 1, 2),)
    monkeypatch.setattr(fixtures, "F4_LONG_POSITIVE", broken)
    code, out, err = run(capsys, "verify")
    assert code == 1
    assert "FAIL f4-roots" in out
    assert "f4-roots" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--type", "E7", "--parabolic", "7")
    assert code == 0 and json.loads(out)["case"] == 6
    code, out, _ = run(capsys, "classify", "--type", "E6", "--parabolic", "6")
    assert code == 1 and json.loads(out)["case"] is None
    code, out, _ = run(capsys, "classify", "--all")
    assert [r["case"] for r in json.loads(out)] == [1, 2, 3, 4, 5, 6]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "borelorbits", "verify", "--only", "g2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("PASS g2")
