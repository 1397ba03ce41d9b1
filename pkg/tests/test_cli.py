import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from vermins.cli import main
from vermins.lab import GeneratorConfig, SearchReport
from vermins.network import parse_network, save_network

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_paper(capsys):
    code, out, _ = run(capsys, "solve", FIX / "paper.json")
    doc = json.loads(out)
    assert code == 0
    assert doc["winner"] == [0, 2, 5, 7, 9]
    assert doc["criterion_value"] == 5
    assert (doc["q"], doc["h"]) == (8, 2)
    assert [s["criterion"] for s in doc["survivors"]] == [8, 7, 5, 6, 7, 9]


def test_solve_table(capsys):
    code, out, _ = run(capsys, "solve", FIX / "paper.json", "--table")
    assert code == 0
    assert "W = [0 3 0 3 2 0 1 5 6 0]^T" in out
    assert "P1 = [1 1 0 0 1 0 0 1 0 1]" in out and "eliminated (P2 dominates)" in out
    assert "P7 = [1 0 0 1 0 0 1 0 1 1]" in out and "eliminated (P8 dominates)" in out
    assert "W* = Min_t [P_t . W] = 5  winner P4: 0 -> 2 -> 5 -> 7 -> 9" in out
    assert run(capsys, "solve", FIX / "paper.json", "--format", "table")[1] == out


def test_solve_two_node(capsys):
    doc = json.loads(run(capsys, "solve", FIX / "two_node.json")[1])
    assert doc["winner"] == [0, 1] and doc["criterion_value"] == 0


def test_solve_disconnected(capsys):
    code, out, err = run(capsys, "solve", FIX / "disconnected.json")
    assert code == 3 and out == "" and "no effective route" in err


def test_solve_budget(capsys):
    code, _, err = run(capsys, "solve", FIX / "paper.json", "--max-routes", "3")
    assert code == 4 and "max_routes=3" in err


@pytest.mark.parametrize(
    "content", ["{not json", '{"directed": true}', '{"directed": true, "source": 0, "sink": 0, "nodes": [], "edges": []}']
)
def test_parse_failures_exit_2(capsys, tmp_path, content):
    bad = tmp_path / "bad.json"
    bad.write_text(content)
    for cmd in ("solve", "matrix", "exact", "compare", "dot"):
        assert run(capsys, cmd, bad)[0] == 2
    assert run(capsys, "solve", tmp_path / "missing.json")[0] == 2


def test_matrix_two_node_and_edgeless(capsys):
    assert run(capsys, "matrix", FIX / "two_node.json")[1] == "1 1\n1 1\n"
    assert run(capsys, "matrix", FIX / "two_node.json", "--directed")[1] == "1 1\n0 1\n"
    assert run(capsys, "matrix", FIX / "two_node.json", "--undirected-view")[1] == "1 1\n1 1\n"
    assert run(capsys, "matrix", FIX / "edgeless3.json")[1] == "1 0 0\n0 1 0\n0 0 1\n"
    doc = json.loads(run(capsys, "matrix", FIX / "two_node.json", "--format", "json", "--undirected")[1])
    assert doc == {"matrix": [[1, 1], [1, 1]]}


def test_exact_triangle(capsys):
    doc = json.loads(run(capsys, "exact", FIX / "triangle.json")[1])
    assert doc == {"route": [0, 2], "length": 2.0, "method": "dijkstra"}
    doc = json.loads(run(capsys, "exact", FIX / "triangle.json", "--brute-force")[1])
    assert doc["method"] == "brute_force" and doc["length"] == 2.0


def test_exact_explicit_weights(capsys):
    code, _, err = run(capsys, "exact", FIX / "paper.json")
    assert code == 5 and "oracle requires coordinates" in err
    assert run(capsys, "compare", FIX / "paper.json")[0] == 5


def test_exact_methods_agree_on_random(capsys, tmp_path):
    from vermins.lab import random_geometric_network

    path = tmp_path / "rand.json"
    save_network(random_geometric_network(GeneratorConfig(9, 3, 0.9, False, 11)), path)
    a = json.loads(run(capsys, "exact", path)[1])["length"]
    b = json.loads(run(capsys, "exact", path, "--brute-force")[1])["length"]
    assert a == b


def test_compare_exit_codes(capsys):
    code, out, _ = run(capsys, "compare", FIX / "triangle.json")
    assert code == 0 and json.loads(out)["agree"] is True
    assert run(capsys, "compare", FIX / "two_node.json")[0] == 0
    code, out, _ = run(capsys, "compare", FIX / "backtracking.json")
    doc = json.loads(out)
    assert code == 10 and doc["agree"] is False
    assert doc["gap"] == pytest.approx(22 - 2 * math.sqrt(26), abs=1e-9)


def test_search_trivial(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "search", "--n", 2, "--trials", 1, "--radius", 2.0, "--out", out_file)
    assert code == 0
    assert out.startswith("trials=1 counterexamples=0 max_gap=")
    report = SearchReport.from_dict(json.loads(out_file.read_text()))
    assert report.trials == 1


def test_search_sweep_and_replay(capsys, tmp_path):
    out_file = tmp_path / "sweep.json"
    code, out, _ = run(capsys, "search", "--trials", 150, "--seed", 0, "--out", out_file)
    doc = json.loads(out_file.read_text())
    assert code == 10
    assert doc["counterexamples"] == len(doc["seeds_of_failures"]) == len(doc["failures"]) > 0
    assert doc["compared"] + len(doc["skipped"]) == doc["trials"] == 150
    assert f"counterexamples={doc['counterexamples']}" in out
    seed = doc["seeds_of_failures"][0]
    code, _, _ = run(capsys, "search", "--trials", 1, "--seed", seed)
    assert code == 10


@pytest.mark.parametrize(
    "flags", [["--n", "1"], ["--dim", "0"], ["--radius", "-1"], ["--trials", "0"], ["--seed", "-4"], ["--bogus"]]
)
def test_search_invalid_flags(capsys, flags):
    assert main(["search", *flags]) == 2


def test_dot_paper(capsys):
    code, out, _ = run(capsys, "dot", FIX / "paper.json")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "digraph network {"
    assert sum(1 for l in lines if "label=" in l) == 10
    assert sum(1 for l in lines if " -> " in l) == 16


def test_dot_route_highlight(capsys):
    out = run(capsys, "dot", FIX / "paper.json", "--route", "0,2,5,7,9")[1]
    highlighted = [l.strip() for l in out.splitlines() if " -> " in l and "penwidth" in l]
    assert [l.split(" [")[0] for l in highlighted] == ["0 -> 2", "2 -> 5", "5 -> 7", "7 -> 9"]


def test_dot_two_node_positions(capsys):
    out = run(capsys, "dot", FIX / "two_node.json")[1]
    assert 'pos="0,0!"' in out and 'pos="10,0!"' in out
    assert out.startswith("graph network {")
    assert sum(1 for l in out.splitlines() if " -- " in l) == 1


def test_dot_invalid_route(capsys):
    assert run(capsys, "dot", FIX / "paper.json", "--route", "0,4,9")[0] == 3


def test_direction_override(capsys):
    # backtracking arms run both ways once undirected, so more routes appear
    doc = json.loads(run(capsys, "solve", FIX / "backtracking.json", "--undirected")[1])
    assert doc["q"] >= 2


def test_outputs_deterministic(capsys):
    for argv in (["solve", FIX / "paper.json"], ["compare", FIX / "backtracking.json"], ["dot", FIX / "paper.json"]):
        assert run(capsys, *argv) == run(capsys, *argv)


def test_solve_output_round_trips_network(capsys):
    doc = json.loads(run(capsys, "solve", FIX / "paper.json")[1])
    net = parse_network((FIX / "paper.json").read_text())
    assert len(doc["winner_incidence"]) == net.n


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "vermins", "compare", str(FIX / "backtracking.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 10
    assert json.loads(proc.stdout)["agree"] is False
