import subprocess
import sys

import pytest

from tolltransit.catalog import catalog
from tolltransit.cli import main
from tolltransit.fixtures import fixture
from tolltransit.graphs import from_edge_list, from_graph6, to_edge_list, to_graph6
from tolltransit.transit import format_transit


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def _doc(out):
    lines = out.strip().splitlines()
    assert lines[0] == "v=1"
    return dict(line.split("=", 1) for line in lines)


def test_interval(write, capsys):
    g = write("c4.txt", to_edge_list(catalog("C4")))
    assert main(["interval", "--graph", g, "0", "2", "--verify", "--machine"]) == 0
    doc = _doc(capsys.readouterr().out)
    assert doc["members"] == "0,1,2,3" and doc["verified"] == "true" and doc["status"] == "holds"
    assert main(["interval", "--graph", g, "0", "0", "--machine"]) == 0
    assert _doc(capsys.readouterr().out)["members"] == "0"
    assert main(["interval", "--graph", g, "0", "1", "--machine"]) == 0
    assert _doc(capsys.readouterr().out)["members"] == "0,1"


def test_interval_graph6(write, capsys):
    g = write("k4.g6", "C~\n")
    assert main(["interval", "--graph", g, "--format", "graph6", "0", "3"]) == 0
    assert "T(0,3) = [0, 3]" in capsys.readouterr().out


def test_interval_input_errors(write, capsys):
    g = write("bad.txt", "3 2\n0 1\n")
    assert main(["interval", "--graph", g, "0", "2"]) == 2
    assert "line 1" in capsys.readouterr().err
    g = write("c4.txt", to_edge_list(catalog("C4")))
    assert main(["interval", "--graph", g, "0", "9"]) == 2
    assert main(["interval", "--graph", write("dis.txt", "2 0\n"), "0", "1"]) == 2
    assert main(["interval", "--graph", "/nonexistent/file", "0", "1"]) == 2
    assert main(["interval", "0", "1"]) == 2


def test_axioms_graph(write, capsys):
    g = write("c4.txt", to_edge_list(catalog("C4")))
    assert main(["axioms", "--graph", g, "--axiom", "JC"]) == 1
    assert "JC: violated" in capsys.readouterr().out
    t = write("tree.txt", to_edge_list(catalog("path:4")))
    assert main(["axioms", "--graph", t, "--axiom", "JC", "--axiom", "tr", "--machine"]) == 0
    doc = _doc(capsys.readouterr().out)
    assert doc["JC"] == "satisfied" and doc["tr"] == "satisfied"


def test_axioms_transit_file(write, capsys):
    r, _, _ = fixture(1)
    t = write("ex1.txt", format_transit(r))
    assert main(["axioms", "--transit", t, "--axiom", "b1p", "--machine"]) == 1
    assert _doc(capsys.readouterr().out)["b1p"].startswith("violated:")


def test_axioms_input_errors(write, capsys):
    g = write("c4.txt", to_edge_list(catalog("C4")))
    assert main(["axioms", "--graph", g, "--transit", g]) == 2
    assert main(["axioms"]) == 2
    bad = write("bad.txt", "3\n0 0 : 0 1\n")
    assert main(["axioms", "--transit", bad]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["axioms", "--graph", g, "--axiom", "ba"])
    assert exc.value.code == 2


def test_classify(write, capsys):
    h = write("house.txt", to_edge_list(catalog("house")))
    assert main(["classify", "--graph", h, "--machine"]) == 0
    doc = _doc(capsys.readouterr().out)
    assert doc["distance-hereditary"].startswith("false:pattern house")
    k4 = write("k4.txt", to_edge_list(catalog("complete:4")))
    assert main(["classify", "--graph", k4, "--machine"]) == 0
    doc = _doc(capsys.readouterr().out)
    assert doc["chordal"] == "true" and doc["Ptolemaic"] == "true"
    c6 = write("c6.txt", to_edge_list(catalog("C6")))
    main(["classify", "--graph", c6])
    assert "AT-free: no" in capsys.readouterr().out


def test_theorem(capsys):
    assert main(["theorem", "--id", "thm-jc-chordal", "--max-n", "6", "--machine"]) == 0
    doc = _doc(capsys.readouterr().out)
    assert doc["disagreements"] == "0" and doc["graphs"] == "143"
    assert main(["theorem", "--id", "char-chordal", "--trials", "300", "--seed", "1", "--machine"]) == 0
    assert _doc(capsys.readouterr().out)["falsifications"] == "0"
    assert main(["theorem", "--id", "unknown"]) == 2


def test_theorem_jobs_same_output(capsys):
    main(["theorem", "--id", "thm-jc-tr-tree", "--max-n", "5", "--machine"])
    one = capsys.readouterr().out
    main(["theorem", "--id", "thm-jc-tr-tree", "--max-n", "5", "--machine", "--jobs", "2"])
    assert capsys.readouterr().out == one


def test_theorem_corpus_counterexample(write, capsys):
    g = "F?QHw"  # the 7-vertex graph on which b2 fails
    assert from_graph6(g).n == 7
    path = write("c.g6", g + "\n")
    code = main(["theorem", "--id", "prop-jc-implies-b2", "--max-n", "7", "--corpus", path, "--machine"])
    doc = _doc(capsys.readouterr().out)
    assert code == 1 and doc["status"] == "violated" and doc["disagreements"] == "1"


def test_nondef_scant(capsys):
    assert main(["nondef", "scant", "--d", "2", "--machine"]) == 0
    doc = _doc(capsys.readouterr().out)
    assert doc["G_d.scant"] == "true" and doc["GP_d.scant"] == "false"
    assert doc["GP_d.pair_v2_x"] == "v'_1,v'_2,x'"


def test_nondef_exact(capsys):
    args = ["nondef", "ef-exact", "--left", "cycle:8", "--right", "cycle:9", "--moves", "1"]
    assert main(args + ["--expect", "Duplicator"]) == 0
    assert main(args + ["--expect", "Spoiler"]) == 1
    capsys.readouterr()
    assert main(["nondef", "--mode", "exact", "--left", "path:3", "--right", "complete:2", "--moves", "3", "--machine"]) == 0
    assert _doc(capsys.readouterr().out)["winner"] == "Spoiler"


def test_nondef_budget(monkeypatch, capsys):
    monkeypatch.setenv("TOLLWALK_BUDGET", "10")
    assert main(["nondef", "ef-exact", "--d", "5"]) == 3
    assert "strategy mode" in capsys.readouterr().err
    assert main(["nondef", "ef-exact", "--d", "5", "--machine"]) == 3
    assert _doc(capsys.readouterr().out)["status"] == "error"


def test_nondef_strategy(capsys):
    assert main(["nondef", "ef-strategy", "--d", "9", "--moves", "2", "--seed", "7", "--trials", "50", "--machine"]) == 0
    doc = _doc(capsys.readouterr().out)
    assert doc["won"] == "50" and doc["runs"] == "50"
    assert main(["nondef", "ef-strategy", "--d", "8", "--moves", "2"]) == 2


def test_catalog(capsys):
    assert main(["catalog", "domino", "--emit", "edgelist"]) == 0
    g = from_edge_list(capsys.readouterr().out)
    assert (g.n, g.m) == (6, 7)
    assert main(["catalog", "G_d:2", "--emit", "graph6"]) == 0
    line = capsys.readouterr().out.strip()
    assert from_graph6(line).n == 17 and line == to_graph6(catalog("G_d:2"))
    assert main(["catalog", "cycle:5"]) == 0
    assert from_edge_list(capsys.readouterr().out) == catalog("cycle:5")
    assert main(["catalog", "hole:4"]) == 2


def test_machine_output_is_stable(write, capsys):
    g = write("h.txt", to_edge_list(catalog("house")))
    main(["axioms", "--graph", g, "--machine"])
    first = capsys.readouterr().out
    main(["axioms", "--graph", g, "--machine"])
    assert capsys.readouterr().out == first


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "tolltransit", "catalog", "C4"], capture_output=True, text=True, check=True
    )
    assert out.stdout.startswith("4 4\n")
