import io

import pytest

from leafspan import Graph, parse_graph, serialize_graph
from leafspan.cli import main

TRIANGLE = "0 1\n1 2\n0 2\n"


def feed(monkeypatch, text):
    monkeypatch.setattr("sys.stdin", io.StringIO(text))


def test_exact_stdin(monkeypatch, capsys):
    feed(monkeypatch, TRIANGLE)
    assert main(["exact"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("u=2 optimal=1 nodes=")
    assert "tree " in out


def test_exact_files(tmp_path):
    src = tmp_path / "g.txt"
    dst = tmp_path / "out.txt"
    src.write_text(serialize_graph(Graph.petersen()))
    assert main(["exact", "--input", str(src), "--output", str(dst)]) == 0
    assert dst.read_text().startswith("u=6 optimal=1")


def test_exact_budget(monkeypatch, capsys):
    src = serialize_graph(Graph.petersen())
    feed(monkeypatch, src)
    monkeypatch.setenv("LEAFSPAN_BUDGET", "1")
    assert main(["exact"]) == 0
    assert "optimal=0" in capsys.readouterr().out


def test_budget_validation(monkeypatch, capsys):
    feed(monkeypatch, TRIANGLE)
    monkeypatch.setenv("LEAFSPAN_BUDGET", "soon")
    assert main(["exact"]) == 2
    assert "LEAFSPAN_BUDGET" in capsys.readouterr().err


def test_bound_theorem1(monkeypatch, capsys):
    feed(monkeypatch, TRIANGLE)
    assert main(["bound", "--theorem", "1"]) == 0
    out = capsys.readouterr().out
    assert "kind=Theorem1" in out and "s=0" in out
    assert "bound=3/2" in out


def test_bound_kw(monkeypatch, capsys):
    feed(monkeypatch, serialize_graph(Graph.petersen()))
    assert main(["bound", "--theorem", "kw"]) == 0
    assert "bound=9/2" in capsys.readouterr().out


def test_bound_kw_needs_min_degree(monkeypatch, capsys):
    feed(monkeypatch, "0 1\n1 2\n")
    assert main(["bound", "--theorem", "kw"]) == 2
    assert "minimum degree" in capsys.readouterr().err


def test_bound_theorem2(monkeypatch, capsys):
    feed(monkeypatch, serialize_graph(Graph.cycle(5)))
    assert main(["bound", "--theorem", "2", "--k", "5"]) == 0
    out = capsys.readouterr().out
    assert "kind=Theorem2" in out and "g=5" in out


def test_bound_theorem2_needs_k(monkeypatch, capsys):
    feed(monkeypatch, TRIANGLE)
    assert main(["bound", "--theorem", "2"]) == 2
    assert "--k" in capsys.readouterr().err


def test_construct_with_trace(monkeypatch, capsys):
    feed(monkeypatch, serialize_graph(Graph.petersen()))
    assert main(["construct", "--theorem", "1", "--trace"]) == 0
    out = capsys.readouterr().out
    head = out.splitlines()[0]
    assert head.startswith("leaves=") and head.endswith("pass=1")
    assert any(ln.startswith("case=") for ln in out.splitlines())


def test_construct_theorem2_default_k(monkeypatch, capsys):
    feed(monkeypatch, serialize_graph(Graph.cycle(6)))
    assert main(["construct", "--theorem", "2"]) == 0
    assert "pass=1" in capsys.readouterr().out


def test_gen_families(capsys):
    assert main(["gen", "--family", "triangle-tree", "--n", "2"]) == 0
    g = parse_graph(capsys.readouterr().out)
    assert g.v == 10

    assert main(["gen", "--family", "cycle-spine", "--g", "5", "--k", "1"]) == 0
    g = parse_graph(capsys.readouterr().out)
    assert g.v == 12  # sparse regime: n=2, cycle of 6 plus three 2-chains

    assert main(["gen", "--family", "cycle-spine", "--g", "3", "--k", "2"]) == 0
    g = parse_graph(capsys.readouterr().out)
    assert g.v == 12  # dense regime: 3 * (2 + 2)

    assert main(["gen", "--family", "triangle-tree", "--n", "1", "--copies", "2"]) == 0
    g = parse_graph(capsys.readouterr().out)
    assert g.v == 10


def test_gen_missing_params(capsys):
    assert main(["gen", "--family", "triangle-tree"]) == 2
    assert main(["gen", "--family", "cycle-spine", "--g", "5"]) == 2
    capsys.readouterr()


def test_random_deterministic(capsys):
    assert main(["random", "--v", "8", "--seed", "3"]) == 0
    a = capsys.readouterr().out
    assert main(["random", "--v", "8", "--seed", "3"]) == 0
    assert capsys.readouterr().out == a
    g = parse_graph(a)
    assert g.v == 8 and g.is_connected


def test_random_infeasible(capsys):
    assert main(["random", "--v", "4", "--min-degree", "3", "--girth", "5"]) == 2
    assert "no graph found" in capsys.readouterr().err


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "report.txt"
    code = main(
        ["verify", "--theorem", "1", "--count", "5", "--max-v", "7", "--output", str(out)]
    )
    assert code == 0
    text = out.read_text()
    assert text.splitlines()[-1].startswith("total=5 passed=5 failed=0")


def test_verify_construct_mode(capsys):
    code = main(["verify", "--theorem", "2", "--count", "5", "--max-v", "7", "--mode", "construct"])
    assert code == 0
    assert "mode=construct" in capsys.readouterr().out


def test_export_dot(monkeypatch, capsys):
    feed(monkeypatch, TRIANGLE)
    assert main(["export-dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph leafspan {") and "1 -- 2;" in out


def test_parse_error_exit(monkeypatch, capsys):
    feed(monkeypatch, "0 0\n")
    assert main(["exact"]) == 2
    assert "parse error" in capsys.readouterr().err


def test_missing_input_file(capsys):
    assert main(["exact", "--input", "/nonexistent/g.txt"]) == 2
    assert "error:" in capsys.readouterr().err
