import json

import pytest

from pc_cycles_toolkit import parse_graph, render_graph
from pc_cycles_toolkit.explorer.cli import main

PARALLEL = "vertices 2\ncolours 2\ne 1 2 1\ne 1 2 2\n"
TRIANGLE = "vertices 3\ncolours 2\ne 1 2 1\ne 2 3 1\ne 1 3 2\n"
SQUARE = "vertices 4\ncolours 2\ne 1 2 1\ne 2 3 2\ne 3 4 1\ne 1 4 2\n"
K2_4 = SQUARE + "e 1 3 1\ne 2 4 1\n"


@pytest.fixture
def graph_file(tmp_path):
    def write(text: str, name: str = "graph.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


########################################################################################################################
#   === ANALYZE ===
########################################################################################################################
def test_analyze_two_cycle(graph_file, capsys):
    code, out, _ = _run(capsys, "analyze", graph_file(PARALLEL))
    assert code == 0
    lines = out.splitlines()
    assert "pc cycle elimination: true" in lines
    assert "max cycle subgraph edges: 2" in lines
    assert "shortest cycle length: 2" in lines
    assert "  cycle 1 2 | colours 1 2" in lines
    assert "certificate:" not in lines


def test_analyze_without_pc_cycle(graph_file, capsys):
    code, out, _ = _run(capsys, "analyze", graph_file(TRIANGLE))
    assert code == 1
    lines = out.splitlines()
    assert "pc cycle matching: false" in lines
    assert "shortest cycle length: -" in lines
    assert "certificate:" in lines
    assert "  remove 2 | {1 3}:1" in lines


def test_analyze_json(graph_file, capsys):
    code, out, _ = _run(capsys, "--json", "analyze", graph_file(PARALLEL), "--gadget", "sp")
    assert code == 0
    record = json.loads(out)
    assert record["max_cycle_subgraph_edges"] == 2
    assert record["subgraph"] == ["cycle 1 2 | colours 1 2"]


def test_analyze_dumps_the_gadget_graph(graph_file, capsys):
    code, out, _ = _run(capsys, "analyze", graph_file(SQUARE), "--dump-gadget-graph")
    assert code == 0
    assert "gadget graph:" in out.splitlines()


def test_input_errors(graph_file, capsys, tmp_path):
    code, _, err = _run(capsys, "analyze", graph_file("e 1 2\n"))
    assert code == 2
    assert err.startswith("input error: line 1:")

    code, _, err = _run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2

    code, _, _ = _run(capsys, "path", graph_file(TRIANGLE), "--from", "1", "--to", "1")
    assert code == 2


def test_input_that_is_not_utf8(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"vertices 2\ne 1 2 1 \xe9\n")
    path = str(bad)
    for argv in (["analyze", path], ["encode-digraph", path], ["gadget", "verify", path, "--terminals", "1", "2"]):
        code, _, err = _run(capsys, *argv)
        assert code == 2
        assert err.startswith("input error:")
        assert "Traceback" not in err


def test_oracle_over_budget(graph_file, capsys):
    code, _, err = _run(capsys, "oracle", "has-cycle", graph_file("vertices 9\ne 1 2 1\n"))
    assert code == 3
    assert err.startswith("budget error:")


def test_unknown_statement_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as error:
        main(["check-bounds", "--statement", "no-such-statement"])
    assert error.value.code == 2


########################################################################################################################
#   === PATHS ===
########################################################################################################################
def test_shortest_path(graph_file, capsys):
    code, out, _ = _run(capsys, "path", graph_file(SQUARE), "--from", "1", "--to", "3", "--shortest")
    assert code == 0
    assert "length: 2" in out.splitlines()


def test_end_colours(graph_file, capsys):
    path = graph_file(SQUARE)
    assert _run(capsys, "path", path, "--from", "1", "--to", "3", "--end-colours", "1", "2")[0] == 0
    code, out, _ = _run(capsys, "path", path, "--from", "1", "--to", "3", "--end-colours", "1", "1")
    assert code == 1
    assert "exists: false" in out.splitlines()


def test_max_path_cycle(graph_file, capsys):
    code, out, _ = _run(capsys, "path", graph_file(SQUARE), "--from", "1", "--to", "2", "--max-path-cycle")
    assert code == 0
    assert "path cycle edges: 3" in out.splitlines()
    assert "  path 1 4 3 2 | colours 2 1 2" in out.splitlines()


def test_direct_edge_without_internal_vertex(graph_file, capsys):
    path = graph_file("e 1 2 1\ne 2 3 1\n")
    code, out, _ = _run(capsys, "path", path, "--from", "1", "--to", "2", "--max-path-cycle")
    assert code == 0
    assert "path cycle edges: 1" in out.splitlines()


def test_oracle_paths(graph_file, capsys):
    code, out, _ = _run(capsys, "oracle", "paths", graph_file(SQUARE), "--from", "3", "--to", "1")
    assert code == 0
    assert "count: 2" in out.splitlines()


########################################################################################################################
#   === COMPLETE GRAPHS ===
########################################################################################################################
def test_complete_longest_path(graph_file, capsys):
    code, out, _ = _run(capsys, "complete", "longest-path", graph_file(K2_4))
    assert code == 0
    assert "longest path length: 3" in out.splitlines()


def test_k2_commands(graph_file, capsys):
    path = graph_file(K2_4)
    code, out, _ = _run(capsys, "k2", "hamilton", path)
    assert code == 0
    assert "hamilton cycle: true" in out.splitlines()

    code, out, _ = _run(capsys, "k2", "longest-cycle", path)
    assert code == 0
    assert "longest cycle length: 4" in out.splitlines()

    assert _run(capsys, "k2", "longest-cycle", graph_file(TRIANGLE, "triangle.txt"))[0] == 2


########################################################################################################################
#   === GADGETS ===
########################################################################################################################
def test_gadget_make(capsys):
    code, out, _ = _run(capsys, "gadget", "make", "--kind", "xp", "--z", "3")
    assert code == 0
    lines = out.splitlines()
    assert "vertices: 4" in lines
    assert "terminals: 1 2 3" in lines
    assert "  e 1 3" in lines


def test_gadget_verify(graph_file, capsys):
    carrier = graph_file("vertices 4\ne 1 2\ne 2 3\ne 3 4\n")
    code, out, _ = _run(capsys, "gadget", "verify", carrier, "--terminals", "1", "2", "3")
    assert code == 1
    assert "P3: fail (colours 1 3)" in out.splitlines()
    assert "p gadget: false" in out.splitlines()

    star = graph_file("vertices 4\ne 1 2\ne 1 4\ne 2 4\ne 3 4\n", "star.txt")
    assert _run(capsys, "gadget", "verify", star, "--terminals", "1", "2", "3")[0] == 0


def test_gadget_search(capsys):
    code, out, _ = _run(capsys, "gadget", "search", "--z", "3", "--max-vertices", "4", "--max-edges", "4")
    assert code == 0
    assert "frontier: (4, 4)" in out.splitlines()

    code, _, _ = _run(capsys, "gadget", "search", "--z", "3", "--max-vertices", "4", "--max-edges", "4", "--cap", "10")
    assert code == 3


########################################################################################################################
#   === EXPLORATION ===
########################################################################################################################
def test_extremal_check(capsys):
    code, out, _ = _run(capsys, "extremal", "--p", "2", "--c", "3", "--check")
    assert code == 0
    lines = out.splitlines()
    assert "delta mon: 2" in lines
    assert "expected longest cycle: 3" in lines
    assert "longest cycle: 3" in lines


def test_check_bounds(capsys):
    argv = ["check-bounds", "--trials", "3", "--n-max", "5", "--seed", "1", "--statement", "k2-hamilton"]
    code, out, _ = _run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[0] == "seed: 1"

    code, out, _ = _run(capsys, "--json", *argv)
    record = json.loads(out)
    assert record["theorems_hold"]
    assert record["config"]["budget"]["max_edges"] == 64
    assert [r["name"] for r in record["results"]] == ["k2-hamilton"]


def test_encode_digraph(graph_file, capsys, tmp_path):
    digraph = graph_file("vertices 2\na 1 2\na 2 1\n", "digon.txt")
    code, out, _ = _run(capsys, "encode-digraph", digraph)
    assert code == 0
    assert "directed cycle: true" in out.splitlines()

    encoded = tmp_path / "encoded.txt"
    assert _run(capsys, "encode-digraph", digraph, "-o", str(encoded))[0] == 0
    assert parse_graph(encoded.read_text(encoding="utf-8")).n == 4
    assert _run(capsys, "analyze", str(encoded))[0] == 0


def test_render(graph_file, capsys):
    code, out, _ = _run(capsys, "render", graph_file("e 4 1 2\ne 3 4 1\ne 2 3 2\ne 2 1 1\n"))
    assert code == 0
    assert out == render_graph(parse_graph(SQUARE))
