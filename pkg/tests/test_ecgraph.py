import pytest
from hypothesis import given
from strategies import coloured_multigraphs

from pc_cycles_toolkit import (
    ColouredMultigraph,
    GraphFormatError,
    InvalidGraphError,
    PCSubgraph,
    PreconditionError,
    VertexError,
    parse_graph,
    render_graph,
    validate_pc,
)
from pc_cycles_toolkit.ecgraph import (
    core_graph,
    mono_degree_bounds,
    parse_plain_graph,
    profile,
    read_graph,
    write_graph,
)

# Alternating square 1-2-3-4, edge ids: 0 = (1, 2, 1), 1 = (1, 4, 2), 2 = (2, 3, 2), 3 = (3, 4, 1)
SQUARE = ColouredMultigraph(4, 2, [(2, 3, 2), (4, 3, 1), (1, 2, 1), (4, 1, 2)])


########################################################################################################################
#   === GRAPH ===
########################################################################################################################
def test_edges_are_canonical():
    assert SQUARE.edges == ((1, 2, 1), (1, 4, 2), (2, 3, 2), (3, 4, 1))
    assert SQUARE.edge_id(4, 1, 2) == 1
    assert SQUARE.edge_id(1, 3, 1) is None
    assert SQUARE.other_end(3, 4) == 3
    with pytest.raises(VertexError):
        SQUARE.other_end(3, 1)


@pytest.mark.parametrize(
    "edges",
    [
        [(1, 1, 1)],
        [(1, 2, 1), (2, 1, 1)],
        [(1, 2, 3)],
        [(1, 5, 1)],
    ],
    ids=["loop", "duplicate", "colour", "vertex"],
)
def test_invalid_edges(edges):
    with pytest.raises(InvalidGraphError):
        ColouredMultigraph(4, 2, edges)


def test_parallel_edges_of_different_colours():
    g = ColouredMultigraph(2, 2, [(1, 2, 1), (2, 1, 2)])
    assert g.m == 2
    assert not g.is_simple()
    assert g.edges_between(1, 2) == (0, 1)


def test_colour_degrees_and_palettes():
    g = ColouredMultigraph(5, 2, [(1, 2, 1), (1, 3, 1), (1, 4, 2), (2, 3, 2)])
    assert g.colour_degrees[1, 1:].tolist() == [2, 1]
    assert g.palette(4) == frozenset({2})
    assert g.palette(5) == frozenset()
    assert g.neighbours(1, 1) == frozenset({2, 3})

    vertex = profile(g, 1)
    assert vertex.degrees == {1: 2, 2: 1}
    assert vertex.neighbours[2] == frozenset({4})


def test_mono_degree_bounds():
    g = ColouredMultigraph(4, 2, [(1, 2, 1), (1, 3, 1), (1, 4, 2), (2, 3, 2)])
    # vertex 4 only sees colour 2, which does not lower δ_mon to 0
    assert mono_degree_bounds(g) == (1, 2)

    isolated = ColouredMultigraph(5, 2, g.edges)
    assert mono_degree_bounds(isolated) == (0, 2)

    with pytest.raises(PreconditionError):
        mono_degree_bounds(ColouredMultigraph(0, 0))


def test_completeness():
    triangle = ColouredMultigraph(3, 2, [(1, 2, 1), (2, 3, 1), (1, 3, 2)])
    assert triangle.is_simple()
    assert triangle.is_complete()
    assert not SQUARE.is_complete()
    assert triangle.colours_used() == frozenset({1, 2})


def test_induced_subgraph_back_maps():
    sub = SQUARE.induced_subgraph([4, 2, 3])
    assert sub.vertex_map == (2, 3, 4)
    assert sub.graph.edges == ((1, 2, 2), (2, 3, 1))
    assert sub.edge_map == (2, 3)

    rest = SQUARE.remove_vertices([1])
    assert rest.vertex_map == (2, 3, 4)
    assert rest.graph == sub.graph

    kept = SQUARE.without_edges([0, 3])
    assert kept.graph.n == 4
    assert kept.edge_map == (1, 2)


def test_core_graph():
    # palettes: 1 -> {1, 2}, 2 -> {1, 2}, 3 -> {2}
    g = ColouredMultigraph(3, 2, [(1, 2, 1), (2, 3, 2), (1, 3, 2)])
    core = core_graph(g)
    assert core.vertex_map == (1, 2)
    assert core.graph.edges == ((1, 2, 1),)

    assert core_graph(g, iterate=True).graph.n == 0


@given(coloured_multigraphs())
def test_core_graph_vertices_see_two_colours(g):
    core = core_graph(g, iterate=True)
    for v in core.graph.vertices:
        assert len(core.graph.palette(v)) >= 2
    for new, old in enumerate(core.vertex_map, start=1):
        assert core.graph.palette(new) <= g.palette(old)


@given(coloured_multigraphs(min_n=1))
def test_mono_degree_bounds_order(g):
    delta, big_delta = mono_degree_bounds(g)
    assert 0 <= delta <= big_delta <= max(g.n - 1, 0)


########################################################################################################################
#   === TEXT FORMAT ===
########################################################################################################################
def test_parse_graph():
    text = """
    # an alternating square
    vertices 4
    colours 2
    e 1 2 1
    e 2 3 2   # trailing comment
    e 3 4 1
    e 4 1 2
    """
    assert parse_graph(text) == SQUARE


def test_parse_graph_defaults_headers():
    g = parse_graph("e 1 3 2\ne 2 3 1\n")
    assert (g.n, g.c, g.m) == (3, 2, 2)


def test_render_then_parse():
    rendered = render_graph(SQUARE)
    assert rendered.splitlines()[:3] == ["vertices 4", "colours 2", "e 1 2 1"]
    assert parse_graph(rendered) == SQUARE


def test_write_then_read(tmp_path):
    path = tmp_path / "square.txt"
    write_graph(SQUARE, path)
    assert path.read_text(encoding="utf-8") == render_graph(SQUARE)
    assert read_graph(path) == SQUARE


def test_read_graph_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "latin1.txt"
    path.write_bytes(b"vertices 2\n# \xe9\ne 1 2 1\n")
    with pytest.raises(GraphFormatError, match="not UTF-8"):
        read_graph(path)


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices 3\ne 1 2\n", 2),
        ("vertices 3\nedge 1 2 1\n", 2),
        ("vertices 3\nvertices 4\n", 2),
        ("e 1 2 1\nvertices 3\n", 2),
        ("vertices x\n", 1),
    ],
)
def test_parse_graph_syntax_errors(text, line):
    with pytest.raises(GraphFormatError) as error:
        parse_graph(text)
    assert error.value.line_number == line
    assert str(error.value).startswith(f"line {line}:")


@pytest.mark.parametrize(
    "text",
    ["e 2 2 1\n", "vertices 2\ne 1 3 1\n", "colours 1\ne 1 2 2\n", "e 1 2 1\ne 2 1 1\n"],
    ids=["loop", "vertex", "colour", "duplicate"],
)
def test_parse_graph_invalid_graphs(text):
    with pytest.raises(InvalidGraphError):
        parse_graph(text)


def test_parse_plain_graph():
    n, edges = parse_plain_graph("vertices 3\ne 1 2 5\ne 2 3\n")
    assert n == 3
    assert edges == [(0, 1, 5), (1, 2, 0)]


########################################################################################################################
#   === PC SUBGRAPHS ===
########################################################################################################################
def test_canonical_cycle_and_render():
    sub = PCSubgraph.from_edge_ids(SQUARE, cycles=[[2, 3, 1, 0]])
    assert sub.cycles == (((0, 1), (2, 2), (3, 1), (1, 2)),)
    assert sub.render(SQUARE) == "cycle 1 2 3 4 | colours 1 2 1 2"
    assert sub.n_edges == 4
    assert sub.vertices(SQUARE) == frozenset({1, 2, 3, 4})
    assert validate_pc(sub, SQUARE)


def test_canonical_path_starts_at_lesser_end():
    sub = PCSubgraph.from_edge_ids(SQUARE, paths=[[3, 2, 0]])
    assert sub.render(SQUARE) == "path 1 2 3 4 | colours 1 2 1"


def test_two_cycle_lists_edges_by_id():
    g = ColouredMultigraph(2, 2, [(1, 2, 1), (1, 2, 2)])
    sub = PCSubgraph.from_edge_ids(g, cycles=[[1, 0]])
    assert sub.cycles == (((0, 1), (1, 2)),)
    assert validate_pc(sub, g)


def test_validate_rejects_monochromatic_neighbours():
    triangle = ColouredMultigraph(3, 2, [(1, 2, 1), (2, 3, 1), (1, 3, 2)])
    report = validate_pc(PCSubgraph(cycles=(((0, 1), (2, 1), (1, 2)),)), triangle)
    assert not report
    assert "colour" in report.violation


def test_validate_rejects_wrong_colour_and_shared_vertices():
    assert not validate_pc(PCSubgraph(paths=(((0, 2),),)), SQUARE)

    shared = PCSubgraph(paths=(((0, 1),), ((2, 2),)))
    report = validate_pc(shared, SQUARE)
    assert not report
    assert "shares vertices" in report.violation


def test_validate_rejects_broken_walk():
    report = validate_pc(PCSubgraph(paths=(((0, 1), (3, 1)),)), SQUARE)
    assert not report
    assert "walk" in report.violation


def test_remap_to_parent_graph():
    sub = SQUARE.remove_vertices([1])
    inner = PCSubgraph.from_edge_ids(sub.graph, paths=[[0, 1]])
    outer = inner.remap(sub.edge_map)
    assert outer.render(SQUARE) == "path 2 3 4 | colours 2 1"
    assert validate_pc(outer, SQUARE)
