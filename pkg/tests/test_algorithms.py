import pytest
from hypothesis import given, settings
from strategies import coloured_multigraphs, complete_graphs, graphs_with_pair

from pc_cycles_toolkit import ColouredMultigraph, EmptyGadgetGraphError, PreconditionError, validate_pc
from pc_cycles_toolkit.algorithms import (
    colour_connected,
    colour_connected_graph,
    end_colour_pairs,
    exists_pc_path,
    exists_pc_path_with_end_colours,
    find_pc_path,
    hamilton_pc_cycle_k2,
    has_pc_cycle_elimination,
    has_pc_cycle_matching,
    longest_pc_cycle_k2,
    longest_pc_path_complete,
    max_pc_cycle_subgraph,
    max_pc_one_path_cycle_complete,
    max_pc_path_cycle,
    pc_cycle_factor_exists,
    shortest_pc_cycle,
    shortest_pc_path,
)
from pc_cycles_toolkit.gadgets import GADGET_KINDS
from pc_cycles_toolkit.oracle import (
    colour_connected_bf,
    colour_connected_graph_bf,
    end_colour_pairs_bf,
    enum_pc_paths,
    exists_pc_path_with_end_colours_bf,
    has_pc_cycle_bf,
    longest_pc_cycle_bf,
    longest_pc_path_bf,
    max_pc_cycle_subgraph_bf,
    max_pc_one_path_cycle_bf,
    max_pc_path_cycle_bf,
    pc_hamilton_cycle_bf,
    shortest_pc_cycle_bf,
    shortest_pc_path_bf,
)

PARALLEL = ColouredMultigraph(2, 2, [(1, 2, 1), (1, 2, 2)])
TRIANGLE = ColouredMultigraph(3, 2, [(1, 2, 1), (2, 3, 1), (1, 3, 2)])
# K^2_4 with the PC Hamilton cycle 1-2-3-4
K2_4 = ColouredMultigraph(4, 2, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (1, 4, 2), (1, 3, 1), (2, 4, 1)])


########################################################################################################################
#   === PC CYCLES ===
########################################################################################################################
def test_parallel_edges_form_a_two_cycle():
    exists, certificate = has_pc_cycle_elimination(PARALLEL)
    assert exists
    assert certificate.residual == (1, 2)

    best = max_pc_cycle_subgraph(PARALLEL)
    assert best.r == 2
    assert best.decoded.render(PARALLEL) == "cycle 1 2 | colours 1 2"
    assert shortest_pc_cycle(PARALLEL).n_edges == 2


def test_triangle_without_pc_cycle():
    exists, certificate = has_pc_cycle_elimination(TRIANGLE)
    assert not exists
    assert certificate.removal_order == (2, 1, 3)
    assert certificate.residual == ()
    assert certificate.render().splitlines()[0] == "remove 2 | {1 3}:1"

    assert not has_pc_cycle_matching(TRIANGLE)
    assert max_pc_cycle_subgraph(TRIANGLE).decoded.is_empty()
    assert shortest_pc_cycle(TRIANGLE) is None


def test_empty_core_has_no_pc_cycle():
    path = ColouredMultigraph(3, 1, [(1, 2, 1), (2, 3, 1)])
    assert max_pc_cycle_subgraph(path).r == 0
    assert shortest_pc_cycle(path) is None
    assert not pc_cycle_factor_exists(ColouredMultigraph(0, 0))


@given(coloured_multigraphs())
def test_pc_cycle_existence_agrees(g):
    expected = has_pc_cycle_bf(g)
    exists, certificate = has_pc_cycle_elimination(g)
    assert exists == expected
    assert bool(certificate.residual) == expected
    assert has_pc_cycle_matching(g) == expected


@given(coloured_multigraphs())
def test_max_pc_cycle_subgraph(g):
    result = max_pc_cycle_subgraph(g)
    assert result.r == max_pc_cycle_subgraph_bf(g).value
    assert result.r == result.decoded.n_edges
    assert not result.decoded.paths
    assert validate_pc(result.decoded, g)


@pytest.mark.parametrize("kind", ["sp", "bjgp"])
@settings(max_examples=15)
@given(g=coloured_multigraphs(max_n=5, max_m=9))
def test_max_pc_cycle_subgraph_with_other_gadgets(kind, g):
    assert max_pc_cycle_subgraph(g, kind).r == max_pc_cycle_subgraph_bf(g).value


@given(coloured_multigraphs())
def test_shortest_pc_cycle(g):
    cycle = shortest_pc_cycle(g)
    expected = shortest_pc_cycle_bf(g)
    if expected is None:
        assert cycle is None
    else:
        assert cycle.cycle_walks(g) == expected.cycle_walks(g)
        assert cycle == expected
        assert validate_pc(cycle, g)


def test_shortest_pc_cycle_takes_the_least_walk():
    doubled_triangle = ColouredMultigraph(3, 2, [(u, v, q) for u, v in [(1, 2), (1, 3), (2, 3)] for q in (1, 2)])
    assert shortest_pc_cycle(doubled_triangle).render(doubled_triangle) == "cycle 1 2 | colours 1 2"

    # two PC triangles sharing the edge 1 4
    g = ColouredMultigraph(4, 3, [(1, 2, 1), (2, 4, 2), (1, 4, 3), (1, 3, 1), (3, 4, 2)])
    assert shortest_pc_cycle(g).cycle_walks(g) == ((1, 2, 4),)
    assert shortest_pc_cycle(g) == shortest_pc_cycle_bf(g)


@given(coloured_multigraphs(min_n=1))
def test_pc_cycle_factor(g):
    assert pc_cycle_factor_exists(g) == (max_pc_cycle_subgraph_bf(g).value == g.n)


########################################################################################################################
#   === PC PATHS ===
########################################################################################################################
def test_direct_edge_is_a_path():
    path = shortest_pc_path(TRIANGLE, 1, 2)
    assert path.render(TRIANGLE) == "path 1 2 | colours 1"
    assert exists_pc_path(TRIANGLE, 1, 2)


def test_path_through_the_square():
    square = ColouredMultigraph(4, 2, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (1, 4, 2)])
    path = shortest_pc_path(square, 1, 3)
    assert path.n_edges == 2
    assert validate_pc(path, square)
    assert end_colour_pairs(square, 1, 3) == frozenset({(1, 2), (2, 1)})
    assert exists_pc_path_with_end_colours(square, 1, 3, 1, 2)
    assert not exists_pc_path_with_end_colours(square, 1, 3, 1, 1)
    assert exists_pc_path_with_end_colours_bf(square, 1, 3, 2, 1)
    assert not exists_pc_path_with_end_colours_bf(square, 1, 3, 2, 2)
    assert colour_connected(square, 1, 3)


def test_no_path_through_monochromatic_vertex():
    assert find_pc_path(TRIANGLE, 1, 3) is not None
    g = ColouredMultigraph(3, 1, [(1, 2, 1), (2, 3, 1)])
    assert find_pc_path(g, 1, 3) is None
    assert shortest_pc_path(g, 1, 3) is None
    with pytest.raises(EmptyGadgetGraphError):
        max_pc_path_cycle(g, 1, 3)


def test_end_colours_out_of_range():
    with pytest.raises(PreconditionError):
        exists_pc_path_with_end_colours(TRIANGLE, 1, 3, 1, 5)


@given(graphs_with_pair())
def test_find_pc_path(instance):
    g, s, t = instance
    path = find_pc_path(g, s, t)
    assert (path is not None) == bool(enum_pc_paths(g, s, t))
    if path is not None:
        assert validate_pc(path, g)
        assert not path.cycles
        walk = path.path_walks(g)[0]
        assert {walk[0], walk[-1]} == {s, t}


@given(graphs_with_pair())
def test_shortest_pc_path(instance):
    g, s, t = instance
    path = shortest_pc_path(g, s, t)
    expected = shortest_pc_path_bf(g, s, t)
    if expected is None:
        assert path is None
    else:
        assert path.n_edges == expected.n_edges
        assert validate_pc(path, g)


@given(graphs_with_pair())
def test_max_pc_path_cycle(instance):
    g, s, t = instance
    expected = max_pc_path_cycle_bf(g, s, t)
    try:
        result = max_pc_path_cycle(g, s, t)
    except EmptyGadgetGraphError as error:
        # only a direct edge can join s and t
        assert (expected is not None) == bool(error.direct_edges)
        if expected is not None:
            assert expected.value == 1
        return
    if expected is None:
        assert result is None
    else:
        assert result.r == expected.value
        assert result.decoded.n_edges == result.r
        assert len(result.decoded.paths) == 1
        assert validate_pc(result.decoded, g)


@given(graphs_with_pair(max_n=5))
def test_end_colour_pairs(instance):
    g, s, t = instance
    assert end_colour_pairs(g, s, t) == end_colour_pairs_bf(g, s, t)
    assert colour_connected(g, s, t) == colour_connected_bf(g, s, t)


########################################################################################################################
#   === COMPLETE GRAPHS ===
########################################################################################################################
@given(complete_graphs(max_c=4))
def test_max_one_path_cycle_complete(k):
    order, witness = max_pc_one_path_cycle_complete(k)
    assert order == max_pc_one_path_cycle_bf(k).value
    assert validate_pc(witness, k)
    assert len(witness.paths) == 1


def test_monochromatic_complete_graph_has_a_single_edge_path():
    k = ColouredMultigraph(3, 1, [(1, 2, 1), (1, 3, 1), (2, 3, 1)])
    order, witness = max_pc_one_path_cycle_complete(k)
    assert order == 2
    assert witness.cycles == ()
    assert [len(p) for p in witness.paths] == [1]


@given(complete_graphs(min_n=1, max_c=4))
def test_longest_pc_path_complete(k):
    result = longest_pc_path_complete(k)
    assert result.length == longest_pc_path_bf(k).value
    assert result.path is not None
    assert result.path.n_edges == result.length
    assert validate_pc(result.path, k)


def test_many_colours_give_a_hamilton_cycle():
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    k = ColouredMultigraph(4, 6, [(u, v, q) for q, (u, v) in enumerate(pairs, start=1)])
    assert pc_hamilton_cycle_bf(k) is not None
    assert max_pc_one_path_cycle_complete(k)[0] == 4


def test_complete_graph_preconditions():
    with pytest.raises(PreconditionError):
        longest_pc_path_complete(TRIANGLE.without_edges([0]).graph)
    with pytest.raises(PreconditionError):
        hamilton_pc_cycle_k2(ColouredMultigraph(3, 3, [(1, 2, 1), (2, 3, 2), (1, 3, 3)]))
    with pytest.raises(PreconditionError):
        longest_pc_cycle_k2(TRIANGLE)


def test_k2_hamilton_cycle():
    assert hamilton_pc_cycle_k2(K2_4)
    assert colour_connected_graph(K2_4)
    assert longest_pc_cycle_k2(K2_4) == 4
    assert not hamilton_pc_cycle_k2(TRIANGLE)


@given(complete_graphs(min_n=2, max_n=6, max_c=2))
def test_k2_hamilton_cycle_agrees_with_oracle(k):
    assert hamilton_pc_cycle_k2(k) == (pc_hamilton_cycle_bf(k) is not None)


@given(complete_graphs(min_n=4, max_n=6, max_c=2))
def test_k2_longest_cycle(k):
    if colour_connected_graph(k):
        assert longest_pc_cycle_k2(k) == longest_pc_cycle_bf(k).value
    else:
        with pytest.raises(PreconditionError):
            longest_pc_cycle_k2(k)


@settings(max_examples=15)
@given(complete_graphs(min_n=3, max_n=5, max_c=2))
def test_colour_connected_graph_agrees_with_oracle(k):
    assert colour_connected_graph(k) == colour_connected_graph_bf(k)


def test_colour_connected_graph_in_worker_processes():
    assert colour_connected_graph(K2_4, n_jobs=2)
    assert not colour_connected_graph(TRIANGLE, n_jobs=2)


@pytest.mark.parametrize("kind", GADGET_KINDS)
def test_k2_hamilton_with_every_gadget(kind):
    assert hamilton_pc_cycle_k2(K2_4, kind)
