from itertools import combinations

import pytest

from pc_cycles_toolkit import ColouredMultigraph, EmptyGadgetGraphError, PreconditionError, VertexError
from pc_cycles_toolkit.gadgets import (
    GADGET_KINDS,
    EdgePart,
    build_gstar,
    build_gstarstar,
    custom_gadget,
    gadget_factory,
    gadget_size,
    make_gadget,
    verify_p_properties,
)
from pc_cycles_toolkit.matching import PlainGraph, has_perfect_matching


def _plain(n, pairs):
    return PlainGraph(n, tuple((u, v, 0) for u, v in pairs))


K4 = _plain(4, combinations(range(4), 2))


########################################################################################################################
#   === CONSTRUCTIONS ===
########################################################################################################################
@pytest.mark.parametrize("kind", GADGET_KINDS)
@pytest.mark.parametrize("z", range(2, 9))
def test_gadget_sizes(kind, z):
    gadget = make_gadget(kind, range(1, z + 1))
    assert gadget.size() == gadget_size(kind, z)
    assert gadget.palette == tuple(range(1, z + 1))
    assert len(gadget.labels) == gadget.carrier.n


def test_closed_form_sizes():
    assert [gadget_size("xp", z) for z in (2, 3, 4)] == [(2, 1), (4, 4), (6, 7)]
    assert [gadget_size("bjgp", z) for z in (2, 3, 4)] == [(2, 1), (4, 6), (6, 14)]
    assert [gadget_size("sp", z) for z in (2, 3, 4)] == [(6, 7), (8, 10), (10, 13)]


@pytest.mark.parametrize("kind", GADGET_KINDS)
@pytest.mark.parametrize("z", [*range(2, 7), *(pytest.param(z, marks=pytest.mark.slow) for z in (7, 8))])
def test_constructions_are_p_gadgets(kind, z):
    report = verify_p_properties(make_gadget(kind, range(1, z + 1)))
    assert report, report.render()


@pytest.mark.parametrize("z", range(2, 9))
def test_xp_is_the_smallest_construction(z):
    xp, bjgp, sp = (make_gadget(kind, range(1, z + 1)).size() for kind in ("xp", "bjgp", "sp"))
    assert xp[0] <= bjgp[0] <= sp[0]
    assert xp[1] <= min(bjgp[1], sp[1])


def test_xp_layout():
    gadget = make_gadget("xp", [2, 5, 7])
    assert gadget.labels == ("x_2", "x_5", "x_7", "y_5")
    assert gadget.terminals == {2: 0, 5: 1, 7: 2}
    # x_m x_M, then x_j y_j, x_m y_j and x_M y_j for the middle colour
    assert gadget.carrier.edges == ((0, 2, 0), (1, 3, 0), (0, 3, 0), (2, 3, 0))


def test_make_gadget_needs_two_colours():
    with pytest.raises(PreconditionError):
        make_gadget("xp", [3])
    with pytest.raises(ValueError):
        make_gadget("yp", [1, 2])


def test_with_palette_keeps_the_carrier():
    gadget = make_gadget("xp", [1, 2, 3]).with_palette([4, 8, 9])
    assert gadget.terminals == {4: 0, 8: 1, 9: 2}
    with pytest.raises(PreconditionError):
        gadget.with_palette([1, 2])


########################################################################################################################
#   === PROPERTY CHECKS ===
########################################################################################################################
def test_p3_violation_reports_the_pair():
    path = custom_gadget(_plain(4, [(0, 1), (1, 2), (2, 3)]), [0, 1, 2])
    report = verify_p_properties(path)
    assert not report
    assert report["P2"].passed
    assert report["P3"].witness == (1, 3)
    assert report["P3"].render() == "P3: fail (colours 1 3)"


def test_fail_fast_skips_the_remaining_properties():
    isolated = custom_gadget(_plain(4, [(0, 1), (1, 2)]), [0, 1, 2])
    report = verify_p_properties(isolated, fail_fast=True)
    assert not report["P2"].passed
    assert report["P4"].detail == "not evaluated"


def test_p1_rejects_shared_terminals():
    report = verify_p_properties(custom_gadget(K4, {1: 0, 2: 0}))
    assert not report["P1"].passed
    assert report["P2"].detail == "not evaluated"


def test_empty_residue_under_both_readings():
    gadget = custom_gadget(K4, [0, 1, 2, 3])
    strict = verify_p_properties(gadget, p4="strict")
    assert not strict
    assert strict["P4"].witness == (1, 2, 3, 4)
    assert strict["P4"].detail == "empty residue"
    assert verify_p_properties(gadget, p4="literal")


def test_gadget_factory():
    xp = gadget_factory("xp")
    assert xp([1, 3]).kind == "xp"

    template = custom_gadget(K4, [0, 1, 2])
    factory = gadget_factory(template)
    assert factory([2, 4, 6]).carrier == K4
    assert factory([2, 4, 6]).terminals == {2: 0, 4: 1, 6: 2}
    assert factory([1, 2]).kind == "xp"

    with pytest.raises(PreconditionError):
        gadget_factory(custom_gadget(_plain(4, [(0, 1), (1, 2), (2, 3)]), [0, 1, 2]))
    with pytest.warns(UserWarning):
        gadget_factory(custom_gadget(K4, [0, 1, 2, 3]))
    with pytest.raises(ValueError):
        gadget_factory("yp")


########################################################################################################################
#   === GADGET GRAPHS ===
########################################################################################################################
SQUARE = ColouredMultigraph(4, 2, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (1, 4, 2)])


def test_gstar_of_a_square():
    gstar = build_gstar(SQUARE)
    # one 2-vertex XP block per vertex, the E2 edges close an 8-cycle
    assert (gstar.n_star, gstar.m_star) == (8, 8)
    assert gstar.edges_of_part(EdgePart.E1) == (0, 1, 2, 3)
    assert [gstar.origin[i] for i in gstar.edges_of_part(EdgePart.E2)] == [0, 1, 2, 3]
    assert [block.vertex for block in gstar.blocks] == [1, 2, 3, 4]
    assert gstar.block_of(5).vertex == 3
    assert has_perfect_matching(gstar.carrier)
    assert gstar.internal_perfect_matching().edges == (0, 1, 2, 3)
    assert "E2 4:" in gstar.dump()


def test_gstar_skips_vertices_with_one_colour():
    g = ColouredMultigraph(4, 2, [(1, 2, 1), (1, 3, 2), (2, 3, 2), (3, 4, 1)])
    gstar = build_gstar(g)
    # vertex 4 only sees colour 1, the edge 3-4 has no E2 counterpart
    assert [block.vertex for block in gstar.blocks] == [1, 2, 3]
    assert 3 not in gstar.origin


def test_gstar_of_an_empty_core():
    with pytest.raises(EmptyGadgetGraphError):
        build_gstar(ColouredMultigraph(3, 1, [(1, 2, 1), (2, 3, 1)]))


@pytest.mark.parametrize("kind", GADGET_KINDS)
def test_gstar_sizes_add_up(kind):
    gstar = build_gstar(SQUARE, kind)
    n, m = gadget_size(kind, 2)
    assert gstar.n_star == 4 * n
    assert gstar.m_star == 4 * m + SQUARE.m


def test_gstarstar_places_s_and_t_last():
    g = ColouredMultigraph(4, 2, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (1, 4, 2), (1, 3, 1)])
    gss, direct = build_gstarstar(g, 1, 3)
    assert direct == (g.edge_id(1, 3, 1),)
    assert [block.vertex for block in gss.blocks] == [2, 4]
    assert (gss.s_vertex, gss.t_vertex) == (gss.n_star - 2, gss.n_star - 1)
    assert gss.block_index(gss.s_vertex) is None
    assert len(gss.edges_of_part(EdgePart.E3)) == 4
    assert gss.vertex_label(gss.t_vertex) == "t"


def test_gstarstar_needs_distinct_vertices():
    with pytest.raises(VertexError):
        build_gstarstar(SQUARE, 2, 2)
    with pytest.raises(VertexError):
        build_gstarstar(SQUARE, 1, 9)


def test_weighted_by_part():
    gstar = build_gstar(SQUARE)
    weighted = gstar.weighted({EdgePart.E2: 1})
    assert weighted.weights() == (0, 0, 0, 0, 1, 1, 1, 1)
