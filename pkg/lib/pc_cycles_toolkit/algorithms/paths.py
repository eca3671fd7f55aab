"""
PC (s, t)-path problems solved through matchings of G**.
"""
import logging
from functools import partial
from itertools import combinations

from ..ecgraph import ColouredMultigraph, PCSubgraph
from ..errors import EmptyGadgetGraphError, PreconditionError, VertexError
from ..gadgets import EdgePart, GadgetSpec, build_gstarstar
from ..matching import augment, find_augmenting_path, max_weight_perfect_matching, min_weight_perfect_matching
from ..pc_utilities import parallel_map
from .cycles import max_pc_cycle_subgraph
from .decode import MatchingDecodeResult, decode_matching

logger = logging.getLogger(__name__)

PATH_WEIGHTS = {EdgePart.E1: 0, EdgePart.E2: 1, EdgePart.E3: 1}


def find_pc_path(g: ColouredMultigraph, s: int, t: int, kind: GadgetSpec = "xp") -> PCSubgraph | None:
    """
    Find a PC (s, t)-path, not necessarily a shortest one.

    A direct s-t edge is a PC path of length 1. Otherwise, let M be the union of perfect matchings of the gadgets of
    G**: s and t are the only vertices M leaves exposed, and PC (s, t)-paths of G correspond to M-augmenting
    (s, t)-paths of G**. Augmenting M along such a path gives a perfect matching of G** which decodes to the PC path.

    Returns:
        A single-path PC subgraph, or None if there is no PC (s, t)-path.
    """
    gss, direct = build_gstarstar(g, s, t, kind)
    if direct:
        return PCSubgraph.from_edge_ids(g, paths=[direct[:1]])
    if not gss.blocks:
        return None

    internal = gss.internal_perfect_matching()
    path = find_augmenting_path(gss.carrier, internal, gss.s_vertex, gss.t_vertex)
    if path is None:
        return None
    decoded = decode_matching(gss, augment(gss.carrier, internal, path)).decoded
    return PCSubgraph(paths=decoded.paths)


def exists_pc_path(g: ColouredMultigraph, s: int, t: int, kind: GadgetSpec = "xp") -> bool:
    """True iff ``g`` has a PC (s, t)-path (a direct s-t edge counts as one)."""
    return find_pc_path(g, s, t, kind) is not None


def shortest_pc_path(g: ColouredMultigraph, s: int, t: int, kind: GadgetSpec = "xp") -> PCSubgraph | None:
    """
    Find a shortest PC (s, t)-path.

    A direct s-t edge (the one of least id) is returned if any. Otherwise the E1 edges of G** weigh 0 and the other
    edges 1: a minimum-weight perfect matching decodes to a shortest PC (s, t)-path without any cycle.

    Returns:
        A single-path PC subgraph, or None if there is no PC (s, t)-path.
    """
    gss, direct = build_gstarstar(g, s, t, kind)
    if direct:
        return PCSubgraph.from_edge_ids(g, paths=[direct[:1]])
    if not gss.blocks:
        return None

    matching = min_weight_perfect_matching(gss.weighted(PATH_WEIGHTS))
    if matching is None:
        return None
    decoded = decode_matching(gss, matching).decoded
    assert not decoded.cycles, "A minimum-weight perfect matching of G** decodes to a path only."
    return decoded


def max_pc_path_cycle(g: ColouredMultigraph, s: int, t: int, kind: GadgetSpec = "xp") -> MatchingDecodeResult | None:
    """
    Find a PC 1-path-cycle subgraph whose path joins ``s`` and ``t``, with the maximum number of edges.

    The E1 edges of G** weigh 0, the E2 and E3 edges 1: a maximum-weight perfect matching decodes to the optimum among
    the subgraphs whose path has at least 2 edges. The subgraphs made of a direct s-t edge and a maximum PC cycle
    subgraph of G - {s, t} are compared to it; when one of them wins, ``matching`` is the matching of (G - {s, t})*.

    Returns:
        The optimum, or None if there is no PC (s, t)-path.

    Raises:
        EmptyGadgetGraphError: if G** has no gadget block. The exception carries the direct s-t edges so that callers
            can fall back on them.
    """
    gss, direct = build_gstarstar(g, s, t, kind)
    if not gss.blocks:
        raise EmptyGadgetGraphError(f"G** of ({s}, {t}) has no gadget block.", direct_edges=direct)

    best = None
    matching = max_weight_perfect_matching(gss.weighted(PATH_WEIGHTS))
    if matching is not None:
        best = decode_matching(gss, matching)

    if direct:
        rest = g.remove_vertices([s, t])
        cycles = max_pc_cycle_subgraph(rest.graph, kind)
        if best is None or cycles.r + 1 > best.r:
            logger.debug("Direct edge %d beats the G** optimum for (%d, %d).", direct[0], s, t)
            decoded = PCSubgraph.from_edge_ids(
                g,
                paths=[direct[:1]],
                cycles=[[rest.edge_map[e] for e, _ in cycle] for cycle in cycles.decoded.cycles],
            )
            best = MatchingDecodeResult(cycles.matching, cycles.r + 1, decoded)
    return best


########################################################################################################################
#   === END COLOURS AND COLOUR-CONNECTIVITY ===
########################################################################################################################
def exists_pc_path_with_end_colours(
    g: ColouredMultigraph, s: int, t: int, i: int, j: int, kind: GadgetSpec = "xp"
) -> bool:
    """
    True iff a PC (s, t)-path starts at ``s`` with an edge of colour ``i`` and ends at ``t`` with an edge of colour
    ``j``.

    A direct s-t edge of colour q matches (q, q). Longer paths are searched in the graph without the direct s-t edges,
    the edges at ``s`` of colour other than ``i`` and the edges at ``t`` of colour other than ``j``.
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise VertexError(f"The endpoints of an (s, t)-path must differ, got s = t = {s}.")
    for colour in (i, j):
        if not 1 <= colour <= g.c:
            raise PreconditionError(f"Colour {colour} is outside 1..{g.c}.")

    dropped = []
    for inc in g.incident(s):
        if inc.other == t:
            if inc.colour == i == j:
                return True
            dropped.append(inc.edge)
        elif inc.colour != i:
            dropped.append(inc.edge)
    dropped += [inc.edge for inc in g.incident(t) if inc.other != s and inc.colour != j]
    restricted = g.without_edges(dropped).graph
    return exists_pc_path(restricted, s, t, kind)


def end_colour_pairs(g: ColouredMultigraph, s: int, t: int, kind: GadgetSpec = "xp") -> frozenset[tuple[int, int]]:
    """The colour pairs (i, j) of the first edge at ``s`` and last edge at ``t`` over the PC (s, t)-paths."""
    return frozenset(
        (i, j)
        for i in sorted(g.palette(s))
        for j in sorted(g.palette(t))
        if exists_pc_path_with_end_colours(g, s, t, i, j, kind)
    )


def colour_connected(g: ColouredMultigraph, x: int, y: int, kind: GadgetSpec = "xp") -> bool:
    """
    True iff two PC (x, y)-paths exist whose first edges have different colours and whose last edges have different
    colours.
    """
    pairs = end_colour_pairs(g, x, y, kind)
    return any(i1 != i2 and j1 != j2 for (i1, j1), (i2, j2) in combinations(pairs, 2))


def _colour_connected_pair(g: ColouredMultigraph, kind: GadgetSpec, pair: tuple[int, int]) -> bool:
    return colour_connected(g, *pair, kind=kind)


def colour_connected_graph(g: ColouredMultigraph, kind: GadgetSpec = "xp", n_jobs: int = 1) -> bool:
    """True iff every pair of distinct vertices of ``g`` is colour-connected."""
    pairs = list(combinations(g.vertices, 2))
    if n_jobs <= 1:
        return all(colour_connected(g, x, y, kind) for x, y in pairs)
    return all(parallel_map(partial(_colour_connected_pair, g, kind), pairs, n_jobs=n_jobs))
