"""
Shortest PC cycle, with the least canonical vertex walk among the shortest ones.
"""
import logging
from functools import partial

from ..ecgraph import ColouredMultigraph, PCSubgraph
from ..errors import EmptyGadgetGraphError
from ..gadgets import EdgePart, GadgetGraph, GadgetSpec, build_gstar
from ..matching import max_weight_perfect_matching
from ..pc_utilities import parallel_map
from .decode import decode_matching
from .paths import shortest_pc_path

logger = logging.getLogger(__name__)


def shortest_pc_cycle(g: ColouredMultigraph, kind: GadgetSpec = "xp", n_jobs: int = 1) -> PCSubgraph | None:
    """
    Find a shortest PC cycle of ``g``.

    For every vertex x of the core graph which meets at least two E2 edges, a big-M weighted perfect matching of G*
    gives the length of a shortest PC cycle through x. Once the shortest length L is known, the cycle is grown one
    vertex at a time: each extension of the walk is kept only if a PC path of G** closes it into a PC cycle of length L.
    Among the shortest PC cycles, the one returned has the least canonical vertex walk (rotated to its least vertex,
    oriented toward its lesser neighbour), then the least edge ids.

    Args:
        g: The edge-coloured multigraph.
        kind: The gadget kind (or custom gadget) used to build G* and G**.
        n_jobs: Number of worker processes for the per-vertex matchings.

    Returns:
        A single-cycle PC subgraph, or None if ``g`` has no PC cycle.
    """
    try:
        gstar = build_gstar(g, kind)
    except EmptyGadgetGraphError:
        return None

    e2_degree = [0] * len(gstar.blocks)
    for (u, v, _), part in zip(gstar.carrier.edges, gstar.part, strict=True):
        if part == EdgePart.E2:
            for w in (u, v):
                e2_degree[gstar.block_index(w)] += 1
    candidates = [i for i, degree in enumerate(e2_degree) if degree >= 2]
    logger.debug("Shortest PC cycle: %d candidate vertices out of %d.", len(candidates), len(gstar.blocks))

    lengths = parallel_map(partial(_shortest_cycle_length_through, gstar), candidates, n_jobs=n_jobs)
    lengths = [length for length in lengths if length is not None]
    if not lengths:
        return None
    length = min(lengths)

    walk = _least_two_cycle(g) if length == 2 else _least_walk(g, length, kind)
    assert walk is not None, f"No PC cycle of length {length} was rebuilt."
    return PCSubgraph.from_edge_ids(g, cycles=[_least_edges(g, walk)])


def _shortest_cycle_length_through(gstar: GadgetGraph, block_index: int) -> int | None:
    """
    Length of a shortest PC cycle through the vertex of a block: the E2 edges at the block weigh M, the other E2 edges 0
    and the E1 edges 1. An optimal perfect matching uses two M edges whenever a PC cycle goes through the vertex, and
    among those matchings, the fewest E2 edges.
    """
    block = gstar.blocks[block_index]
    big_m = gstar.n_star + gstar.m_star + 1
    at_block = set(block.vertices)

    weights = []
    for (u, v, _), part in zip(gstar.carrier.edges, gstar.part, strict=True):
        if part == EdgePart.E1:
            weights.append(1)
        elif u in at_block or v in at_block:
            weights.append(big_m)
        else:
            weights.append(0)

    matching = max_weight_perfect_matching(gstar.weighted(weights))
    assert matching is not None, "G* has a perfect matching made of the gadgets' own ones (P2)."
    heavy = [i for i in matching.edges if weights[i] == big_m]
    if not heavy:
        return None
    assert len(heavy) == 2, f"The block of vertex {block.vertex} meets {len(heavy)} E2 edges of the matching."

    decoded = decode_matching(gstar, matching).decoded
    assert len(decoded.cycles) == 1, "A shortest cycle matching decodes to a single cycle."
    return decoded.n_edges


########################################################################################################################
#   === LEAST CANONICAL WALK ===
########################################################################################################################
def _least_two_cycle(g: ColouredMultigraph) -> list[int] | None:
    for u in g.vertices:
        for v in sorted({inc.other for inc in g.incident(u) if inc.other > u}):
            if len({g.colour(e) for e in g.edges_between(u, v)}) >= 2:
                return [u, v]
    return None


def _least_walk(g: ColouredMultigraph, length: int, kind: GadgetSpec) -> list[int] | None:
    """
    Least canonical vertex walk of a PC cycle of ``length`` >= 3, ``length`` being the shortest PC cycle length.

    A prefix is tracked with the set of its achievable (first colour, last colour) pairs over the PC edge choices.
    """
    prefix, states = None, None
    for v0 in g.vertices:
        for v1 in sorted({inc.other for inc in g.incident(v0) if inc.other > v0}):
            first = frozenset((inc.colour, inc.colour) for inc in g.incident(v0) if inc.other == v1)
            if _closable(g, [v0, v1], first, length, kind):
                prefix, states = [v0, v1], first
                break
        if prefix is not None:
            break
    if prefix is None:
        return None

    while len(prefix) < length:
        tail = prefix[-1]
        for w in sorted({inc.other for inc in g.incident(tail) if inc.other > prefix[0] and inc.other not in prefix}):
            step = [inc.colour for inc in g.incident(tail) if inc.other == w]
            extended = frozenset((f, col) for f, last in states for col in step if col != last)
            if extended and _closable(g, prefix + [w], extended, length, kind):
                prefix, states = prefix + [w], extended
                break
        else:
            raise AssertionError(f"The walk prefix {prefix} cannot be extended to a PC cycle of length {length}.")
    return prefix


def _closable(
    g: ColouredMultigraph, prefix: list[int], states: frozenset[tuple[int, int]], length: int, kind: GadgetSpec
) -> bool:
    """
    True iff a PC (tail, head)-path of ``length - len(prefix) + 1`` edges closes ``prefix`` into a PC cycle whose
    canonical walk starts with ``prefix``.

    The path avoids the vertices below the head and the inner vertices of the prefix, and it reaches the head from a
    vertex greater than ``prefix[1]``. No shorter closing path exists since ``length`` is the shortest cycle length.
    """
    head, second, tail = prefix[0], prefix[1], prefix[-1]
    remaining = length - len(prefix) + 1
    blocked = set(range(1, head)) | set(prefix[1:-1])

    base = set()
    for e, (u, v, _) in enumerate(g.edges):
        if u in blocked or v in blocked:
            base.add(e)
    base.update(inc.edge for inc in g.incident(head) if inc.other < second)

    for first_colour, last_colour in sorted(states):
        dropped = set(base)
        dropped.update(inc.edge for inc in g.incident(tail) if inc.colour == last_colour)
        dropped.update(inc.edge for inc in g.incident(head) if inc.colour == first_colour)
        path = shortest_pc_path(g.without_edges(dropped).graph, tail, head, kind)
        if path is not None and path.n_edges == remaining:
            return True
    return False


def _least_edges(g: ColouredMultigraph, walk: list[int]) -> list[int]:
    """Least edge id sequence along the closed ``walk`` which alternates colours, the closing pair included."""
    k = len(walk)
    if k == 2:
        first, *others = sorted(g.edges_between(*walk))
        return [first, next(e for e in others if g.colour(e) != g.colour(first))]

    options = [sorted(g.edges_between(walk[i], walk[(i + 1) % k])) for i in range(k)]
    chosen = []
    for i in range(k):
        for e in options[i]:
            if chosen and g.colour(e) == g.colour(chosen[-1]):
                continue
            if _completes(g, options, chosen + [e]):
                chosen.append(e)
                break
        else:
            raise AssertionError(f"No PC edge choice along the walk {walk}.")
    return chosen


def _completes(g: ColouredMultigraph, options: list[list[int]], chosen: list[int]) -> bool:
    reachable = {g.colour(chosen[-1])}
    for i in range(len(chosen), len(options)):
        reachable = {g.colour(e) for e in options[i] if any(g.colour(e) != col for col in reachable)}
        if not reachable:
            return False
    return any(col != g.colour(chosen[0]) for col in reachable)
