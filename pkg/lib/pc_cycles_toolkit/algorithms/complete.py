"""
Longest PC paths in complete edge-coloured graphs K^c_n, and the PC Hamilton cycle problem in K^2_n.
"""
import logging
from typing import NamedTuple

from ..ecgraph import ColouredMultigraph, PCSubgraph
from ..errors import PreconditionError
from ..gadgets import GadgetSpec
from ..oracle import DEFAULT_BUDGET, OracleBudget, longest_pc_path_bf
from .cycles import max_pc_cycle_subgraph, pc_cycle_factor_exists
from .paths import colour_connected_graph

logger = logging.getLogger(__name__)


def _check_complete(k: ColouredMultigraph, two_coloured: bool = False):
    if k.n == 0:
        raise PreconditionError("The complete graph must have at least one vertex.")
    if not k.is_complete():
        raise PreconditionError(f"The graph is not complete: {k.m} edges on {k.n} vertices, one per pair expected.")
    if two_coloured and k.c != 2:
        raise PreconditionError(f"A K^2_n is expected, got {k.c} colours.")


def max_pc_one_path_cycle_complete(k: ColouredMultigraph, kind: GadgetSpec = "xp") -> tuple[int, PCSubgraph]:
    """
    Maximum order of a PC 1-path-cycle subgraph of a K^c_n (n >= 2), with one such subgraph.

    Two new vertices x, y are joined to every vertex by edges of colour c + 1, and to each other by an edge of colour
    c + 2. A PC cycle of the augmented graph through x goes through y, and is a PC path of K^c_n closed by
    v - x - y - w: the maximum PC cycle subgraph of the augmented graph covers 2 more vertices than the maximum PC
    1-path-cycle subgraph of K^c_n.
    """
    n, c = k.n, k.c
    x, y = n + 1, n + 2
    edges = list(k.edges) + [(w, v, c + 1) for v in k.vertices for w in (x, y)] + [(x, y, c + 2)]
    augmented = ColouredMultigraph(n + 2, c + 2, edges)

    result = max_pc_cycle_subgraph(augmented, kind)
    order = result.r - 2
    xy = augmented.edge_id(x, y, c + 2)

    paths, cycles = [], []
    for cycle in result.decoded.cycles:
        ids = [e for e, _ in cycle]
        if xy not in ids:
            cycles.append(ids)
            continue
        i = ids.index(xy)
        ids = ids[i:] + ids[:i]
        # xy, then the edges at x and y around the path; x and y share no neighbour on a PC cycle
        assert len(ids) >= 4, "A PC cycle through x and y has at least 4 edges."
        paths.append(ids[2:-1])

    def to_k(ids: list[int]) -> list[int]:
        return [k.edge_id(*augmented.edges[e]) for e in ids]

    witness = PCSubgraph.from_edge_ids(k, paths=[to_k(p) for p in paths], cycles=[to_k(cy) for cy in cycles])
    assert len(paths) == 1, "The maximum PC cycle subgraph of the augmented graph goes through x and y."
    assert len(witness.vertices(k)) == order, "The witness order disagrees with the matching weight."
    return order, witness


class LongestPathResult(NamedTuple):
    """
    Attributes:
        length: Number of edges of a longest PC path.
        witness: A PC 1-path-cycle subgraph of order ``length + 1``.
        path: A longest PC path, when the graph is small enough for the exhaustive search (or the witness has no cycle).
    """

    length: int
    witness: PCSubgraph
    path: PCSubgraph | None


def longest_pc_path_complete(
    k: ColouredMultigraph, kind: GadgetSpec = "xp", budget: OracleBudget = DEFAULT_BUDGET
) -> LongestPathResult:
    """
    Length of a longest PC path of a complete edge-coloured graph K^c_n.

    The maximum order of a PC path of K^c_n equals the maximum order of a PC 1-path-cycle subgraph, which is computed by
    ``max_pc_one_path_cycle_complete``.

    Args:
        k: The complete edge-coloured graph.
        kind: The gadget kind (or custom gadget).
        budget: Limits under which an explicit longest path is searched exhaustively.

    Raises:
        PreconditionError: if ``k`` is not complete.
    """
    _check_complete(k)
    if k.n == 1:
        return LongestPathResult(0, PCSubgraph(), PCSubgraph())

    order, witness = max_pc_one_path_cycle_complete(k, kind)
    length = order - 1

    path = None
    if not witness.cycles:
        path = witness
    elif budget.allows(k):
        longest = longest_pc_path_bf(k, target=length, budget=budget)
        assert longest.value == length, f"A PC path of length {length} exists, the search found {longest.value}."
        path = longest.witness
    else:
        logger.info("K^%d_%d exceeds the oracle budget: no explicit longest path.", k.c, k.n)
    return LongestPathResult(length, witness, path)


def hamilton_pc_cycle_k2(k: ColouredMultigraph, kind: GadgetSpec = "xp", n_jobs: int = 1) -> bool:
    """
    True iff the K^2_n ``k`` has a PC Hamilton cycle, that is iff it is colour-connected and has a PC cycle factor.

    Raises:
        PreconditionError: if ``k`` is not complete or not 2-coloured.
    """
    _check_complete(k, two_coloured=True)
    return pc_cycle_factor_exists(k, kind) and colour_connected_graph(k, kind, n_jobs=n_jobs)


def longest_pc_cycle_k2(k: ColouredMultigraph, kind: GadgetSpec = "xp", n_jobs: int = 1) -> int:
    """
    Length of a longest PC cycle of a colour-connected K^2_n, equal to the maximum order of a PC cycle subgraph.

    Raises:
        PreconditionError: if ``k`` is not complete, not 2-coloured, or not colour-connected.
    """
    _check_complete(k, two_coloured=True)
    if not colour_connected_graph(k, kind, n_jobs=n_jobs):
        raise PreconditionError("The K^2_n is not colour-connected.")
    return max_pc_cycle_subgraph(k, kind).r
