import logging
from typing import Sequence

import networkx as nx

from ..errors import PreconditionError, VertexError
from .plain_graph import Matching, PlainGraph

logger = logging.getLogger(__name__)


def _blossom_matching(g: PlainGraph, weights: Sequence[int]) -> Matching:
    """
    Maximum-weight matching among the maximum-cardinality matchings of ``g``, with deterministic tie-breaking.

    The weights are shifted left by ``m`` bits and edge ``i`` receives the bonus ``2 ** (m - 1 - i)``. The bonuses of
    any matching sum to less than ``2 ** m`` so they never override the original weights, and among equally good
    matchings the one whose sorted edge-index tuple is lexicographically least wins (it is the one containing the least
    index of the symmetric difference). Every weight is a Python ``int``, which keeps networkx's dual updates exact.
    """
    m = g.m
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    for i, ((u, v, _), w) in enumerate(zip(g.edges, weights, strict=True)):
        graph.add_edge(u, v, weight=(int(w) << m) | (1 << (m - 1 - i)), index=i)

    mates = nx.max_weight_matching(graph, maxcardinality=True, weight="weight")
    indices = [graph.edges[u, v]["index"] for u, v in mates]
    return Matching.from_indices(g, indices)


def max_cardinality_matching(g: PlainGraph) -> Matching:
    """
    Compute a maximum-cardinality matching of a general graph (Edmonds' blossom algorithm).

    Among the maximum matchings, the one with the lexicographically least sorted edge-index tuple is returned, so the
    output only depends on the input.

    Args:
        g: The graph (its weights are ignored, but the returned matching reports its weight on ``g``).
    """
    return _blossom_matching(g, [0] * g.m)


def has_perfect_matching(g: PlainGraph) -> bool:
    """
    True iff ``g`` has a perfect matching. The empty graph has one (the empty matching).
    """
    if g.n % 2:
        return False
    if g.n == 0:
        return True
    # Quick rejection: an isolated vertex can't be matched.
    if not g.adjacency.any(axis=1).all():
        return False
    return 2 * max_cardinality_matching(g).cardinality == g.n


def max_weight_perfect_matching(g: PlainGraph) -> Matching | None:
    """
    Compute a maximum-weight perfect matching.

    Args:
        g: The weighted graph.

    Returns:
        A perfect matching of maximum total weight (lexicographically least edge-index tuple among the optimal ones),
        or None if ``g`` has no perfect matching.
    """
    if g.n % 2:
        return None
    matching = _blossom_matching(g, g.weights())
    if not matching.is_perfect(g.n):
        return None
    logger.debug("Perfect matching of weight %d on %d vertices / %d edges.", matching.weight, g.n, g.m)
    return matching


def min_weight_perfect_matching(g: PlainGraph) -> Matching | None:
    """
    Compute a minimum-weight perfect matching, by reflecting the weights ``w -> max(w) - w``.

    Every perfect matching has ``n / 2`` edges, so the reflection reverses the order of their total weights.
    """
    top = max(g.weights(), default=0)
    reflected = g.with_weights([top - w for w in g.weights()])
    matching = max_weight_perfect_matching(reflected)
    return matching.reweighted(g) if matching is not None else None


def augment(g: PlainGraph, m: Matching, path: Sequence[int]) -> Matching:
    """
    Symmetric difference of a matching with an augmenting path (given as a sequence of edge indices).
    """
    return Matching.from_indices(g, set(m.edges).symmetric_difference(path))


def find_augmenting_path(g: PlainGraph, m: Matching, s: int, t: int) -> tuple[int, ...] | None:
    """
    Search an M-augmenting path between two M-exposed vertices.

    An augmenting path alternates between non-matching and matching edges and starts and ends with non-matching
    edges. Its inner vertices are all covered by ``m``, so it lives in the graph ``H`` obtained by deleting every
    exposed vertex but ``s`` and ``t``. In ``H`` the only exposed vertices are ``s`` and ``t``: ``m`` is not maximum in
    ``H`` iff an augmenting (s, t)-path exists (Berge), and the symmetric difference of ``m`` with a maximum matching
    of ``H`` contains one.

    Args:
        g: The graph.
        m: A matching of ``g``.
        s: First endpoint, not covered by ``m``.
        t: Second endpoint, not covered by ``m``.

    Returns:
        The sequence of edge indices of the path from ``s`` to ``t``, or None if no such path exists.
    """
    for v in (s, t):
        if not 0 <= v < g.n:
            raise VertexError(f"Vertex {v} is outside 0..{g.n - 1}.")
    if s == t:
        raise VertexError("The endpoints of an augmenting path must differ.")
    mate = m.mate
    if s in mate or t in mate:
        raise PreconditionError(f"Augmenting path endpoints must be exposed: {[v for v in (s, t) if v in mate]}.")

    exposed = [v for v in range(g.n) if v not in mate and v not in (s, t)]
    h, kept = g.remove_vertices(exposed)
    h_matching = max_cardinality_matching(h)
    if h_matching.cardinality <= m.cardinality:
        return None

    # Walk the symmetric difference from s: edges of the new matching and of m alternate until t.
    new_mate = {kept[u]: kept[v] for u, v in h_matching.pairs} | {kept[v]: kept[u] for u, v in h_matching.pairs}
    path = []
    v, use_new = s, True
    while True:
        w = new_mate[v] if use_new else mate[v]
        path.append(g.index_of(v, w))
        v, use_new = w, not use_new
        if v == t:
            break
    assert len(path) % 2 == 1, "An augmenting path has an odd number of edges."
    return tuple(path)
