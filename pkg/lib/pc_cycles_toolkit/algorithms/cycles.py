"""
PC cycle problems solved through perfect matchings of G*.
"""
import logging

from ..ecgraph import ColouredMultigraph
from ..errors import EmptyGadgetGraphError
from ..gadgets import EdgePart, GadgetSpec, build_gstar
from ..matching import max_weight_perfect_matching
from .decode import MatchingDecodeResult, decode_matching

logger = logging.getLogger(__name__)


def max_pc_cycle_subgraph(g: ColouredMultigraph, kind: GadgetSpec = "xp") -> MatchingDecodeResult:
    """
    Find a PC cycle subgraph of ``g`` with the maximum number of edges.

    E1 edges of G* weigh 0 and E2 edges 1: a maximum-weight perfect matching of G* has as many E2 edges as possible,
    and decodes to a maximum PC cycle subgraph.

    Args:
        g: The edge-coloured multigraph.
        kind: The gadget kind (or custom gadget) used to build G*.

    Returns:
        The decoded matching; ``r`` is 0 and the subgraph empty when ``g`` has no PC cycle (or an empty core).
    """
    try:
        gstar = build_gstar(g, kind)
    except EmptyGadgetGraphError:
        return MatchingDecodeResult.empty()

    logger.debug("Maximum PC cycle subgraph: G* has %d vertices and %d edges.", gstar.n_star, gstar.m_star)
    matching = max_weight_perfect_matching(gstar.weighted({EdgePart.E1: 0, EdgePart.E2: 1}))
    assert matching is not None, "G* has a perfect matching made of the gadgets' own ones (P2)."
    return decode_matching(gstar, matching)


def has_pc_cycle_matching(g: ColouredMultigraph, kind: GadgetSpec = "xp") -> bool:
    return max_pc_cycle_subgraph(g, kind).r > 0


def pc_cycle_factor_exists(g: ColouredMultigraph, kind: GadgetSpec = "xp") -> bool:
    """True iff ``g`` has a spanning PC cycle subgraph. The graph without vertex has none."""
    if g.n == 0:
        return False
    result = max_pc_cycle_subgraph(g, kind)
    return result.r == g.n and len(result.decoded.vertices(g)) == g.n

