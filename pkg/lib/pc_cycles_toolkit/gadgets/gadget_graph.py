"""
The gadget graphs G* and G** of an edge-coloured multigraph G.

G* replaces every vertex x of the core graph G' by a P-gadget G_x (edges E1) and every edge yz of colour q between two
core vertices by the edge y_q z_q (edges E2). For two vertices s, t, G** is built in the same way on H = G - {s, t},
then s and t are added with the edges
E3 = {s x_i : sx ∈ E(G), χ(sx) = i} ∪ {t x_i : tx ∈ E(G), χ(tx) = i}.

Layout: the gadget blocks are placed in increasing original vertex order, each block keeping the internal order of its
gadget, followed by s and t for G**. Edges are listed E1 (block by block), then E2, then E3, each of them in canonical
edge order.
"""
import logging
from bisect import bisect_right
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from ..ecgraph import ColouredMultigraph, core_graph
from ..errors import EmptyGadgetGraphError, VertexError
from ..matching import Matching, PlainGraph, max_cardinality_matching
from .p_gadgets import Gadget, GadgetSpec, gadget_factory

logger = logging.getLogger(__name__)


class EdgePart(IntEnum):
    E1 = 1
    E2 = 2
    E3 = 3


@dataclass(frozen=True)
class GadgetBlock:
    """The gadget of an original vertex, placed at ``offset`` in the gadget graph."""

    vertex: int
    gadget: Gadget
    offset: int

    def terminal(self, colour: int) -> int:
        return self.offset + self.gadget.terminals[colour]

    @property
    def vertices(self) -> range:
        return range(self.offset, self.offset + self.gadget.carrier.n)


@dataclass(frozen=True)
class GadgetGraph:
    """
    A plain graph assembled from gadgets, whose edges are tagged E1, E2 or E3.

    Attributes:
        source: The edge-coloured multigraph the gadget graph was built from.
        carrier: The uncoloured graph (every weight 0).
        part: The part of every carrier edge.
        origin: For every carrier edge, the id of the edge of ``source`` it encodes (None for E1 edges).
        blocks: The gadget blocks, by increasing original vertex.
        s: The vertex s of the source graph (G** only), placed at carrier vertex ``n** - 2``.
        t: The vertex t of the source graph (G** only), placed at carrier vertex ``n** - 1``.
    """

    source: ColouredMultigraph
    carrier: PlainGraph
    part: tuple[EdgePart, ...]
    origin: tuple[int | None, ...]
    blocks: tuple[GadgetBlock, ...]
    s: int | None = None
    t: int | None = None

    @property
    def n_star(self) -> int:
        return self.carrier.n

    @property
    def m_star(self) -> int:
        return self.carrier.m

    @property
    def s_vertex(self) -> int | None:
        return None if self.s is None else self.carrier.n - 2

    @property
    def t_vertex(self) -> int | None:
        return None if self.t is None else self.carrier.n - 1

    @cached_property
    def _offsets(self) -> list[int]:
        return [block.offset for block in self.blocks]

    @cached_property
    def block_at(self) -> dict[int, GadgetBlock]:
        """Map an original vertex of the source graph to its gadget block."""
        return {block.vertex: block for block in self.blocks}

    def block_index(self, v: int) -> int | None:
        """Index of the block containing the carrier vertex ``v``, None for s and t."""
        if not 0 <= v < self.carrier.n:
            raise VertexError(f"Vertex {v} is outside 0..{self.carrier.n - 1}.")
        i = bisect_right(self._offsets, v) - 1
        if i < 0 or v not in self.blocks[i].vertices:
            return None
        return i

    def block_of(self, v: int) -> GadgetBlock | None:
        i = self.block_index(v)
        return None if i is None else self.blocks[i]

    def edges_of_part(self, part: EdgePart) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.part) if p == part)

    def weighted(self, weights: Mapping[EdgePart, int] | Sequence[int]) -> PlainGraph:
        """
        The carrier with new weights, either one per part (``{EdgePart.E1: 0, EdgePart.E2: 1}``, missing parts get 0)
        or one per edge.
        """
        if isinstance(weights, Mapping):
            weights = [weights.get(p, 0) for p in self.part]
        return self.carrier.with_weights(weights)

    def internal_perfect_matching(self) -> Matching:
        """The union of a perfect matching of every gadget, which exists by P2 (s and t are left exposed)."""
        indices = []
        for block in self.blocks:
            local = max_cardinality_matching(block.gadget.carrier)
            assert local.is_perfect(block.gadget.carrier.n), f"The gadget of vertex {block.vertex} violates P2."
            indices += [self.carrier.index_of(u + block.offset, v + block.offset) for u, v in local.pairs]
        return Matching.from_indices(self.carrier, indices)

    def vertex_label(self, v: int) -> str:
        if v == self.s_vertex:
            return "s"
        if v == self.t_vertex:
            return "t"
        block = self.block_of(v)
        return f"{block.vertex}:{block.gadget.labels[v - block.offset]}"

    def dump(self) -> str:
        """Debug listing of the blocks and of the E1, E2 and E3 edges with their origins."""
        lines = [f"gadget graph: {self.n_star} vertices, {self.m_star} edges"]
        for block in self.blocks:
            terminals = " ".join(f"{q}->{block.terminal(q)}" for q in block.gadget.palette)
            lines.append(
                f"block {block.vertex} [{block.gadget.kind}] vertices {block.offset}..{block.vertices[-1]}"
                f" terminals {terminals}"
            )
        if self.s is not None:
            lines.append(f"s = {self.s_vertex} (vertex {self.s}), t = {self.t_vertex} (vertex {self.t})")
        for i, ((u, v, _), part, origin) in enumerate(zip(self.carrier.edges, self.part, self.origin, strict=True)):
            line = f"{part.name} {i}: {u} {v} ({self.vertex_label(u)} {self.vertex_label(v)})"
            if origin is not None:
                a, b, colour = self.source.edges[origin]
                line += f" <- edge {origin} ({a} {b} colour {colour})"
            lines.append(line)
        return "\n".join(lines)


class _Builder:
    def __init__(self, g: ColouredMultigraph):
        self.g = g
        self.edges: list[tuple[int, int, int]] = []
        self.part: list[EdgePart] = []
        self.origin: list[int | None] = []
        self.blocks: list[GadgetBlock] = []
        self.n = 0

    def add_blocks(self, vertices: Iterable[int], spec: GadgetSpec, palette_graph: ColouredMultigraph):
        factory = gadget_factory(spec)
        for x in vertices:
            gadget = factory(sorted(palette_graph.palette(x)))
            block = GadgetBlock(x, gadget, self.n)
            self.blocks.append(block)
            for u, v, _ in gadget.carrier.edges:
                self.add_edge(u + block.offset, v + block.offset, EdgePart.E1, None)
            self.n += gadget.carrier.n

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int, part: EdgePart, origin: int | None):
        self.edges.append((u, v, 0))
        self.part.append(part)
        self.origin.append(origin)

    def build(self, s: int | None = None, t: int | None = None) -> GadgetGraph:
        carrier = PlainGraph(self.n, tuple(self.edges))
        return GadgetGraph(self.g, carrier, tuple(self.part), tuple(self.origin), tuple(self.blocks), s, t)


def build_gstar(g: ColouredMultigraph, kind: GadgetSpec = "xp") -> GadgetGraph:
    """
    Build G*: one gadget per vertex of the core graph G' (with its palette in G) and one E2 edge per edge of G with both
    ends in G'.

    Args:
        g: The edge-coloured multigraph.
        kind: The gadget kind, or a custom gadget.

    Raises:
        EmptyGadgetGraphError: if G' is empty.
    """
    core = core_graph(g)
    if core.graph.n == 0:
        raise EmptyGadgetGraphError("The core graph is empty: no vertex sees two colours.")

    builder = _Builder(g)
    builder.add_blocks(core.vertex_map, kind, g)
    block_at = {block.vertex: block for block in builder.blocks}
    for e, (u, v, colour) in enumerate(g.edges):
        if u in block_at and v in block_at:
            builder.add_edge(block_at[u].terminal(colour), block_at[v].terminal(colour), EdgePart.E2, e)

    gstar = builder.build()
    logger.debug("G* (%s): n* = %d, m* = %d over %d blocks.", kind, gstar.n_star, gstar.m_star, len(gstar.blocks))
    return gstar


class GStarStar(NamedTuple):
    """G** and the ids of the direct s-t edges of G, which G** leaves out."""

    graph: GadgetGraph
    direct_edges: tuple[int, ...]


def build_gstarstar(g: ColouredMultigraph, s: int, t: int, kind: GadgetSpec = "xp") -> GStarStar:
    """
    Build G** for the pair (s, t).

    Every vertex x other than s and t with at least two colours in G gets a gadget of palette χ_G(x), which includes the
    colours of its edges to s and t. E2 encodes the edges of G - {s, t} between two such vertices; E3 the edges from s
    and t to them. The direct s-t edges are returned apart.

    Raises:
        VertexError: if s or t is not a vertex of ``g``, or s = t.
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise VertexError(f"G** needs two distinct vertices, got s = t = {s}.")

    internal = [x for x in g.vertices if x not in (s, t) and len(g.palette(x)) >= 2]
    builder = _Builder(g)
    builder.add_blocks(internal, kind, g)
    block_at = {block.vertex: block for block in builder.blocks}
    s_index, t_index = builder.add_vertex(), builder.add_vertex()
    special = {s: s_index, t: t_index}

    direct, e3 = [], []
    for e, (u, v, colour) in enumerate(g.edges):
        if u in block_at and v in block_at:
            builder.add_edge(block_at[u].terminal(colour), block_at[v].terminal(colour), EdgePart.E2, e)
        elif u in special and v in special:
            direct.append(e)
        elif u in special and v in block_at:
            e3.append((special[u], block_at[v].terminal(colour), e))
        elif v in special and u in block_at:
            e3.append((special[v], block_at[u].terminal(colour), e))
    for a, b, e in e3:
        builder.add_edge(a, b, EdgePart.E3, e)

    gss = builder.build(s, t)
    logger.debug("G** (%s): n** = %d, m** = %d, %d direct s-t edges.", kind, gss.n_star, gss.m_star, len(direct))
    return GStarStar(gss, tuple(direct))
