from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, TypeAlias

import networkx as nx
import numpy as np

from ..errors import InvalidGraphError, PreconditionError, VertexError
from .graph_utilities import apply_lookup, compose_maps, index_to_mask, relabel_lookup

Edge: TypeAlias = tuple[int, int, int]
"""An edge ``(u, v, colour)`` with ``u < v``. Vertices and colours are 1-indexed."""


class Incidence(NamedTuple):
    edge: int
    other: int
    colour: int


class SubgraphMap(NamedTuple):
    """A graph derived from another one, with the back-maps to the original labels.

    ``vertex_map[new - 1]`` is the original label of the vertex ``new``, ``edge_map[new_id]`` the original id of the
    edge ``new_id``.
    """

    graph: "ColouredMultigraph"
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]


@dataclass(frozen=True)
class ColouredMultigraph:
    """
    Edge-coloured multigraph on the vertices ``1..n`` with colours ``1..c``.

    Parallel edges are allowed as long as they have different colours. Edges are stored canonically (``u < v``, sorted
    by ``(u, v, colour)``) and an edge is identified everywhere by its index in this sorted tuple.

    Args:
        n: Number of vertices.
        c: Number of colours.
        edges: Iterable of ``(u, v, colour)`` triples in any order and orientation.
    """

    n: int
    c: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"The vertex count must be non-negative, got {self.n}.")
        if self.c < 0:
            raise InvalidGraphError(f"The colour count must be non-negative, got {self.c}.")

        canonical = []
        for u, v, colour in self.edges:
            u, v, colour = int(u), int(v), int(colour)
            if u == v:
                raise InvalidGraphError(f"Loop edge ({u}, {v}) of colour {colour}.")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidGraphError(f"Edge ({u}, {v}) has an endpoint outside 1..{self.n}.")
            if not 1 <= colour <= self.c:
                raise InvalidGraphError(f"Edge ({u}, {v}) has colour {colour} outside 1..{self.c}.")
            canonical.append((min(u, v), max(u, v), colour))
        canonical.sort()

        for e1, e2 in zip(canonical[:-1], canonical[1:], strict=True):
            if e1 == e2:
                raise InvalidGraphError(f"Duplicated edge ({e1[0]}, {e1[1]}) of colour {e1[2]}.")
        object.__setattr__(self, "edges", tuple(canonical))

    # --- Sizes ---
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise VertexError(f"Vertex {v} is outside 1..{self.n}.")
        return v

    # --- Array views ---
    @cached_property
    def edge_array(self) -> np.ndarray:
        """The edges as a ``(m, 3)`` integer array of rows ``(u, v, colour)``."""
        return np.asarray(self.edges, dtype=np.int64).reshape(-1, 3)

    @cached_property
    def colour_degrees(self) -> np.ndarray:
        """
        The monochromatic degrees as a ``(n + 1, c + 1)`` array: ``colour_degrees[v, i]`` is ``d_i(v)``.
        Row 0 and column 0 are unused so that vertices and colours index the table directly.
        """
        degrees = np.zeros((self.n + 1, self.c + 1), dtype=np.int64)
        u, v, colour = self.edge_array.T
        np.add.at(degrees, (u, colour), 1)
        np.add.at(degrees, (v, colour), 1)
        return degrees

    @cached_property
    def _incidence(self) -> tuple[tuple[Incidence, ...], ...]:
        incidence: list[list[Incidence]] = [[] for _ in range(self.n + 1)]
        for e, (u, v, colour) in enumerate(self.edges):
            incidence[u].append(Incidence(e, v, colour))
            incidence[v].append(Incidence(e, u, colour))
        return tuple(tuple(_) for _ in incidence)

    @cached_property
    def _edge_ids(self) -> dict[Edge, int]:
        return {edge: e for e, edge in enumerate(self.edges)}

    # --- Local structure ---
    def incident(self, v: int) -> tuple[Incidence, ...]:
        """Edges incident to ``v`` in increasing edge id order."""
        return self._incidence[self.check_vertex(v)]

    def endpoints(self, e: int) -> tuple[int, int]:
        u, v, _ = self.edges[e]
        return u, v

    def colour(self, e: int) -> int:
        return self.edges[e][2]

    def other_end(self, e: int, v: int) -> int:
        u, w, _ = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise VertexError(f"Vertex {v} is not an endpoint of edge {e}.")

    def edge_id(self, u: int, v: int, colour: int) -> int | None:
        return self._edge_ids.get((min(u, v), max(u, v), colour))

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        return tuple(inc.edge for inc in self.incident(u) if inc.other == v)

    def palette(self, v: int) -> frozenset[int]:
        """χ(v): the colours of the edges incident to ``v``."""
        return frozenset(np.flatnonzero(self.colour_degrees[self.check_vertex(v)]).tolist())

    def neighbours(self, v: int, colour: int) -> frozenset[int]:
        """N_colour(v)."""
        return frozenset(inc.other for inc in self.incident(v) if inc.colour == colour)

    def colours_used(self) -> frozenset[int]:
        return frozenset(int(_) for _ in np.unique(self.edge_array[:, 2]))

    # --- Global properties ---
    def is_simple(self) -> bool:
        """True if no two edges join the same pair of vertices (an edge-coloured *graph*)."""
        pairs = {(u, v) for u, v, _ in self.edges}
        return len(pairs) == self.m

    def is_complete(self) -> bool:
        """True if every pair of vertices is joined by exactly one edge (a K^c_n)."""
        return self.is_simple() and self.m == self.n * (self.n - 1) // 2

    # --- Derived graphs ---
    def induced_subgraph(self, vertices: Iterable[int]) -> SubgraphMap:
        """
        The subgraph induced by ``vertices``, relabelled to ``1..k`` in increasing original order.
        """
        keep = np.unique(np.asarray(list(vertices), dtype=np.int64))
        for v in keep:
            self.check_vertex(int(v))
        mask = index_to_mask(keep, self.n + 1)
        lookup = relabel_lookup(mask)

        edges = self.edge_array
        kept_edges = np.flatnonzero(mask[edges[:, 0]] & mask[edges[:, 1]])
        new_edges = np.stack(
            [
                apply_lookup(edges[kept_edges, 0], lookup),
                apply_lookup(edges[kept_edges, 1], lookup),
                edges[kept_edges, 2],
            ],
            axis=1,
        )

        # The relabelling is monotone, so the canonical edge order is preserved and kept_edges is the edge back-map.
        graph = ColouredMultigraph(len(keep), self.c, tuple(map(tuple, new_edges.tolist())))
        return SubgraphMap(graph, tuple(keep.tolist()), tuple(kept_edges.tolist()))

    def remove_vertices(self, vertices: Iterable[int]) -> SubgraphMap:
        vertices = [self.check_vertex(int(v)) for v in vertices]
        kept = index_to_mask(vertices, self.n + 1, invert=True)
        return self.induced_subgraph(np.flatnonzero(kept[1:]) + 1)

    def without_edges(self, edge_ids: Iterable[int]) -> SubgraphMap:
        """The same vertex set without the given edges."""
        kept = np.flatnonzero(index_to_mask(list(edge_ids), self.m, invert=True))
        graph = ColouredMultigraph(self.n, self.c, tuple(self.edges[e] for e in kept))
        return SubgraphMap(graph, tuple(self.vertices), tuple(kept.tolist()))

    def to_networkx(self) -> nx.MultiGraph:
        """A ``networkx.MultiGraph`` whose edge keys are the edge ids and carry a ``colour`` attribute."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for e, (u, v, colour) in enumerate(self.edges):
            graph.add_edge(u, v, key=e, colour=colour)
        return graph


@dataclass(frozen=True)
class VertexColourProfile:
    vertex: int
    palette: frozenset[int]
    degrees: dict[int, int]
    neighbours: dict[int, frozenset[int]]


def profile(g: ColouredMultigraph, v: int) -> VertexColourProfile:
    """
    Colour profile of a vertex: its palette χ(v), and for each colour of the palette d_i(v) and N_i(v).
    """
    palette = g.palette(v)
    degrees = {i: int(g.colour_degrees[v, i]) for i in sorted(palette)}
    neighbours = {i: g.neighbours(v, i) for i in sorted(palette)}
    return VertexColourProfile(v, palette, degrees, neighbours)


def mono_degree_bounds(g: ColouredMultigraph) -> tuple[int, int]:
    """
    Compute (δ_mon, Δ_mon).

    Δ_mon is the maximum of d_j(v) over every vertex and colour. δ_mon is the minimum of d_j(v) over every vertex v and
    every colour j of its palette χ(v); a vertex with an empty palette contributes 0.

    Returns:
        The tuple (delta_mon, Delta_mon).
    """
    if g.n == 0:
        raise PreconditionError("Monochromatic degrees are undefined for a graph without vertex.")
    degrees = g.colour_degrees[1:, 1:]
    delta_max = int(degrees.max(initial=0))
    # Colours absent from a palette are excluded from the minimum, empty palettes count as 0.
    masked = np.where(degrees > 0, degrees, np.iinfo(np.int64).max)
    per_vertex = masked.min(axis=1, initial=np.iinfo(np.int64).max)
    per_vertex[per_vertex == np.iinfo(np.int64).max] = 0
    return int(per_vertex.min()), delta_max


def core_graph(g: ColouredMultigraph, iterate: bool = False) -> SubgraphMap:
    """
    G' = G - {x : |χ(x)| ≤ 1}.

    The palettes are evaluated once on ``g`` (single pass), so a vertex which only loses colours because of the removal
    is kept. Vertices of empty palette are removed as well.

    Args:
        g: The edge-coloured multigraph.
        iterate: If True, repeat the removal until every remaining vertex has at least two colours.

    Returns:
        The core graph with its vertex and edge back-maps to ``g``.
    """
    palette_size = (g.colour_degrees[1:, 1:] > 0).sum(axis=1)
    core = g.induced_subgraph(np.flatnonzero(palette_size >= 2) + 1)
    if not iterate or core.graph.n == g.n:
        return core

    inner = core_graph(core.graph, iterate=True)
    return SubgraphMap(
        inner.graph,
        compose_maps(core.vertex_map, inner.vertex_map),
        compose_maps(core.edge_map, inner.edge_map, one_indexed=False),
    )
