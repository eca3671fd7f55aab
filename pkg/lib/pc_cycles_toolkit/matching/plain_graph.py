from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from ..errors import InvalidGraphError


@dataclass(frozen=True)
class PlainGraph:
    """
    Simple uncoloured graph on the vertices ``0..n-1`` with non-negative integer edge weights.

    The edge order is the construction order: an edge is identified by its index in ``edges``, which is what matchings
    refer to. Each edge is stored as ``(u, v, weight)`` with ``u < v``.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        normalized = []
        pairs = set()
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), int(w)
            if u == v:
                raise InvalidGraphError(f"Loop on vertex {u}.")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"Edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}.")
            if w < 0:
                raise InvalidGraphError(f"Edge ({u}, {v}) has a negative weight {w}.")
            u, v = min(u, v), max(u, v)
            if (u, v) in pairs:
                raise InvalidGraphError(f"Parallel edge ({u}, {v}).")
            pairs.add((u, v))
            normalized.append((u, v, w))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map an endpoint pair ``(u, v)`` (``u < v``) to its edge index."""
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        return self.edge_index[(min(u, v), max(u, v))]

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Boolean adjacency matrix."""
        adj = np.zeros((self.n, self.n), dtype=bool)
        if self.edges:
            u, v, _ = np.asarray(self.edges, dtype=np.int64).T
            adj[u, v] = True
            adj[v, u] = True
        return adj

    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, _, w in self.edges)

    def with_weights(self, weights: Sequence[int]) -> "PlainGraph":
        assert len(weights) == self.m, f"Expected {self.m} weights, got {len(weights)}."
        return PlainGraph(self.n, tuple((u, v, w) for (u, v, _), w in zip(self.edges, weights, strict=True)))

    def remove_vertices(self, vertices: Iterable[int]) -> tuple["PlainGraph", tuple[int, ...]]:
        """
        Delete vertices and their incident edges.

        Returns:
            The remaining graph, relabelled consecutively, and the tuple mapping its vertices to the original ones.
        """
        removed = set(vertices)
        kept = tuple(v for v in range(self.n) if v not in removed)
        lookup = {v: i for i, v in enumerate(kept)}
        edges = tuple(
            (lookup[u], lookup[v], w) for u, v, w in self.edges if u in lookup and v in lookup
        )
        return PlainGraph(len(kept), edges), kept

    def to_networkx(self) -> nx.Graph:
        """A ``networkx.Graph`` whose edges carry their ``weight`` and their ``index`` in this graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for i, (u, v, w) in enumerate(self.edges):
            graph.add_edge(u, v, weight=w, index=i)
        return graph


@dataclass(frozen=True)
class Matching:
    """
    A set of pairwise non-adjacent edges of a ``PlainGraph``.

    Attributes:
        edges: Sorted indices of the matched edges in the graph.
        pairs: The matched endpoint pairs ``(u, v)``, in the same order as ``edges``.
        weight: Total weight of the matched edges.
    """

    edges: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    weight: int

    @classmethod
    def from_indices(cls, g: PlainGraph, indices: Iterable[int]) -> "Matching":
        indices = tuple(sorted(set(indices)))
        pairs = tuple(g.edges[i][:2] for i in indices)
        covered = [v for p in pairs for v in p]
        assert len(covered) == len(set(covered)), f"Edges {indices} are not pairwise disjoint."
        return cls(indices, pairs, sum(g.edges[i][2] for i in indices))

    @property
    def cardinality(self) -> int:
        return len(self.edges)

    @cached_property
    def mate(self) -> dict[int, int]:
        mate = {}
        for u, v in self.pairs:
            mate[u] = v
            mate[v] = u
        return mate

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(self.mate)

    def is_perfect(self, n: int) -> bool:
        return 2 * self.cardinality == n

    def reweighted(self, g: PlainGraph) -> "Matching":
        """The same edge set, with its weight evaluated on the weights of ``g``."""
        return Matching(self.edges, self.pairs, sum(g.edges[i][2] for i in self.edges))
