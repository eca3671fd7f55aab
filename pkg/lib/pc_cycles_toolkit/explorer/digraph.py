"""
Digraphs and their encoding as 2-edge-coloured graphs: every arc xy is replaced by a new vertex z_xy and the edges
x z_xy of colour 1 and z_xy y of colour 2, so that the PC cycles of the encoding are exactly the directed cycles of the
digraph.

Text format: ``vertices <n>`` then one ``a <u> <v>`` line per arc.
"""
from dataclasses import dataclass
from itertools import permutations
from os import PathLike
from typing import Iterable, Iterator, TextIO

import networkx as nx

from ..ecgraph import ColouredMultigraph
from ..ecgraph.graph_io import _directives, _integers
from ..errors import GraphFormatError, InvalidGraphError


@dataclass(frozen=True)
class Digraph:
    """Directed graph on ``1..n`` without loop or parallel arc. Arcs are stored sorted."""

    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        arcs = set()
        for u, v in self.arcs:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidGraphError(f"Loop arc ({u}, {v}).")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidGraphError(f"Arc ({u}, {v}) has an endpoint outside 1..{self.n}.")
            if (u, v) in arcs:
                raise InvalidGraphError(f"Parallel arc ({u}, {v}).")
            arcs.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(arcs)))

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.arcs)
        return graph


def parse_digraph(text: str | TextIO | Iterable[str]) -> Digraph:
    n: int | None = None
    arcs: list[tuple[int, int]] = []
    for line_number, tokens in _directives(text):
        if tokens[0] == "vertices":
            if n is not None:
                raise GraphFormatError("Repeated 'vertices' directive.", line_number)
            if arcs:
                raise GraphFormatError("'vertices' must precede the arcs.", line_number)
            (n,) = _integers(tokens, 1, line_number)
        elif tokens[0] == "a":
            u, v = _integers(tokens, 2, line_number)
            if (u, v) in arcs:
                raise InvalidGraphError(f"line {line_number}: parallel arc ({u}, {v}).")
            arcs.append((u, v))
        else:
            raise GraphFormatError(f"Unknown directive '{tokens[0]}'.", line_number)
    if n is None:
        n = max((max(a) for a in arcs), default=0)
    return Digraph(n, tuple(arcs))


def render_digraph(d: Digraph) -> str:
    return "\n".join([f"vertices {d.n}"] + [f"a {u} {v}" for u, v in d.arcs]) + "\n"


def read_digraph(path: str | PathLike) -> Digraph:
    with open(path, encoding="utf-8") as f:
        return parse_digraph(f)


def encode_digraph(d: Digraph) -> ColouredMultigraph:
    """
    Encode a digraph as a 2-edge-coloured graph on ``n + |arcs|`` vertices.

    The k-th arc (x, y) in sorted order gets the new vertex ``n + 1 + k``, joined to x in colour 1 and to y in colour 2.
    """
    edges = []
    for k, (x, y) in enumerate(d.arcs):
        z = d.n + 1 + k
        edges += [(x, z, 1), (z, y, 2)]
    return ColouredMultigraph(d.n + len(d.arcs), 2, tuple(edges))


def has_directed_cycle(d: Digraph) -> bool:
    return not nx.is_directed_acyclic_graph(d.to_networkx())


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every labelled digraph on ``1..n`` (``2 ** (n(n-1))`` of them), by increasing arc bitmask."""
    pairs = list(permutations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Digraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
