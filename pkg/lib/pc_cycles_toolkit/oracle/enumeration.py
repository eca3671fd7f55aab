"""
Exhaustive enumeration of properly coloured cycles and paths, by depth-first search over simple walks whose
consecutive edges have different colours.
"""
from typing import Iterator, NamedTuple

from ..ecgraph import ColouredMultigraph, PCSubgraph, canonical_cycle, canonical_path
from ..errors import VertexError
from .budget import DEFAULT_BUDGET, Deadline, OracleBudget


class RawWalk(NamedTuple):
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def iter_pc_paths_from(
    g: ColouredMultigraph, start: int, deadline: Deadline, forbidden: frozenset[int] = frozenset()
) -> Iterator[RawWalk]:
    """Yield every PC path with at least one edge starting at ``start`` and avoiding ``forbidden``."""
    vertices = [start]
    edges: list[int] = []
    visited = set(forbidden) | {start}

    def extend(cur: int, last_colour: int) -> Iterator[RawWalk]:
        for inc in g.incident(cur):
            deadline.tick()
            if inc.colour == last_colour or inc.other in visited:
                continue
            vertices.append(inc.other)
            edges.append(inc.edge)
            visited.add(inc.other)
            yield RawWalk(tuple(vertices), tuple(edges))
            yield from extend(inc.other, inc.colour)
            visited.discard(inc.other)
            edges.pop()
            vertices.pop()

    yield from extend(start, 0)


def iter_pc_cycles(g: ColouredMultigraph, deadline: Deadline) -> Iterator[RawWalk]:
    """
    Yield every PC cycle exactly once, as found from its least vertex (orientation and rotation not canonical).
    """
    seen: set[frozenset[int]] = set()
    for s in g.vertices:
        lower = frozenset(range(1, s))
        for walk in iter_pc_paths_from(g, s, deadline, forbidden=lower):
            cur = walk.vertices[-1]
            first_colour = g.colour(walk.edges[0])
            last_colour = g.colour(walk.edges[-1])
            for inc in g.incident(cur):
                if inc.other != s or inc.colour in (first_colour, last_colour):
                    continue
                key = frozenset(walk.edges + (inc.edge,))
                if key in seen:
                    continue
                seen.add(key)
                yield RawWalk(walk.vertices, walk.edges + (inc.edge,))


def enum_pc_cycles(g: ColouredMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> list[PCSubgraph]:
    """
    List every PC cycle of ``g``, including the 2-cycles formed by differently coloured parallel edges.

    Each cycle is a single-cycle ``PCSubgraph`` in canonical form (rotated to its least vertex, oriented toward the
    lesser neighbour). The list is sorted by length, then vertex walk, then edge ids.
    """
    deadline = budget.check(g)
    cycles = [PCSubgraph(cycles=(canonical_cycle(g, walk.edges),)) for walk in iter_pc_cycles(g, deadline)]
    return sorted(cycles, key=lambda c: (c.n_edges, c.cycle_walks(g), c.edge_ids))


def enum_pc_paths(g: ColouredMultigraph, s: int, t: int, budget: OracleBudget = DEFAULT_BUDGET) -> list[PCSubgraph]:
    """
    List every PC (s, t)-path of ``g``, each oriented from its lesser endpoint, sorted by length then vertex walk.
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise VertexError("The endpoints of an (s, t)-path must differ.")
    deadline = budget.check(g)

    paths = []
    for walk in iter_pc_paths_from(g, s, deadline):
        if walk.vertices[-1] == t:
            paths.append(PCSubgraph(paths=(canonical_path(g, walk.edges),)))
    return sorted(paths, key=lambda p: (p.n_edges, p.path_walks(g), p.edge_ids))
