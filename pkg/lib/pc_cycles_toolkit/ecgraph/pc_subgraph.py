from dataclasses import dataclass
from typing import Iterable, Sequence, TypeAlias

from .coloured_graph import ColouredMultigraph

PCStep: TypeAlias = tuple[int, int]
"""One traversed edge of a PC path or cycle: ``(edge id, colour)``."""
EdgeSequence: TypeAlias = tuple[PCStep, ...]


@dataclass(frozen=True)
class PCSubgraph:
    """
    A vertex-disjoint union of properly coloured paths and cycles of an edge-coloured multigraph.

    Paths and cycles are stored as sequences of ``(edge id, colour)`` in traversal order. Edge ids refer to the
    canonical edge order of the graph the subgraph was computed on.
    """

    paths: tuple[EdgeSequence, ...] = ()
    cycles: tuple[EdgeSequence, ...] = ()

    @property
    def n_edges(self) -> int:
        return sum(len(_) for _ in self.paths) + sum(len(_) for _ in self.cycles)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e for seq in self.paths + self.cycles for e, _ in seq)

    def is_empty(self) -> bool:
        return not self.paths and not self.cycles

    def path_walks(self, g: ColouredMultigraph) -> tuple[tuple[int, ...], ...]:
        return tuple(trace_walk(g, [e for e, _ in seq], closed=False) for seq in self.paths)

    def cycle_walks(self, g: ColouredMultigraph) -> tuple[tuple[int, ...], ...]:
        return tuple(trace_walk(g, [e for e, _ in seq], closed=True) for seq in self.cycles)

    def vertices(self, g: ColouredMultigraph) -> frozenset[int]:
        return frozenset(v for walk in self.path_walks(g) + self.cycle_walks(g) for v in walk)

    def render(self, g: ColouredMultigraph) -> str:
        """
        Text form of the subgraph: one line per component, listing the vertex walk then the colours.

        Example: ``cycle 1 2 3 4 | colours 1 2 1 2``.
        """
        lines = []
        for kind, sequences, walks in (
            ("path", self.paths, self.path_walks(g)),
            ("cycle", self.cycles, self.cycle_walks(g)),
        ):
            for seq, walk in zip(sequences, walks, strict=True):
                vertices = " ".join(str(v) for v in walk)
                colours = " ".join(str(col) for _, col in seq)
                lines.append(f"{kind} {vertices} | colours {colours}")
        return "\n".join(lines)

    @classmethod
    def from_edge_ids(
        cls,
        g: ColouredMultigraph,
        paths: Iterable[Sequence[int]] = (),
        cycles: Iterable[Sequence[int]] = (),
    ) -> "PCSubgraph":
        """Build a PC subgraph from edge id sequences, attaching the colours and canonicalising every component."""
        return cls(
            paths=tuple(sorted(canonical_path(g, p) for p in paths)),
            cycles=tuple(sorted(canonical_cycle(g, c) for c in cycles)),
        )

    def remap(self, edge_map: Sequence[int]) -> "PCSubgraph":
        """Translate the edge ids through a back-map (e.g. from a subgraph to its parent graph)."""
        return PCSubgraph(
            paths=tuple(tuple((edge_map[e], col) for e, col in seq) for seq in self.paths),
            cycles=tuple(tuple((edge_map[e], col) for e, col in seq) for seq in self.cycles),
        )


class WalkError(ValueError):
    pass


def trace_walk(g: ColouredMultigraph, edge_ids: Sequence[int], closed: bool) -> tuple[int, ...]:
    """
    Recover the vertex walk followed by a sequence of edges.

    For a path the walk starts at the endpoint of the first edge which is not shared with the second one (the lesser
    endpoint for single-edge paths) and ends at the last vertex. For a cycle the closing vertex is not repeated.

    Raises:
        WalkError: if the edges do not form a connected walk (or a closed one when ``closed`` is True).
    """
    if not edge_ids:
        raise WalkError("Empty edge sequence.")
    for e in edge_ids:
        if not 0 <= e < g.m:
            raise WalkError(f"Edge id {e} does not exist (the graph has {g.m} edges).")

    for start in g.endpoints(edge_ids[0]):
        walk = [start]
        for e in edge_ids:
            if walk[-1] not in g.endpoints(e):
                break
            walk.append(g.other_end(e, walk[-1]))
        else:
            if not closed:
                return tuple(walk)
            if walk[-1] == start:
                return tuple(walk[:-1])
    raise WalkError(f"Edges {tuple(edge_ids)} do not form a {'closed ' if closed else ''}walk.")


def canonical_cycle(g: ColouredMultigraph, edge_ids: Sequence[int]) -> EdgeSequence:
    """
    Rotate a cycle to start at its least vertex, walking first toward its lesser neighbour.
    A 2-cycle lists its two parallel edges by increasing id.
    """
    edge_ids = list(edge_ids)
    if len(edge_ids) == 2:
        return tuple((e, g.colour(e)) for e in sorted(edge_ids))

    walk = trace_walk(g, edge_ids, closed=True)
    # edge_ids[i] joins walk[i] and walk[i+1]
    k = len(walk)
    i = walk.index(min(walk))
    forward = edge_ids[i:] + edge_ids[:i]
    backward = [edge_ids[(i - 1 - j) % k] for j in range(k)]
    if walk[(i + 1) % k] > walk[(i - 1) % k]:
        forward = backward
    return tuple((e, g.colour(e)) for e in forward)


def canonical_path(g: ColouredMultigraph, edge_ids: Sequence[int]) -> EdgeSequence:
    """Orient a path from its lesser endpoint."""
    edge_ids = list(edge_ids)
    walk = trace_walk(g, edge_ids, closed=False)
    if walk[-1] < walk[0]:
        edge_ids = edge_ids[::-1]
    return tuple((e, g.colour(e)) for e in edge_ids)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate_pc`. Truthy iff the subgraph is valid, otherwise ``violation`` describes why."""

    valid: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_pc(sub: PCSubgraph, g: ColouredMultigraph) -> ValidationReport:
    """
    Check that ``sub`` is a PC path-cycle subgraph of ``g``.

    Every edge must exist in ``g`` with the recorded colour, every sequence must be a simple path or cycle (cycles of
    length at least 2), consecutive edges must have different colours (also across the closing vertex of a cycle) and
    the components must be vertex-disjoint.

    Returns:
        A ``ValidationReport``, falsy with the first violation found.
    """
    seen_vertices: set[int] = set()
    seen_edges: set[int] = set()

    components = [("path", i, seq) for i, seq in enumerate(sub.paths)] + [
        ("cycle", i, seq) for i, seq in enumerate(sub.cycles)
    ]
    for kind, i, seq in components:
        name = f"{kind} {i}"
        closed = kind == "cycle"
        edge_ids = [e for e, _ in seq]

        if closed and len(seq) < 2:
            return ValidationReport(False, f"{name}: a cycle needs at least 2 edges.")
        for e, colour in seq:
            if not 0 <= e < g.m:
                return ValidationReport(False, f"{name}: edge {e} does not exist.")
            if g.colour(e) != colour:
                return ValidationReport(False, f"{name}: edge {e} has colour {g.colour(e)}, not {colour}.")
            if e in seen_edges:
                return ValidationReport(False, f"{name}: edge {e} is used twice.")
            seen_edges.add(e)

        try:
            walk = trace_walk(g, edge_ids, closed=closed)
        except WalkError as err:
            return ValidationReport(False, f"{name}: {err}")
        if len(set(walk)) != len(walk):
            return ValidationReport(False, f"{name}: vertex repeated in walk {walk}.")

        colours = [colour for _, colour in seq]
        pairs = list(zip(colours[:-1], colours[1:], strict=True))
        if closed:
            pairs.append((colours[-1], colours[0]))
        for j, (c1, c2) in enumerate(pairs):
            if c1 == c2:
                return ValidationReport(False, f"{name}: consecutive edges at position {j} both have colour {c1}.")

        shared = seen_vertices.intersection(walk)
        if shared:
            return ValidationReport(False, f"{name}: shares vertices {sorted(shared)} with a previous component.")
        seen_vertices.update(walk)

    return ValidationReport(True)
