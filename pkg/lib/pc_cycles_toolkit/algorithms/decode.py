from collections import defaultdict
from dataclasses import dataclass

from ..ecgraph import PCSubgraph, validate_pc
from ..gadgets import EdgePart, GadgetGraph
from ..matching import Matching


@dataclass(frozen=True)
class MatchingDecodeResult:
    """
    A perfect matching of a gadget graph and the PC subgraph it encodes.

    Attributes:
        matching: The perfect matching of G* or G**.
        r: Number of matched edges outside E1, which is also the number of edges of ``decoded``.
        decoded: The PC cycle subgraph (G*) or 1-path-cycle subgraph with its path between s and t (G**).
    """

    matching: Matching
    r: int
    decoded: PCSubgraph

    @classmethod
    def empty(cls) -> "MatchingDecodeResult":
        return cls(Matching((), (), 0), 0, PCSubgraph())


def decode_matching(gg: GadgetGraph, matching: Matching) -> MatchingDecodeResult:
    """
    Decode a perfect matching of a gadget graph into a PC subgraph of its source graph.

    Every matched E2 or E3 edge stands for its original edge. By P4, every gadget block meets 0 or 2 of them, with
    different colours since they reach different terminals; s and t meet exactly one. Following these edges from s
    gives the path, the remaining ones split into cycles.
    """
    g = gg.source
    chosen = sorted(gg.origin[i] for i in matching.edges if gg.part[i] != EdgePart.E1)

    incident: dict[int, list[int]] = defaultdict(list)
    for e in chosen:
        for v in g.endpoints(e):
            incident[v].append(e)
    for v, edges in incident.items():
        expected = 1 if v in (gg.s, gg.t) else 2
        assert len(edges) == expected, f"Vertex {v} meets {len(edges)} decoded edges instead of {expected}."

    def follow(start: int, first: int, stop: int) -> list[int]:
        walk, cur, prev = [first], g.other_end(first, start), first
        while cur != stop:
            prev = next(e for e in incident[cur] if e != prev)
            walk.append(prev)
            cur = g.other_end(prev, cur)
        return walk

    paths, cycles, used = [], [], set()
    if gg.s is not None and incident.get(gg.s):
        path = follow(gg.s, incident[gg.s][0], gg.t)
        paths.append(path)
        used.update(path)
    for e in chosen:
        if e in used:
            continue
        start = g.endpoints(e)[0]
        cycle = follow(start, e, start)
        cycles.append(cycle)
        used.update(cycle)

    decoded = PCSubgraph.from_edge_ids(g, paths=paths, cycles=cycles)
    report = validate_pc(decoded, g)
    assert report, f"Decoded subgraph is not properly coloured: {report.violation}"
    return MatchingDecodeResult(matching, len(chosen), decoded)
