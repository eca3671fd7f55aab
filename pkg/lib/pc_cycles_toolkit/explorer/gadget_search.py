"""
Exhaustive search of the smallest P-gadgets for a palette of size z.

Candidates are the graphs on ``v`` labelled vertices whose first ``z`` vertices are the terminals x_1..x_z, enumerated
as edge subsets of the complete graph K_v by increasing size. Odd orders are skipped, since P2 needs a perfect
matching. Every candidate is reduced modulo the permutations of its non-terminal vertices, and also of its terminals
when ``terminal_symmetry`` is set: P1 to P4 quantify over every pair and every subset of colours, so relabelling the
terminals maps P-gadgets onto P-gadgets. Only the lexicographically least edge set of each orbit is checked.

Vertex counts are scanned increasingly; for each of them the search stops at the first edge count with a valid gadget,
and only edge counts below the best one found on fewer vertices are tried. The points found form the Pareto frontier
of (vertex count, edge count).
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice, permutations
from math import comb
from typing import NamedTuple

from ..errors import PreconditionError, SearchTooLargeError
from ..gadgets import Gadget, P4Reading, gadget_size, verify_p_properties
from ..matching import PlainGraph
from ..pc_utilities import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchSpace:
    """
    Attributes:
        z: Palette size (number of terminals).
        max_vertices: Largest carrier order searched.
        max_edges: Largest carrier size searched.
        terminal_symmetry: Also quotient the candidates by the permutations of the terminals.
        max_candidates: Cap on the projected number of edge subsets.
    """

    z: int
    max_vertices: int
    max_edges: int
    terminal_symmetry: bool = True
    max_candidates: int = 5_000_000

    def __post_init__(self):
        if self.z < 2:
            raise PreconditionError(f"Gadgets need a palette of at least 2 colours, got z = {self.z}.")
        if self.max_vertices < self.z:
            raise PreconditionError(f"max_vertices = {self.max_vertices} can't hold z = {self.z} terminals.")
        if self.max_edges < 0:
            raise PreconditionError(f"max_edges must be non-negative, got {self.max_edges}.")

    @property
    def orders(self) -> range:
        """The even carrier orders searched."""
        return range(self.z + self.z % 2, self.max_vertices + 1, 2)

    def projected_candidates(self) -> int:
        """Number of edge subsets the search enumerates at worst (before symmetry reduction and pruning)."""
        total = 0
        for v in self.orders:
            pairs = v * (v - 1) // 2
            total += sum(comb(pairs, k) for k in range(min(self.max_edges, pairs) + 1))
        return total


@dataclass(frozen=True)
class FrontierPoint:
    vertices: int
    edges: int
    gadgets: tuple[Gadget, ...]


@dataclass(frozen=True)
class SearchResult:
    space: SearchSpace
    frontier: tuple[FrontierPoint, ...]
    candidates_checked: int

    @property
    def xp_size(self) -> tuple[int, int]:
        return gadget_size("xp", self.space.z)

    @property
    def xp_matched(self) -> bool:
        return any((p.vertices, p.edges) == self.xp_size for p in self.frontier)

    @property
    def xp_beaten(self) -> bool:
        """True iff a P-gadget has fewer vertices than XP, or as many vertices and fewer edges."""
        xv, xe = self.xp_size
        return any(p.vertices < xv or (p.vertices == xv and p.edges < xe) for p in self.frontier)

    def render(self) -> str:
        lines = [
            f"z: {self.space.z}",
            f"bounds: {self.space.max_vertices} vertices, {self.space.max_edges} edges",
            f"candidates checked: {self.candidates_checked}",
            "frontier: " + (" ".join(f"({p.vertices}, {p.edges})" for p in self.frontier) or "empty"),
        ]
        for p in self.frontier:
            for i, gadget in enumerate(p.gadgets):
                edges = " ".join(f"{u + 1}-{v + 1}" for u, v, _ in gadget.carrier.edges)
                lines.append(f"gadget ({p.vertices}, {p.edges}) #{i + 1}: {edges}")
        lines += [f"xp size: {self.xp_size}", f"xp matched: {self.xp_matched}", f"xp beaten: {self.xp_beaten}"]
        return "\n".join(lines)


PairMaps = tuple[tuple[tuple[int, int], ...], tuple[tuple[int, ...], ...]]


@lru_cache(maxsize=32)
def _pair_maps(z: int, v: int, terminal_symmetry: bool) -> PairMaps:
    """The pairs of K_v, and the action on pair indices of every vertex permutation of the symmetry group."""
    pairs = tuple(combinations(range(v), 2))
    index = {pair: i for i, pair in enumerate(pairs)}
    terminal_perms = permutations(range(z)) if terminal_symmetry else [tuple(range(z))]
    maps = []
    for terminal_perm in terminal_perms:
        for other_perm in permutations(range(z, v)):
            perm = terminal_perm + other_perm
            maps.append(tuple(index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs))
    return pairs, tuple(maps)


def _is_canonical(subset: tuple[int, ...], maps: tuple[tuple[int, ...], ...]) -> bool:
    return all(subset <= tuple(sorted(m[i] for i in subset)) for m in maps)


class _Chunk(NamedTuple):
    z: int
    v: int
    k: int
    start: int
    stop: int
    terminal_symmetry: bool
    p4: P4Reading


def _candidate(z: int, v: int, edges) -> Gadget:
    carrier = PlainGraph(v, tuple((a, b, 0) for a, b in edges))
    return Gadget(carrier, {q: q - 1 for q in range(1, z + 1)})


def _search_chunk(chunk: _Chunk) -> tuple[list[tuple[int, ...]], int]:
    """Check the edge subsets of rank ``start..stop-1`` of size ``k``; return the valid canonical ones and a count."""
    pairs, maps = _pair_maps(chunk.z, chunk.v, chunk.terminal_symmetry)
    everyone = (1 << chunk.v) - 1
    found, checked = [], 0
    for subset in islice(combinations(range(len(pairs)), chunk.k), chunk.start, chunk.stop):
        covered = 0
        for i in subset:
            a, b = pairs[i]
            covered |= (1 << a) | (1 << b)
        if covered != everyone or not _is_canonical(subset, maps):
            continue
        checked += 1
        if verify_p_properties(_candidate(chunk.z, chunk.v, [pairs[i] for i in subset]), chunk.p4, fail_fast=True):
            found.append(subset)
    return found, checked


def search_min_gadgets(
    space: SearchSpace, p4: P4Reading = "strict", n_jobs: int = 1, chunk_size: int = 20_000, progress: bool = False
) -> SearchResult:
    """
    Exhaustively search the Pareto frontier of (vertex count, edge count) over the P-gadgets within ``space``.

    Args:
        space: The palette size and the bounds of the search.
        p4: Reading of P4 (see ``verify_p_properties``).
        n_jobs: Number of worker processes; the edge subsets of each size are split in chunks of ``chunk_size``.
        chunk_size: Number of edge subsets per chunk.
        progress: Display a progress bar per (vertex count, edge count).

    Returns:
        The frontier, empty when no P-gadget fits the bounds, with one canonical representative per gadget orbit.

    Raises:
        SearchTooLargeError: if the projected number of candidates exceeds ``space.max_candidates``.
    """
    projected = space.projected_candidates()
    if projected > space.max_candidates:
        raise SearchTooLargeError(
            f"The search would enumerate {projected} edge subsets, above the cap of {space.max_candidates}."
        )

    frontier: list[FrontierPoint] = []
    best_k = space.max_edges + 1
    checked = 0
    for v in space.orders:
        pairs, _ = _pair_maps(space.z, v, space.terminal_symmetry)
        for k in range(min(best_k - 1, len(pairs)) + 1):
            total = comb(len(pairs), k)
            chunks = [
                _Chunk(space.z, v, k, start, min(start + chunk_size, total), space.terminal_symmetry, p4)
                for start in range(0, total, chunk_size)
            ]
            results = parallel_map(_search_chunk, chunks, n_jobs=n_jobs, progress=progress, desc=f"v={v} k={k}")
            found = [subset for subsets, _ in results for subset in subsets]
            checked += sum(count for _, count in results)
            if found:
                gadgets = tuple(_candidate(space.z, v, [pairs[i] for i in subset]) for subset in found)
                frontier.append(FrontierPoint(v, k, gadgets))
                best_k = k
                logger.info("z = %d: %d P-gadget(s) with %d vertices and %d edges.", space.z, len(found), v, k)
                break
        else:
            logger.info("z = %d: no P-gadget on %d vertices with fewer than %d edges.", space.z, v, best_k)

    return SearchResult(space, tuple(frontier), checked)
