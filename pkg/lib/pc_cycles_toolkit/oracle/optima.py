"""
Exact optima of the PC path and cycle problems by exhaustive search.

The cycle subgraph problems share a dynamic program over vertex subsets: the best PC cycle subgraph inside a vertex
set either skips its least vertex or uses one of the PC cycles whose least vertex it is.
"""
import logging
from itertools import combinations
from typing import NamedTuple

from ..ecgraph import ColouredMultigraph, PCSubgraph
from ..errors import VertexError
from .budget import DEFAULT_BUDGET, Deadline, OracleBudget
from .enumeration import enum_pc_cycles, enum_pc_paths, iter_pc_cycles, iter_pc_paths_from

logger = logging.getLogger(__name__)


class Optimum(NamedTuple):
    """An optimal value and one subgraph achieving it (the empty subgraph when the value is 0)."""

    value: int
    witness: PCSubgraph


def _mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def _check_pair(g: ColouredMultigraph, s: int, t: int):
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise VertexError(f"The endpoints of an (s, t)-path must differ, got s = t = {s}.")


class _CycleSubgraphTable:
    """Maximum edge count of a PC cycle subgraph inside any vertex subset, memoised over bitmasks."""

    def __init__(self, g: ColouredMultigraph, deadline: Deadline):
        self.full = (1 << g.n) - 1
        self.by_least_vertex: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(g.n + 1)]
        for walk in iter_pc_cycles(g, deadline):
            self.by_least_vertex[walk.vertices[0]].append((_mask(walk.vertices), walk.edges))
        self._deadline = deadline
        self._memo: dict[int, tuple[int, tuple[int, tuple[int, ...]] | None]] = {0: (0, None)}
        logger.debug("Cycle table over %d PC cycles.", sum(len(_) for _ in self.by_least_vertex))

    def best(self, mask: int) -> int:
        if mask in self._memo:
            return self._memo[mask][0]
        self._deadline.tick()
        low = mask & -mask
        best, choice = self.best(mask ^ low), None
        for cycle_mask, edges in self.by_least_vertex[low.bit_length()]:
            if cycle_mask & ~mask:
                continue
            value = len(edges) + self.best(mask ^ cycle_mask)
            if value > best:
                best, choice = value, (cycle_mask, edges)
        self._memo[mask] = (best, choice)
        return best

    def witness(self, mask: int) -> list[tuple[int, ...]]:
        cycles = []
        while mask:
            self.best(mask)
            choice = self._memo[mask][1]
            if choice is None:
                mask &= mask - 1
            else:
                cycles.append(choice[1])
                mask ^= choice[0]
        return cycles


def has_pc_cycle_bf(g: ColouredMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    deadline = budget.check(g)
    return next(iter_pc_cycles(g, deadline), None) is not None


def max_pc_cycle_subgraph_bf(g: ColouredMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> Optimum:
    """
    Maximum number of edges of a PC cycle subgraph of ``g``, with one maximum cycle subgraph.
    """
    table = _CycleSubgraphTable(g, budget.check(g))
    r = table.best(table.full)
    return Optimum(r, PCSubgraph.from_edge_ids(g, cycles=table.witness(table.full)))


def max_pc_path_cycle_bf(
    g: ColouredMultigraph, s: int, t: int, budget: OracleBudget = DEFAULT_BUDGET
) -> Optimum | None:
    """
    Maximum number of edges of a PC 1-path-cycle subgraph whose path joins ``s`` and ``t``.

    Returns:
        The optimum, or None if ``g`` has no PC (s, t)-path.
    """
    _check_pair(g, s, t)
    deadline = budget.check(g)
    table = _CycleSubgraphTable(g, deadline)

    best = None
    for walk in iter_pc_paths_from(g, s, deadline):
        if walk.vertices[-1] != t:
            continue
        rest = table.full & ~_mask(walk.vertices)
        value = len(walk.edges) + table.best(rest)
        if best is None or value > best[0]:
            best = (value, walk.edges, rest)

    if best is None:
        return None
    value, path, rest = best
    return Optimum(value, PCSubgraph.from_edge_ids(g, paths=[path], cycles=table.witness(rest)))


def max_pc_one_path_cycle_bf(g: ColouredMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> Optimum:
    """
    Maximum order (number of covered vertices) of a PC 1-path-cycle subgraph of ``g``.

    The path may be trivial (a single vertex): in that case the witness only lists the cycles.
    """
    deadline = budget.check(g)
    if g.n == 0:
        return Optimum(0, PCSubgraph())
    table = _CycleSubgraphTable(g, deadline)

    best_order, best_path, best_rest = -1, (), 0
    for v in g.vertices:
        rest = table.full & ~_mask((v,))
        order = 1 + table.best(rest)
        if order > best_order:
            best_order, best_path, best_rest = order, (), rest
    for s in g.vertices:
        for walk in iter_pc_paths_from(g, s, deadline):
            if walk.vertices[-1] < s:
                continue
            rest = table.full & ~_mask(walk.vertices)
            order = len(walk.vertices) + table.best(rest)
            if order > best_order:
                best_order, best_path, best_rest = order, walk.edges, rest

    paths = [best_path] if best_path else []
    return Optimum(best_order, PCSubgraph.from_edge_ids(g, paths=paths, cycles=table.witness(best_rest)))


def longest_pc_path_bf(
    g: ColouredMultigraph, target: int | None = None, budget: OracleBudget = DEFAULT_BUDGET
) -> Optimum:
    """
    Length (edge count) of a longest PC path of ``g``, with one such path.

    Args:
        g: The graph.
        target: Stop as soon as a path of at least this length is found (the result is then a lower bound).
        budget: The oracle budget.
    """
    deadline = budget.check(g)
    ceiling = max(g.n - 1, 0) if target is None else target
    best = Optimum(0, PCSubgraph())
    for s in g.vertices:
        for walk in iter_pc_paths_from(g, s, deadline):
            if len(walk.edges) > best.value:
                best = Optimum(len(walk.edges), PCSubgraph.from_edge_ids(g, paths=[walk.edges]))
                if best.value >= ceiling:
                    return best
    return best


def longest_pc_cycle_bf(
    g: ColouredMultigraph, target: int | None = None, budget: OracleBudget = DEFAULT_BUDGET
) -> Optimum:
    """
    Length of a longest PC cycle of ``g`` (0 if there is none), with one such cycle.

    Args:
        g: The graph.
        target: Stop as soon as a cycle of at least this length is found (the result is then a lower bound).
        budget: The oracle budget.
    """
    deadline = budget.check(g)
    ceiling = g.n if target is None else target
    best = Optimum(0, PCSubgraph())
    for walk in iter_pc_cycles(g, deadline):
        if len(walk.edges) > best.value:
            best = Optimum(len(walk.edges), PCSubgraph.from_edge_ids(g, cycles=[walk.edges]))
            if best.value >= ceiling:
                break
    return best


def shortest_pc_cycle_bf(g: ColouredMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> PCSubgraph | None:
    """A shortest PC cycle (least vertex walk among the shortest), or None if ``g`` has no PC cycle."""
    cycles = enum_pc_cycles(g, budget)
    return cycles[0] if cycles else None


def shortest_pc_path_bf(
    g: ColouredMultigraph, s: int, t: int, budget: OracleBudget = DEFAULT_BUDGET
) -> PCSubgraph | None:
    paths = enum_pc_paths(g, s, t, budget)
    return paths[0] if paths else None


def pc_hamilton_cycle_bf(g: ColouredMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> PCSubgraph | None:
    """A PC cycle through every vertex, or None. Graphs with fewer than 2 vertices have none."""
    if g.n < 2:
        budget.check(g)
        return None
    longest = longest_pc_cycle_bf(g, target=g.n, budget=budget)
    return longest.witness if longest.value == g.n else None


def pc_hamilton_path_bf(g: ColouredMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> PCSubgraph | None:
    """A PC path through every vertex, or None. Graphs with fewer than 2 vertices have none."""
    if g.n < 2:
        budget.check(g)
        return None
    longest = longest_pc_path_bf(g, target=g.n - 1, budget=budget)
    return longest.witness if longest.value == g.n - 1 else None


def end_colour_pairs_bf(
    g: ColouredMultigraph, s: int, t: int, budget: OracleBudget = DEFAULT_BUDGET
) -> frozenset[tuple[int, int]]:
    """
    The pairs (colour of the first edge at ``s``, colour of the last edge at ``t``) over every PC (s, t)-path.
    """
    _check_pair(g, s, t)
    deadline = budget.check(g)
    pairs = set()
    for walk in iter_pc_paths_from(g, s, deadline):
        if walk.vertices[-1] == t:
            pairs.add((g.colour(walk.edges[0]), g.colour(walk.edges[-1])))
    return frozenset(pairs)


def exists_pc_path_with_end_colours_bf(
    g: ColouredMultigraph, s: int, t: int, i: int, j: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    return (i, j) in end_colour_pairs_bf(g, s, t, budget)


def colour_connected_bf(g: ColouredMultigraph, x: int, y: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """
    True iff two PC (x, y)-paths exist whose first edges differ in colour and whose last edges differ in colour.
    """
    pairs = end_colour_pairs_bf(g, x, y, budget)
    return any(i1 != i2 and j1 != j2 for (i1, j1), (i2, j2) in combinations(pairs, 2))


def colour_connected_graph_bf(g: ColouredMultigraph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return all(colour_connected_bf(g, x, y, budget) for x, y in combinations(g.vertices, 2))
