"""Desk-scale runs over seeded random corpora. Deselected by default: run with ``pytest -m slow``."""
import numpy as np
import pytest

from pc_cycles_toolkit import EmptyGadgetGraphError
from pc_cycles_toolkit.algorithms import (
    find_pc_path,
    has_pc_cycle_elimination,
    has_pc_cycle_matching,
    max_pc_cycle_subgraph,
    max_pc_path_cycle,
    shortest_pc_cycle,
    shortest_pc_path,
)
from pc_cycles_toolkit.explorer import BoundsConfig, SearchSpace, check_bounds, random_multigraph, search_min_gadgets
from pc_cycles_toolkit.gadgets import GADGET_KINDS
from pc_cycles_toolkit.matching import PlainGraph, max_cardinality_matching, max_weight_perfect_matching
from pc_cycles_toolkit.oracle import (
    max_cardinality_bf,
    max_pc_cycle_subgraph_bf,
    max_pc_path_cycle_bf,
    max_weight_perfect_matching_bf,
    shortest_pc_cycle_bf,
    shortest_pc_path_bf,
)

pytestmark = pytest.mark.slow


def _corpus(size: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    for _ in range(size):
        n, c = int(rng.integers(2, 9)), int(rng.integers(1, 4))
        m = int(rng.integers(0, min(20, c * n * (n - 1) // 2) + 1))
        g = random_multigraph(n, c, m, rng)
        s, t = (int(v) for v in rng.choice(np.arange(1, n + 1), size=2, replace=False))
        yield g, s, t


def _length(sub) -> int | None:
    return None if sub is None else sub.n_edges


def test_matching_reductions_against_the_oracle():
    for g, s, t in _corpus(2000):
        r = max_pc_cycle_subgraph_bf(g).value
        assert has_pc_cycle_elimination(g)[0] == (r > 0) == has_pc_cycle_matching(g)

        shortest_cycle = _length(shortest_pc_cycle_bf(g))
        shortest_path = _length(shortest_pc_path_bf(g, s, t))
        path_cycle = max_pc_path_cycle_bf(g, s, t)
        for kind in GADGET_KINDS:
            assert max_pc_cycle_subgraph(g, kind).r == r
            assert _length(shortest_pc_cycle(g, kind)) == shortest_cycle
            assert (find_pc_path(g, s, t, kind) is None) == (shortest_path is None)
            assert _length(shortest_pc_path(g, s, t, kind)) == shortest_path
            try:
                result = max_pc_path_cycle(g, s, t, kind)
            except EmptyGadgetGraphError as error:
                assert (path_cycle is not None) == bool(error.direct_edges)
                continue
            assert (None if result is None else result.r) == (None if path_cycle is None else path_cycle.value)


def test_matching_engine_against_enumeration():
    rng = np.random.default_rng(1)
    for _ in range(500):
        n = int(rng.integers(0, 11))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = PlainGraph(n, tuple((u, v, int(rng.integers(0, 10))) for u, v in pairs))
        assert max_cardinality_matching(g).cardinality == max_cardinality_bf(g)
        best = max_weight_perfect_matching(g)
        assert (None if best is None else best.weight) == max_weight_perfect_matching_bf(g)


@pytest.mark.parametrize("z, max_vertices, max_edges", [(2, 4, 3), (3, 6, 5), (4, 6, 7)])
def test_xp_is_minimal(z, max_vertices, max_edges):
    result = search_min_gadgets(SearchSpace(z, max_vertices, max_edges), n_jobs=2)
    assert result.xp_matched
    assert not result.xp_beaten


def test_theorem_statements_hold():
    report = check_bounds(BoundsConfig(trials=200, n_max=8, c_max=4, seed=2024), n_jobs=2)
    assert report.theorems_hold, report.render()
