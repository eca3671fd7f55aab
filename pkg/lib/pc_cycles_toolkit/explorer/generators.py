"""
Seeded random instance generators.

Every generator draws from a ``numpy.random.Generator`` passed by the caller, so that an instance is reproducible from
the seed of the generator. Generators whose constraints may be unsatisfiable for the drawn choices return None after a
bounded number of attempts instead of looping.
"""
from itertools import combinations

import numpy as np

from ..ecgraph import ColouredMultigraph
from ..errors import PreconditionError


def _pairs(n: int) -> np.ndarray:
    return np.asarray(list(combinations(range(1, n + 1), 2)), dtype=np.int64).reshape(-1, 2)


def random_multigraph(n: int, c: int, m: int, rng: np.random.Generator) -> ColouredMultigraph:
    """
    A uniform random c-edge-coloured multigraph with ``m`` edges: ``m`` distinct (pair, colour) triples drawn among
    the ``c * n(n-1)/2`` possible ones.
    """
    pairs = _pairs(n)
    slots = len(pairs) * c
    if m > slots:
        raise PreconditionError(f"At most {slots} coloured edges fit on {n} vertices with {c} colours, got m = {m}.")
    picked = rng.choice(slots, size=m, replace=False)
    edges = [(*pairs[k // c], k % c + 1) for k in picked.tolist()]
    return ColouredMultigraph(n, c, edges)


def random_simple_graph(n: int, c: int, m: int, rng: np.random.Generator) -> ColouredMultigraph:
    """A uniform random edge-coloured graph (no parallel edges) with ``m`` edges of uniform random colours."""
    pairs = _pairs(n)
    if m > len(pairs):
        raise PreconditionError(f"At most {len(pairs)} edges fit on {n} vertices, got m = {m}.")
    picked = rng.choice(len(pairs), size=m, replace=False)
    colours = rng.integers(1, c + 1, size=m)
    return ColouredMultigraph(n, c, [(*pairs[k], q) for k, q in zip(picked.tolist(), colours.tolist(), strict=True)])


def random_complete(
    n: int, c: int, rng: np.random.Generator, surjective: bool = False, weights: np.ndarray | None = None
) -> ColouredMultigraph:
    """
    A random K^c_n: every pair of vertices gets one edge of a random colour, uniform unless ``weights`` is given.

    Args:
        n: Number of vertices.
        c: Number of colours.
        rng: The random generator.
        surjective: Use every colour at least once. The first ``c`` pairs of a random order get the colours ``1..c``.
        weights: Probabilities of the colours ``1..c``.
    """
    pairs = _pairs(n)
    colours = rng.choice(np.arange(1, c + 1), size=len(pairs), p=weights)
    if surjective:
        if c > len(pairs):
            raise PreconditionError(f"K_{n} has {len(pairs)} edges, too few for {c} distinct colours.")
        order = rng.permutation(len(pairs))
        colours[order[:c]] = np.arange(1, c + 1)
    return ColouredMultigraph(n, c, [(u, v, q) for (u, v), q in zip(pairs.tolist(), colours.tolist(), strict=True)])


def _min_degree_colour_class(n: int, d: int, rng: np.random.Generator, forbidden: set) -> list[tuple[int, int]] | None:
    """A random simple graph on ``1..n`` of minimum degree at least ``d`` avoiding the ``forbidden`` pairs."""
    adjacency = [set() for _ in range(n + 1)]
    edges = []
    for v in rng.permutation(np.arange(1, n + 1)).tolist():
        candidates = [
            w for w in range(1, n + 1) if w != v and w not in adjacency[v] and (min(v, w), max(v, w)) not in forbidden
        ]
        missing = d - len(adjacency[v])
        if missing <= 0:
            continue
        if missing > len(candidates):
            return None
        for w in rng.choice(candidates, size=missing, replace=False).tolist():
            adjacency[v].add(w)
            adjacency[w].add(v)
            edges.append((min(v, w), max(v, w)))
    return edges


def dense_multigraph(n: int, c: int, d: int, rng: np.random.Generator, extra: float = 0.0) -> ColouredMultigraph:
    """
    A random c-edge-coloured multigraph where every colour is present at every vertex with monochromatic degree at
    least ``d``, so that δ_mon >= d under either reading of δ_mon.

    Args:
        n: Number of vertices.
        c: Number of colours.
        d: Lower bound on every monochromatic degree, ``1 <= d <= n - 1``.
        rng: The random generator.
        extra: Probability of adding each remaining (pair, colour) edge on top of the minimum-degree classes.
    """
    if not 1 <= d <= n - 1:
        raise PreconditionError(f"A monochromatic degree of {d} is impossible on {n} vertices.")
    edges = []
    for q in range(1, c + 1):
        # never None without forbidden pairs
        class_edges = _min_degree_colour_class(n, d, rng, forbidden=set())
        chosen = set(class_edges)
        if extra > 0:
            chosen |= {pair for pair in map(tuple, _pairs(n).tolist()) if rng.random() < extra}
        edges += [(u, v, q) for u, v in sorted(chosen)]
    return ColouredMultigraph(n, c, edges)


def dense_simple_graph(
    n: int, c: int, d: int, rng: np.random.Generator, attempts: int = 50
) -> ColouredMultigraph | None:
    """
    A random edge-coloured graph (no parallel edges) where every colour is present at every vertex with monochromatic
    degree at least ``d``. Needs ``c * d <= n - 1``; returns None if ``attempts`` random constructions fail.
    """
    if d < 1 or c * d > n - 1:
        return None
    for _ in range(attempts):
        used: set[tuple[int, int]] = set()
        edges = []
        for q in rng.permutation(np.arange(1, c + 1)).tolist():
            class_edges = _min_degree_colour_class(n, d, rng, forbidden=used)
            if class_edges is None:
                break
            used.update(class_edges)
            edges += [(u, v, q) for u, v in class_edges]
        else:
            return ColouredMultigraph(n, c, edges)
    return None


def proper_complete(n: int, rng: np.random.Generator) -> ColouredMultigraph:
    """
    A random proper edge colouring of K_n (Δ_mon = 1), from the round-robin 1-factorisation of K_n (n even, n - 1
    colours) or of K_{n+1} minus a vertex (n odd, n colours), with vertices and colours randomly relabelled.
    """
    if n < 2:
        return ColouredMultigraph(n, 0)
    even = n + n % 2
    edges = []
    for r in range(even - 1):
        # Round r pairs the fixed vertex even-1 with r, and i with j whenever i + j = 2r mod (even - 1).
        edges.append((r, even - 1, r))
        for i in range(even - 1):
            j = (2 * r - i) % (even - 1)
            if i < j:
                edges.append((i, j, r))
    c = even - 1
    vertex_perm = rng.permutation(even)
    colour_perm = rng.permutation(c)
    relabelled = []
    for u, v, r in edges:
        u, v = int(vertex_perm[u]), int(vertex_perm[v])
        if u < n and v < n:
            relabelled.append((u + 1, v + 1, int(colour_perm[r]) + 1))
    return ColouredMultigraph(n, c, relabelled)


def bounded_complete(
    n: int, c: int, max_mono_degree: int, rng: np.random.Generator, attempts: int = 50
) -> ColouredMultigraph | None:
    """
    A random K^c_n with Δ_mon <= ``max_mono_degree``, coloured greedily pair by pair in random order, each pair taking
    a uniform colour among those still allowed at both endpoints. Returns None if ``attempts`` constructions fail.
    """
    pairs = _pairs(n).tolist()
    for _ in range(attempts):
        degrees = np.zeros((n + 1, c + 1), dtype=np.int64)
        edges = []
        for k in rng.permutation(len(pairs)).tolist():
            u, v = pairs[k]
            allowed = np.flatnonzero((degrees[u, 1:] < max_mono_degree) & (degrees[v, 1:] < max_mono_degree)) + 1
            if allowed.size == 0:
                break
            q = int(rng.choice(allowed))
            degrees[u, q] += 1
            degrees[v, q] += 1
            edges.append((u, v, q))
        else:
            return ColouredMultigraph(n, c, edges)
    return None


def gen_extremal_two_blocks(p: int, c: int) -> ColouredMultigraph:
    """
    Two complete c-coloured multigraphs of order p + 1 sharing exactly one vertex: every pair inside a block is joined
    by one edge of every colour.

    The shared vertex is 1, the first block is ``{1, ..., p + 1}`` and the second ``{1, p + 2, ..., 2p + 1}``. With
    n = 2p + 1 vertices, δ_mon = p = ⌈(n - 1)/2⌉ while the longest PC cycle has length p + 1.

    Raises:
        PreconditionError: if ``p < 1`` or ``c < 2``.
    """
    if p < 1:
        raise PreconditionError(f"The blocks need at least 2 vertices, got p = {p}.")
    if c < 2:
        raise PreconditionError(f"The blocks need at least 2 colours, got c = {c}.")
    blocks = [range(1, p + 2), [1, *range(p + 2, 2 * p + 2)]]
    edges = [(u, v, q) for block in blocks for u, v in combinations(block, 2) for q in range(1, c + 1)]
    return ColouredMultigraph(2 * p + 1, c, edges)


def extremal_longest_cycle(p: int, c: int) -> int:
    """
    Length of a longest PC cycle of ``gen_extremal_two_blocks(p, c)``.

    No PC cycle goes through the shared vertex into both blocks, so the longest ones are Hamilton cycles of a block:
    p + 1, except for two colours and p + 1 odd, where 2-coloured PC cycles being even leaves p.
    """
    if c == 2 and p % 2 == 0:
        return p
    return p + 1
