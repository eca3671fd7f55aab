from typing import Iterator

from ..matching import Matching, PlainGraph


def enumerate_matchings(g: PlainGraph) -> Iterator[Matching]:
    """
    Yield every matching of ``g`` (the empty one included) exactly once. Exponential: small graphs only.
    """
    chosen: list[int] = []
    covered: set[int] = set()

    def extend(start: int) -> Iterator[Matching]:
        yield Matching.from_indices(g, chosen)
        for i in range(start, g.m):
            u, v, _ = g.edges[i]
            if u in covered or v in covered:
                continue
            chosen.append(i)
            covered.update((u, v))
            yield from extend(i + 1)
            covered.difference_update((u, v))
            chosen.pop()

    yield from extend(0)


def perfect_matchings(g: PlainGraph) -> Iterator[Matching]:
    """Yield every perfect matching of ``g``, always matching the least uncovered vertex next."""
    if g.n % 2:
        return
    mate: dict[int, int] = {}
    chosen: list[int] = []

    def extend() -> Iterator[Matching]:
        free = next((v for v in range(g.n) if v not in mate), None)
        if free is None:
            yield Matching.from_indices(g, chosen)
            return
        for w in range(free + 1, g.n):
            if w in mate or not g.adjacency[free, w]:
                continue
            mate[free], mate[w] = w, free
            chosen.append(g.index_of(free, w))
            yield from extend()
            chosen.pop()
            del mate[free], mate[w]

    yield from extend()


def max_cardinality_bf(g: PlainGraph) -> int:
    return max(m.cardinality for m in enumerate_matchings(g))


def max_weight_perfect_matching_bf(g: PlainGraph) -> int | None:
    """Maximum weight of a perfect matching, or None if ``g`` has none."""
    return max((m.weight for m in perfect_matchings(g)), default=None)
