import logging
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..ecgraph import ColouredMultigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EliminationStep:
    """
    A removed vertex ``vertex``, with each component of the remaining graph minus ``vertex`` it is joined to, and the
    only colour of the edges joining them.
    """

    vertex: int
    components: tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class EliminationCertificate:
    steps: tuple[EliminationStep, ...]
    residual: tuple[int, ...]

    @property
    def removal_order(self) -> tuple[int, ...]:
        return tuple(step.vertex for step in self.steps)

    def render(self) -> str:
        lines = []
        for step in self.steps:
            joins = ", ".join(f"{{{' '.join(map(str, comp))}}}:{colour}" for comp, colour in step.components)
            lines.append(f"remove {step.vertex} | {joins if joins else '-'}")
        lines.append("residual " + (" ".join(map(str, self.residual)) if self.residual else "-"))
        return "\n".join(lines)


def _single_colour_components(
    g: ColouredMultigraph, alive: np.ndarray, z: int
) -> tuple[tuple[tuple[int, ...], int], ...] | None:
    """
    The components of the alive graph minus ``z`` joined to ``z``, with their colour, or None if one of them is joined
    to ``z`` by edges of two different colours.
    """
    u, v, colour = g.edge_array.T
    others = alive.copy()
    others[z] = False

    inner = others[u] & others[v]
    adjacency = coo_matrix((np.ones(inner.sum(), dtype=np.int8), (u[inner], v[inner])), shape=(g.n + 1, g.n + 1))
    _, labels = connected_components(adjacency, directed=False)

    at_z = ((u == z) & others[v]) | ((v == z) & others[u])
    neighbours = np.where(u[at_z] == z, v[at_z], u[at_z])
    colour_of: dict[int, int] = {}
    for label, col in zip(labels[neighbours].tolist(), colour[at_z].tolist(), strict=True):
        if colour_of.setdefault(label, col) != col:
            return None

    components = []
    for label, col in colour_of.items():
        members = np.flatnonzero(others & (labels == label))
        components.append((tuple(members.tolist()), col))
    return tuple(sorted(components))


def has_pc_cycle_elimination(g: ColouredMultigraph) -> tuple[bool, EliminationCertificate]:
    """
    Decide whether ``g`` has a PC cycle by vertex elimination.

    A vertex z such that no component of G - z is joined to z by edges of two colours lies on no PC cycle and is
    removed. Conversely a graph without PC cycle always has such a vertex, so the elimination empties ``g`` iff it has
    no PC cycle. Each round scans the remaining vertices in increasing order and removes the first one that qualifies.

    Returns:
        ``(has_cycle, certificate)``: the certificate lists every removal with the colour seen from each component,
        and the residual vertices (non-empty iff a PC cycle exists).
    """
    alive = np.zeros(g.n + 1, dtype=bool)
    alive[1:] = True
    steps = []

    while alive.any():
        for z in np.flatnonzero(alive).tolist():
            components = _single_colour_components(g, alive, z)
            if components is not None:
                steps.append(EliminationStep(z, components))
                alive[z] = False
                break
        else:
            break

    residual = tuple(np.flatnonzero(alive).tolist())
    logger.debug("Elimination removed %d vertices, %d remain.", len(steps), len(residual))
    return bool(residual), EliminationCertificate(tuple(steps), residual)
