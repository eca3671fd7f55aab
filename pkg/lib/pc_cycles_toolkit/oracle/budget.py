import time
from dataclasses import dataclass

from ..ecgraph import ColouredMultigraph
from ..errors import BudgetExceededError


@dataclass(frozen=True)
class OracleBudget:
    """
    Hard limits of the exhaustive enumerators. Instances beyond them are refused, and enumerations running longer
    than ``time_cap`` seconds are interrupted: the oracle never returns a truncated answer.
    """

    max_vertices: int = 8
    max_edges: int = 24
    time_cap: float | None = 60.0

    def check(self, g: ColouredMultigraph) -> "Deadline":
        if g.n > self.max_vertices:
            raise BudgetExceededError(f"{g.n} vertices exceed the oracle budget of {self.max_vertices}.")
        if g.m > self.max_edges:
            raise BudgetExceededError(f"{g.m} edges exceed the oracle budget of {self.max_edges}.")
        return Deadline(self.time_cap)

    def allows(self, g: ColouredMultigraph) -> bool:
        return g.n <= self.max_vertices and g.m <= self.max_edges


DEFAULT_BUDGET = OracleBudget()


class Deadline:
    """Time cap of one oracle call. ``tick()`` runs in the inner loops and reads the clock every 1024 calls."""

    __slots__ = ("_end", "_count")

    def __init__(self, time_cap: float | None):
        self._end = None if time_cap is None else time.monotonic() + time_cap
        self._count = 0

    def tick(self):
        self._count += 1
        if self._end is not None and self._count & 1023 == 0 and time.monotonic() > self._end:
            raise BudgetExceededError("The oracle time cap was reached.")
