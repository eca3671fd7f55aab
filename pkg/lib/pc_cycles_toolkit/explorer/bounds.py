"""
Empirical checks of the extremal results on long PC cycles and paths.

Each statement samples random instances satisfying its hypothesis and evaluates its conclusion exactly, with the
oracle or with a fast algorithm cross-checked against the oracle. A violated theorem points to an implementation bug,
a violated conjecture is archived as a finding.

Hypotheses on δ_mon are only ever evaluated on instances where every colour is present at every vertex, so the
palette-restricted and the all-colour readings of δ_mon coincide.
"""
import logging
from dataclasses import asdict, dataclass, field
from typing import Callable, Literal, NamedTuple

import numpy as np

from ..algorithms import (
    colour_connected_graph,
    hamilton_pc_cycle_k2,
    longest_pc_cycle_k2,
    max_pc_one_path_cycle_complete,
)
from ..ecgraph import ColouredMultigraph, mono_degree_bounds, render_graph
from ..errors import BudgetExceededError, PreconditionError
from ..oracle import OracleBudget, longest_pc_cycle_bf, longest_pc_path_bf, pc_hamilton_cycle_bf, pc_hamilton_path_bf
from ..pc_utilities import parallel_map
from .generators import bounded_complete, dense_multigraph, dense_simple_graph, proper_complete, random_complete

logger = logging.getLogger(__name__)

StatementKind = Literal["theorem", "conjecture"]


@dataclass(frozen=True)
class BoundsConfig:
    """
    Attributes:
        trials: Number of random instances sampled per statement.
        n_min: Smallest order sampled.
        n_max: Largest order sampled, at most ``budget.max_vertices``.
        c_max: Largest number of colours sampled (the many-colours statement picks its own).
        seed: Seed of every random generator; each (statement, batch) pair derives its own stream from it.
        budget: Oracle budget of every exact evaluation.
    """

    trials: int = 20
    n_min: int = 3
    n_max: int = 7
    c_max: int = 3
    seed: int = 0
    budget: OracleBudget = OracleBudget(max_edges=64)

    def __post_init__(self):
        if self.trials < 0:
            raise PreconditionError(f"The number of trials must be non-negative, got {self.trials}.")
        if not 1 <= self.n_min <= self.n_max:
            raise PreconditionError(f"Invalid order range {self.n_min}..{self.n_max}.")
        if self.c_max < 2:
            raise PreconditionError(f"At least 2 colours are needed, got c_max = {self.c_max}.")
        if self.n_max > self.budget.max_vertices:
            raise BudgetExceededError(
                f"n_max = {self.n_max} exceeds the oracle budget of {self.budget.max_vertices} vertices."
            )


class Statement(NamedTuple):
    name: str
    kind: StatementKind
    text: str
    sample: Callable[[np.random.Generator, BoundsConfig], ColouredMultigraph | None]
    hypothesis: Callable[[ColouredMultigraph], bool]
    conclusion: Callable[[ColouredMultigraph, OracleBudget], bool]


########################################################################################################################
#   === SAMPLING HELPERS ===
########################################################################################################################
def _order(rng: np.random.Generator, config: BoundsConfig, low: int = 1) -> int | None:
    low = max(low, config.n_min)
    if low > config.n_max:
        return None
    return int(rng.integers(low, config.n_max + 1))


def _colours(rng: np.random.Generator, config: BoundsConfig) -> int:
    return int(rng.integers(2, config.c_max + 1))


def _every_colour_everywhere(g: ColouredMultigraph) -> bool:
    return g.n > 0 and g.c >= 2 and bool((g.colour_degrees[1:, 1:] > 0).all())


def _delta_mon(g: ColouredMultigraph) -> int:
    return mono_degree_bounds(g)[0]


def _max_mono_degree(g: ColouredMultigraph) -> int:
    return mono_degree_bounds(g)[1]


def _skewed_complete(n: int, c: int, rng: np.random.Generator) -> ColouredMultigraph:
    """A K^c_n with colour frequencies drawn from a Dirichlet, to reach unbalanced colourings as well."""
    return random_complete(n, c, rng, weights=rng.dirichlet(np.full(c, 0.7)))


def _has_hamilton_cycle(g: ColouredMultigraph, budget: OracleBudget) -> bool:
    return pc_hamilton_cycle_bf(g, budget) is not None


########################################################################################################################
#   === MINIMUM MONOCHROMATIC DEGREE AND LONG PC CYCLES ===
########################################################################################################################
def _sample_dirac(
    rng: np.random.Generator, config: BoundsConfig, threshold: Callable[[int], int]
) -> ColouredMultigraph | None:
    n = _order(rng, config, low=2)
    if n is None or threshold(n) > n - 1:
        return None
    d = int(rng.integers(threshold(n), n))
    return dense_multigraph(n, _colours(rng, config), d, rng)


def _theorem_threshold(n: int) -> int:
    return (n + 2) // 2


def _conjecture_threshold(n: int) -> int:
    return (n + 1) // 2


def _sample_dirac_theorem(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    return _sample_dirac(rng, config, _theorem_threshold)


def _sample_dirac_conjecture(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    return _sample_dirac(rng, config, _conjecture_threshold)


def _dirac_theorem_hypothesis(g: ColouredMultigraph) -> bool:
    return _every_colour_everywhere(g) and _delta_mon(g) >= _theorem_threshold(g.n)


def _dirac_conjecture_hypothesis(g: ColouredMultigraph) -> bool:
    return _every_colour_everywhere(g) and _delta_mon(g) >= _conjecture_threshold(g.n)


def _dirac_conclusion(g: ColouredMultigraph, budget: OracleBudget) -> bool:
    if g.c == 2 and g.n % 2:
        return longest_pc_cycle_bf(g, target=g.n - 1, budget=budget).value >= g.n - 1
    return _has_hamilton_cycle(g, budget)


########################################################################################################################
#   === MINIMUM MONOCHROMATIC DEGREE AND LONG PC PATHS ===
########################################################################################################################
def _sample_dense_graph(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    n, c = _order(rng, config, low=2), _colours(rng, config)
    if n is None or (n - 1) // c < 1:
        return None
    d = int(rng.integers(1, (n - 1) // c + 1))
    return dense_simple_graph(n, c, d, rng)


def _sample_dense_multigraph(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    n = _order(rng, config, low=2)
    if n is None:
        return None
    d = int(rng.integers(1, max(n // 2, 1) + 1))
    return dense_multigraph(n, _colours(rng, config), d, rng)


def _path_graph_hypothesis(g: ColouredMultigraph) -> bool:
    return g.is_simple() and _every_colour_everywhere(g) and _delta_mon(g) >= 1


def _path_multigraph_hypothesis(g: ColouredMultigraph) -> bool:
    return _every_colour_everywhere(g) and _delta_mon(g) >= 1


def _has_path_of_length(g: ColouredMultigraph, budget: OracleBudget, bound: int) -> bool:
    target = min(g.n - 1, bound)
    return longest_pc_path_bf(g, target=target, budget=budget).value >= target


def _path_theorem_conclusion(g: ColouredMultigraph, budget: OracleBudget) -> bool:
    return _has_path_of_length(g, budget, 2 * (g.c // 2) * _delta_mon(g))


def _path_2cd_conclusion(g: ColouredMultigraph, budget: OracleBudget) -> bool:
    return _has_path_of_length(g, budget, 2 * g.c * _delta_mon(g))


def _path_2d_conclusion(g: ColouredMultigraph, budget: OracleBudget) -> bool:
    return _has_path_of_length(g, budget, 2 * _delta_mon(g))


########################################################################################################################
#   === PC HAMILTON CYCLES IN K^c_n ===
########################################################################################################################
def _many_colours_threshold(n: int) -> int:
    return (n - 1) * (n - 2) // 2 + 2


def _sample_many_colours(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    n = _order(rng, config, low=3)
    if n is None:
        return None
    c = int(rng.integers(_many_colours_threshold(n), n * (n - 1) // 2 + 1))
    return random_complete(n, c, rng, surjective=True)


def _many_colours_hypothesis(g: ColouredMultigraph) -> bool:
    return g.is_complete() and len(g.colours_used()) >= _many_colours_threshold(g.n)


def _sample_bounded_mono_degree(
    rng: np.random.Generator, config: BoundsConfig, limit: Callable[[int], int]
) -> ColouredMultigraph | None:
    n = _order(rng, config, low=3)
    if n is None or limit(n) < 1:
        return None
    if limit(n) == 1:
        return proper_complete(n, rng)
    return bounded_complete(n, n, limit(n), rng)


def _shearer_limit(n: int) -> int:
    return (n - 1) // 7


def _bollobas_erdos_limit(n: int) -> int:
    return n // 2 - 1


def _sample_shearer(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    return _sample_bounded_mono_degree(rng, config, _shearer_limit)


def _sample_bollobas_erdos(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    return _sample_bounded_mono_degree(rng, config, _bollobas_erdos_limit)


def _shearer_hypothesis(g: ColouredMultigraph) -> bool:
    return g.n >= 3 and g.is_complete() and 7 * _max_mono_degree(g) < g.n


def _bollobas_erdos_hypothesis(g: ColouredMultigraph) -> bool:
    return g.n >= 3 and g.is_complete() and _max_mono_degree(g) <= _bollobas_erdos_limit(g.n)


########################################################################################################################
#   === FAST ALGORITHMS ON K^c_n AGAINST THE ORACLE ===
########################################################################################################################
def _sample_complete(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    n = _order(rng, config, low=2)
    return None if n is None else _skewed_complete(n, _colours(rng, config), rng)


def _sample_complete_two_coloured(rng: np.random.Generator, config: BoundsConfig) -> ColouredMultigraph | None:
    n = _order(rng, config, low=3)
    return None if n is None else _skewed_complete(n, 2, rng)


def _complete_hypothesis(g: ColouredMultigraph) -> bool:
    return g.n >= 2 and g.c >= 2 and g.is_complete()


def _complete_two_coloured_hypothesis(g: ColouredMultigraph) -> bool:
    return g.n >= 3 and g.c == 2 and g.is_complete()


def _colour_connected_k2_hypothesis(g: ColouredMultigraph) -> bool:
    return _complete_two_coloured_hypothesis(g) and colour_connected_graph(g)


def _hamilton_path_conclusion(g: ColouredMultigraph, budget: OracleBudget) -> bool:
    spanning = max_pc_one_path_cycle_complete(g)[0] == g.n
    return spanning == (pc_hamilton_path_bf(g, budget) is not None)


def _k2_hamilton_conclusion(g: ColouredMultigraph, budget: OracleBudget) -> bool:
    return hamilton_pc_cycle_k2(g) == _has_hamilton_cycle(g, budget)


def _k2_longest_cycle_conclusion(g: ColouredMultigraph, budget: OracleBudget) -> bool:
    return longest_pc_cycle_k2(g) == longest_pc_cycle_bf(g, budget=budget).value


STATEMENTS: tuple[Statement, ...] = (
    Statement(
        "dirac-hamilton",
        "theorem",
        "δ_mon >= ⌈(n+1)/2⌉ implies a PC Hamilton cycle if c >= 3 or n is even, a PC cycle of length n - 1 otherwise",
        _sample_dirac_theorem,
        _dirac_theorem_hypothesis,
        _dirac_conclusion,
    ),
    Statement(
        "dirac-hamilton-half",
        "conjecture",
        "the same conclusion under δ_mon >= ⌈n/2⌉",
        _sample_dirac_conjecture,
        _dirac_conjecture_hypothesis,
        _dirac_conclusion,
    ),
    Statement(
        "path-graph",
        "theorem",
        "an edge-coloured graph with δ_mon = d >= 1 has a PC path of length >= min{n - 1, 2⌊c/2⌋d}",
        _sample_dense_graph,
        _path_graph_hypothesis,
        _path_theorem_conclusion,
    ),
    Statement(
        "path-graph-2cd",
        "conjecture",
        "an edge-coloured graph with δ_mon = d >= 1 has a PC path of length >= min{n - 1, 2cd}",
        _sample_dense_graph,
        _path_graph_hypothesis,
        _path_2cd_conclusion,
    ),
    Statement(
        "path-multigraph-2d",
        "conjecture",
        "an edge-coloured multigraph with δ_mon = d >= 1 has a PC path of length >= min{n - 1, 2d}",
        _sample_dense_multigraph,
        _path_multigraph_hypothesis,
        _path_2d_conclusion,
    ),
    Statement(
        "many-colours",
        "theorem",
        "every K^c_n with c >= (n-1)(n-2)/2 + 2 has a PC Hamilton cycle",
        _sample_many_colours,
        _many_colours_hypothesis,
        _has_hamilton_cycle,
    ),
    Statement(
        "shearer",
        "theorem",
        "every K^c_n with 7Δ_mon < n has a PC Hamilton cycle",
        _sample_shearer,
        _shearer_hypothesis,
        _has_hamilton_cycle,
    ),
    Statement(
        "bollobas-erdos",
        "conjecture",
        "every K^c_n with Δ_mon <= ⌊n/2⌋ - 1 has a PC Hamilton cycle",
        _sample_bollobas_erdos,
        _bollobas_erdos_hypothesis,
        _has_hamilton_cycle,
    ),
    Statement(
        "hamilton-path-complete",
        "theorem",
        "a K^c_n has a PC Hamilton path iff it has a spanning PC 1-path-cycle subgraph (fast algorithm vs oracle)",
        _sample_complete,
        _complete_hypothesis,
        _hamilton_path_conclusion,
    ),
    Statement(
        "k2-hamilton",
        "theorem",
        "a K^2_n has a PC Hamilton cycle iff it is colour-connected with a PC cycle factor (fast algorithm vs oracle)",
        _sample_complete_two_coloured,
        _complete_two_coloured_hypothesis,
        _k2_hamilton_conclusion,
    ),
    Statement(
        "k2-longest-cycle",
        "theorem",
        "in a colour-connected K^2_n, a longest PC cycle covers a maximum PC cycle subgraph (fast algorithm vs oracle)",
        _sample_complete_two_coloured,
        _colour_connected_k2_hypothesis,
        _k2_longest_cycle_conclusion,
    ),
)
STATEMENT_NAMES = tuple(s.name for s in STATEMENTS)


########################################################################################################################
#   === REPORTS ===
########################################################################################################################
@dataclass
class StatementResult:
    """
    Attributes:
        name: Name of the statement.
        kind: ``"theorem"`` or ``"conjecture"``.
        sampled: Number of trials.
        hypothesis_met: Number of sampled instances satisfying the hypothesis.
        held: Number of those on which the conclusion held.
        undecided: Number of those the oracle could not decide within its budget.
        counterexamples: The rendered instances violating the conclusion.
    """

    name: str
    kind: StatementKind
    sampled: int = 0
    hypothesis_met: int = 0
    held: int = 0
    undecided: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def violated(self) -> bool:
        return bool(self.counterexamples)

    def merge(self, other: "StatementResult"):
        self.sampled += other.sampled
        self.hypothesis_met += other.hypothesis_met
        self.held += other.held
        self.undecided += other.undecided
        self.counterexamples += other.counterexamples

    def render(self) -> str:
        lines = [
            f"statement: {self.name}",
            f"kind: {self.kind}",
            f"sampled: {self.sampled}",
            f"hypothesis met: {self.hypothesis_met}",
            f"held: {self.held}",
            f"undecided: {self.undecided}",
            f"violated: {self.violated}",
        ]
        for i, counterexample in enumerate(self.counterexamples):
            lines.append(f"counterexample #{i + 1}:")
            lines += ["  " + line for line in counterexample.splitlines()]
        return "\n".join(lines)


@dataclass(frozen=True)
class BoundsReport:
    config: BoundsConfig
    results: tuple[StatementResult, ...]

    @property
    def theorems_hold(self) -> bool:
        return not any(r.violated for r in self.results if r.kind == "theorem")

    @property
    def findings(self) -> tuple[StatementResult, ...]:
        """The violated conjectures."""
        return tuple(r for r in self.results if r.kind == "conjecture" and r.violated)

    def __getitem__(self, name: str) -> StatementResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def render(self) -> str:
        header = [
            f"seed: {self.config.seed}",
            f"trials: {self.config.trials}",
            f"orders: {self.config.n_min}..{self.config.n_max}",
            f"c max: {self.config.c_max}",
            f"theorems hold: {self.theorems_hold}",
        ]
        return "\n\n".join(["\n".join(header)] + [r.render() for r in self.results])

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "theorems_hold": self.theorems_hold,
            "results": [asdict(r) | {"violated": r.violated} for r in self.results],
        }


########################################################################################################################
#   === RUNNER ===
########################################################################################################################
class _Batch(NamedTuple):
    statement: int
    batch: int
    trials: int
    config: BoundsConfig


def _run_batch(job: _Batch) -> StatementResult:
    statement = STATEMENTS[job.statement]
    rng = np.random.default_rng([job.config.seed, job.statement, job.batch])
    result = StatementResult(statement.name, statement.kind, sampled=job.trials)
    for _ in range(job.trials):
        g = statement.sample(rng, job.config)
        if g is None or not statement.hypothesis(g):
            continue
        result.hypothesis_met += 1
        try:
            held = statement.conclusion(g, job.config.budget)
        except BudgetExceededError:
            result.undecided += 1
            continue
        if held:
            result.held += 1
        else:
            result.counterexamples.append(render_graph(g))
    return result


def check_bounds(
    config: BoundsConfig,
    statements: list[str] | None = None,
    n_jobs: int = 1,
    batch_size: int = 10,
    progress: bool = False,
) -> BoundsReport:
    """
    Sample random instances for each statement and evaluate its conclusion on those satisfying its hypothesis.

    The trials of each statement are split in batches of ``batch_size``; the random stream of a batch is seeded by
    ``(config.seed, statement index, batch index)``, so the report only depends on the configuration.

    Args:
        config: Trial count, order and colour ranges, seed and oracle budget.
        statements: Names of the statements to check (all of them by default).
        n_jobs: Number of worker processes running the batches.
        batch_size: Number of trials per batch.
        progress: Display a progress bar over the batches.

    Raises:
        PreconditionError: if a statement name is unknown.
    """
    names = STATEMENT_NAMES if statements is None else statements
    unknown = [name for name in names if name not in STATEMENT_NAMES]
    if unknown:
        raise PreconditionError(f"Unknown statement(s) {', '.join(unknown)}; expected some of {STATEMENT_NAMES}.")
    indices = [i for i, name in enumerate(STATEMENT_NAMES) if name in names]

    jobs = [
        _Batch(i, b, min(batch_size, config.trials - start), config)
        for i in indices
        for b, start in enumerate(range(0, config.trials, batch_size))
    ]
    batches = parallel_map(_run_batch, jobs, n_jobs=n_jobs, progress=progress, desc="check-bounds")

    results = {i: StatementResult(STATEMENTS[i].name, STATEMENTS[i].kind) for i in indices}
    for job, batch in zip(jobs, batches, strict=True):
        results[job.statement].merge(batch)
    for result in results.values():
        log = logger.warning if result.violated else logger.info
        log(
            "%s %s: %d/%d held (%d undecided) on %d sampled.",
            result.kind,
            result.name,
            result.held,
            result.hypothesis_met,
            result.undecided,
            result.sampled,
        )
    return BoundsReport(config, tuple(results[i] for i in indices))
