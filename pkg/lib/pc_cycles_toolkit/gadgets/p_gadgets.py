"""
P-gadgets: uncoloured graphs standing for a vertex x of an edge-coloured multigraph, with one terminal x_q per colour
q of the palette χ(x). A P-gadget satisfies:

    P1. every colour of the palette has its terminal;
    P2. the gadget has a perfect matching;
    P3. for every pair of colours p != q, removing x_p and x_q leaves an empty graph or a graph with a perfect matching;
    P4. for every set L of at least 3 colours, removing the terminals of L leaves a graph without perfect matching.

Three constructions are provided: ``sp`` (2z + 2 vertices, 3z + 1 edges), ``bjgp`` (2z - 2 vertices, z(3z - 5)/2
edges) and ``xp`` (2z - 2 vertices, 3z - 5 edges), where z = |χ(x)|.
"""
import logging
import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Literal, Mapping, Sequence, TypeAlias

from ..errors import PreconditionError
from ..matching import PlainGraph, has_perfect_matching

logger = logging.getLogger(__name__)

GadgetKind: TypeAlias = Literal["xp", "sp", "bjgp"]
GADGET_KINDS: tuple[GadgetKind, ...] = ("xp", "sp", "bjgp")

P4Reading: TypeAlias = Literal["strict", "literal"]
"""
How P4 treats an empty residue: ``strict`` counts the empty graph as having a perfect matching (so it violates P4),
``literal`` lets an empty residue pass.
"""


@dataclass(frozen=True)
class Gadget:
    """
    A candidate P-gadget.

    Attributes:
        carrier: The uncoloured graph G_x, on the vertices ``0..carrier.n-1``.
        terminals: Map from each palette colour q to its terminal vertex x_q in the carrier.
        kind: ``"xp"``, ``"sp"``, ``"bjgp"`` or ``"custom"``.
        labels: Display name of every carrier vertex.
    """

    carrier: PlainGraph
    terminals: dict[int, int]
    kind: str = "custom"
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            terminal_of = {v: q for q, v in self.terminals.items()}
            labels = tuple(f"x_{terminal_of[v]}" if v in terminal_of else f"v_{v}" for v in range(self.carrier.n))
            object.__setattr__(self, "labels", labels)

    @property
    def palette(self) -> tuple[int, ...]:
        return tuple(sorted(self.terminals))

    @property
    def z(self) -> int:
        return len(self.terminals)

    def size(self) -> tuple[int, int]:
        return self.carrier.n, self.carrier.m

    def with_palette(self, palette: Sequence[int]) -> "Gadget":
        """The same carrier with its terminals reassigned, in increasing colour order, to the colours of ``palette``."""
        palette = sorted(palette)
        if len(palette) != self.z:
            raise PreconditionError(f"A gadget with {self.z} terminals can't house a palette of size {len(palette)}.")
        terminals = {q: self.terminals[p] for p, q in zip(self.palette, palette, strict=True)}
        return Gadget(self.carrier, terminals, self.kind)


def _check_palette(palette: Sequence[int]) -> list[int]:
    palette = sorted(set(palette))
    if len(palette) < 2:
        raise PreconditionError(f"P-gadgets need a palette of at least 2 colours, got {palette}.")
    return palette


def make_gadget(kind: GadgetKind, palette: Sequence[int]) -> Gadget:
    """
    Build the SP, BJGP or XP gadget of a palette.

    Vertex numbering: SP lists x_q (palette order), then x'_q, then x''_a and x''_b; BJGP and XP list x_q then y_q for
    the colours q other than the least (m) and the greatest (M) one.

    Args:
        kind: ``"sp"``, ``"bjgp"`` or ``"xp"``.
        palette: The colours χ(x), at least 2.

    Returns:
        The gadget, whose terminals are the vertices x_q.
    """
    palette = _check_palette(palette)
    z = len(palette)
    x = {q: i for i, q in enumerate(palette)}
    labels = [f"x_{q}" for q in palette]
    edges = []

    match kind:
        case "sp":
            x1 = {q: z + i for i, q in enumerate(palette)}
            a, b = 2 * z, 2 * z + 1
            labels += [f"x'_{q}" for q in palette] + ["x''_a", "x''_b"]
            edges.append((a, b))
            for q in palette:
                edges += [(x1[q], a), (x1[q], b), (x[q], x1[q])]
        case "bjgp" | "xp":
            middle = palette[1:-1]
            y = {q: z + i for i, q in enumerate(middle)}
            labels += [f"y_{q}" for q in middle]
            lo, hi = palette[0], palette[-1]
            if kind == "bjgp":
                edges += [(x[j], y[k]) for j in palette for k in middle]
                edges += [(x[j], x[k]) for j, k in combinations(palette, 2)]
            else:
                edges.append((x[lo], x[hi]))
                for j in middle:
                    edges += [(x[j], y[j]), (x[lo], y[j]), (x[hi], y[j])]
        case _:
            raise ValueError(f"Unknown gadget kind {kind!r}, expected one of {GADGET_KINDS}.")

    carrier = PlainGraph(len(labels), tuple((u, v, 0) for u, v in edges))
    return Gadget(carrier, x, kind, tuple(labels))


def gadget_size(kind: GadgetKind, z: int) -> tuple[int, int]:
    """Closed-form (vertex count, edge count) of a gadget of palette size ``z``."""
    match kind:
        case "sp":
            return 2 * z + 2, 3 * z + 1
        case "bjgp":
            return 2 * z - 2, z * (3 * z - 5) // 2
        case "xp":
            return 2 * z - 2, 3 * z - 5
    raise ValueError(f"Unknown gadget kind {kind!r}, expected one of {GADGET_KINDS}.")


def custom_gadget(carrier: PlainGraph, terminals: Sequence[int] | Mapping[int, int]) -> Gadget:
    """
    Wrap a user-supplied carrier as a gadget.

    Args:
        carrier: The candidate G_x.
        terminals: Either the terminal vertices in colour order (colours ``1..z``), or a map colour -> vertex.
    """
    if not isinstance(terminals, Mapping):
        terminals = {q: int(v) for q, v in enumerate(terminals, start=1)}
    return Gadget(carrier, dict(terminals), "custom")


########################################################################################################################
#   === PROPERTY CHECKS ===
########################################################################################################################
@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of one property: ``witness`` holds the colours of the first violating pair or subset."""

    name: str
    passed: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""

    def render(self) -> str:
        status = "pass" if self.passed else "fail"
        if self.witness is not None:
            status += " (colours " + " ".join(str(q) for q in self.witness) + ")"
        if self.detail:
            status += f": {self.detail}"
        return f"{self.name}: {status}"


@dataclass(frozen=True)
class GadgetReport:
    checks: tuple[PropertyCheck, ...]

    def __bool__(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def passed(self) -> bool:
        return bool(self)

    def __getitem__(self, name: str) -> PropertyCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def render(self) -> str:
        return "\n".join(check.render() for check in self.checks)


def verify_p_properties(candidate: Gadget, p4: P4Reading = "strict", fail_fast: bool = False) -> GadgetReport:
    """
    Check P1 to P4 exhaustively on a candidate gadget.

    Args:
        candidate: The gadget.
        p4: Reading of P4 for an empty residue (see ``P4Reading``).
        fail_fast: Stop at the first failing property; the remaining ones are reported as not evaluated.

    Returns:
        The report, truthy iff the four properties hold.
    """
    carrier, terminals = candidate.carrier, candidate.terminals
    palette = candidate.palette
    checks: list[PropertyCheck] = []

    def skip_rest() -> GadgetReport:
        for name in ("P1", "P2", "P3", "P4")[len(checks) :]:
            checks.append(PropertyCheck(name, False, detail="not evaluated"))
        return GadgetReport(tuple(checks))

    # === P1 ===
    vertices = list(terminals.values())
    if len(palette) < 2:
        checks.append(PropertyCheck("P1", False, detail="fewer than 2 colours"))
    elif len(set(vertices)) != len(vertices):
        checks.append(PropertyCheck("P1", False, detail="two colours share a terminal"))
    elif not all(0 <= v < carrier.n for v in vertices):
        checks.append(PropertyCheck("P1", False, detail="a terminal is not a vertex of the carrier"))
    else:
        checks.append(PropertyCheck("P1", True))
    if not checks[-1].passed:
        return skip_rest()

    # === P2 ===
    checks.append(PropertyCheck("P2", has_perfect_matching(carrier)))
    if fail_fast and not checks[-1].passed:
        return skip_rest()

    # === P3 ===
    violation = None
    for pair in combinations(palette, 2):
        residue, _ = carrier.remove_vertices(terminals[q] for q in pair)
        if not has_perfect_matching(residue):
            violation = pair
            break
    checks.append(PropertyCheck("P3", violation is None, violation))
    if fail_fast and violation is not None:
        return skip_rest()

    # === P4 ===
    violation, detail = None, ""
    for size in range(3, len(palette) + 1):
        for subset in combinations(palette, size):
            residue, _ = carrier.remove_vertices(terminals[q] for q in subset)
            if residue.n == 0:
                if p4 == "strict":
                    violation, detail = subset, "empty residue"
                    break
            elif has_perfect_matching(residue):
                violation = subset
                break
        if violation is not None:
            break
    checks.append(PropertyCheck("P4", violation is None, violation, detail))

    return GadgetReport(tuple(checks))


########################################################################################################################
#   === GADGET FACTORIES ===
########################################################################################################################
GadgetFactory: TypeAlias = Callable[[Sequence[int]], Gadget]
GadgetSpec: TypeAlias = GadgetKind | Gadget | GadgetFactory


def gadget_factory(spec: GadgetSpec) -> GadgetFactory:
    """
    Turn a gadget specification into a palette -> gadget function.

    Args:
        spec: A gadget kind, a custom gadget (used for palettes of its own size, XP gadgets being used for the other
            sizes) or a factory, returned unchanged.
    """
    if isinstance(spec, str):
        if spec not in GADGET_KINDS:
            raise ValueError(f"Unknown gadget kind {spec!r}, expected one of {GADGET_KINDS}.")
        return lambda palette: make_gadget(spec, palette)

    if isinstance(spec, Gadget):
        if not verify_p_properties(spec, p4="literal"):
            raise PreconditionError(f"The custom gadget is not a P-gadget:\n{verify_p_properties(spec).render()}")
        if not verify_p_properties(spec, p4="strict"):
            warnings.warn(
                "The custom gadget only satisfies P4 under the literal reading: decoded matchings may be inconsistent.",
                stacklevel=2,
            )
        template = spec

        def from_template(palette: Sequence[int]) -> Gadget:
            if len(set(palette)) == template.z:
                return template.with_palette(palette)
            logger.debug("Palette %s has no custom gadget of its size, using XP.", sorted(palette))
            return make_gadget("xp", palette)

        return from_template

    return spec
