"""
Command-line front-end.

Every command prints one ``key: value`` block, or the same record as a JSON object with ``--json``. Exit codes:
0 computed, 1 property false or object absent, 2 input error, 3 budget error.
"""
import argparse
import json
import logging
import sys
from typing import Any, NamedTuple

from ..algorithms import (
    exists_pc_path_with_end_colours,
    find_pc_path,
    has_pc_cycle_elimination,
    hamilton_pc_cycle_k2,
    longest_pc_cycle_k2,
    longest_pc_path_complete,
    max_pc_cycle_subgraph,
    max_pc_path_cycle,
    shortest_pc_cycle,
    shortest_pc_path,
)
from ..ecgraph import (
    ColouredMultigraph,
    PCSubgraph,
    mono_degree_bounds,
    parse_graph,
    parse_plain_graph,
    read_graph,
    render_graph,
    write_graph,
)
from ..errors import (
    BudgetExceededError,
    EmptyGadgetGraphError,
    GraphFormatError,
    InvalidGraphError,
    PreconditionError,
    SearchTooLargeError,
)
from ..gadgets import GADGET_KINDS, Gadget, GadgetSpec, build_gstar, custom_gadget, make_gadget, verify_p_properties
from ..matching import PlainGraph
from ..oracle import (
    OracleBudget,
    colour_connected_bf,
    end_colour_pairs_bf,
    enum_pc_cycles,
    enum_pc_paths,
    has_pc_cycle_bf,
    longest_pc_cycle_bf,
    longest_pc_path_bf,
    max_pc_cycle_subgraph_bf,
    max_pc_one_path_cycle_bf,
    max_pc_path_cycle_bf,
    pc_hamilton_cycle_bf,
    pc_hamilton_path_bf,
    shortest_pc_cycle_bf,
    shortest_pc_path_bf,
)
from .bounds import STATEMENT_NAMES, BoundsConfig, check_bounds
from .digraph import encode_digraph, has_directed_cycle, read_digraph
from .gadget_search import SearchSpace, search_min_gadgets
from .generators import extremal_longest_cycle, gen_extremal_two_blocks

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

Record = dict[str, Any]


class Outcome(NamedTuple):
    """Exit code and result record of a command; ``text`` replaces the ``key: value`` rendering when set."""

    code: int
    record: Record
    text: str | None = None


def _status(flag: bool) -> int:
    return EXIT_OK if flag else EXIT_FALSE


def _lines(text: str) -> list[str]:
    return text.splitlines()


def _witness(sub: PCSubgraph | None, g: ColouredMultigraph) -> list[str] | None:
    return None if sub is None else _lines(sub.render(g))


def _format_value(value: Any) -> str:
    match value:
        case None:
            return "-"
        case bool():
            return "true" if value else "false"
        case list() | tuple():
            return " ".join(str(_) for _ in value)
        case _:
            return str(value)


_BLOCK_KEYS = {"graph", "witness", "path", "cycles", "paths", "carrier", "gadget graph", "certificate", "subgraph"}


def render_record(record: Record) -> str:
    """The ``key: value`` text of a record. Lists of rendered lines are printed one per indented line."""
    lines = []
    for key, value in record.items():
        key = key.replace("_", " ")
        multiline = isinstance(value, list) and len(value) > 1 and all(isinstance(_, str) for _ in value)
        if key in _BLOCK_KEYS or multiline:
            lines.append(f"{key}:")
            lines += ["  " + line for line in value or []]
        else:
            lines.append(f"{key}: {_format_value(value)}")
    return "\n".join(lines)


########################################################################################################################
#   === INPUTS ===
########################################################################################################################
def _load_graph(path: str) -> ColouredMultigraph:
    if path == "-":
        return parse_graph(sys.stdin)
    return read_graph(path)


def _load_gadget(path: str, terminals: list[int]) -> Gadget:
    with open(path, encoding="utf-8") as f:
        n, edges = parse_plain_graph(f)
    return custom_gadget(PlainGraph(n, tuple(edges)), [t - 1 for t in terminals])


def _gadget_spec(args: argparse.Namespace) -> GadgetSpec:
    if getattr(args, "gadget_file", None):
        if not args.terminals:
            raise PreconditionError("--gadget-file needs --terminals.")
        return _load_gadget(args.gadget_file, args.terminals)
    return args.gadget


def _budget(args: argparse.Namespace) -> OracleBudget:
    return OracleBudget(args.max_vertices, args.max_edges, args.time_cap)


########################################################################################################################
#   === COMMANDS ===
########################################################################################################################
def cmd_analyze(args: argparse.Namespace) -> Outcome:
    g = _load_graph(args.file)
    kind = _gadget_spec(args)
    delta, big_delta = mono_degree_bounds(g) if g.n else (0, 0)

    by_elimination, certificate = has_pc_cycle_elimination(g)
    best = max_pc_cycle_subgraph(g, kind)
    if by_elimination != (best.r > 0):
        logger.error("Elimination and matching disagree on %s.", args.file)
    shortest = shortest_pc_cycle(g, kind, n_jobs=args.jobs)

    record: Record = {
        "vertices": g.n,
        "edges": g.m,
        "colours": g.c,
        "delta_mon": delta,
        "Delta_mon": big_delta,
        "pc_cycle_elimination": by_elimination,
        "pc_cycle_matching": best.r > 0,
        "max_cycle_subgraph_edges": best.r,
        "subgraph": _witness(best.decoded, g),
        "shortest_cycle_length": None if shortest is None else shortest.n_edges,
        "cycles": _witness(shortest, g),
    }
    if not by_elimination:
        record["certificate"] = _lines(certificate.render())
    if args.dump_gadget_graph:
        try:
            record["gadget_graph"] = _lines(build_gstar(g, kind).dump())
        except EmptyGadgetGraphError:
            record["gadget_graph"] = ["empty core"]
    return Outcome(_status(by_elimination), record)


def cmd_path(args: argparse.Namespace) -> Outcome:
    g = _load_graph(args.file)
    s, t, kind = args.source, args.target, _gadget_spec(args)
    record: Record = {"from": s, "to": t}

    if args.end_colours:
        i, j = args.end_colours
        exists = exists_pc_path_with_end_colours(g, s, t, i, j, kind)
        record |= {"end_colours": [i, j], "exists": exists}
        return Outcome(_status(exists), record)

    if args.max_path_cycle:
        try:
            result = max_pc_path_cycle(g, s, t, kind)
            r, witness = (None, None) if result is None else (result.r, result.decoded)
        except EmptyGadgetGraphError as error:
            # no internal vertex: only a direct edge can be the path
            direct = error.direct_edges[:1]
            r, witness = (1, PCSubgraph.from_edge_ids(g, paths=[direct])) if direct else (None, None)
        record |= {"exists": witness is not None, "path_cycle_edges": r, "subgraph": _witness(witness, g)}
        return Outcome(_status(witness is not None), record)

    path = shortest_pc_path(g, s, t, kind) if args.shortest else find_pc_path(g, s, t, kind)
    record |= {
        "exists": path is not None,
        "length": None if path is None else path.n_edges,
        "path": _witness(path, g),
    }
    return Outcome(_status(path is not None), record)


def cmd_complete(args: argparse.Namespace) -> Outcome:
    k = _load_graph(args.file)
    result = longest_pc_path_complete(k, _gadget_spec(args), _budget(args))
    record = {"vertices": k.n, "colours": k.c, "longest_path_length": result.length}
    record |= {"witness": _witness(result.witness, k), "path": _witness(result.path, k)}
    return Outcome(EXIT_OK, record)


def cmd_k2(args: argparse.Namespace) -> Outcome:
    k = _load_graph(args.file)
    kind = _gadget_spec(args)
    match args.k2_command:
        case "hamilton":
            exists = hamilton_pc_cycle_k2(k, kind, n_jobs=args.jobs)
            return Outcome(_status(exists), {"vertices": k.n, "hamilton_cycle": exists})
        case "longest-cycle":
            return Outcome(EXIT_OK, {"vertices": k.n, "longest_cycle_length": longest_pc_cycle_k2(k, kind, args.jobs)})
    raise ValueError(f"Unknown k2 command {args.k2_command!r}.")


def cmd_encode_digraph(args: argparse.Namespace) -> Outcome:
    d = read_digraph(args.file)
    g = encode_digraph(d)
    if args.output:
        write_graph(g, args.output)
    record = {"digraph_vertices": d.n, "arcs": len(d.arcs), "directed_cycle": has_directed_cycle(d)}
    if not args.output:
        record["graph"] = _lines(render_graph(g))
    return Outcome(EXIT_OK, record)


def cmd_gadget(args: argparse.Namespace) -> Outcome:
    match args.gadget_command:
        case "make":
            gadget = make_gadget(args.kind, range(1, args.z + 1))
            n, m = gadget.size()
            carrier = [f"vertices {n}"] + [f"e {u + 1} {v + 1}" for u, v, _ in gadget.carrier.edges]
            terminals = [gadget.terminals[q] + 1 for q in gadget.palette]
            record = {"kind": args.kind, "z": args.z, "vertices": n, "edges": m, "terminals": terminals}
            record |= {"labels": list(gadget.labels), "carrier": carrier}
            return Outcome(EXIT_OK, record)

        case "verify":
            gadget = _load_gadget(args.file, args.terminals)
            report = verify_p_properties(gadget, p4=args.p4)
            n, m = gadget.size()
            record = {"vertices": n, "edges": m, "z": gadget.z, "p4_reading": args.p4}
            record |= {check.name: check.render().removeprefix(f"{check.name}: ") for check in report.checks}
            record["p_gadget"] = bool(report)
            return Outcome(_status(bool(report)), record)

        case "search":
            space = SearchSpace(args.z, args.max_vertices, args.max_edges, not args.no_terminal_symmetry, args.cap)
            result = search_min_gadgets(space, p4=args.p4, n_jobs=args.jobs, progress=args.progress)
            record = {
                "z": args.z,
                "max_vertices": args.max_vertices,
                "max_edges": args.max_edges,
                "candidates_checked": result.candidates_checked,
                "frontier": [f"({p.vertices}, {p.edges})" for p in result.frontier],
                "xp_size": list(result.xp_size),
                "xp_matched": result.xp_matched,
                "xp_beaten": result.xp_beaten,
            }
            text = None if args.json else result.render()
            return Outcome(_status(bool(result.frontier)), record, text)
    raise ValueError(f"Unknown gadget command {args.gadget_command!r}.")


def cmd_check_bounds(args: argparse.Namespace) -> Outcome:
    config = BoundsConfig(args.trials, args.n_min, args.n_max, args.c_max, args.seed, _budget(args))
    report = check_bounds(config, args.statement, n_jobs=args.jobs, progress=args.progress)
    return Outcome(_status(report.theorems_hold), report.to_dict(), report.render())


def cmd_extremal(args: argparse.Namespace) -> Outcome:
    g = gen_extremal_two_blocks(args.p, args.c)
    record: Record = {"p": args.p, "c": args.c, "vertices": g.n, "delta_mon": mono_degree_bounds(g)[0]}
    record["expected_longest_cycle"] = expected = extremal_longest_cycle(args.p, args.c)
    code = EXIT_OK
    if args.check:
        record["longest_cycle"] = longest = longest_pc_cycle_bf(g, budget=_budget(args)).value
        code = _status(longest == expected)
    record["graph"] = _lines(render_graph(g))
    return Outcome(code, record)


def cmd_render(args: argparse.Namespace) -> Outcome:
    g = _load_graph(args.file)
    return Outcome(EXIT_OK, {"graph": _lines(render_graph(g))}, render_graph(g).rstrip("\n"))


def cmd_oracle(args: argparse.Namespace) -> Outcome:
    g = _load_graph(args.file)
    budget = _budget(args)
    s, t = getattr(args, "source", None), getattr(args, "target", None)

    match args.oracle_command:
        case "cycles":
            cycles = enum_pc_cycles(g, budget)
            return Outcome(_status(bool(cycles)), {"count": len(cycles), "cycles": [c.render(g) for c in cycles]})
        case "paths":
            paths = enum_pc_paths(g, s, t, budget)
            return Outcome(_status(bool(paths)), {"count": len(paths), "paths": [p.render(g) for p in paths]})
        case "has-cycle":
            exists = has_pc_cycle_bf(g, budget)
            return Outcome(_status(exists), {"pc_cycle": exists})
        case "max-cycle-subgraph":
            best = max_pc_cycle_subgraph_bf(g, budget)
            return Outcome(EXIT_OK, {"max_cycle_subgraph_edges": best.value, "subgraph": _witness(best.witness, g)})
        case "shortest-cycle":
            cycle = shortest_pc_cycle_bf(g, budget)
            length = None if cycle is None else cycle.n_edges
            return Outcome(_status(cycle is not None), {"shortest_cycle_length": length, "cycles": _witness(cycle, g)})
        case "shortest-path":
            path = shortest_pc_path_bf(g, s, t, budget)
            length = None if path is None else path.n_edges
            return Outcome(_status(path is not None), {"length": length, "path": _witness(path, g)})
        case "longest-path":
            best = longest_pc_path_bf(g, budget=budget)
            return Outcome(EXIT_OK, {"longest_path_length": best.value, "path": _witness(best.witness, g)})
        case "longest-cycle":
            best = longest_pc_cycle_bf(g, budget=budget)
            return Outcome(EXIT_OK, {"longest_cycle_length": best.value, "cycles": _witness(best.witness, g)})
        case "hamilton-cycle":
            cycle = pc_hamilton_cycle_bf(g, budget)
            record = {"hamilton_cycle": cycle is not None, "cycles": _witness(cycle, g)}
            return Outcome(_status(cycle is not None), record)
        case "hamilton-path":
            path = pc_hamilton_path_bf(g, budget)
            return Outcome(_status(path is not None), {"hamilton_path": path is not None, "path": _witness(path, g)})
        case "path-cycle":
            best = max_pc_path_cycle_bf(g, s, t, budget)
            value, witness = (None, None) if best is None else best
            return Outcome(_status(best is not None), {"path_cycle_edges": value, "subgraph": _witness(witness, g)})
        case "one-path-cycle":
            best = max_pc_one_path_cycle_bf(g, budget)
            return Outcome(EXIT_OK, {"one_path_cycle_order": best.value, "subgraph": _witness(best.witness, g)})
        case "end-colours":
            pairs = sorted(end_colour_pairs_bf(g, s, t, budget))
            return Outcome(_status(bool(pairs)), {"end_colour_pairs": [f"{i},{j}" for i, j in pairs]})
        case "colour-connected":
            connected = colour_connected_bf(g, s, t, budget)
            return Outcome(_status(connected), {"from": s, "to": t, "colour_connected": connected})
    raise ValueError(f"Unknown oracle command {args.oracle_command!r}.")


ORACLE_COMMANDS = {
    "cycles": False,
    "paths": True,
    "has-cycle": False,
    "max-cycle-subgraph": False,
    "shortest-cycle": False,
    "shortest-path": True,
    "longest-path": False,
    "longest-cycle": False,
    "hamilton-cycle": False,
    "hamilton-path": False,
    "path-cycle": True,
    "one-path-cycle": False,
    "end-colours": True,
    "colour-connected": True,
}
"""Oracle sub-commands, mapped to whether they take a ``--from``/``--to`` vertex pair."""


########################################################################################################################
#   === PARSER ===
########################################################################################################################
def _gadget_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--gadget", choices=GADGET_KINDS, default="xp", help="P-gadget construction (default: xp)")
    parent.add_argument("--gadget-file", help="Custom gadget carrier in the plain graph format")
    parent.add_argument("--terminals", type=int, nargs="+", help="Terminal vertices of the custom gadget, by colour")
    return parent


def _budget_parent(max_edges: int = OracleBudget.max_edges) -> argparse.ArgumentParser:
    # one per command: parent parsers share their actions and defaults
    parent = argparse.ArgumentParser(add_help=False)
    defaults = OracleBudget()
    parent.add_argument("--max-vertices", type=int, default=defaults.max_vertices, help="Oracle vertex budget")
    parent.add_argument("--max-edges", type=int, default=max_edges, help="Oracle edge budget")
    parent.add_argument("--time-cap", type=float, default=defaults.time_cap, help="Oracle time cap in seconds")
    return parent


def _pair_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--from", dest="source", type=int, required=True, help="Start vertex s")
    parent.add_argument("--to", dest="target", type=int, required=True, help="End vertex t")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pc-toolkit", description="Properly coloured cycles and paths in edge-coloured multigraphs."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs")
    parser.add_argument("--json", action="store_true", help="Print the result as a JSON object")
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes for the parallel operations")
    parser.add_argument("--progress", action="store_true", help="Display progress bars")
    commands = parser.add_subparsers(dest="command", required=True)
    gadget, pair = _gadget_parent(), _pair_parent()

    analyze = commands.add_parser("analyze", parents=[gadget], help="PC cycle existence, maximum and shortest cycles")
    analyze.add_argument("file", help="Graph file ('-' for stdin)")
    analyze.add_argument("--dump-gadget-graph", action="store_true", help="Also list the blocks and edges of G*")
    analyze.set_defaults(handler=cmd_analyze)

    path = commands.add_parser("path", parents=[gadget, pair], help="PC (s, t)-paths")
    path.add_argument("file", help="Graph file ('-' for stdin)")
    mode = path.add_mutually_exclusive_group()
    mode.add_argument("--shortest", action="store_true", help="Find a shortest PC path")
    mode.add_argument("--end-colours", type=int, nargs=2, metavar=("I", "J"), help="Colours of the first and last edge")
    mode.add_argument("--max-path-cycle", action="store_true", help="Maximum PC 1-path-cycle subgraph on (s, t)")
    path.set_defaults(handler=cmd_path)

    complete = commands.add_parser("complete", help="Complete edge-coloured graphs K^c_n")
    complete_commands = complete.add_subparsers(dest="complete_command", required=True)
    longest_path = complete_commands.add_parser(
        "longest-path", parents=[gadget, _budget_parent()], help="Longest PC path"
    )
    longest_path.add_argument("file", help="Graph file ('-' for stdin)")
    longest_path.set_defaults(handler=cmd_complete)

    k2 = commands.add_parser("k2", help="2-edge-coloured complete graphs K^2_n")
    k2_commands = k2.add_subparsers(dest="k2_command", required=True)
    for name, description in (("hamilton", "PC Hamilton cycle existence"), ("longest-cycle", "Longest PC cycle")):
        k2_command = k2_commands.add_parser(name, parents=[gadget], help=description)
        k2_command.add_argument("file", help="Graph file ('-' for stdin)")
        k2_command.set_defaults(handler=cmd_k2)

    encode = commands.add_parser("encode-digraph", help="Encode a digraph as a 2-edge-coloured graph")
    encode.add_argument("file", help="Digraph file")
    encode.add_argument("-o", "--output", help="Write the encoded graph to this file")
    encode.set_defaults(handler=cmd_encode_digraph)

    gadget_cmd = commands.add_parser("gadget", help="P-gadgets")
    gadget_commands = gadget_cmd.add_subparsers(dest="gadget_command", required=True)
    make = gadget_commands.add_parser("make", help="Print a gadget in the plain graph format")
    make.add_argument("--kind", choices=GADGET_KINDS, default="xp")
    make.add_argument("--z", type=int, required=True, help="Palette size")
    make.set_defaults(handler=cmd_gadget)
    verify = gadget_commands.add_parser("verify", help="Check P1 to P4 on a carrier")
    verify.add_argument("file", help="Carrier in the plain graph format")
    verify.add_argument("--terminals", type=int, nargs="+", required=True, help="Terminal vertices, by colour")
    verify.add_argument("--p4", choices=("strict", "literal"), default="strict", help="Reading of P4")
    verify.set_defaults(handler=cmd_gadget)
    search = gadget_commands.add_parser("search", help="Exhaustive search of minimal P-gadgets")
    search.add_argument("--z", type=int, required=True, help="Palette size")
    search.add_argument("--max-vertices", type=int, required=True)
    search.add_argument("--max-edges", type=int, required=True)
    search.add_argument("--no-terminal-symmetry", action="store_true", help="Keep terminal permutations apart")
    search.add_argument("--cap", type=int, default=SearchSpace.max_candidates, help="Cap on the projected candidates")
    search.add_argument("--p4", choices=("strict", "literal"), default="strict", help="Reading of P4")
    search.set_defaults(handler=cmd_gadget)

    bounds = commands.add_parser(
        "check-bounds", parents=[_budget_parent(max_edges=64)], help="Empirical checks of the extremal results"
    )
    bounds.add_argument("--trials", type=int, default=20)
    bounds.add_argument("--seed", type=int, default=0)
    bounds.add_argument("--n-min", type=int, default=3)
    bounds.add_argument("--n-max", type=int, default=7)
    bounds.add_argument("--c-max", type=int, default=3)
    bounds.add_argument("--statement", choices=STATEMENT_NAMES, action="append", help="Restrict to these statements")
    bounds.set_defaults(handler=cmd_check_bounds)

    extremal = commands.add_parser(
        "extremal", parents=[_budget_parent(max_edges=64)], help="Two complete multigraphs sharing one vertex"
    )
    extremal.add_argument("--p", type=int, required=True)
    extremal.add_argument("--c", type=int, default=2)
    extremal.add_argument("--check", action="store_true", help="Compute the longest PC cycle with the oracle")
    extremal.set_defaults(handler=cmd_extremal)

    render = commands.add_parser("render", help="Print a graph file in canonical form")
    render.add_argument("file", help="Graph file ('-' for stdin)")
    render.set_defaults(handler=cmd_render)

    oracle = commands.add_parser("oracle", help="Exhaustive reference computations")
    oracle_commands = oracle.add_subparsers(dest="oracle_command", required=True)
    for name, takes_pair in ORACLE_COMMANDS.items():
        parents = [_budget_parent(), pair] if takes_pair else [_budget_parent()]
        oracle_command = oracle_commands.add_parser(name, parents=parents)
        oracle_command.add_argument("file", help="Graph file ('-' for stdin)")
        oracle_command.set_defaults(handler=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        outcome = args.handler(args)
    except (BudgetExceededError, SearchTooLargeError) as error:
        print(f"budget error: {error}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphFormatError, InvalidGraphError, PreconditionError, EmptyGadgetGraphError, OSError) as error:
        print(f"input error: {error}", file=sys.stderr)
        return EXIT_INPUT

    if args.json:
        print(json.dumps(outcome.record, indent=2, ensure_ascii=False))
    else:
        print(outcome.text if outcome.text is not None else render_record(outcome.record))
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
