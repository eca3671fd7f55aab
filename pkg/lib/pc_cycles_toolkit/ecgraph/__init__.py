from .coloured_graph import (
    ColouredMultigraph,
    Edge,
    Incidence,
    SubgraphMap,
    VertexColourProfile,
    core_graph,
    mono_degree_bounds,
    profile,
)
from .graph_io import parse_graph, parse_plain_graph, read_graph, render_graph, write_graph
from .pc_subgraph import (
    PCStep,
    PCSubgraph,
    ValidationReport,
    WalkError,
    canonical_cycle,
    canonical_path,
    trace_walk,
    validate_pc,
)
