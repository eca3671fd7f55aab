from .budget import DEFAULT_BUDGET, Deadline, OracleBudget
from .enumeration import RawWalk, enum_pc_cycles, enum_pc_paths, iter_pc_cycles, iter_pc_paths_from
from .matchings import enumerate_matchings, max_cardinality_bf, max_weight_perfect_matching_bf, perfect_matchings
from .optima import (
    Optimum,
    colour_connected_bf,
    colour_connected_graph_bf,
    end_colour_pairs_bf,
    exists_pc_path_with_end_colours_bf,
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
