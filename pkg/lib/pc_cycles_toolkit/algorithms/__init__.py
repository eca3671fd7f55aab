from .complete import (
    LongestPathResult,
    hamilton_pc_cycle_k2,
    longest_pc_cycle_k2,
    longest_pc_path_complete,
    max_pc_one_path_cycle_complete,
)
from .cycles import has_pc_cycle_matching, max_pc_cycle_subgraph, pc_cycle_factor_exists
from .decode import MatchingDecodeResult, decode_matching
from .elimination import EliminationCertificate, EliminationStep, has_pc_cycle_elimination
from .paths import (
    colour_connected,
    colour_connected_graph,
    end_colour_pairs,
    exists_pc_path,
    exists_pc_path_with_end_colours,
    find_pc_path,
    max_pc_path_cycle,
    shortest_pc_path,
)
from .shortest_cycle import shortest_pc_cycle
