from .bounds import STATEMENT_NAMES, STATEMENTS, BoundsConfig, BoundsReport, Statement, StatementResult, check_bounds
from .digraph import (
    Digraph,
    all_digraphs,
    encode_digraph,
    has_directed_cycle,
    parse_digraph,
    read_digraph,
    render_digraph,
)
from .gadget_search import FrontierPoint, SearchResult, SearchSpace, search_min_gadgets
from .generators import (
    bounded_complete,
    dense_multigraph,
    dense_simple_graph,
    extremal_longest_cycle,
    gen_extremal_two_blocks,
    proper_complete,
    random_complete,
    random_multigraph,
    random_simple_graph,
)
