from .matching import (
    augment,
    find_augmenting_path,
    has_perfect_matching,
    max_cardinality_matching,
    max_weight_perfect_matching,
    min_weight_perfect_matching,
)
from .plain_graph import Matching, PlainGraph
