from .ecgraph import ColouredMultigraph, PCSubgraph, parse_graph, render_graph, validate_pc
from .errors import (
    BudgetExceededError,
    EmptyGadgetGraphError,
    GraphFormatError,
    InvalidGraphError,
    PCToolkitError,
    PreconditionError,
    SearchTooLargeError,
    VertexError,
)
