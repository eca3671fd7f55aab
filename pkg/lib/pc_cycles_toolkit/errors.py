class PCToolkitError(Exception):
    """Base class of every error raised by the toolkit."""


class GraphFormatError(PCToolkitError, ValueError):
    """Syntax error in a graph or digraph text file."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class InvalidGraphError(PCToolkitError, ValueError):
    """The graph violates an invariant (loop, duplicated coloured edge, colour or vertex out of range...)."""


class VertexError(InvalidGraphError):
    """A vertex argument is out of range, or two vertices which must differ are equal."""


class PreconditionError(PCToolkitError, ValueError):
    """The input is well-formed but does not satisfy the precondition of the requested operation."""


class EmptyGadgetGraphError(PCToolkitError):
    """The gadget graph has no gadget block (empty core, or no internal vertex between s and t)."""

    def __init__(self, message: str, direct_edges: tuple[int, ...] = ()):
        super().__init__(message)
        self.direct_edges = direct_edges


class BudgetExceededError(PCToolkitError):
    """An exhaustive enumeration was refused or interrupted because the instance exceeds the oracle budget."""


class SearchTooLargeError(PCToolkitError):
    """The projected size of an exhaustive gadget search exceeds the configured cap."""
