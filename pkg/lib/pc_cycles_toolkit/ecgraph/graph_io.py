"""
Text formats of the toolkit.

Coloured multigraph (one directive per line, ``#`` starts a comment)::

    vertices 4
    colours 2
    e 1 2 1
    e 2 3 2

``vertices`` and ``colours`` are optional: when absent they default to the largest vertex and colour used by the
``e`` lines. The plain-graph variant used for candidate gadget carriers has ``e <u> <v> [weight]`` lines and no
``colours`` directive.
"""
from os import PathLike
from pathlib import Path
from typing import Iterable, TextIO

from ..errors import GraphFormatError, InvalidGraphError
from .coloured_graph import ColouredMultigraph


def _directives(text: str | TextIO | Iterable[str]):
    if isinstance(text, str):
        text = text.splitlines()
    lines, line_number = iter(text), 0
    while True:
        # a text file decodes by chunks: the failing line is unknown
        try:
            raw = next(lines)
        except StopIteration:
            return
        except UnicodeDecodeError as error:
            raise GraphFormatError(f"The input is not UTF-8 text: {error.reason}.") from None
        line_number += 1
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_number, line.split()


def _integers(tokens: list[str], count: int | tuple[int, int], line_number: int) -> list[int]:
    low, high = (count, count) if isinstance(count, int) else count
    if not low <= len(tokens) - 1 <= high:
        expected = str(low) if low == high else f"{low} to {high}"
        raise GraphFormatError(f"'{tokens[0]}' expects {expected} integer(s), got {len(tokens) - 1}.", line_number)
    try:
        return [int(_) for _ in tokens[1:]]
    except ValueError:
        raise GraphFormatError(f"Invalid integer in '{' '.join(tokens)}'.", line_number) from None


def _header(headers: dict[str, int], keyword: str, value: int, line_number: int):
    if keyword in headers:
        raise GraphFormatError(f"Repeated '{keyword}' directive.", line_number)
    if value < 0:
        raise GraphFormatError(f"'{keyword}' must be non-negative, got {value}.", line_number)
    headers[keyword] = value


def parse_graph(text: str | TextIO | Iterable[str]) -> ColouredMultigraph:
    """
    Parse a coloured multigraph from its text format.

    Args:
        text: The whole text, an open text file or any iterable of lines.

    Returns:
        The validated ``ColouredMultigraph``.

    Raises:
        GraphFormatError: on a syntax error (the message carries the line number).
        InvalidGraphError: on a loop, a duplicated ``(u, v, colour)`` triple, or a vertex or colour out of range.
    """
    headers: dict[str, int] = {}
    edges: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int, int], int] = {}

    for line_number, tokens in _directives(text):
        keyword = tokens[0]
        if keyword in ("vertices", "colours"):
            if edges:
                raise GraphFormatError(f"'{keyword}' must precede the edges.", line_number)
            (value,) = _integers(tokens, 1, line_number)
            _header(headers, keyword, value, line_number)
        elif keyword == "e":
            u, v, colour = _integers(tokens, 3, line_number)
            if u == v:
                raise InvalidGraphError(f"line {line_number}: loop edge ({u}, {v}).")
            n, c = headers.get("vertices"), headers.get("colours")
            if min(u, v) < 1 or (n is not None and max(u, v) > n):
                raise InvalidGraphError(f"line {line_number}: edge ({u}, {v}) has an endpoint outside 1..{n}.")
            if colour < 1 or (c is not None and colour > c):
                raise InvalidGraphError(f"line {line_number}: colour {colour} outside 1..{c}.")
            key = (min(u, v), max(u, v), colour)
            if key in seen:
                raise InvalidGraphError(
                    f"line {line_number}: parallel edge ({u}, {v}) of colour {colour} duplicates line {seen[key]}."
                )
            seen[key] = line_number
            edges.append(key)
        else:
            raise GraphFormatError(f"Unknown directive '{keyword}'.", line_number)

    n = headers.get("vertices", max((v for _, v, _ in edges), default=0))
    c = headers.get("colours", max((col for _, _, col in edges), default=0))
    return ColouredMultigraph(n, c, tuple(edges))


def render_graph(g: ColouredMultigraph) -> str:
    """Render a graph in the canonical text format (edges sorted by ``(u, v, colour)``)."""
    lines = [f"vertices {g.n}", f"colours {g.c}"]
    lines += [f"e {u} {v} {colour}" for u, v, colour in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str | PathLike) -> ColouredMultigraph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f)


def write_graph(g: ColouredMultigraph, path: str | PathLike):
    Path(path).write_text(render_graph(g), encoding="utf-8")


def parse_plain_graph(text: str | TextIO | Iterable[str]) -> tuple[int, list[tuple[int, int, int]]]:
    """
    Parse an uncoloured (optionally weighted) graph: ``vertices <n>`` then ``e <u> <v> [weight]`` lines.

    Returns:
        The vertex count and the list of ``(u, v, weight)`` edges, with 0-indexed vertices (the file is 1-indexed).
    """
    n: int | None = None
    edges: list[tuple[int, int, int]] = []
    for line_number, tokens in _directives(text):
        if tokens[0] == "vertices":
            if n is not None:
                raise GraphFormatError("Repeated 'vertices' directive.", line_number)
            (n,) = _integers(tokens, 1, line_number)
        elif tokens[0] == "e":
            values = _integers(tokens, (2, 3), line_number)
            u, v = values[:2]
            weight = values[2] if len(values) == 3 else 0
            if n is not None and not (1 <= u <= n and 1 <= v <= n):
                raise InvalidGraphError(f"line {line_number}: edge ({u}, {v}) has an endpoint outside 1..{n}.")
            edges.append((u - 1, v - 1, weight))
        else:
            raise GraphFormatError(f"Unknown directive '{tokens[0]}'.", line_number)
    if n is None:
        n = max((max(u, v) + 1 for u, v, _ in edges), default=0)
    return n, edges
