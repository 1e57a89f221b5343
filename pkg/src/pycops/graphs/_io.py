"""Reading and writing graphs as graph6 and as plain edge lists."""

from typing import Iterator, TextIO, Union

import networkx as nx

from ._graph import Graph
from ..errors import GraphParseError

GRAPH6_HEADER = ">>graph6<<"


def _graph6_order(data: bytes, start: int):
    """Read the order prefix of a graph6 record.

    Returns:
        Tuple[int, int]: The order and the offset where the adjacency bytes start
    """
    if len(data) <= start:
        raise GraphParseError("Missing graph6 order byte", start)
    if data[start] != 126:
        return data[start] - 63, start + 1
    # 126 introduces an 18-bit order, 126 126 a 36-bit one
    width = 6 if len(data) > start + 1 and data[start + 1] == 126 else 3
    begin = start + (2 if width == 6 else 1)
    if len(data) < begin + width:
        raise GraphParseError("Truncated graph6 order", len(data))
    n = 0
    for c in data[begin : begin + width]:
        n = (n << 6) | (c - 63)
    return n, begin + width


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """Parse one graph6 record.

    A leading ``>>graph6<<`` header and surrounding whitespace are tolerated.

    Args:
        text: The record

    Returns:
        Graph: The graph, with vertices in record order

    Raises:
        GraphParseError: If a byte is outside 63..126 or the record length does not match its order
    """
    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise GraphParseError("Non-ASCII character in graph6 record", e.start)
    data = bytes(text).strip()
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER.encode()) else 0
    for offset in range(start, len(data)):
        if not 63 <= data[offset] <= 126:
            raise GraphParseError("Byte %r is not valid graph6" % data[offset : offset + 1], offset)
    n, body = _graph6_order(data, start)
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(data) - body != expected:
        raise GraphParseError(
            "A graph6 record of order %d needs %d adjacency bytes, found %d"
            % (n, expected, len(data) - body),
            min(len(data), body + expected),
        )
    try:
        g = nx.from_graph6_bytes(data[start:])
    except (nx.NetworkXError, ValueError) as e:
        raise GraphParseError(str(e), start)
    return Graph(n, g.edges)


def write_graph6(graph: Graph) -> str:
    """Encode a graph as a graph6 record, without header or newline."""
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def iter_graph6(stream: TextIO) -> Iterator[Union[Graph, GraphParseError]]:
    """Read a graph6 catalog one record per line.

    Malformed records are yielded as their :class:`GraphParseError` so that
    scans can count and skip them. Blank lines are ignored.
    """
    for line in stream:
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except GraphParseError as e:
            yield e


def parse_edge_list(text: str) -> Graph:
    """Parse an edge list: a ``"n m"`` header, then ``m`` lines of ``"u v"`` with 0-based vertices.

    Raises:
        GraphParseError: If a line is malformed or the edge count is wrong; the offset is the 1-based line number
    """
    lines = [(i + 1, line.split()) for i, line in enumerate(text.splitlines()) if line.strip()]
    if len(lines) == 0:
        raise GraphParseError("Missing edge list header", 1)
    number, header = lines[0]
    try:
        n, m = (int(x) for x in header)
    except ValueError:
        raise GraphParseError("Edge list header must be 'n m'", number)
    if len(lines) - 1 != m:
        raise GraphParseError("Header promises %d edges, found %d" % (m, len(lines) - 1), number)
    edges = []
    for number, fields in lines[1:]:
        try:
            u, v = (int(x) for x in fields)
        except ValueError:
            raise GraphParseError("Edge line must be 'u v'", number)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphParseError("Bad edge (%d, %d) for order %d" % (u, v, n), number)
        edges.append((u, v))
    return Graph(n, edges)


def write_edge_list(graph: Graph) -> str:
    """Write a graph as an edge list, edges sorted, ending in a newline."""
    lines = ["%d %d" % (graph.order, graph.edge_count)]
    lines.extend("%d %d" % e for e in graph.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    """Read a graph file: edge list if the name ends in ``.edges`` or ``.txt``, otherwise graph6 (first record)."""
    with open(path, encoding="ascii") as f:
        text = f.read()
    if path.endswith((".edges", ".txt")):
        return parse_edge_list(text)
    records = [line for line in text.splitlines() if line.strip()]
    if len(records) == 0:
        raise GraphParseError("No graph6 record in %s" % path, 0)
    return parse_graph6(records[0])


def write_graph(graph: Graph, path: str):
    """Write a graph to a file, choosing the format from the name as :func:`read_graph` does."""
    text = write_edge_list(graph) if path.endswith((".edges", ".txt")) else write_graph6(graph) + "\n"
    with open(path, "w", encoding="ascii") as f:
        f.write(text)
