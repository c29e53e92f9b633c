"""
graph6 Codec
Short-form graph6 lines (n <= 62) to and from Graph
"""
import networkx as nx

from ..graphs.graph_core import Graph, GraphError


GRAPH6_MAX_ORDER = 62
_BIAS = 63
_MAX_BYTE = 126


class Graph6ParseError(GraphError):
    """Malformed graph6 line; ``offset`` is the index of the offending byte"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line

    Only the single-byte header form is accepted. Surrounding whitespace is
    ignored; an optional ``>>graph6<<`` prefix is not.

    Args:
        text: graph6 line

    Returns:
        The encoded graph (possibly disconnected)

    Raises:
        Graph6ParseError: Empty line, bad header, byte outside [63, 126], wrong length
    """
    line = text.strip()
    if not line:
        raise Graph6ParseError("Empty graph6 line", 0)
    try:
        raw = line.encode('ascii')
    except UnicodeEncodeError as e:
        raise Graph6ParseError(f"Non-ASCII character {line[e.start]!r}", e.start)

    header = raw[0]
    if header == _MAX_BYTE:
        raise Graph6ParseError(f"Orders above {GRAPH6_MAX_ORDER} are not supported", 0)
    if not _BIAS <= header < _MAX_BYTE:
        raise Graph6ParseError(f"Header byte {header} outside [{_BIAS}, {_MAX_BYTE - 1}]", 0)
    n = header - _BIAS
    if n == 0:
        raise Graph6ParseError("Graph must have at least one vertex", 0)

    for offset, byte in enumerate(raw[1:], start=1):
        if not _BIAS <= byte <= _MAX_BYTE:
            raise Graph6ParseError(f"Byte {byte} outside [{_BIAS}, {_MAX_BYTE}]", offset)

    expected = 1 + _body_length(n)
    if len(raw) != expected:
        offset = min(len(raw), expected)
        raise Graph6ParseError(
            f"Expected {expected} bytes for n={n}, got {len(raw)}", offset
        )

    decoded = nx.from_graph6_bytes(raw)
    return Graph.from_edges(n, decoded.edges())


def write_graph6(g: Graph) -> str:
    """
    Encode a graph as a graph6 line without header or newline

    Raises:
        GraphError: If g.order > GRAPH6_MAX_ORDER
    """
    if g.order > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {g.order}")
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.order))
    nx_graph.add_edges_from(g.edges())
    return nx.to_graph6_bytes(nx_graph, header=False).decode('ascii').strip()
