"""
Edge Lists
Plain-text "n m" header followed by one "u v" pair per line
"""
from typing import List

from ..graphs.graph_core import MAX_ORDER, Graph, GraphError


class EdgeListParseError(GraphError):
    """Malformed edge list; ``line_number`` is 1-based"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"Line {line_number}: {message}")
        self.line_number = line_number


def _pair(line: str, line_number: int) -> List[int]:
    fields = line.split()
    if len(fields) != 2:
        raise EdgeListParseError(f"expected two integers, got {line!r}", line_number)
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise EdgeListParseError(f"expected two integers, got {line!r}", line_number)


def parse_edge_list(text: str) -> Graph:
    """
    Parse an edge list

    Blank lines and lines starting with '#' are skipped. Each edge line must
    satisfy 0 <= u < v < n.

    Args:
        text: Whole file contents

    Returns:
        Graph with exactly the listed edges

    Raises:
        EdgeListParseError: Malformed header or edge line, loop, duplicate
            edge, or edge count differing from m
    """
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith('#')
    ]
    if not lines:
        raise EdgeListParseError("missing 'n m' header", 1)

    header_line, header = lines[0]
    n, m = _pair(header, header_line)
    if n < 1 or m < 0:
        raise EdgeListParseError(f"invalid header n={n}, m={m}", header_line)
    if n > MAX_ORDER:
        raise EdgeListParseError(f"order {n} exceeds the supported maximum {MAX_ORDER}", header_line)

    seen = set()
    for number, line in lines[1:]:
        u, v = _pair(line, number)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", number)
        if not 0 <= u < v < n:
            raise EdgeListParseError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}", number)
        if (u, v) in seen:
            raise EdgeListParseError(f"duplicate edge ({u}, {v})", number)
        seen.add((u, v))

    if len(seen) != m:
        last_line = lines[-1][0]
        raise EdgeListParseError(f"header declares {m} edges, found {len(seen)}", last_line)
    return Graph.from_edges(n, seen)


def graph_to_edge_list(g: Graph) -> str:
    """Serialize in the format parse_edge_list reads, edges sorted"""
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return '\n'.join(lines) + '\n'
