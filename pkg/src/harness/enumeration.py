"""
Graph Enumeration
Connected isomorphism classes of small order and seeded random connected graphs
"""
import logging
from functools import lru_cache
from typing import Iterator, Tuple

import numpy as np

from ..graphs.canonical import canonical_code, decode_canonical
from ..graphs.graph_core import Graph, GraphError, is_connected


logger = logging.getLogger(__name__)

MAX_ENUMERATION_ORDER = 8


def enumerate_connected(n: int) -> Iterator[Graph]:
    """
    Yield one graph per connected isomorphism class of order n

    Classes of order n are grown from classes of order n-1 by attaching a new
    vertex to every nonempty neighbour subset (every connected graph has a
    vertex whose removal keeps it connected), deduplicated by canonical code.
    Graphs come out in canonical-code order, in canonical labeling.

    Args:
        n: Order, 1 <= n <= MAX_ENUMERATION_ORDER

    Returns:
        Iterator over class representatives
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"Enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    for code in connected_class_codes(n):
        yield decode_canonical(code)


@lru_cache(maxsize=None)
def connected_class_codes(n: int) -> Tuple[bytes, ...]:
    if n == 1:
        return (canonical_code(Graph(1, (0,))),)

    smaller = connected_class_codes(n - 1)
    logger.info(f"Extending {len(smaller)} classes of order {n - 1} to order {n}...")
    new_vertex = n - 1
    found = set()
    for code in smaller:
        base = decode_canonical(code)
        for subset in range(1, 1 << new_vertex):
            rows = list(base.rows)
            rows.append(subset)
            for v in range(new_vertex):
                if subset >> v & 1:
                    rows[v] |= 1 << new_vertex
            found.add(canonical_code(Graph(n, tuple(rows))))

    logger.info(f"✓ {len(found)} connected classes of order {n}")
    return tuple(sorted(found))


def random_connected_graph(n: int, rng: np.random.Generator, p: float = 0.5) -> Graph:
    """
    Uniform G(n, p) conditioned on connectivity by rejection

    Args:
        n: Order
        rng: Seeded numpy generator
        p: Edge probability

    Returns:
        A connected graph
    """
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    while True:
        keep = rng.random(len(pairs)) < p
        g = Graph.from_edges(n, (pair for pair, flag in zip(pairs, keep) if flag))
        if is_connected(g):
            return g
