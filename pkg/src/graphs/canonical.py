"""
Canonical Codes
Isomorphism-invariant graph encodings by refinement and individualization
"""
from typing import List, Optional

from .graph_core import Graph, GraphError, bits


CANONICAL_MAX_ORDER = 12

Cells = List[List[int]]


def canonical_code(g: Graph) -> bytes:
    """
    Canonical byte code of a graph

    Two graphs get identical codes iff they are isomorphic. The code is the
    order byte followed by the lexicographically minimal upper-triangle
    adjacency bitstring (column-major pair order) over all labelings reached
    by the refinement search.

    Args:
        g: Graph with order <= CANONICAL_MAX_ORDER

    Returns:
        Canonical code
    """
    if g.order > CANONICAL_MAX_ORDER:
        raise GraphError(f"canonical_code supports order <= {CANONICAL_MAX_ORDER}, got {g.order}")

    best = _search(g, _refine(g, _initial_cells(g)), None)
    width = g.order * (g.order - 1) // 2
    return bytes([g.order]) + best.to_bytes((width + 7) // 8, 'big')


def canonical_form(g: Graph) -> Graph:
    """Representative graph of g's isomorphism class"""
    code = canonical_code(g)
    return decode_canonical(code)


def decode_canonical(code: bytes) -> Graph:
    """Rebuild the representative graph from a canonical code"""
    n = code[0]
    value = int.from_bytes(code[1:], 'big')
    width = n * (n - 1) // 2
    edges = []
    position = width - 1
    for j in range(1, n):
        for i in range(j):
            if value >> position & 1:
                edges.append((i, j))
            position -= 1
    return Graph.from_edges(n, edges)


# ============================================================================
# REFINEMENT
# ============================================================================

def _initial_cells(g: Graph) -> Cells:
    """Cells keyed by degree and breadth-first layer profile"""
    profiles = {}
    for v in range(g.order):
        layers = []
        seen = 1 << v
        frontier = seen
        while frontier:
            grown = 0
            for u in bits(frontier):
                grown |= g.rows[u]
            frontier = grown & ~seen
            seen |= frontier
            if frontier:
                layers.append(bin(frontier).count('1'))
        profiles[v] = (g.degree(v), tuple(layers))
    return _group(range(g.order), profiles)


def _group(vertices, keys) -> Cells:
    by_key = {}
    for v in vertices:
        by_key.setdefault(keys[v], []).append(v)
    return [by_key[key] for key in sorted(by_key)]


def _refine(g: Graph, cells: Cells) -> Cells:
    """Split cells by neighbour counts into every cell until stable"""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {
                v: tuple(bin(g.rows[v] & mask).count('1') for mask in masks) for v in cell
            }
            refined.extend(_group(cell, signature))
        if len(refined) == len(cells):
            return refined
        cells = refined


# ============================================================================
# SEARCH
# ============================================================================

def _search(g: Graph, cells: Cells, best: Optional[int]) -> int:
    target = next((index for index, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        code = _encode(g, [cell[0] for cell in cells])
        return code if best is None or code < best else best

    cell = cells[target]
    for v in _twin_representatives(g, cell):
        rest = [u for u in cell if u != v]
        branch = cells[:target] + [[v], rest] + cells[target + 1:]
        best = _search(g, _refine(g, branch), best)
    return best


def _twin_representatives(g: Graph, cell: List[int]) -> List[int]:
    # Swapping twins is an automorphism fixing every individualized vertex.
    reps = []
    for v in cell:
        if not any((g.rows[v] & ~(1 << u)) == (g.rows[u] & ~(1 << v)) for u in reps):
            reps.append(v)
    return reps


def _encode(g: Graph, order: List[int]) -> int:
    value = 0
    for j in range(1, len(order)):
        row = g.rows[order[j]]
        for i in range(j):
            value = (value << 1) | (row >> order[i] & 1)
    return value
