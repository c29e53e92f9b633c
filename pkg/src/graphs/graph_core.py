"""
Graph Core
Simple undirected graphs stored as per-vertex adjacency bitsets
"""
from dataclasses import dataclass
from itertools import permutations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple


MAX_ORDER = 64

VertexSet = FrozenSet[int]
Edge = Tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or query"""


class DisconnectedGraphError(GraphError):
    """Operation needs a connected graph"""


def check_order(n: int) -> None:
    """Reject orders outside [1, MAX_ORDER] before anything is allocated"""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"Order must be in [1, {MAX_ORDER}], got {n}")


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..order-1

    Row ``i`` is an integer bitset whose bit ``j`` is set iff {i, j} is an edge.
    Instances are immutable and hashable.
    """

    order: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        check_order(self.order)
        if len(self.rows) != self.order:
            raise GraphError(f"Expected {self.order} adjacency rows, got {len(self.rows)}")

        limit = 1 << self.order
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise GraphError(f"Row {i} references vertices outside 0..{self.order - 1}")
            if row >> i & 1:
                raise GraphError(f"Loop at vertex {i}")
            rest = row
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"Adjacency not symmetric for pair ({i}, {j})")
                rest ^= low

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge]) -> 'Graph':
        """
        Build a graph from an edge iterable

        Args:
            order: Number of vertices
            edges: Vertex pairs; order within a pair does not matter

        Returns:
            The graph with exactly those edges
        """
        check_order(order)
        rows = [0] * order
        for i, j in edges:
            if not (0 <= i < order and 0 <= j < order):
                raise GraphError(f"Edge ({i}, {j}) out of range for order {order}")
            if i == j:
                raise GraphError(f"Loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(order, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, i: int, j: int) -> bool:
        """Whether {i, j} is an edge"""
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, v: int) -> List[int]:
        """Neighbours of v, ascending"""
        return bits(self.rows[v])

    def degree(self, v: int) -> int:
        """Number of neighbours of v"""
        return bin(self.rows[v]).count('1')

    def degrees(self) -> List[int]:
        return [self.degree(v) for v in range(self.order)]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Edge]:
        """Edges as (i, j) with i < j, sorted"""
        return [(i, j) for i in range(self.order) for j in bits(self.rows[i]) if i < j]

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """
        Rename vertices

        Args:
            permutation: ``permutation[v]`` is the new index of vertex ``v``

        Returns:
            The isomorphic graph under the new labels
        """
        if sorted(permutation) != list(range(self.order)):
            raise GraphError("Relabeling must be a permutation of the vertex indices")
        return Graph.from_edges(
            self.order, ((permutation[i], permutation[j]) for i, j in self.edges())
        )


def bits(mask: int) -> List[int]:
    """Indices of the set bits of ``mask``, ascending"""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def empty(n: int) -> Graph:
    """n isolated vertices (n·K1)"""
    check_order(n)
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    """Complete graph K_n"""
    check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path(n: int) -> Graph:
    """Path P_n with edges {i, i+1}"""
    check_order(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3"""
    if n < 3:
        raise GraphError("Cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """Star K_{1,leaves} with center 0"""
    return join(complete(1), empty(leaves))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """
    Disjoint union; g2's vertices are shifted by g1.order

    Args:
        g1: First operand, keeps its indices
        g2: Second operand

    Returns:
        Union without cross edges
    """
    shift = g1.order
    return Graph(g1.order + g2.order, g1.rows + tuple(row << shift for row in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """
    Join: disjoint union plus every edge between the operands

    Args:
        g1: First operand, keeps its indices
        g2: Second operand, shifted by g1.order

    Returns:
        The join g1 ∨ g2
    """
    shift = g1.order
    left = (1 << g1.order) - 1
    right = ((1 << g2.order) - 1) << shift
    rows = tuple(row | right for row in g1.rows) + tuple((row << shift) | left for row in g2.rows)
    return Graph(g1.order + g2.order, rows)


def delete_edge(g: Graph, i: int, j: int) -> Graph:
    """
    Remove edge {i, j}; the result may be disconnected

    Raises:
        GraphError: If the edge is absent
    """
    if not (0 <= i < g.order and 0 <= j < g.order) or not g.has_edge(i, j):
        raise GraphError(f"Edge ({i}, {j}) not present")
    rows = list(g.rows)
    rows[i] &= ~(1 << j)
    rows[j] &= ~(1 << i)
    return Graph(g.order, tuple(rows))


# ============================================================================
# STRUCTURE
# ============================================================================

def reach(g: Graph, start_mask: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``start_mask`` inside ``allowed``"""
    return reach_rows(g.rows, start_mask, allowed)


def reach_rows(rows: Sequence[int], start_mask: int, allowed: int) -> int:
    """reach() over explicit adjacency rows, e.g. a graph with edges masked out"""
    seen = start_mask & allowed
    frontier = seen
    while frontier:
        grown = 0
        for v in bits(frontier):
            grown |= rows[v]
        frontier = grown & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, removed: Iterable[int] = ()) -> List[VertexSet]:
    """Connected components of g minus ``removed``, ordered by least vertex"""
    remaining = g.full_mask
    for v in removed:
        remaining &= ~(1 << v)
    found = []
    while remaining:
        low = remaining & -remaining
        part = reach(g, low, remaining)
        found.append(frozenset(bits(part)))
        remaining &= ~part
    return found


def components_after_removal(g: Graph, s: Iterable[int]) -> int:
    """
    Number of connected components of G - S

    Args:
        g: Graph
        s: Vertices to remove; removing everything leaves 0 components

    Returns:
        ω(G - S)
    """
    members = set(s)
    if any(not 0 <= v < g.order for v in members):
        raise GraphError(f"Vertex set {sorted(members)} not inside 0..{g.order - 1}")
    return len(components(g, members))


def is_connected(g: Graph) -> bool:
    return reach(g, 1, g.full_mask) == g.full_mask


def is_bridge(g: Graph, i: int, j: int) -> bool:
    """True iff deleting the existing edge {i, j} disconnects its component"""
    h = delete_edge(g, i, j)
    return not reach(h, 1 << i, h.full_mask) >> j & 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"Graph of order {g.order} is disconnected")


def brute_force_isomorphic(g1: Graph, g2: Graph) -> Optional[Tuple[int, ...]]:
    """
    Isomorphism by trying every permutation (small graphs only)

    Returns:
        A permutation mapping g1 onto g2, or None
    """
    if g1.order != g2.order or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    target = set(g2.edges())
    for perm in permutations(range(g1.order)):
        if all(tuple(sorted((perm[i], perm[j]))) in target for i, j in g1.edges()):
            return perm
    return None
