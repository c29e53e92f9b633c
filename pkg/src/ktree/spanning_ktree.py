"""
Spanning k-Trees
Exact decision of spanning trees with maximum degree <= k, certificate checks
and Win-condition violations
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..graphs.graph_core import (
    Edge, Graph, GraphError, VertexSet, bits, components_after_removal, reach_rows,
    require_connected,
)


logger = logging.getLogger(__name__)

MAX_SEARCH_ORDER = 16
MAX_WIN_ORDER = 20


class SearchLimitError(GraphError):
    """Exhaustive search requested above its cost guard"""


class Outcome(str, Enum):
    YES = 'YES'
    NO = 'NO'


@dataclass(frozen=True)
class KTreeVerdict:
    """
    Exact answer to "does G have a spanning k-tree?"

    YES carries the n-1 tree edges; NO means the search was exhausted and
    carries a Win-violating set when one exists.
    """

    outcome: Outcome
    tree_edges: Tuple[Edge, ...] = ()
    win_violation: Optional[VertexSet] = None
    nodes_explored: int = 0

    @property
    def exists(self) -> bool:
        return self.outcome is Outcome.YES


# ============================================================================
# CERTIFICATES
# ============================================================================

def verify_tree_certificate(g: Graph, k: int, edges: Sequence) -> bool:
    """
    Check a claimed spanning k-tree

    Returns:
        True iff edges are graph edges forming a spanning tree with every
        degree <= k; False on any malformed input
    """
    try:
        pairs = [(int(i), int(j)) for i, j in edges]
    except (TypeError, ValueError):
        return False

    n = g.order
    if len(pairs) != n - 1:
        return False
    degree = [0] * n
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n) or i == j or not g.has_edge(i, j):
            return False
        root_i, root_j = find(i), find(j)
        if root_i == root_j:
            return False
        parent[root_i] = root_j
        degree[i] += 1
        degree[j] += 1
    return max(degree, default=0) <= k


# ============================================================================
# DECISION
# ============================================================================

class _TreeSearch:
    """Include/exclude backtracking over frontier edges"""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.n = g.order
        self.full = g.full_mask
        self.nodes = 0
        # Descending degree, then index: deterministic branching order.
        self.rank = sorted(range(self.n), key=lambda v: (-g.degree(v), v))

    def run(self) -> Optional[List[Edge]]:
        root = self.rank[0]
        budget = [self.k] * self.n
        available = list(self.g.rows)
        return self._grow(1 << root, budget, available, [])

    def _grow(self, reached, budget, available, tree):
        self.nodes += 1
        if reached == self.full:
            return list(tree)

        open_reached = 0
        for u in bits(reached):
            if budget[u] > 0:
                open_reached |= 1 << u
        unreached = self.full & ~reached

        # Every unreached vertex must still be attachable through open vertices.
        if reach_rows(available, open_reached, open_reached | unreached) & unreached != unreached:
            return None

        forced = [0] * self.n
        best_vertex, best_options = -1, None
        for v in bits(unreached):
            options = available[v] & (open_reached | unreached)
            count = bin(options).count('1')
            if count == 0:
                return None
            if count == 1:
                u = options.bit_length() - 1
                forced[u] += 1
                limit = budget[u] if reached >> u & 1 else self.k - 1
                if forced[u] > limit:
                    return None
            frontier = available[v] & open_reached
            if frontier:
                key = (count, bin(frontier).count('1'))
                if best_options is None or key < best_options:
                    best_vertex, best_options = v, key

        v = best_vertex
        candidates = bits(available[v] & open_reached)
        u = max(candidates, key=lambda w: (budget[w], -self.rank.index(w)))

        # Include {u, v}.
        budget[u] -= 1
        budget[v] = self.k - 1
        tree.append((min(u, v), max(u, v)))
        found = self._grow(reached | (1 << v), budget, available, tree)
        tree.pop()
        budget[u] += 1
        budget[v] = self.k
        if found is not None:
            return found

        # Exclude {u, v}.
        available[u] &= ~(1 << v)
        available[v] &= ~(1 << u)
        found = self._grow(reached, budget, available, tree)
        available[u] |= 1 << v
        available[v] |= 1 << u
        return found


def has_spanning_ktree(g: Graph, k: int) -> KTreeVerdict:
    """
    Decide exactly whether g has a spanning tree with maximum degree <= k

    Args:
        g: Connected graph, order <= MAX_SEARCH_ORDER
        k: Degree bound, k >= 2

    Returns:
        KTreeVerdict with a witness tree (YES) or an exhausted search (NO)
    """
    if k < 2:
        raise GraphError(f"Degree bound must be at least 2, got {k}")
    if g.order > MAX_SEARCH_ORDER:
        raise SearchLimitError(f"Spanning k-tree search supports n <= {MAX_SEARCH_ORDER}")
    require_connected(g)

    if max(g.degrees()) <= k:
        return KTreeVerdict(Outcome.YES, tuple(sorted(_bfs_tree(g))), nodes_explored=1)

    search = _TreeSearch(g, k)
    tree = search.run()
    logger.debug(f"k-tree search n={g.order} k={k}: {search.nodes} nodes")
    if tree is not None:
        return KTreeVerdict(Outcome.YES, tuple(sorted(tree)), nodes_explored=search.nodes)
    return KTreeVerdict(
        Outcome.NO,
        win_violation=find_win_violation(g, k),
        nodes_explored=search.nodes,
    )


def _bfs_tree(g: Graph) -> List[Edge]:
    edges = []
    seen = 1
    queue = [0]
    for u in queue:
        for v in bits(g.rows[u] & ~seen):
            seen |= 1 << v
            edges.append((min(u, v), max(u, v)))
            queue.append(v)
    return edges


# ============================================================================
# WIN CONDITION
# ============================================================================

def find_win_violation(g: Graph, k: int) -> Optional[VertexSet]:
    """
    Smallest S with ω(G - S) >= (k-2)|S| + 3

    Subsets are scanned by size, lexicographically within a size, so the
    first hit is the smallest violator with the least-index tie-break.

    Args:
        g: Connected graph, order <= MAX_WIN_ORDER
        k: Degree bound

    Returns:
        The violating set, or None if the condition holds everywhere
    """
    if g.order > MAX_WIN_ORDER:
        raise SearchLimitError(f"Win-condition scan supports n <= {MAX_WIN_ORDER}")
    require_connected(g)

    n = g.order
    for size in range(1, n + 1):
        needed = (k - 2) * size + 3
        if n - size < needed:
            break
        for subset in combinations(range(n), size):
            if components_after_removal(g, subset) >= needed:
                return frozenset(subset)
    return None
