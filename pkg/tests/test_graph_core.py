import networkx as nx
import pytest
from hypothesis import given, settings as hypothesis_settings

from src.graphs.graph_core import (
    DisconnectedGraphError, Graph, GraphError, brute_force_isomorphic, complete,
    components, components_after_removal, cycle, delete_edge, disjoint_union, empty,
    is_bridge, is_connected, join, path, require_connected, star,
)
from tests.oracles import connected_graphs, graphs, to_networkx


# ============================================================================
# CONSTRUCTION
# ============================================================================

def test_from_edges_is_symmetric():
    g = Graph.from_edges(3, [(0, 1), (2, 1)])
    assert g.has_edge(1, 0) and g.has_edge(1, 2)
    assert not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize('order, rows', [
    (0, ()),
    (65, (0,) * 65),
    (2, (1,)),
    (1, (1,)),
    (2, (2, 0)),
])
def test_invalid_graphs_rejected(order, rows):
    with pytest.raises(GraphError):
        Graph(order, rows)


def test_from_edges_rejects_loops_and_out_of_range():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


@pytest.mark.parametrize('build', [
    lambda: Graph.from_edges(10 ** 8, []),
    lambda: Graph.from_edges(-5, []),
    lambda: empty(65),
    lambda: complete(10 ** 8),
    lambda: path(0),
])
def test_orders_outside_range_rejected_before_allocation(build):
    with pytest.raises(GraphError, match="Order must be in"):
        build()


def test_adjacency_queries():
    g = star(3)
    assert g.neighbors(0) == [1, 2, 3]
    assert g.neighbors(2) == [0]
    assert g.degree(0) == 3 and g.degree(1) == 1
    assert g.has_edge(3, 0) and not g.has_edge(1, 2)


def test_basic_families():
    assert complete(4).edge_count() == 6
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle(5).degrees() == [2] * 5
    assert star(3).degrees() == [3, 1, 1, 1]
    assert empty(4).edge_count() == 0
    with pytest.raises(GraphError):
        cycle(2)


def test_join_keeps_first_operand_indices():
    g = join(complete(2), empty(3))
    assert g.order == 5
    assert g.edge_count() == 7
    assert g.degree(0) == 4
    assert g.degree(2) == 2
    assert g.neighbors(4) == [0, 1]


def test_disjoint_union_components():
    g = disjoint_union(path(2), path(3))
    assert components(g) == [frozenset({0, 1}), frozenset({2, 3, 4})]
    assert not is_connected(g)
    with pytest.raises(DisconnectedGraphError):
        require_connected(g)


def test_components_after_removal():
    assert components_after_removal(star(4), [0]) == 4
    assert components_after_removal(path(5), [1, 3]) == 3
    assert components_after_removal(complete(3), [0, 1, 2]) == 0
    with pytest.raises(GraphError):
        components_after_removal(path(3), [5])


def test_bridges_and_edge_deletion():
    assert is_bridge(path(3), 0, 1)
    assert not is_bridge(cycle(4), 0, 1)
    assert delete_edge(cycle(4), 0, 3).edges() == path(4).edges()
    with pytest.raises(GraphError):
        delete_edge(path(3), 0, 2)


def test_relabel():
    g = path(3).relabel([2, 0, 1])
    assert g.edges() == [(0, 1), (0, 2)]
    with pytest.raises(GraphError):
        path(3).relabel([0, 0, 1])


def test_brute_force_isomorphic():
    assert brute_force_isomorphic(path(3), star(2)) is not None
    assert brute_force_isomorphic(path(4), star(3)) is None
    assert brute_force_isomorphic(cycle(4), path(4)) is None


# ============================================================================
# PROPERTIES
# ============================================================================

@given(connected_graphs(max_order=5), connected_graphs(max_order=5))
@hypothesis_settings(max_examples=50, deadline=None)
def test_join_is_symmetric_up_to_isomorphism(g1, g2):
    assert nx.is_isomorphic(to_networkx(join(g1, g2)), to_networkx(join(g2, g1)))


@given(connected_graphs())
@hypothesis_settings(max_examples=50, deadline=None)
def test_bridges_match_networkx(g):
    assert is_connected(g)
    for i, j in g.edges():
        assert is_bridge(g, i, j) == (not nx.is_connected(to_networkx(delete_edge(g, i, j))))


@given(graphs())
@hypothesis_settings(max_examples=80, deadline=None)
def test_single_component_iff_connected(g):
    assert (components_after_removal(g, []) == 1) == is_connected(g)
    assert is_connected(g) == nx.is_connected(to_networkx(g))
