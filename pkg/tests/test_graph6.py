import networkx as nx
import pytest
from hypothesis import given, settings as hypothesis_settings

from src.extremal.families import all_split_joins, build_split_join, gsharp, gstar
from src.graphs.graph_core import GraphError, complete, empty
from src.harness.enumeration import enumerate_connected
from src.interchange.graph6 import Graph6ParseError, parse_graph6, write_graph6
from tests.oracles import connected_graphs, to_networkx


@pytest.mark.parametrize('line, expected', [
    ('A_', complete(2)),
    ('A?', empty(2)),
    ('C~', complete(4)),
    ('@', empty(1)),
])
def test_known_lines(line, expected):
    assert parse_graph6(line) == expected
    assert write_graph6(expected) == line


def test_surrounding_whitespace_is_ignored():
    assert parse_graph6('  C~\n') == complete(4)


def test_enumerated_graphs_survive_encoding():
    for g in enumerate_connected(6):
        assert parse_graph6(write_graph6(g)) == g


def test_family_graphs_survive_encoding():
    graphs = [gstar(30, 4), gsharp(15)] + [build_split_join(shape) for shape in all_split_joins(9)]
    for g in graphs:
        assert parse_graph6(write_graph6(g)) == g


@given(connected_graphs(max_order=12))
@hypothesis_settings(max_examples=50, deadline=None)
def test_agrees_with_networkx(g):
    line = write_graph6(g)
    assert line == nx.to_graph6_bytes(to_networkx(g), header=False).decode('ascii').strip()
    decoded = nx.from_graph6_bytes(line.encode('ascii'))
    assert sorted(tuple(sorted(edge)) for edge in decoded.edges()) == g.edges()


@pytest.mark.parametrize('line, offset', [
    ('', 0),
    ('~~~~', 0),
    ('!', 0),
    ('?', 0),
    ('C', 1),
    ('C~~', 2),
    ('C\x7f', 1),
    ('E~~', 3),
    ('Aé', 1),
    ('  C☃?', 1),
])
def test_parse_errors_carry_offsets(line, offset):
    with pytest.raises(Graph6ParseError) as info:
        parse_graph6(line)
    assert info.value.offset == offset


def test_parse_errors_are_graph_errors():
    with pytest.raises(GraphError):
        parse_graph6('C')


def test_write_rejects_long_form_orders():
    with pytest.raises(GraphError):
        write_graph6(empty(63))
