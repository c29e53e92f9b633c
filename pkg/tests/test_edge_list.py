import pytest

from src.extremal.families import gstar
from src.graphs.graph_core import Graph, cycle, empty
from src.interchange.edge_list import EdgeListParseError, graph_to_edge_list, parse_edge_list


def test_parse_with_comments_and_blank_lines():
    text = "# square\n4 4\n\n0 1\n1 2\n# closing edge\n2 3\n0 3\n"
    assert parse_edge_list(text) == cycle(4)


def test_isolated_vertices_are_allowed():
    assert parse_edge_list("3 0\n") == empty(3)


def test_serialization_is_sorted_and_parses_back():
    g = gstar(8, 4)
    text = graph_to_edge_list(g)
    lines = text.splitlines()
    assert lines[0] == f"8 {g.edge_count()}"
    assert lines[1:] == [f"{u} {v}" for u, v in g.edges()]
    assert parse_edge_list(text) == g
    assert graph_to_edge_list(Graph.from_edges(2, [(1, 0)])) == "2 1\n0 1\n"


@pytest.mark.parametrize('text, line_number, message', [
    ("", 1, 'header'),
    ("# only comments\n", 1, 'header'),
    ("4\n", 1, 'two integers'),
    ("0 0\n", 1, 'invalid header'),
    ("20000000 0\n", 1, 'exceeds the supported maximum'),
    ("65 0\n", 1, 'exceeds the supported maximum'),
    ("3 1\n0 x\n", 2, 'two integers'),
    ("3 1\n1 1\n", 2, 'self-loop'),
    ("3 1\n2 1\n", 2, '0 <= u < v'),
    ("3 1\n0 3\n", 2, '0 <= u < v'),
    ("3 2\n0 1\n0 1\n", 3, 'duplicate'),
    ("3 3\n0 1\n1 2\n", 3, 'declares 3 edges'),
])
def test_errors_report_line_numbers(text, line_number, message):
    with pytest.raises(EdgeListParseError, match=message) as info:
        parse_edge_list(text)
    assert info.value.line_number == line_number
