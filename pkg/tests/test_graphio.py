import pytest

from floodpoly.errors import GraphFormatError
from floodpoly.families import complete, cycle, parallel_path, path
from floodpoly.graph import Graph
from floodpoly.graphio import format_edge_list, from_graph6, parse_edge_list, to_graph6

from conftest import graphs
from hypothesis import given


def test_parse_edge_list_comments_and_blanks():
    text = "# the 4-cycle\n4 4\n\n1 2\n2 3  # spine\n3 4\n4 1\n"
    assert parse_edge_list(text) == cycle(4)


def test_edge_list_round_trip():
    g = parallel_path(2, 4)
    back = parse_edge_list(format_edge_list(g))
    assert back.edges() == g.edges()


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n1 2\n", "2 1\n1 3\n", "2 1\n1 1\n", "x y\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


@pytest.mark.parametrize(
    "g,expected",
    # reference strings from the graph6 format description
    [(complete(3), "Bw"), (path(2), "A_"), (Graph.empty(2), "A?"), (Graph.empty(0), "?")],
)
def test_graph6_known_strings(g, expected):
    assert to_graph6(g) == expected
    assert from_graph6(expected).edges() == g.edges()


def test_graph6_header_stripped():
    assert from_graph6(">>graph6<<Bw").edges() == complete(3).edges()


def test_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    for g in [cycle(7), parallel_path(3, 5), complete(9), path(70)]:
        ng = nx.Graph()
        ng.add_nodes_from(range(g.n))
        ng.add_edges_from(g.edges())
        ref = nx.to_graph6_bytes(ng, header=False).decode().strip()
        assert to_graph6(g) == ref
        assert from_graph6(ref).edges() == g.edges()


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x7f"])
def test_graph6_errors(bad):
    with pytest.raises(GraphFormatError):
        from_graph6(bad)
