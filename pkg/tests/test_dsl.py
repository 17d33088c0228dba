import pytest

from freebycyclic.dsl import FIXTURES, load_fixture, load_fixture_document, parse, render
from freebycyclic.errors import DSLSyntaxError, InconsistentEndpoints, UnknownEdge


def test_doubling_map():
    doc = parse("vertex v\nedge a v v\nimage a a a")
    assert doc.graph_map.edge_image["a"] == (("a", 1), ("a", 1))


def test_antiO_fixture():
    doc = load_fixture_document("antiO")
    f = doc.graph_map
    assert len(f.graph.vertices) == 2 and len(f.graph.edges) == 6
    assert f.edge_image["a"] == (("d", -1), ("e", -1), ("a", -1), ("b", -1), ("f", -1))
    assert (doc.basepoint, doc.tree) == ("v", ("f",))


def test_inconsistent_endpoints():
    text = "vertex v\nvertex w\nedge a v w\nedge b v w\nimage a a ~b\nimage b b"
    with pytest.raises(InconsistentEndpoints):
        parse(text)


def test_unknown_edge():
    with pytest.raises(UnknownEdge):
        parse("vertex v\nedge a v v\nimage a a ~q")


def test_syntax_error_position():
    with pytest.raises(DSLSyntaxError) as err:
        parse("vertex v\nedge a v\nimage a a")
    assert (err.value.line, err.value.column) == (2, 1)
    with pytest.raises(DSLSyntaxError) as err:
        parse("vertex v\n  frobnicate a")
    assert (err.value.line, err.value.column) == (2, 3)


def test_multi_letter_names():
    doc = parse("vertex p\nedge x1 p p\nedge x2 p p\nimage x1 x1 ~x2\nimage x2 x1")
    assert doc.graph_map.edge_image["x1"] == (("x1", 1), ("x2", -1))


@pytest.mark.parametrize("name", FIXTURES)
def test_round_trip(name):
    doc = load_fixture_document(name)
    again = parse(render(doc))
    assert again.graph_map.edge_image == doc.graph_map.edge_image
    assert again.graph_map.graph == doc.graph_map.graph
    assert (again.basepoint, again.tree) == (doc.basepoint, doc.tree)
    assert load_fixture(name).graph.edges == doc.graph_map.graph.edges
