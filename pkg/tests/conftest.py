import pytest

from freebycyclic.dsl import FIXTURES, load_fixture, load_fixture_document
from freebycyclic.graph_core import Graph, GraphMap
from freebycyclic.invariants import invariants_of

GOLDEN_FIXTURES = ("o_and_none", "o_and_none_inverse", "anti_anti", "anti_anti_inverse", "antiO", "antiO_inverse")
TRIVIAL_FIXTURES = ("identity_circle", "doubling", "reversal", "swap_rose")


def rose(*edges):
    return Graph.from_edges({e: ("v", "v") for e in edges}, ["v"])


def rose_map(**words):
    return GraphMap.from_words(rose(*sorted(words)), words)


def pipeline(name):
    """Presentation, lifted matrices and invariants, honouring a fixture's splitting."""
    doc = load_fixture_document(name)
    return invariants_of(doc.graph_map, doc.basepoint, doc.tree)


@pytest.fixture(params=FIXTURES)
def fixture_name(request):
    return request.param


@pytest.fixture
def antiO():
    return load_fixture("antiO")
