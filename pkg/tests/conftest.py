import pytest

from ncilab import parse_ideal, to_hypergraph
from ncilab.hypergraph import Hypergraph
from ncilab.weighted import WeightedGraph

# Two hub vertices adjacent to everything, plus two disjoint triple generators.
DOUBLE_HUB_TEXT = (
    "x1*x7, x2*x7, x3*x7, x4*x7, x5*x7, x6*x7, "
    "x1*x8, x2*x8, x3*x8, x4*x8, x5*x8, x6*x8, x7*x8, "
    "x1*x2*x3, x4*x5*x6"
)

# 1-edge + edge + triple generator sharing a vertex.
MIXED_TEXT = "x1, x2*x3, x3*x4*x5"


@pytest.fixture(scope="session")
def double_hub_ideal():
    return parse_ideal(DOUBLE_HUB_TEXT)


@pytest.fixture(scope="session")
def double_hub(double_hub_ideal):
    return to_hypergraph(double_hub_ideal)


@pytest.fixture(scope="session")
def mixed_ideal():
    return parse_ideal(MIXED_TEXT)


@pytest.fixture(scope="session")
def mixed(mixed_ideal):
    return to_hypergraph(mixed_ideal)


@pytest.fixture(scope="session")
def pinwheel():
    """Two triples through a middle vertex plus two cross edges."""
    return Hypergraph.from_edges(
        [
            ("x1", "x2", "x5"),
            ("x3", "x4", "x5"),
            ("x1", "x4"),
            ("x2", "x3"),
        ]
    )


@pytest.fixture(scope="session")
def double_hub_weighted():
    """The weighted collapse of the double hub: weights 3,1,1,3; five edges."""
    return WeightedGraph.from_weights(
        {"A": 3, "B": 1, "C": 1, "D": 3},
        [("A", "B"), ("A", "C"), ("B", "C"), ("B", "D"), ("C", "D")],
    )


def graph(edges, vertices=None):
    return Hypergraph.from_edges(edges, vertices)


def path(n):
    return graph([(f"v{i}", f"v{i+1}") for i in range(1, n)])
