import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncilab.errors import SchemaError, UnitIdeal, UnknownVertex
from ncilab.hypergraph import (
    Hypergraph,
    edge_components,
    enlarge_edges,
    induced_sub,
    invert,
    min_reduce,
    skeleton,
    two_neighbors,
    weak_induced_sub,
)


def edges_of(g):
    return {frozenset(e) for e in g.edges}


def hg(*edges, vertices=None):
    return Hypergraph.from_edges(edges, vertices)


labels = st.sampled_from(["a", "b", "c", "d", "e"])
edge_st = st.frozensets(labels, min_size=1, max_size=4)
hypergraph_st = st.builds(
    lambda es: Hypergraph.from_edges(es) if es else Hypergraph(frozenset(), frozenset()),
    st.lists(edge_st, min_size=1, max_size=7),
)


class TestMinReduce:
    def test_drops_containing_edge(self):
        g = hg(("a", "b"), ("a", "b", "c"))
        assert edges_of(min_reduce(g)) == {frozenset("ab")}

    def test_one_edge_dominates(self):
        g = hg(("a",), ("a", "b"), ("b", "c"))
        assert edges_of(min_reduce(g)) == {frozenset("a"), frozenset("bc")}

    def test_vertex_set_unchanged(self):
        g = hg(("a", "b"), ("a", "b", "c"))
        assert min_reduce(g).vertices == g.vertices

    @given(hypergraph_st)
    def test_idempotent_and_minimal(self, g):
        once = min_reduce(g)
        assert once.is_minimal()
        assert min_reduce(once) == once


class TestInducedSub:
    def test_mixed_example(self, mixed):
        got = induced_sub(mixed, {"x2", "x3", "x4", "x5"})
        assert edges_of(got) == {frozenset(("x2", "x3")), frozenset(("x3", "x4", "x5"))}

    def test_empty_restriction(self, mixed):
        got = induced_sub(mixed, frozenset())
        assert got.vertices == frozenset() and got.edges == frozenset()

    def test_full_restriction_is_identity(self, mixed):
        assert induced_sub(mixed, mixed.vertices) == mixed

    def test_unknown_vertex(self, mixed):
        with pytest.raises(UnknownVertex):
            induced_sub(mixed, {"x1", "zzz"})

    @given(hypergraph_st, st.frozensets(labels, max_size=5))
    def test_preserves_minimality(self, g, vs):
        g = min_reduce(g)
        got = induced_sub(g, vs & g.vertices)
        assert got.is_minimal()


class TestWeakInducedSub:
    def test_may_be_nonminimal(self):
        g = hg(("a", "b"), ("b", "c", "d"))
        got = weak_induced_sub(g, {"b", "c"})
        assert edges_of(got) == {frozenset("b"), frozenset("bc")}
        assert not got.is_minimal()

    def test_full_restriction_is_identity(self, mixed):
        assert weak_induced_sub(mixed, mixed.vertices) == mixed

    def test_mixed_example_drops_outside_edge(self, mixed):
        got = weak_induced_sub(mixed, {"x2", "x3", "x4", "x5"})
        assert edges_of(got) == {frozenset(("x2", "x3")), frozenset(("x3", "x4", "x5"))}


class TestInvert:
    def test_pinwheel_gives_four_cycle(self, pinwheel):
        got = invert(pinwheel, "x5")
        assert edges_of(got) == {
            frozenset(("x1", "x2")),
            frozenset(("x2", "x3")),
            frozenset(("x3", "x4")),
            frozenset(("x1", "x4")),
        }

    def test_isolated_vertex_just_disappears(self):
        g = hg(("a", "b"), vertices=("a", "b", "z"))
        got = invert(g, "z")
        assert got.vertices == frozenset("ab")
        assert edges_of(got) == {frozenset("ab")}

    def test_mixed_example(self, mixed):
        got = invert(mixed, "x3")
        assert edges_of(got) == {
            frozenset(("x1",)),
            frozenset(("x2",)),
            frozenset(("x4", "x5")),
        }

    def test_unit_ideal_on_one_edge(self, mixed):
        with pytest.raises(UnitIdeal):
            invert(mixed, "x1")

    def test_unknown_vertex(self, mixed):
        with pytest.raises(UnknownVertex):
            invert(mixed, "nope")

    @given(hypergraph_st)
    def test_result_is_minimal_and_misses_vertex(self, g):
        g = min_reduce(g)
        for v in sorted(g.vertices):
            try:
                got = invert(g, v)
            except UnitIdeal:
                continue
            assert v not in got.vertices
            assert got.vertices == g.vertices - {v}
            assert got.is_minimal()


class TestCommutation:
    """Inversion commutes with induced restriction."""

    @settings(max_examples=200)
    @given(hypergraph_st, st.frozensets(labels, max_size=5), labels)
    def test_invert_induced_commute(self, g, vs, v):
        g = min_reduce(g)
        vs = (vs & g.vertices) | {v}
        if v not in g.vertices:
            return
        try:
            lhs = invert(induced_sub(g, vs), v)
        except UnitIdeal:
            lhs = "unit"
        try:
            rhs = induced_sub(invert(g, v), vs - {v})
        except UnitIdeal:
            rhs = "unit"
        assert lhs == rhs


class TestSkeletonAndNeighbors:
    def test_skeleton_keeps_two_edges_only(self, double_hub):
        sk = skeleton(double_hub)
        assert len(sk.edges) == 13
        assert all(len(e) == 2 for e in sk.edges)
        assert sk.vertices == double_hub.vertices

    def test_skeleton_of_hyperedges_only_is_edgeless(self):
        g = hg(("a", "b", "c"))
        assert skeleton(g).edges == frozenset()

    def test_skeleton_of_graph_is_identity(self):
        g = hg(("a", "b"), ("b", "c"))
        assert skeleton(g) == g

    def test_two_neighbors_leaf(self, double_hub):
        assert two_neighbors(double_hub, "x1") == frozenset(("x7", "x8"))

    def test_two_neighbors_hub(self, double_hub):
        assert two_neighbors(double_hub, "x7") == frozenset(
            ("x1", "x2", "x3", "x4", "x5", "x6", "x8")
        )

    def test_two_neighbors_isolated(self):
        g = hg(("a", "b"), vertices=("a", "b", "z"))
        assert two_neighbors(g, "z") == frozenset()


class TestEnlargeEdges:
    def test_basic(self):
        g = hg(("a",), ("b", "c"), vertices=("a", "b", "c", "d"))
        got = enlarge_edges(g, "d")
        assert edges_of(got) == {frozenset("ad"), frozenset("bcd")}

    def test_noop_when_already_everywhere(self):
        g = hg(("a", "b"), ("a", "c"))
        assert enlarge_edges(g, "a") == g

    @given(hypergraph_st)
    def test_weak_restriction_absorbs_enlargement(self, g):
        for v in sorted(g.vertices):
            rest = g.vertices - {v}
            assert weak_induced_sub(enlarge_edges(g, v), rest) == weak_induced_sub(
                g, rest
            )


class TestJsonForm:
    def test_round_trip(self, double_hub):
        assert Hypergraph.from_json_dict(double_hub.to_json_dict()) == double_hub

    def test_edges_serialized_sorted(self, mixed):
        d = mixed.to_json_dict()
        assert d["edges"] == sorted(d["edges"])
        assert d["vertices"] == sorted(d["vertices"])

    def test_rejects_unknown_vertices(self):
        with pytest.raises(SchemaError):
            Hypergraph.from_json_dict({"vertices": ["a"], "edges": [["a", "b"]]})

    def test_rejects_duplicate_labels(self):
        with pytest.raises(SchemaError):
            Hypergraph.from_json_dict({"vertices": ["a", "a"], "edges": []})

    def test_rejects_empty_edge(self):
        with pytest.raises(SchemaError):
            Hypergraph.from_json_dict({"vertices": ["a"], "edges": [[]]})


def test_edge_components():
    comps = edge_components(
        [frozenset("ab"), frozenset("bc"), frozenset("de"), frozenset("f")]
    )
    assert sorted(sorted(c) for c in comps) == [["a", "b", "c"], ["d", "e"], ["f"]]


def test_substitution_oracle_random():
    """Inversion agrees with direct substitution on random squarefree ideals."""
    from ncilab.ideals import substitute_one, to_hypergraph, to_ideal
    from ncilab.randgen import random_squarefree_ideal

    rng = random.Random(4242)
    for _ in range(300):
        ideal = random_squarefree_ideal(rng)
        g = to_hypergraph(ideal)
        for x in sorted(ideal.support):
            try:
                expected = substitute_one(ideal, x)
            except UnitIdeal:
                with pytest.raises(UnitIdeal):
                    invert(g, x)
                continue
            got = invert(g, x)
            assert to_ideal(got) == expected
