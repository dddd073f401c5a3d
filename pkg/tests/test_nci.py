import random

import pytest

from ncilab.errors import BudgetExceeded, Disconnected, TooSmall
from ncilab.hypergraph import Hypergraph, invert
from ncilab.nci import (
    enumerate_small,
    is_ci,
    is_nci_definitional,
    is_nci_graph_miller_stone,
    is_nci_structural,
)
from ncilab.randgen import random_minimal_hypergraph


def hg(*edges, vertices=None):
    return Hypergraph.from_edges(edges, vertices)


def path(n):
    return hg(*[(f"v{i}", f"v{i+1}") for i in range(1, n)])


CHAIR = hg(("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v3", "v5"))
STAR4 = hg(("c", "l1"), ("c", "l2"), ("c", "l3"), ("c", "l4"))


class TestIsCi:
    def test_disjoint(self):
        assert is_ci(hg(("a", "b"), ("c", "d", "e")))

    def test_shared_vertex(self):
        assert not is_ci(hg(("a", "b"), ("b", "c")))

    def test_double_hub_inverted_at_hub(self, double_hub):
        assert is_ci(invert(double_hub, "x7"))

    def test_empty_edge_set(self):
        assert is_ci(Hypergraph(frozenset("a"), frozenset()))


class TestDefinitional:
    def test_double_hub_is_nci(self, double_hub):
        assert is_nci_definitional(double_hub).status == "NCI"

    def test_path5_is_neither(self):
        assert is_nci_definitional(path(5)).status == "NEITHER"

    def test_single_edge_is_ci(self):
        assert is_nci_definitional(hg(("a", "b"))).status == "CI"

    def test_witness_is_verifiable(self):
        verdict = is_nci_definitional(path(5))
        v = verdict.witness["vertex"]
        assert not is_ci(invert(path(5), v))

    def test_witness_is_lexicographically_first(self):
        verdict = is_nci_definitional(path(5))
        failing = [
            v for v in sorted(path(5).vertices) if not is_ci(invert(path(5), v))
        ]
        assert verdict.witness["vertex"] == failing[0]

    def test_one_edges_get_a_pass(self):
        # 1-edge plus a star: inversion at the 1-edge vertex is the unit ideal
        g = hg(("a",), ("b", "c"), ("b", "d"))
        assert is_nci_definitional(g).status == "NCI"

    def test_isolated_vertex_blocks_nci(self):
        g = hg(("a", "b"), ("a", "c"), vertices=("a", "b", "c", "z"))
        assert is_nci_definitional(g).status == "NEITHER"


class TestMillerStone:
    def test_path5_forbidden(self):
        assert is_nci_graph_miller_stone(path(5)).status == "NEITHER"

    def test_chair_forbidden(self):
        assert is_nci_graph_miller_stone(CHAIR).status == "NEITHER"

    def test_star_matches_definitional(self):
        assert (
            is_nci_graph_miller_stone(STAR4).status
            == is_nci_definitional(STAR4).status
            == "NCI"
        )

    def test_witness_tuple_has_leaf_first(self):
        verdict = is_nci_graph_miller_stone(path(5))
        five = verdict.witness["vertices"]
        assert len(five) == 5
        leaf = five[0]
        rest = set(five)
        degree = sum(1 for e in path(5).edges if leaf in e and e <= rest)
        assert degree == 1

    def test_too_small(self):
        with pytest.raises(TooSmall):
            is_nci_graph_miller_stone(hg(("a", "b")))

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            is_nci_graph_miller_stone(hg(("a", "b"), ("c", "d"), ("b", "c"), ("e", "f")))

    def test_rejects_hyperedges(self):
        with pytest.raises(ValueError):
            is_nci_graph_miller_stone(hg(("a", "b", "c")))

    def test_bull_graph_needs_nonobvious_tree(self):
        # triangle with two pendants: only one of its spanning trees is forbidden
        bull = hg(("a", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "e"))
        assert is_nci_graph_miller_stone(bull).status == "NEITHER"
        assert is_nci_definitional(bull).status == "NEITHER"

    def test_complete_graph_is_nci(self):
        k5 = hg(*[(f"v{i}", f"v{j}") for i in range(5) for j in range(i + 1, 5)])
        assert is_nci_graph_miller_stone(k5).status == "NCI"
        assert is_nci_definitional(k5).status == "NCI"


class TestStructural:
    def test_double_hub(self, double_hub):
        assert is_nci_structural(double_hub).status == "NCI"

    def test_path5(self):
        assert is_nci_structural(path(5)).status == "NEITHER"

    def test_single_edge(self):
        assert is_nci_structural(hg(("a", "b"))).status == "CI"

    def test_exhaustive_agreement_small(self):
        for g in enumerate_small(4):
            assert (
                is_nci_definitional(g).status == is_nci_structural(g).status
            ), g.sorted_edges()

    def test_random_agreement(self):
        rng = random.Random(2024)
        for _ in range(1500):
            g = random_minimal_hypergraph(rng, 9)
            assert (
                is_nci_definitional(g).status == is_nci_structural(g).status
            ), g.sorted_edges()

    def test_structural_vertex_witness_is_verifiable(self):
        # two components, each with edges: the cross witness must fail inversion
        g = hg(("a", "b"), ("b", "c"), ("d", "e"))
        verdict = is_nci_structural(g)
        assert verdict.status == "NEITHER"
        v = verdict.witness["vertex"]
        assert not is_ci(invert(g, v))

    def test_joinability_witness_reported(self):
        g = hg(("a", "b", "c"), ("c", "d", "e"))
        verdict = is_nci_structural(g)
        assert verdict.status == "NEITHER"
        assert verdict.witness["violation"]["rule"] == "J1"


class TestHyperedgeRemovalAddition:
    """Removing a hyperedge from an NCI keeps it NCI or makes it CI; adding an
    independent set with shared neighborhoods (keeping joinability) keeps NCI."""

    def test_removal(self, double_hub):
        for h in double_hub.hyperedges():
            remaining = double_hub.edges - {h}
            smaller = Hypergraph(frozenset().union(*remaining), remaining)
            assert is_nci_definitional(smaller).status in ("NCI", "CI")

    def test_addition(self):
        # star with three leaves sharing the hub as neighborhood
        g = hg(("c", "l1"), ("c", "l2"), ("c", "l3"))
        assert is_nci_definitional(g).status == "NCI"
        bigger = Hypergraph(g.vertices, g.edges | {frozenset(("l1", "l2", "l3"))})
        from ncilab.weighted import check_joinable

        assert check_joinable(bigger).joinable
        assert is_nci_definitional(bigger).status == "NCI"


class TestEnumerateSmall:
    def test_single_vertex(self):
        got = list(enumerate_small(1))
        assert len(got) == 1
        assert got[0].edges == frozenset((frozenset(("a",)),))

    def test_two_vertices_count(self):
        # by hand: {a} alone on one vertex; on two vertices the nonempty
        # antichains over {a}, {b}, {ab} are {a}, {b}, {ab}, {a}+{b}
        got = list(enumerate_small(2))
        assert len(got) == 5

    def test_all_emitted_are_minimal(self):
        for g in enumerate_small(4):
            assert g.is_minimal()
            assert g.edges

    def test_known_antichain_counts(self):
        # nonempty antichains of nonempty subsets of an n-set: 1, 4, 18, 166
        from itertools import groupby

        sizes = [len(g.vertices) for g in enumerate_small(4)]
        counts = {k: len(list(v)) for k, v in groupby(sizes)}
        assert counts == {1: 1, 2: 4, 3: 18, 4: 166}

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            list(enumerate_small(8))

    def test_six_vertex_stream_restricted(self):
        stream = enumerate_small(6)
        seen_six = 0
        for g in stream:
            if len(g.vertices) == 6:
                seen_six += 1
                assert sum(1 for e in g.edges if len(e) >= 3) <= 2
                if seen_six > 2000:
                    break
        assert seen_six > 0
