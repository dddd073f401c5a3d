import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncilab.errors import (
    EmptyIdeal,
    NotSquarefree,
    ParseError,
    UnitIdeal,
    UnknownVertex,
)
from ncilab.ideals import (
    MonomialIdeal,
    parse_ideal,
    render_ideal,
    substitute_one,
    to_hypergraph,
    to_ideal,
)
from ncilab.randgen import random_squarefree_ideal


def gens(ideal):
    return {frozenset(g) for g in ideal.generators}


class TestParse:
    def test_mixed_example(self):
        ideal = parse_ideal("x1, x2*x3, x3*x4*x5")
        assert gens(ideal) == {
            frozenset(("x1",)),
            frozenset(("x2", "x3")),
            frozenset(("x3", "x4", "x5")),
        }
        assert ideal.ring_vars == ("x1", "x2", "x3", "x4", "x5")

    def test_divisibility_normalization(self):
        ideal = parse_ideal("x1*x2, x1*x2*x3")
        assert gens(ideal) == {frozenset(("x1", "x2"))}

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefree):
            parse_ideal("x1*x1")

    def test_whitespace_ignored(self):
        assert parse_ideal("  x1 ,x2 * x3 ") == parse_ideal("x1, x2*x3")

    def test_parse_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_ideal("x1, , x2")
        assert info.value.position == 4

    def test_parse_error_on_garbage_separator(self):
        with pytest.raises(ParseError):
            parse_ideal("x1 x2")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_ideal("   ")

    def test_duplicate_generators_collapse(self):
        assert len(parse_ideal("x1*x2, x2*x1").generators) == 1


class TestRender:
    def test_canonical_order(self):
        ideal = parse_ideal("x3*x4*x5, x2*x3, x1")
        assert render_ideal(ideal) == "x1, x2*x3, x3*x4*x5"

    def test_parse_render_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(200):
            ideal = random_squarefree_ideal(rng)
            assert parse_ideal(render_ideal(ideal)) == ideal

    @given(st.text(alphabet="xyz123*, ", max_size=30))
    def test_parser_never_crashes_unexpectedly(self, text):
        try:
            parse_ideal(text)
        except (ParseError, NotSquarefree):
            pass


class TestHypergraphBridge:
    def test_mixed_example(self, mixed_ideal, mixed):
        assert to_hypergraph(mixed_ideal) == mixed

    def test_single_generator(self):
        g = to_hypergraph(parse_ideal("x1*x2"))
        assert g.edges == frozenset((frozenset(("x1", "x2")),))

    def test_zero_ideal_rejected(self):
        with pytest.raises(EmptyIdeal):
            to_hypergraph(MonomialIdeal((), frozenset()))

    def test_round_trip_random(self):
        rng = random.Random(99)
        for _ in range(1000):
            ideal = random_squarefree_ideal(rng)
            assert to_ideal(to_hypergraph(ideal)) == ideal

    def test_isolated_vertices_dropped_by_to_ideal(self):
        from ncilab.hypergraph import Hypergraph

        g = Hypergraph.from_edges([("a", "b")], vertices=("a", "b", "z"))
        assert to_ideal(g).ring_vars == ("a", "b")


class TestSubstituteOne:
    def test_simple(self):
        ideal = parse_ideal("x1*x2, x2*x3")
        assert substitute_one(ideal, "x2") == parse_ideal("x1, x3")

    def test_unit_ideal(self):
        with pytest.raises(UnitIdeal):
            substitute_one(parse_ideal("x1, x2*x3"), "x1")

    def test_double_hub_at_hub(self, double_hub_ideal):
        got = substitute_one(double_hub_ideal, "x7")
        assert got == parse_ideal("x1, x2, x3, x4, x5, x6, x8")

    def test_unknown_variable(self, mixed_ideal):
        with pytest.raises(UnknownVertex):
            substitute_one(mixed_ideal, "zz")


class TestEquality:
    def test_presentation_does_not_matter(self):
        a = parse_ideal("x2*x1, x3")
        b = parse_ideal("x3, x1*x2")
        assert a == b
        assert hash(a) == hash(b)

    def test_generator_difference_matters(self):
        assert parse_ideal("x1*x2") != parse_ideal("x1*x3")
