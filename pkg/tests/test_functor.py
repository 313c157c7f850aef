from __future__ import annotations

from intgraphs.cob0 import (
    Cob0Morphism,
    cob0_compose,
    cob0_enumerate,
    cob0_identity,
    cob0_morphism,
    source_point as sp,
    target_point as tp,
)
from intgraphs.functor import (
    check_faithfulness,
    check_functoriality,
    functor_bar,
    fundamental_graph,
)
from intgraphs.graph import ExtNat
from intgraphs.interaction import cod_vertex, dom_vertex, int_identity


def three_strand_cobordism(circles: int) -> Cob0Morphism:
    """Three points a1,a2,a3 on the left, b1,b2,b3 on the right; segments
    a1-b3, a2-a3, b1-b2; plus free circles."""
    return cob0_morphism(
        {"a1", "a2", "a3"},
        {"b1", "b2", "b3"},
        [(sp("a1"), tp("b3")), (sp("a2"), sp("a3")), (tp("b1"), tp("b2"))],
        circles=circles,
    )


EXPECTED_SYMMETRIC_PAIRS = {
    frozenset({dom_vertex("a1"), cod_vertex("b3")}),
    frozenset({dom_vertex("a2"), dom_vertex("a3")}),
    frozenset({cod_vertex("b1"), cod_vertex("b2")}),
}


class TestFundamentalGraph:
    def test_three_strand_graph(self):
        g = fundamental_graph(three_strand_cobordism(2)).graph
        assert len(g.edges) == 6
        endpoints = {(e.src, e.tgt) for e in g.edges}
        # every segment appears as a symmetric pair of directed edges
        assert {frozenset(p) for p in endpoints} == EXPECTED_SYMMETRIC_PAIRS
        assert all((tgt, src) in endpoints for src, tgt in endpoints)

    def test_circles_are_invisible(self):
        with_circles = fundamental_graph(three_strand_cobordism(2))
        without = fundamental_graph(three_strand_cobordism(0))
        assert with_circles.graph == without.graph

    def test_empty_cobordism(self):
        g = fundamental_graph(cob0_morphism(set(), set(), [], circles=0))
        assert g.graph.vertices == frozenset()
        assert g.graph.edges == ()

    def test_no_self_loops_and_out_degree_one(self):
        for m in cob0_enumerate({"a1", "a2"}, {"b1", "b2"}, 0):
            g = fundamental_graph(m).graph
            assert all(e.src != e.tgt for e in g.edges)
            for v in g.vertices:
                assert sum(1 for e in g.edges if e.src == v) == 1


class TestFunctorBar:
    def test_wager_records_circles(self):
        proj = functor_bar(three_strand_cobordism(2))
        assert proj.wager == ExtNat(2)
        assert functor_bar(three_strand_cobordism(0)).wager == ExtNat(0)

    def test_identity_maps_to_identity(self):
        points = {"a", "b"}
        proj = functor_bar(cob0_identity(points))
        ident = int_identity(points)
        assert proj.wager == ExtNat(0)
        assert proj.graph.vertices == ident.graph.vertices
        assert {(e.src, e.tgt) for e in proj.graph.edges} == {
            (e.src, e.tgt) for e in ident.graph.edges
        }


class TestFunctoriality:
    def test_cap_cup_composition(self):
        m = cob0_morphism(
            {"a1", "a2"},
            {"b1", "b2"},
            [(sp("a1"), sp("a2")), (tp("b1"), tp("b2"))],
        )
        n = cob0_morphism(
            {"b1", "b2"},
            {"c1", "c2"},
            [(sp("b1"), sp("b2")), (tp("c1"), tp("c2"))],
        )
        report = check_functoriality(m, n)
        assert report.passed
        assert report.details["measure_unoriented"] == "1"
        assert report.details["measure_directed"] == "2"
        assert cob0_compose(m, n).circles == 1

    def test_identity_composition_is_trivial(self):
        m = three_strand_cobordism(1)
        report = check_functoriality(m, cob0_identity(m.target))
        assert report.passed
        assert report.details["measure_unoriented"] == "0"

    def test_small_exhaustive_sample(self):
        a = {"a1"}
        b = {"b1"}
        c = {"c1"}
        for m in cob0_enumerate(a, b, 1):
            for n in cob0_enumerate(b, c, 1):
                assert check_functoriality(m, n).passed

    def test_circle_glued_through_four_points(self):
        # chain b1 -(M)- b2 -(N)- b3 -(M)- b4 -(N)- b1: one circle whose
        # directed traversals are two length-4 cycle classes
        m = cob0_morphism(
            set(),
            {"b1", "b2", "b3", "b4"},
            [(tp("b1"), tp("b2")), (tp("b3"), tp("b4"))],
        )
        n = cob0_morphism(
            {"b1", "b2", "b3", "b4"},
            set(),
            [(sp("b2"), sp("b3")), (sp("b4"), sp("b1"))],
        )
        composite = cob0_compose(m, n)
        assert composite.circles == 1
        assert composite.pairs == frozenset()
        report = check_functoriality(m, n)
        assert report.passed
        assert report.details["measure_unoriented"] == "1"
        assert report.details["measure_directed"] == "2"


class TestFaithfulness:
    def test_six_points_two_circles(self):
        report = check_faithfulness({"a1", "a2", "a3"}, {"b1", "b2", "b3"}, 2)
        assert report.passed
        assert report.details["hom_size"] == 45
        assert report.details["distinct_images"] == 45
        assert report.details["plain_functor_witness"] is True

    def test_two_points_zero_circles(self):
        report = check_faithfulness({"a"}, {"b"}, 0)
        assert report.passed
        assert report.details["hom_size"] == 1

    def test_plain_functor_collapses_circle_counts(self):
        g2 = functor_bar(three_strand_cobordism(2))
        g0 = functor_bar(three_strand_cobordism(0))
        assert g2.graph == g0.graph
        assert g2.wager != g0.wager
