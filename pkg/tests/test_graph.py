import pytest

from hedgecut import (
    GraphError,
    HedgeGraph,
    build_graph,
    degree_summary,
    graph_rank_nullity,
    hedge_degree_summary,
    hedge_view,
    is_connected,
    label_degree,
    remove_hedges,
)
from hedgecut.graph import identity_origin


class TestBuildGraph:
    def test_triangle(self, triangle):
        assert triangle.n == 3
        assert triangle.m == 3
        assert triangle.labels == ("a", "b", "c")

    def test_labels_interned_in_first_appearance_order(self, c4alt):
        assert c4alt.labels == ("a", "b")
        assert c4alt.edges == ((0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1))

    def test_identity_origin(self, c4alt):
        assert c4alt.origin_map == identity_origin(4)

    def test_rejects_loop(self):
        with pytest.raises(GraphError, match="loop"):
            build_graph(2, [(0, 0, "a")])

    def test_rejects_duplicate_pair_even_with_other_label(self):
        with pytest.raises(GraphError, match="duplicate"):
            build_graph(2, [(0, 1, "a"), (1, 0, "b")])

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(GraphError, match="out of range"):
            build_graph(2, [(0, 2, "a")])

    def test_rejects_empty_edge_list_with_vertices(self):
        with pytest.raises(GraphError, match="empty edge list"):
            build_graph(2, [])

    def test_rejects_bad_label_token(self):
        with pytest.raises(GraphError):
            build_graph(2, [(0, 1, "has space")])

    def test_single_vertex_no_edges_allowed(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.m == 0 and g.labels == ()

    def test_disconnected_input_accepted(self):
        g = build_graph(4, [(0, 1, "a"), (2, 3, "b")])
        assert not is_connected(g)

    def test_value_type_rejects_unused_label(self):
        with pytest.raises(GraphError, match="at least one edge"):
            HedgeGraph(2, ((0, 1, 0),), ("a", "b"), identity_origin(2))

    def test_label_lookup(self, c4alt):
        assert c4alt.label_id("b") == 1
        assert c4alt.label_id(0) == 0
        assert c4alt.label_name(1) == "b"
        with pytest.raises(GraphError, match="unknown label"):
            c4alt.label_id("zzz")


class TestHedgeView:
    def test_c4alt_hedge_a(self, c4alt):
        view = hedge_view(c4alt, "a")
        assert view.span == 2
        assert view.rank == 2
        assert view.nullity == 0
        assert view.vertex_set == frozenset(range(4))
        assert view.components == (frozenset({0, 1}), frozenset({2, 3}))

    def test_triangle_single_edge_hedge(self, triangle):
        view = hedge_view(triangle, "a")
        assert (view.span, view.rank, view.nullity) == (1, 1, 0)

    def test_single_label_connected_graph(self, single_label_path):
        view = hedge_view(single_label_path, "s")
        assert view.span == 1
        assert view.rank == single_label_path.n - 1

    def test_components_ordered_by_min_vertex(self):
        g = build_graph(6, [(4, 5, "a"), (0, 1, "a"), (2, 3, "b")])
        view = hedge_view(g, "a")
        assert view.components == (frozenset({0, 1}), frozenset({4, 5}))

    def test_loop_vertex_is_singleton_component(self, c4alt):
        # loops connect nothing: a one-loop hedge has rank 0
        loopy = HedgeGraph(2, ((0, 0, 0), (0, 1, 1)), ("x", "y"), identity_origin(2))
        view = hedge_view(loopy, "x")
        assert view.components == (frozenset({0}),)
        assert view.rank == 0
        assert view.nullity == 1


class TestRankNullity:
    def test_connected_cycle(self, c4alt):
        assert graph_rank_nullity(c4alt) == (3, 1)

    def test_triangle(self, triangle):
        assert graph_rank_nullity(triangle) == (2, 1)

    def test_two_disjoint_edges(self):
        g = build_graph(4, [(0, 1, "a"), (2, 3, "b")])
        assert graph_rank_nullity(g) == (2, 0)


class TestLabelDegrees:
    def test_c4alt(self, c4alt):
        assert label_degree(c4alt, 0) == 2
        assert degree_summary(c4alt) == (2, 2, 8)

    def test_p3(self, p3):
        assert degree_summary(p3) == (1, 2, 4)

    def test_triangle_vertexwise(self, triangle):
        assert all(label_degree(triangle, v) == 2 for v in range(3))

    def test_single_label_star(self):
        # the center sees one distinct label, not three
        g = build_graph(4, [(0, 1, "s"), (0, 2, "s"), (0, 3, "s")])
        assert degree_summary(g) == (1, 1, 4)

    def test_rainbow_star(self):
        g = build_graph(4, [(0, 1, "a"), (0, 2, "b"), (0, 3, "c")])
        assert degree_summary(g) == (1, 3, 6)

    def test_loop_counts_its_label_once(self):
        g = HedgeGraph(2, ((0, 0, 0), (0, 1, 0)), ("c",), identity_origin(2))
        assert label_degree(g, 0) == 1

    def test_out_of_range(self, p3):
        with pytest.raises(GraphError):
            label_degree(p3, 3)


class TestHedgeDegreeSummary:
    def test_c4alt_hedge_a(self, c4alt):
        assert hedge_degree_summary(c4alt, "a") == (2, 2, 8)

    def test_p3_hedge_a(self, p3):
        assert hedge_degree_summary(p3, "a") == (1, 2, 3)

    def test_triangle_hedge_a(self, triangle):
        assert hedge_degree_summary(triangle, "a") == (2, 2, 4)


class TestRemoveHedges:
    def test_c4alt_minus_a(self, c4alt):
        g = remove_hedges(c4alt, ["a"])
        assert g.m == 2
        assert g.labels == ("b",)
        assert not is_connected(g)

    def test_triangle_minus_two(self, triangle):
        g = remove_hedges(triangle, ["a", "b"])
        assert g.m == 1
        assert not is_connected(g)

    def test_remove_nothing_is_identity(self, c4alt):
        assert remove_hedges(c4alt, []) is c4alt

    def test_remove_all_labels_leaves_isolated_vertices(self, triangle):
        g = remove_hedges(triangle, ["a", "b", "c"])
        assert g.m == 0
        assert g.n == 3
        assert g.labels == ()

    def test_unknown_label(self, triangle):
        with pytest.raises(GraphError, match="unknown label"):
            remove_hedges(triangle, ["zzz"])


class TestIsConnected:
    def test_single_vertex(self):
        assert is_connected(build_graph(1, []))

    def test_c4alt(self, c4alt):
        assert is_connected(c4alt)

    def test_after_removal(self, c4alt):
        assert not is_connected(remove_hedges(c4alt, ["a"]))
