"""Graph construction, parsing, and the degree-sum aggregates."""

import pytest
from hypothesis import given, strategies as st

from crossvar.brute import independent_edge_pairs
from crossvar.errors import EdgeListParseError, ValidationError
from crossvar.graph import (
    Graph,
    compute_K,
    compute_phi1,
    compute_phi2,
    compute_q,
    degree_aggregates,
    parse_edge_list,
)


def random_graph_strategy(max_n=9):
    """Random small graphs as (n, edge subset)."""
    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=2 * n,
            ),
        )
    )


class TestGraph:
    def test_adjacency_sorted_and_deduplicated(self):
        g = Graph(4, [(3, 0), (0, 3), (0, 1), (1, 0), (2, 1)])
        assert g.m == 3
        assert g.adjacency[0] == (1, 3)
        assert g.degrees == (2, 2, 1, 1)

    def test_edges_round_trip(self):
        edges = [(0, 1), (1, 2), (0, 3)]
        g = Graph.from_edges(edges)
        assert sorted(g.edges()) == sorted(edges)

    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError):
            Graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValidationError):
            Graph(2, [(0, 2)])

    def test_adjacent(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert g.adjacent(0, 1) and g.adjacent(1, 0)
        assert not g.adjacent(0, 2)

    @pytest.mark.parametrize("edges,expected", [
        ([(0, 1), (1, 2)], True),
        ([(0, 1), (1, 2), (2, 0)], False),
        ([], True),
    ])
    def test_is_forest(self, edges, expected):
        g = Graph.from_edges(edges, n=3)
        assert g.is_forest() is expected


class TestParse:
    def test_basic(self):
        g = parse_edge_list("# a comment\n0 1\n1 2\n")
        assert (g.n, g.m) == (3, 2)

    def test_n_directive(self):
        g = parse_edge_list("n=5\n0 1\n")
        assert g.n == 5 and g.degrees[4] == 0

    def test_n_directive_not_first(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list("0 1\nn=5\n")

    def test_malformed_line_reports_number(self):
        with pytest.raises(EdgeListParseError) as info:
            parse_edge_list("0 1\nnot an edge\n")
        assert info.value.line_number == 2

    def test_duplicate_edges_warn(self):
        with pytest.warns(UserWarning):
            g = parse_edge_list("0 1\n1 0\n")
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError):
            parse_edge_list("2 2\n")

    def test_empty_graph(self):
        g = parse_edge_list("n=3\n")
        assert (g.n, g.m) == (3, 0)


class TestAggregates:
    @given(random_graph_strategy())
    def test_q_counts_independent_pairs(self, data):
        n, edges = data
        g = Graph(n, edges)
        assert compute_q(g) == len(independent_edge_pairs(g))

    @given(random_graph_strategy())
    def test_K_phi_match_definitions(self, data):
        n, edges = data
        g = Graph(n, edges)
        agg = degree_aggregates(g)
        k = g.degrees
        pairs = independent_edge_pairs(g)
        assert compute_K(g, agg) == sum(
            k[s] + k[t] + k[u] + k[v] for (s, t), (u, v) in pairs
        )
        assert compute_phi1(g, agg) == sum(
            k[s] * k[t] + k[u] * k[v] for (s, t), (u, v) in pairs
        )
        assert compute_phi2(g, agg) == sum(
            (k[s] + k[t]) * (k[u] + k[v]) for (s, t), (u, v) in pairs
        )

    def test_star_has_no_independent_pairs(self):
        g = Graph.from_edges([(0, i) for i in range(1, 8)])
        assert compute_q(g) == 0
