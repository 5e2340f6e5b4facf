"""The variance routes: spot values, equality, dispatch, JSON rendering."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from crossvar.brute import count_triangles_brute
from crossvar.errors import NotAForestError
from crossvar.frequencies import builtin_rla_table
from crossvar.generators import (
    complete,
    complete_bipartite,
    cycle,
    erdos_renyi,
    one_regular,
    path,
    quasi_star,
    random_tree,
    star,
)
from crossvar.variance import (
    compute_variance,
    forest_census,
    format_rational,
    select_algorithm,
    variance_forest,
    variance_general,
    variance_general_reuse,
    variance_naive,
    variance_rla_closed,
)


class TestSpotValues:
    @pytest.mark.parametrize("g,expected", [
        (one_regular(4), Fraction(2, 9)),
        (cycle(4), Fraction(2, 9)),
        (path(4), Fraction(2, 9)),
        (star(6), Fraction(0)),
        (star(9), Fraction(0)),
        (complete(5), Fraction(0)),
        (complete_bipartite(4, 4), Fraction(144, 5)),
    ], ids=["2xL2", "C4", "P4", "S6", "S9", "K5", "K44"])
    def test_known_variances(self, g, expected):
        assert variance_general(g).variance == expected

    def test_expectation_is_q_third(self):
        g = cycle(7)
        r = variance_general(g)
        assert r.expectation == Fraction(r.q, 3)

    def test_complete_graph_variance_vanishes(self):
        # every 4-subset of K_n contributes exactly one crossing in any
        # arrangement, so C is constant
        for n in range(4, 8):
            assert variance_rla_closed(complete(n)).variance == 0


class TestRouteEquality:
    @pytest.mark.parametrize("seed", range(10))
    def test_er_graphs(self, seed):
        g = erdos_renyi(12, 0.35, seed=seed)
        reference = variance_naive(g).variance
        assert variance_general(g).variance == reference
        assert variance_general_reuse(g).variance == reference
        assert variance_rla_closed(g).variance == reference

    @pytest.mark.parametrize("n", [2, 5, 9, 13])
    def test_forest_route_on_trees(self, n):
        g = random_tree(n, seed=n)
        reference = variance_general(g).variance
        assert variance_forest(g).variance == reference

    def test_quasi_star(self):
        g = quasi_star(8)
        assert variance_forest(g).variance == variance_naive(g).variance


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_closed_form_times_180_is_integer(seed):
    g = erdos_renyi(10, 0.4, seed=seed)
    v = variance_rla_closed(g).variance
    assert (180 * v).denominator == 1
    assert v >= 0


class TestDispatch:
    def test_auto_picks_forest_on_trees(self):
        assert select_algorithm(random_tree(6, seed=1)) == "forest"

    def test_auto_picks_reuse_on_cyclic(self):
        assert select_algorithm(complete(4)) == "reuse"

    def test_forest_on_cyclic_fails(self):
        with pytest.raises(NotAForestError):
            compute_variance(complete(4), algorithm="forest")

    def test_unknown_algorithm(self):
        with pytest.raises(ValueError):
            compute_variance(path(4), algorithm="bogus")

    def test_closed_form_rejects_foreign_table(self):
        from crossvar.frequencies import ExpectationTable

        rla = builtin_rla_table()
        table = ExpectationTable(name="custom", delta=rla.delta, gamma=rla.gamma)
        with pytest.raises(ValueError):
            compute_variance(path(4), algorithm="rla-closed", table=table)


class TestForestCensus:
    def test_rejects_cycles(self):
        with pytest.raises(NotAForestError):
            forest_census(cycle(5))

    @pytest.mark.parametrize("n", [3, 6, 10])
    def test_matches_general_census_on_trees(self, n):
        from crossvar.census import fast_census

        g = random_tree(n, seed=2 * n)
        assert forest_census(g) == fast_census(g)


class TestReuse:
    def test_hash_table_bound(self):
        for seed in range(5):
            g = erdos_renyi(25, 0.3, seed=seed)
            r = variance_general_reuse(g)
            n_l3 = sum(d * (d - 1) // 2 for d in g.degrees)
            assert r.hash_table_size <= g.m + n_l3 - 3 * count_triangles_brute(g)

    def test_cached_intersections_sound(self):
        # reuse must match the cache-free route bit for bit
        g = erdos_renyi(15, 0.6, seed=9)
        assert variance_general_reuse(g).variance == variance_general(g).variance


class TestRendering:
    def test_format_rational(self):
        assert format_rational(Fraction(2, 9)) == "2/9"
        assert format_rational(Fraction(4)) == "4"
        assert format_rational(Fraction(0)) == "0"

    def test_json_round_trip(self):
        r = variance_general(cycle(4))
        payload = json.loads(json.dumps(r.to_json_dict()))
        assert payload["variance"] == "2/9"
        assert payload["expectation"] == "2/3"
        assert payload["algorithm"] == "general"

    def test_reuse_reports_hash_size(self):
        r = variance_general_reuse(cycle(4))
        assert "hash_table_size" in r.to_json_dict()


def test_degenerate_graphs_have_zero_variance():
    for g in (path(1), path(2), path(3), star(4)):
        r = compute_variance(g)
        assert r.variance == 0 and r.expectation == Fraction(r.q, 3)
