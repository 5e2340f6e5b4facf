"""Variance of the number of edge crossings under a random layout.

Several routes compute the same exact rational value:

* ``variance_naive``: classify all pairs of independent edge pairs.
* ``variance_general`` / ``variance_general_reuse``: one pass over the
  edges building the census, then a grouped closed form.
* ``variance_forest``: linear-time specialization for acyclic graphs.
* ``variance_rla_closed``: single closed form for the uniform random
  linear arrangement layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .census import CensusReport, fast_census, neighbor_intersection
from .errors import NotAForestError
from .frequencies import (
    CONTRIBUTING_TYPES,
    ExpectationTable,
    FrequencyVector,
    builtin_rla_table,
    frequencies_brute,
)
from .graph import Graph, compute_q, degree_aggregates


def format_rational(x: Fraction) -> str:
    """Render as ``p`` or ``p/q``."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_decimal(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering with the given number of significant digits."""
    if x == 0:
        return "0"
    return f"{float(x):.{digits}g}"


@dataclass(frozen=True)
class VarianceResult:
    """Exact first and second moments of the crossing count."""

    layout: str
    algorithm: str
    q: int
    expectation: Fraction
    variance: Fraction
    hash_table_size: int | None = None

    def to_json_dict(self) -> dict:
        d = {
            "layout": self.layout,
            "algorithm": self.algorithm,
            "q": self.q,
            "expectation": format_rational(self.expectation),
            "expectation_decimal": rational_decimal(self.expectation),
            "variance": format_rational(self.variance),
            "variance_decimal": rational_decimal(self.variance),
        }
        if self.hash_table_size is not None:
            d["hash_table_size"] = self.hash_table_size
        return d


def variance_from_frequencies(
    freq: FrequencyVector, table: ExpectationTable | None = None
) -> Fraction:
    """Inner product of type frequencies with the layout expectations."""
    table = table or builtin_rla_table()
    return sum(
        (freq.counts[code] * table.gamma[code] for code in CONTRIBUTING_TYPES),
        start=Fraction(0),
    )


def _result(
    g: Graph, variance: Fraction, algorithm: str, table: ExpectationTable,
    hash_table_size: int | None = None,
) -> VarianceResult:
    q = compute_q(g)
    return VarianceResult(
        layout=table.name,
        algorithm=algorithm,
        q=q,
        expectation=q * table.delta,
        variance=variance,
        hash_table_size=hash_table_size,
    )


def variance_naive(g: Graph, table: ExpectationTable | None = None) -> VarianceResult:
    """Reference route: classify every ordered pair of Q elements."""
    table = table or builtin_rla_table()
    freq = frequencies_brute(g, pair_budget=None)
    return _result(g, variance_from_frequencies(freq, table), "naive", table)


def _variance_from_census(
    c: CensusReport, m: int, table: ExpectationTable
) -> Fraction:
    """Grouped closed form: census quantities weighted by expectations."""
    e = table.gamma
    return (
        c.q * (e["24"] - 4 * e["13"] + 2 * (m + 2) * e["12"] + 2 * e["021"] + 4 * e["022"])
        + c.K * (e["13"] - 2 * e["12"] - e["021"] - 2 * e["022"])
        + c.nP4 * (-2 * e["13"] + 2 * e["12"] - 2 * e["03"] + (m + 5) * e["021"] + 5 * e["022"])
        + c.nC4 * (2 * e["04"] - 8 * e["03"] + 8 * e["021"] + 4 * e["022"])
        + c.nPaw * (-2 * e["03"] + 3 * e["021"] + 2 * e["022"])
        + c.lambda1 * (e["03"] - e["021"])
        - c.lambda2 * (e["021"] + e["022"])
        - c.nP5 * e["022"]
        - 3 * c.nC3L2 * e["021"]
        + c.phi1 * e["021"]
        + c.phi2 * e["022"]
    )


def variance_general(g: Graph, table: ExpectationTable | None = None) -> VarianceResult:
    """General-graph route: single edge pass, no memoization."""
    table = table or builtin_rla_table()
    c = fast_census(g)
    return _result(g, _variance_from_census(c, g.m, table), "general", table)


def variance_general_reuse(
    g: Graph, table: ExpectationTable | None = None
) -> VarianceResult:
    """General-graph route caching neighborhood intersections.

    Intersections are keyed by the unordered vertex pair; the same pair is
    requested once per triangle corner and once per shared neighbor, so on
    dense graphs the cache removes most of the merge work.
    """
    table = table or builtin_rla_table()
    agg = degree_aggregates(g)
    k, xi = g.degrees, agg.xi
    cache: dict[tuple[int, int], tuple[int, int]] = {}

    def inter(a: int, b: int) -> tuple[int, int]:
        key = (a, b) if a < b else (b, a)
        hit = cache.get(key)
        if hit is None:
            ni = neighbor_intersection(g, a, b)
            hit = (ni.size, ni.degree_sum)
            cache[key] = hit
        return hit

    n_p5_twice = n_c4_scaled = n_paw = n_c3l2_tripled = 0
    mu1_twice = mu2 = lam1 = lam2_extra = 0
    phi2_twice = phi1 = 0
    for s, t in g.edges():
        for u1 in g.adjacency[s]:
            if u1 == t:
                continue
            a_tu = 1 if g.adjacent(t, u1) else 0
            n_p5_twice += (k[t] - 1 - a_tu) * (k[u1] - 1 - a_tu) + 1 - inter(t, u1)[0]
        for u2 in g.adjacency[t]:
            if u2 == s:
                continue
            a_su = 1 if g.adjacent(s, u2) else 0
            c_su = inter(s, u2)[0]
            n_p5_twice += (k[s] - 1 - a_su) * (k[u2] - 1 - a_su) + 1 - c_su
            n_c4_scaled += c_su - 1
        c_st, s_st = inter(s, t)
        n_paw += s_st - 2 * c_st
        n_c3l2_tripled += (g.m - k[s] - k[t] + 3) * c_st - s_st
        phi1 -= k[s] * k[t] * (k[s] + k[t])
        phi2_twice += (k[s] + k[t]) * (
            agg.mmt2 - xi[s] - xi[t] - k[s] * (k[s] - 1) - k[t] * (k[t] - 1)
        )
        mu1_twice += xi[s] + xi[t]
        mu2 += c_st
        lam1 += (k[t] - 1) * (xi[s] - k[t]) + (k[s] - 1) * (xi[t] - k[s]) - 2 * s_st
        lam2_extra += (k[s] + k[t]) * ((k[s] - 1) * (k[t] - 1) - c_st)
    mu1 = mu1_twice // 2
    from .graph import compute_K

    c = CensusReport(
        q=compute_q(g),
        K=compute_K(g, agg),
        phi1=phi1 + (g.m + 1) * agg.psi,
        phi2=phi2_twice // 2,
        lambda1=lam1,
        lambda2=lam1 + lam2_extra,
        mu1=mu1,
        mu2=mu2,
        nP4=g.m - agg.mmt2 + mu1 - mu2,
        nP5=n_p5_twice // 2,
        nC3=mu2 // 3,
        nC4=n_c4_scaled // 4,
        nPaw=n_paw,
        nC3L2=n_c3l2_tripled // 3,
    )
    return _result(
        g, _variance_from_census(c, g.m, table), "reuse", table,
        hash_table_size=len(cache),
    )


def forest_census(g: Graph) -> CensusReport:
    """Census of an acyclic graph in time linear in the vertex count.

    All triangle-bearing quantities vanish, neighborhood intersections are
    empty, and the path counts collapse to degree expressions.
    """
    if not g.is_forest():
        raise NotAForestError("graph contains a cycle")
    agg = degree_aggregates(g)
    k, xi = g.degrees, agg.xi
    n_p4 = n_p5_twice = lam1 = lam2_extra = 0
    phi2_twice = phi1 = mu1_twice = 0
    for s, t in g.edges():
        n_p4 += (k[s] - 1) * (k[t] - 1)
        # paths of 5 vertices centered on this edge, both orientations
        n_p5_twice += (k[t] - 1) * (xi[s] - k[t] - k[s] + 1)
        n_p5_twice += (k[s] - 1) * (xi[t] - k[s] - k[t] + 1)
        lam1 += (k[t] - 1) * (xi[s] - k[t]) + (k[s] - 1) * (xi[t] - k[s])
        lam2_extra += (k[s] + k[t]) * (k[s] - 1) * (k[t] - 1)
        phi1 -= k[s] * k[t] * (k[s] + k[t])
        phi2_twice += (k[s] + k[t]) * (
            agg.mmt2 - xi[s] - xi[t] - k[s] * (k[s] - 1) - k[t] * (k[t] - 1)
        )
        mu1_twice += xi[s] + xi[t]
    assert n_p5_twice % 2 == 0 and phi2_twice % 2 == 0 and mu1_twice % 2 == 0
    from .graph import compute_K

    return CensusReport(
        q=compute_q(g),
        K=compute_K(g, agg),
        phi1=phi1 + (g.m + 1) * agg.psi,
        phi2=phi2_twice // 2,
        lambda1=lam1,
        lambda2=lam1 + lam2_extra,
        mu1=mu1_twice // 2,
        mu2=0,
        nP4=n_p4,
        nP5=n_p5_twice // 2,
        nC3=0,
        nC4=0,
        nPaw=0,
        nC3L2=0,
    )


def variance_forest(g: Graph, table: ExpectationTable | None = None) -> VarianceResult:
    """Linear-time route, valid only for acyclic graphs."""
    table = table or builtin_rla_table()
    c = forest_census(g)
    return _result(g, _variance_from_census(c, g.m, table), "forest", table)


def variance_rla_closed(g: Graph) -> VarianceResult:
    """Uniform random linear arrangements via one integer closed form."""
    c = fast_census(g)
    m = g.m
    scaled = (
        8 * (m + 2) * c.q
        + 2 * c.K
        - (2 * m + 7) * c.nP4
        - 12 * c.nC4
        + 6 * c.nPaw
        - c.nP5
        + 6 * c.nC3L2
        - 3 * c.lambda1
        + c.lambda2
        - 2 * c.phi1
        + c.phi2
    )
    return _result(g, Fraction(scaled, 180), "rla-closed", builtin_rla_table())


ALGORITHMS = ("naive", "general", "reuse", "forest", "rla-closed", "auto")


def select_algorithm(g: Graph, requested: str = "auto") -> str:
    if requested not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {requested!r}")
    if requested != "auto":
        return requested
    return "forest" if g.is_forest() else "reuse"


def compute_variance(
    g: Graph, algorithm: str = "auto", table: ExpectationTable | None = None
) -> VarianceResult:
    """Dispatch to one of the variance routes by name."""
    algorithm = select_algorithm(g, algorithm)
    if algorithm == "rla-closed":
        if table is not None and table.name != "rla":
            raise ValueError("the closed form is specific to the rla layout")
        return variance_rla_closed(g)
    fn = {
        "naive": variance_naive,
        "general": variance_general,
        "reuse": variance_general_reuse,
        "forest": variance_forest,
    }[algorithm]
    return fn(g, table)
