"""Fast subgraph counts and Q-weighted sums.

Every count here is a single traversal of the edges using sorted-list
merges for neighborhood intersections; each has a brute-force counterpart
in :mod:`crossvar.brute` that serves as its oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

from .errors import ValidationError
from .graph import (
    DegreeAggregates,
    Graph,
    compute_K,
    compute_phi1,
    compute_phi2,
    compute_q,
    degree_aggregates,
)


@dataclass(frozen=True)
class NeighborIntersection:
    """Size of a common neighborhood and the degree sum over it."""

    size: int
    degree_sum: int


@dataclass(frozen=True)
class CensusReport:
    """All aggregate quantities feeding the crossing-variance formula."""

    q: int
    K: int
    phi1: int
    phi2: int
    lambda1: int
    lambda2: int
    mu1: int
    mu2: int
    nP4: int
    nP5: int
    nC3: int
    nC4: int
    nPaw: int
    nC3L2: int

    def to_json_dict(self) -> dict:
        d = asdict(self)
        # stable external field set
        return {
            key: d[key]
            for key in (
                "q", "K", "phi1", "phi2", "lambda1", "lambda2",
                "nP4", "nP5", "nC4", "nPaw", "nC3L2",
            )
        }


def _merge_intersection(a: tuple[int, ...], b: tuple[int, ...], degrees) -> tuple[int, int]:
    """Linear merge of two strictly increasing lists: (size, degree sum)."""
    i = j = 0
    size = deg = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            size += 1
            deg += degrees[x]
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return size, deg


def neighbor_intersection(g: Graph, u: int, v: int) -> NeighborIntersection:
    """``|c(u,v)|`` and ``S_{u,v}`` in O(k_u + k_v) by sorted-list merge."""
    if u == v:
        raise ValidationError("neighbor_intersection requires two distinct vertices")
    size, deg = _merge_intersection(g.adjacency[u], g.adjacency[v], g.degrees)
    return NeighborIntersection(size=size, degree_sum=deg)


def count_paths4(g: Graph, agg: DegreeAggregates | None = None) -> int:
    """Number of subgraphs isomorphic to the 4-vertex path."""
    agg = agg or degree_aggregates(g)
    mu1_twice = 0
    mu2 = 0
    for u, v in g.edges():
        mu1_twice += agg.xi[u] + agg.xi[v]
        mu2 += _merge_intersection(g.adjacency[u], g.adjacency[v], g.degrees)[0]
    assert mu1_twice % 2 == 0
    return g.m - agg.mmt2 + mu1_twice // 2 - mu2


def count_paths5(g: Graph) -> int:
    """Number of subgraphs isomorphic to the 5-vertex path."""
    k = g.degrees
    total = 0
    for s, t in g.edges():
        for a, b in ((s, t), (t, s)):
            # g1(a, b): walks b-a-u extended on both sides
            for u in g.adjacency[a]:
                if u == b:
                    continue
                aub = 1 if g.adjacent(u, b) else 0
                c_bu = _merge_intersection(g.adjacency[b], g.adjacency[u], k)[0]
                total += (k[b] - 1 - aub) * (k[u] - 1 - aub) + 1 - c_bu
    assert total % 2 == 0
    return total // 2


def count_cycles4(g: Graph) -> int:
    """Number of 4-cycles."""
    total = 0
    for s, t in g.edges():
        for pivot, other in ((s, t), (t, s)):
            # u ranges over the neighbors of `other`, intersected against `pivot`
            for u in g.adjacency[other]:
                if u == pivot:
                    continue
                total += _merge_intersection(g.adjacency[pivot], g.adjacency[u], g.degrees)[0] - 1
    # the double loop above visits each ordered (edge, u) once per direction;
    # each 4-cycle is found 8 times in total
    assert total % 8 == 0
    return total // 8


def count_paw(g: Graph) -> int:
    """Number of subgraphs isomorphic to the paw (triangle plus pendant edge)."""
    total = 0
    for u, v in g.edges():
        size, deg = _merge_intersection(g.adjacency[u], g.adjacency[v], g.degrees)
        total += deg - 2 * size
    return total


def count_c3l2(g: Graph) -> int:
    """Number of subgraphs isomorphic to a triangle plus one disjoint edge."""
    total = 0
    k = g.degrees
    for u, v in g.edges():
        size, deg = _merge_intersection(g.adjacency[u], g.adjacency[v], k)
        total += (g.m - k[u] - k[v] + 3) * size - deg
    assert total % 3 == 0
    return total // 3


def compute_lambda1(g: Graph, agg: DegreeAggregates | None = None) -> int:
    """Q-sum of degrees at the far ends of 4-paths, via the per-edge form."""
    agg = agg or degree_aggregates(g)
    k, xi = g.degrees, agg.xi
    total = 0
    for u, v in g.edges():
        s_uv = _merge_intersection(g.adjacency[u], g.adjacency[v], k)[1]
        total += (k[v] - 1) * (xi[u] - k[v]) + (k[u] - 1) * (xi[v] - k[u]) - 2 * s_uv
    return total


def compute_lambda2(g: Graph, agg: DegreeAggregates | None = None) -> int:
    """Q-sum of all four degrees of 4-paths; builds on compute_lambda1."""
    agg = agg or degree_aggregates(g)
    k = g.degrees
    extra = 0
    for u, v in g.edges():
        c_uv = _merge_intersection(g.adjacency[u], g.adjacency[v], k)[0]
        extra += (k[u] + k[v]) * ((k[u] - 1) * (k[v] - 1) - c_uv)
    return compute_lambda1(g, agg) + extra


def fast_census(g: Graph) -> CensusReport:
    """Compute the full census in a single pass over the edges."""
    agg = degree_aggregates(g)
    k, xi = g.degrees, agg.xi
    n_p5_twice = 0
    n_c4_scaled = 0
    n_paw = 0
    n_c3l2_tripled = 0
    mu1_twice = 0
    mu2 = 0
    lam1 = 0
    lam2_extra = 0
    phi2_twice = 0
    phi1 = 0
    for s, t in g.edges():
        for u1 in g.adjacency[s]:
            if u1 == t:
                continue
            a_tu = 1 if g.adjacent(t, u1) else 0
            c_tu = _merge_intersection(g.adjacency[t], g.adjacency[u1], k)[0]
            n_p5_twice += (k[t] - 1 - a_tu) * (k[u1] - 1 - a_tu) + 1 - c_tu
        for u2 in g.adjacency[t]:
            if u2 == s:
                continue
            a_su = 1 if g.adjacent(s, u2) else 0
            c_su = _merge_intersection(g.adjacency[s], g.adjacency[u2], k)[0]
            n_p5_twice += (k[s] - 1 - a_su) * (k[u2] - 1 - a_su) + 1 - c_su
            n_c4_scaled += c_su - 1
        c_st, s_st = _merge_intersection(g.adjacency[s], g.adjacency[t], k)
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
    assert mu1_twice % 2 == 0 and phi2_twice % 2 == 0
    assert n_p5_twice % 2 == 0 and n_c4_scaled % 4 == 0
    assert n_c3l2_tripled % 3 == 0 and mu2 % 3 == 0
    mu1 = mu1_twice // 2
    return CensusReport(
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
