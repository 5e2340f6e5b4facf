"""Brute-force oracles: Q enumeration, pattern counting, exhaustive census.

Everything here is deliberately independent of the fast edge-traversal
forms in :mod:`crossvar.census`: counts come from explicit enumeration of
edge pairs, walks and vertex subsets, plus naive adjacency-matrix powers
as an extra cross-check.
"""

from __future__ import annotations

from itertools import combinations

from .census import CensusReport
from .errors import InternalInconsistencyError, OracleBudgetError
from .graph import Graph

DEFAULT_ORACLE_LIMIT = 12


def independent_edge_pairs(g: Graph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All unordered pairs of vertex-disjoint edges, each edge as (u, v), u < v."""
    edges = list(g.edges())
    pairs = []
    for (e1, e2) in combinations(edges, 2):
        s, t = e1
        u, v = e2
        if s != u and s != v and t != u and t != v:
            pairs.append((e1, e2))
    return pairs


def count_simple_paths(g: Graph, length: int) -> int:
    """Number of subgraphs isomorphic to the path on `length` vertices.

    Enumerates vertex sequences by DFS and halves (each path is walked
    from both ends).
    """
    if length < 2:
        raise ValueError("paths need at least 2 vertices")
    total = 0

    def extend(walk: list[int], used: set[int]):
        nonlocal total
        if len(walk) == length:
            total += 1
            return
        for w in g.adjacency[walk[-1]]:
            if w not in used:
                used.add(w)
                walk.append(w)
                extend(walk, used)
                walk.pop()
                used.remove(w)

    for start in range(g.n):
        extend([start], {start})
    assert total % 2 == 0
    return total // 2


def count_triangles_brute(g: Graph) -> int:
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.adjacent(a, b) and g.adjacent(a, c) and g.adjacent(b, c)
    )


def count_cycles4_brute(g: Graph) -> int:
    """4-cycles by checking the three pairings of every 4-subset."""
    total = 0
    for a, b, c, d in combinations(range(g.n), 4):
        # a cycle visiting all four vertices exists for each pairing of
        # "opposite" vertices whose four side edges are present
        for p, q, r, s in ((a, b, c, d), (a, c, b, d), (a, d, b, c)):
            # cycle p-r-q-s with diagonals (p,q) and (r,s)
            if g.adjacent(p, r) and g.adjacent(r, q) and g.adjacent(q, s) and g.adjacent(s, p):
                total += 1
    return total


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [
        t
        for t in combinations(range(g.n), 3)
        if g.adjacent(t[0], t[1]) and g.adjacent(t[0], t[2]) and g.adjacent(t[1], t[2])
    ]


def count_paw_brute(g: Graph) -> int:
    """Paws as (triangle, pendant edge sharing exactly one vertex)."""
    total = 0
    for tri in _triangles(g):
        tri_set = set(tri)
        for u, v in g.edges():
            if (u in tri_set) != (v in tri_set):
                total += 1
    return total


def count_c3l2_brute(g: Graph) -> int:
    """Triangle plus a fully disjoint edge."""
    total = 0
    for tri in _triangles(g):
        tri_set = set(tri)
        for u, v in g.edges():
            if u not in tri_set and v not in tri_set:
                total += 1
    return total


def _adjacency_matrix(g: Graph) -> list[list[int]]:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        a[u][v] = a[v][u] = 1
    return a


def _mat_mul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    n = len(x)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        xi = x[i]
        oi = out[i]
        for k in range(n):
            f = xi[k]
            if f:
                yk = y[k]
                for j in range(n):
                    oi[j] += f * yk[j]
    return out


def brute_census(g: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> CensusReport:
    """Every census field by exhaustive enumeration over Q and subsets.

    Also recomputes the path-4 and cycle-4 counts through naive adjacency
    matrix powers and fails loudly if any route disagrees.
    """
    if g.n > limit:
        raise OracleBudgetError(f"brute_census limited to n <= {limit} (got n={g.n})")
    k = g.degrees
    pairs = independent_edge_pairs(g)
    q = len(pairs)

    def adj(a, b):
        return 1 if g.adjacent(a, b) else 0

    K = phi1 = phi2 = lam1 = lam2 = 0
    for (s, t), (u, v) in pairs:
        K += k[s] + k[t] + k[u] + k[v]
        phi1 += k[s] * k[t] + k[u] * k[v]
        phi2 += (k[s] + k[t]) * (k[u] + k[v])
        lam1 += (
            adj(s, u) * (k[t] + k[v])
            + adj(s, v) * (k[t] + k[u])
            + adj(t, u) * (k[s] + k[v])
            + adj(t, v) * (k[s] + k[u])
        )
        lam2 += (adj(s, u) + adj(s, v) + adj(t, u) + adj(t, v)) * (
            k[s] + k[t] + k[u] + k[v]
        )

    xi = [sum(k[t] for t in g.adjacency[s]) for s in range(g.n)]
    mu1_twice = sum(xi[u] + xi[v] for u, v in g.edges())
    mu2 = sum(
        len(set(g.adjacency[u]) & set(g.adjacency[v])) for u, v in g.edges()
    )
    assert mu1_twice % 2 == 0

    n_p4 = count_simple_paths(g, 4)
    n_p5 = count_simple_paths(g, 5)
    n_c3 = count_triangles_brute(g)
    n_c4 = count_cycles4_brute(g)
    n_paw = count_paw_brute(g)
    n_c3l2 = count_c3l2_brute(g)

    # cross-checks via naive matrix powers
    mmt2 = sum(d * d for d in k)
    a1 = _adjacency_matrix(g)
    a2 = _mat_mul(a1, a1)
    a3 = _mat_mul(a2, a1)
    a4 = _mat_mul(a2, a2)
    m3 = sum(a3[s][t] for s in range(g.n) for t in range(s + 1, g.n))
    tr_a4 = sum(a4[i][i] for i in range(g.n))
    if n_p4 != m3 + g.m - mmt2:
        raise InternalInconsistencyError("path-4 count disagrees with matrix-power form")
    half_sum = sum(
        a3[s][t] - a1[s][t] * (2 * k[t] - 1)
        for s in range(g.n)
        for t in range(g.n)
        if s != t
    )
    if half_sum % 2 != 0 or n_p4 != half_sum // 2:
        raise InternalInconsistencyError("path-4 count disagrees with A^3 sum form")
    c4_scaled = tr_a4 + 4 * q - 2 * g.m * g.m
    if c4_scaled % 8 != 0 or n_c4 != c4_scaled // 8:
        raise InternalInconsistencyError("cycle-4 count disagrees with trace form")

    return CensusReport(
        q=q,
        K=K,
        phi1=phi1,
        phi2=phi2,
        lambda1=lam1,
        lambda2=lam2,
        mu1=mu1_twice // 2,
        mu2=mu2,
        nP4=n_p4,
        nP5=n_p5,
        nC3=n_c3,
        nC4=n_c4,
        nPaw=n_paw,
        nC3L2=n_c3l2,
    )
