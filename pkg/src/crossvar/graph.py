"""Immutable simple undirected graphs with sorted adjacency lists.

All aggregate quantities are kept as exact integers.  Instead of the mean
of squared degrees we carry its integer numerator ``sum(k**2)`` so that no
rounding can ever occur; every downstream formula is stated in that integer
form.
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EdgeListParseError, ValidationError


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency lists are strictly increasing tuples; the structure is
    immutable after construction and safe to share across threads.
    """

    __slots__ = ("n", "m", "adjacency", "degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValidationError("vertex count must be non-negative")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if v not in neighbor_sets[u]:
                neighbor_sets[u].add(v)
                neighbor_sets[v].add(u)
                m += 1
        self.n = n
        self.m = m
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        self.degrees: tuple[int, ...] = tuple(len(s) for s in neighbor_sets)

    @classmethod
    def from_edges(cls, edges: Sequence[tuple[int, int]], n: int | None = None) -> "Graph":
        """Build a graph, inferring ``n`` from the maximum vertex id if omitted."""
        edges = list(edges)
        if n is None:
            n = 1 + max((max(u, v) for u, v in edges), default=-1)
        return cls(n, edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def adjacent(self, u: int, v: int) -> bool:
        """Edge test by binary search of the sorted adjacency list."""
        adj = self.adjacency[u]
        i = bisect_left(adj, v)
        return i < len(adj) and adj[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield u, v

    def is_forest(self) -> bool:
        """Acyclicity test by union-find over the edges."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges():
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeAggregates:
    """Degree-based sums every fast algorithm needs.

    ``mmt2``/``mmt3`` are the integer sums of squared/cubed degrees,
    ``xi[s]`` is the sum of the degrees of the neighbors of ``s`` and
    ``psi`` is the sum over edges of the product of endpoint degrees.
    """

    mmt2: int
    mmt3: int
    xi: tuple[int, ...]
    psi: int


def degree_aggregates(g: Graph) -> DegreeAggregates:
    k = g.degrees
    mmt2 = sum(d * d for d in k)
    mmt3 = sum(d * d * d for d in k)
    xi = tuple(sum(k[t] for t in g.adjacency[s]) for s in range(g.n))
    psi = sum(k[u] * k[v] for u, v in g.edges())
    # double-counting identity: 2*psi == sum_s k_s * xi(s)
    assert 2 * psi == sum(k[s] * xi[s] for s in range(g.n))
    return DegreeAggregates(mmt2=mmt2, mmt3=mmt3, xi=xi, psi=psi)


def compute_q(g: Graph) -> int:
    """Number of pairs of vertex-disjoint ("independent") edges."""
    mmt2 = sum(d * d for d in g.degrees)
    q2 = g.m * (g.m + 1) - mmt2
    assert q2 % 2 == 0 and q2 >= 0
    return q2 // 2


def compute_K(g: Graph, agg: DegreeAggregates) -> int:
    """Sum of the four endpoint degrees over all independent edge pairs."""
    return (g.m + 1) * agg.mmt2 - agg.mmt3 - 2 * agg.psi


def compute_phi1(g: Graph, agg: DegreeAggregates) -> int:
    """Sum over independent edge pairs of ``k_s*k_t + k_u*k_v``."""
    k = g.degrees
    return (g.m + 1) * agg.psi - sum(
        k[u] * k[v] * (k[u] + k[v]) for u, v in g.edges()
    )


def compute_phi2(g: Graph, agg: DegreeAggregates) -> int:
    """Sum over independent edge pairs of ``(k_s + k_t)(k_u + k_v)``."""
    k, xi = g.degrees, agg.xi
    total = sum(
        (k[u] + k[v])
        * (agg.mmt2 - xi[u] - xi[v] - k[u] * (k[u] - 1) - k[v] * (k[v] - 1))
        for u, v in g.edges()
    )
    assert total % 2 == 0
    return total // 2


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    Lines starting with ``#`` are comments; an optional first directive
    ``n=<int>`` forces the vertex count (for trailing isolated vertices);
    every other non-blank line is ``u v``.  Duplicate edges are collapsed
    with a warning, self-loops are rejected.
    """
    edges: list[tuple[int, int]] = []
    forced_n: int | None = None
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    saw_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            if saw_data or forced_n is not None:
                raise EdgeListParseError("n= directive must come first", lineno)
            try:
                forced_n = int(line[2:])
            except ValueError:
                raise EdgeListParseError(f"bad n= directive {line!r}", lineno) from None
            if forced_n < 0:
                raise EdgeListParseError("n= must be non-negative", lineno)
            continue
        saw_data = True
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise ValidationError(f"self-loop '{u} {u}' at line {lineno}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)
    if duplicates:
        warnings.warn(f"collapsed {duplicates} duplicate edge(s)", stacklevel=2)
    n = 1 + max((v for e in edges for v in e), default=-1)
    if forced_n is not None:
        if forced_n < n:
            raise ValidationError(f"n={forced_n} smaller than largest vertex id {n - 1}")
        n = forced_n
    return Graph(n, edges)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
