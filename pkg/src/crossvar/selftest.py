"""Built-in correctness suite over the standard family corpus.

The corpus and the two equality checks (three-way frequency agreement,
five-way variance agreement) are shared between the test suite and the
``selftest`` CLI command.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import generators as gen
from .frequencies import (
    CONTRIBUTING_TYPES,
    frequencies_brute,
    frequencies_from_census,
    frequencies_from_subgraph_counts,
)
from .census import fast_census
from .graph import Graph, compute_q
from .variance import (
    builtin_rla_table,
    variance_forest,
    variance_from_frequencies,
    variance_general,
    variance_general_reuse,
    variance_rla_closed,
)


def corpus(max_n: int = 12, er_seeds: int = 5, full: bool = True):
    """Yield (name, graph) over the standard test families.

    ``full`` includes the Erdos-Renyi ensemble and the free-tree sweep;
    ``max_n`` caps the deterministic families.
    """
    for n in range(2, min(max_n, 7) + 1):
        yield f"complete-{n}", gen.complete(n)
    for a in range(2, 5):
        for b in range(a, 5):
            yield f"complete-bipartite-{a}-{b}", gen.complete_bipartite(a, b)
    for n in range(2, max_n + 1):
        yield f"path-{n}", gen.path(n)
    for n in range(3, max_n + 1):
        yield f"cycle-{n}", gen.cycle(n)
    for n in range(2, max_n + 1):
        yield f"star-{n}", gen.star(n)
    for n in range(3, max_n + 1):
        yield f"quasi-star-{n}", gen.quasi_star(n)
    for n in range(2, max_n + 1, 2):
        yield f"one-regular-{n}", gen.one_regular(n)
    for n in range(4, max_n + 1):
        yield f"random-forest-{n}", gen.random_forest(n, seed=n)
    if full:
        for n in range(2, 10):
            for i, t in enumerate(gen.all_trees(n)):
                yield f"tree-{n}-{i}", t
        for n in range(10, 21):
            for p in (0.1, 0.2, 0.5):
                for seed in range(er_seeds):
                    yield f"er-{n}-{p}-{seed}", gen.erdos_renyi(n, p, seed=seed)


@dataclass
class SelftestReport:
    """Outcome of the built-in suite."""

    graphs_checked: int = 0
    comparisons: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_frequencies(name: str, g: Graph, report: SelftestReport, brute=None) -> None:
    """Three independent routes to the type frequencies must agree."""
    if brute is None:
        brute = frequencies_brute(g)
    census = frequencies_from_census(fast_census(g), g.m)
    patterns = frequencies_from_subgraph_counts(g, limit=g.n)
    q = compute_q(g)
    for code in CONTRIBUTING_TYPES:
        report.comparisons += 2
        if brute.counts[code] != census.counts[code]:
            report.failures.append(
                f"{name}: f_{code} brute={brute.counts[code]} census={census.counts[code]}"
            )
        if brute.counts[code] != patterns.counts[code]:
            report.failures.append(
                f"{name}: f_{code} brute={brute.counts[code]} patterns={patterns.counts[code]}"
            )
    report.comparisons += 1
    if brute.total() != q * q:
        report.failures.append(f"{name}: sum of frequencies {brute.total()} != q^2 {q * q}")


def check_variances(name: str, g: Graph, report: SelftestReport, brute=None) -> None:
    """All variance routes must produce one exact rational."""
    table = builtin_rla_table()
    if brute is None:
        brute = frequencies_brute(g)
    routes = {
        "naive": variance_from_frequencies(brute, table),
        "patterns": variance_from_frequencies(
            frequencies_from_subgraph_counts(g, limit=g.n), table
        ),
        "general": variance_general(g, table).variance,
        "reuse": variance_general_reuse(g, table).variance,
        "closed": variance_rla_closed(g).variance,
    }
    if g.is_forest():
        routes["forest"] = variance_forest(g, table).variance
    reference = routes["naive"]
    for route, value in routes.items():
        report.comparisons += 1
        if value != reference:
            report.failures.append(
                f"{name}: variance {route}={value} != naive={reference}"
            )


def run_selftest(max_n: int = 12, er_seeds: int = 5, full: bool = True) -> SelftestReport:
    report = SelftestReport()
    for name, g in corpus(max_n=max_n, er_seeds=er_seeds, full=full):
        brute = frequencies_brute(g)
        check_frequencies(name, g, report, brute=brute)
        check_variances(name, g, report, brute=brute)
        report.graphs_checked += 1
    return report
