"""Shared fixtures: graph corpora reused across test modules."""

import pytest

from crossvar.selftest import corpus


@pytest.fixture(scope="session")
def small_corpus():
    """Deterministic families only, capped so brute oracles stay cheap."""
    return list(corpus(max_n=10, full=False))


@pytest.fixture(scope="session")
def full_corpus():
    """The complete acceptance corpus (ER ensemble, free trees, families)."""
    return list(corpus(max_n=12, er_seeds=5, full=True))
