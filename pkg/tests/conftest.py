from __future__ import annotations

import pytest
from hypothesis import strategies as st

from geodex.graph import from_edges


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 10):
    """Random spanning tree plus a random set of extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
        edges.update(extra)
    return from_edges(n, sorted(edges))


@st.composite
def any_graphs(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def p4():
    return from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c5():
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
