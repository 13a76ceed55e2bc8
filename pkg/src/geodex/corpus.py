"""Reproducible graph corpora for property checks and solver cross-validation."""

from __future__ import annotations

import os
import random
from typing import Iterator

from geodex.graph import Graph, disjoint_union, from_edges
from geodex.trees import enumerate_free_trees

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
)


def seed() -> int:
    return int(os.environ.get("GEODEX_SEED", "0"))


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return from_edges(n, [])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(rim: int) -> Graph:
    return from_edges(rim + 1, [(i, (i + 1) % rim) for i in range(rim)] + [(rim, i) for i in range(rim)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    return from_edges(n, [(v, v ^ 1 << b) for v in range(n) for b in range(d) if v < v ^ 1 << b])


def petersen() -> Graph:
    return from_edges(10, PETERSEN_EDGES)


def named_graphs() -> dict[str, Graph]:
    out = {}
    for n in range(1, 8):
        out[f"K{n}"] = complete(n)
    for n in range(2, 13):
        out[f"P{n}"] = path(n)
    for n in range(3, 13):
        out[f"C{n}"] = cycle(n)
    for a, b in [(1, 3), (1, 5), (2, 2), (2, 3), (3, 3), (2, 5), (4, 4)]:
        out[f"K{a},{b}"] = complete_bipartite(a, b)
    for r in (4, 5, 6, 8):
        out[f"W{r}"] = wheel(r)
    out["Q3"] = hypercube(3)
    out["Petersen"] = petersen()
    return out


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return from_edges(n, sorted(edges))


def random_graphs(count: int, n_min: int, n_max: int, rng_seed: int | None = None) -> list[Graph]:
    rng = random.Random(seed() if rng_seed is None else rng_seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(random_connected(n, rng.choice([0.1, 0.2, 0.35, 0.5, 0.7]), rng))
    return out


def connected_corpus(max_n: int, random_count: int = 60) -> Iterator[tuple[str, Graph]]:
    """Named graphs, all free trees, and seeded random connected graphs with ``n <= max_n``."""
    for name, g in named_graphs().items():
        if g.n <= max_n:
            yield name, g
    for n in range(1, min(max_n, 10) + 1):
        for i, t in enumerate(enumerate_free_trees(n)):
            yield f"tree{n}_{i}", t.graph
    for i, g in enumerate(random_graphs(random_count, 3, max_n)):
        yield f"rand{i}", g


def forests(max_n: int) -> Iterator[Graph]:
    """Every forest with at least two components and at most ``max_n`` vertices, up to isomorphism."""
    trees = [t.graph for n in range(1, max_n) for t in enumerate_free_trees(n)]

    def pick(start: int, room: int) -> Iterator[list[Graph]]:
        yield []
        for i in range(start, len(trees)):
            if trees[i].n <= room:
                for rest in pick(i, room - trees[i].n):
                    yield [trees[i]] + rest

    for parts in pick(0, max_n):
        if len(parts) >= 2:
            yield disjoint_union(*parts)
