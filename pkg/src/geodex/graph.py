"""Graph representation, hop metrics, complements and complementary prisms.

Vertices are the integers ``0..n-1``. Vertex sets are plain Python ints used
as bit masks (bit ``v`` set means ``v`` is a member); see :mod:`geodex.bits`.
In a complementary prism built from a base graph on ``n`` vertices the
mirror of ``v`` is ``v + n``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from geodex.bits import mask_of


class GraphError(ValueError):
    """Raised for malformed graphs or inputs outside an operation's domain."""


class DisconnectedGraphError(GraphError):
    def __init__(self, a: int, b: int):
        super().__init__(f"graph is disconnected: vertices {a} and {b} lie in different components")
        self.representatives = (a, b)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``base_n`` is ``None`` for a plain graph. For a complementary prism it is
    the order of the base graph: vertices ``0..base_n-1`` form the G-side and
    ``base_n..2*base_n-1`` the complement side.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    base_n: int | None = None

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise GraphError(f"asymmetric or out-of-range adjacency {v}-{u}")
        if self.base_n is not None:
            if self.n != 2 * self.base_n:
                raise GraphError("prism order must be twice the base order")
            for v in range(self.base_n):
                if v + self.base_n not in self.adj[v]:
                    raise GraphError(f"prism matching edge ({v}, {v + self.base_n}) missing")

    @property
    def is_prism(self) -> bool:
        return self.base_n is not None

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(nb) for nb in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def mirror(self, v: int) -> int:
        """Partner of ``v`` across the prism matching."""
        if self.base_n is None:
            raise GraphError("mirror() needs a prism-tagged graph")
        return v + self.base_n if v < self.base_n else v - self.base_n

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def __repr__(self) -> str:
        tag = "" if self.base_n is None else f", prism({self.base_n})"
        return f"Graph(n={self.n}, m={self.m}{tag})"


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def complement(g: Graph) -> Graph:
    if g.is_prism:
        raise GraphError("complement of a prism-tagged graph is not supported")
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - g.adj[v] - {v} for v in range(g.n)))


def complementary_prism(g: Graph) -> Graph:
    """G and its complement joined by the matching ``v -- v + n``."""
    if g.is_prism:
        raise GraphError("complementary prism of a prism-tagged graph is not supported")
    if g.n < 1:
        raise GraphError("complementary prism needs at least one vertex")
    n = g.n
    gc = complement(g)
    adj = [frozenset(g.adj[v] | {v + n}) for v in range(n)]
    adj += [frozenset({u + n for u in gc.adj[v]} | {v}) for v in range(n)]
    return Graph(2 * n, tuple(adj), base_n=n)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph plus derived scalars."""

    dist: np.ndarray
    ecc: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ecc", tuple(int(x) for x in self.dist.max(axis=1)))

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @property
    def rad(self) -> int:
        return min(self.ecc)

    @property
    def diam(self) -> int:
        return max(self.ecc)

    @property
    def center(self) -> frozenset[int]:
        return frozenset(v for v, e in enumerate(self.ecc) if e == self.rad)

    @property
    def periphery(self) -> frozenset[int]:
        return frozenset(v for v, e in enumerate(self.ecc) if e == self.diam)

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distances(g: Graph) -> DistanceMatrix:
    if g.n == 0:
        raise GraphError("distances of the empty graph are undefined")
    rows = []
    for s in range(g.n):
        row = bfs_distances(g, s)
        if -1 in row:
            raise DisconnectedGraphError(s, row.index(-1))
        rows.append(row)
    d = np.array(rows, dtype=np.int64)
    d.setflags(write=False)
    return DistanceMatrix(d)


def degree_stats(g: Graph) -> tuple[int, tuple[int, ...], frozenset[int]]:
    """Return ``(max degree, per-vertex degrees, pendant vertices)``."""
    degs = tuple(len(a) for a in g.adj)
    return (max(degs, default=0), degs, frozenset(v for v, d in enumerate(degs) if d == 1))


def _check_vertex(g: Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range 0..{g.n - 1}")


def pendant_neighbor_count(g: Graph, x: int) -> int:
    _check_vertex(g, x)
    return sum(1 for y in g.adj[x] if len(g.adj[y]) == 1)


def max_degree_excluding(g: Graph, x: int) -> int:
    """Largest degree in ``g`` among vertices other than ``x``.

    Degrees are taken in ``g`` itself, not in ``g - x``.
    """
    if g.n < 2:
        raise GraphError("max_degree_excluding needs at least two vertices")
    _check_vertex(g, x)
    return max(len(g.adj[y]) for y in range(g.n) if y != x)


def is_extreme(g: Graph, v: int) -> bool:
    _check_vertex(g, v)
    nbrs = list(g.adj[v])
    return all(b in g.adj[a] for i, a in enumerate(nbrs) for b in nbrs[i + 1:])


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``inf`` for forests."""
    best = float("inf")
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for h in graphs:
        edges += [(u + off, v + off) for u, v in h.edges()]
        off += h.n
    return from_edges(off, edges)


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Backtracking search for a vertex bijection ``g -> h`` preserving edges."""
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return None
    order = sorted(range(g.n), key=lambda v: -len(g.adj[v]))
    fwd: dict[int, int] = {}
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or len(h.adj[w]) != len(g.adj[v]):
                continue
            if all((fwd[u] in h.adj[w]) == (u in g.adj[v]) for u in fwd):
                fwd[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                del fwd[v]
                used[w] = False
        return False

    return dict(fwd) if extend(0) else None
