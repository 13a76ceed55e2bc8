"""Trees: Prüfer codec, canonical (AHU) codes, free-tree enumeration, fixtures.

Free trees on ``n`` vertices are produced by hanging a new leaf on every
vertex of every free tree on ``n - 1`` vertices and keeping one labeled
representative per canonical code. Each representative is relabeled in
canonical BFS order from its center, so the stream is deterministic.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from geodex.graph import (
    DistanceMatrix,
    Graph,
    GraphError,
    degree_stats,
    distances,
    from_edges,
    max_degree_excluding,
    pendant_neighbor_count,
)

MAX_ENUM_N = 12


class TreeError(GraphError):
    pass


@dataclass(frozen=True)
class TreeSpec:
    graph: Graph
    prufer: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        g = self.graph
        if g.n < 1 or g.m != g.n - 1 or not g.is_connected():
            raise TreeError(f"not a tree: n={g.n}, m={g.m}")

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def dm(self) -> DistanceMatrix:
        return distances(self.graph)

    @property
    def diam(self) -> int:
        return self.dm.diam

    @property
    def max_degree(self) -> int:
        return degree_stats(self.graph)[0]

    @property
    def center(self) -> frozenset[int]:
        return self.dm.center

    @property
    def unique_center(self) -> int | None:
        """The single central vertex when the diameter is even, else ``None``."""
        c = self.center
        return next(iter(c)) if len(c) == 1 else None

    def pendant_count(self, x: int) -> int:
        return pendant_neighbor_count(self.graph, x)

    @cached_property
    def canonical_code(self) -> str:
        return canonical_code(self.graph)

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()


def tree_from_edges(n: int, edges: Sequence[Sequence[int]]) -> TreeSpec:
    return TreeSpec(from_edges(n, edges))


# Prüfer codec

def prufer_decode(code: Sequence[int], n: int | None = None) -> TreeSpec:
    code = tuple(int(c) for c in code)
    if n is None:
        n = len(code) + 2
    if n < 2 or len(code) != n - 2:
        raise TreeError(f"Prüfer code for n={n} must have length {n - 2}, got {len(code)}")
    if any(not 0 <= c < n for c in code):
        raise TreeError(f"Prüfer code entries must lie in 0..{n - 1}")
    degree = [1] * n
    for c in code:
        degree[c] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for c in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, c))
        degree[c] -= 1
        if degree[c] == 1:
            heapq.heappush(leaves, c)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return TreeSpec(from_edges(n, edges), code)


def prufer_encode(t: TreeSpec | Graph) -> tuple[int, ...]:
    g = t.graph if isinstance(t, TreeSpec) else t
    if g.n < 2:
        raise TreeError("Prüfer codes need at least two vertices")
    degree = [len(a) for a in g.adj]
    removed = [False] * g.n
    leaves = [v for v in range(g.n) if degree[v] == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(g.n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = True
        (parent,) = [y for y in g.adj[leaf] if not removed[y]]
        code.append(parent)
        degree[parent] -= 1
        if degree[parent] == 1:
            heapq.heappush(leaves, parent)
    return tuple(code)


# canonical codes

def _tree_center(g: Graph) -> list[int]:
    """Center of a tree by repeated leaf stripping."""
    if g.n <= 2:
        return list(range(g.n))
    degree = [len(a) for a in g.adj]
    layer = [v for v in range(g.n) if degree[v] <= 1]
    left = g.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for leaf in layer:
            for y in g.adj[leaf]:
                degree[y] -= 1
                if degree[y] == 1:
                    nxt.append(y)
        layer = nxt
    return sorted(layer)


def _rooted(g: Graph, root: int, parent: int) -> tuple[int, str, list]:
    """AHU encoding of the subtree at ``root``: ``(size, code, ordered children)``.

    Children are ordered by ``(subtree size, code)``.
    """
    kids = sorted((_rooted(g, c, root) + (c,) for c in g.adj[root] if c != parent),
                  key=lambda k: (k[0], k[1]))
    size = 1 + sum(k[0] for k in kids)
    return size, "(" + "".join(k[1] for k in kids) + ")", kids


def _canonical(g: Graph) -> tuple[str, list[int]]:
    """Canonical code plus a canonical vertex order (root first, BFS)."""
    if g.n == 0:
        return "", []
    center = _tree_center(g)
    if len(center) == 1:
        root_info = [(center[0], _rooted(g, center[0], -1))]
        code = "C" + root_info[0][1][1]
    else:
        a, b = center
        ra, rb = _rooted(g, a, b), _rooted(g, b, a)
        if ra[1] + rb[1] > rb[1] + ra[1]:
            (a, ra), (b, rb) = (b, rb), (a, ra)
        root_info = [(a, ra), (b, rb)]
        code = "E" + ra[1] + rb[1]
    order = []
    queue = deque(root_info)
    while queue:
        v, (_, _, kids) = queue.popleft()
        order.append(v)
        queue.extend((k[3], k[:3]) for k in kids)
    return code, order


def canonical_code(g: Graph) -> str:
    """Isomorphism-invariant string for a tree.

    Rooted at the center; for a bicentral tree at the central edge, taking
    the lexicographically smaller concatenation of the two halves.
    """
    return _canonical(g)[0]


def canonical_relabel(g: Graph) -> Graph:
    _, order = _canonical(g)
    pos = {v: i for i, v in enumerate(order)}
    return from_edges(g.n, sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges()))


# enumeration

def enumerate_free_trees(n: int) -> Iterator[TreeSpec]:
    """One tree per isomorphism class on ``n`` vertices, sorted by canonical code."""
    if not 1 <= n <= MAX_ENUM_N:
        raise TreeError(f"free-tree enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    for g in _free_trees(n):
        yield TreeSpec(g)


def _free_trees(n: int) -> list[Graph]:
    return list(_free_tree_table(n).values())


_cache: dict[int, dict[str, Graph]] = {}


def _free_tree_table(n: int) -> dict[str, Graph]:
    if n in _cache:
        return _cache[n]
    if n == 1:
        table = {canonical_code(from_edges(1, [])): from_edges(1, [])}
    else:
        found: dict[str, Graph] = {}
        for g in _free_tree_table(n - 1).values():
            for v in range(g.n):
                h = from_edges(n, g.edges() + [(v, n - 1)])
                code = canonical_code(h)
                if code not in found:
                    found[code] = canonical_relabel(h)
        table = dict(sorted(found.items()))
    _cache[n] = table
    return table


def enumerate_free_trees_prufer(n: int) -> list[TreeSpec]:
    """Same classes as :func:`enumerate_free_trees`, via all ``n^(n-2)`` Prüfer codes.

    Exponential; kept as an independent cross-check for small ``n``.
    """
    if n <= 2:
        return list(enumerate_free_trees(n))
    found: dict[str, Graph] = {}
    for code in itertools.product(range(n), repeat=n - 2):
        g = prufer_decode(code).graph
        found.setdefault(canonical_code(g), g)
    return [TreeSpec(canonical_relabel(found[k])) for k in sorted(found)]


# named families

def named_family(kind: str, *params) -> TreeSpec:
    """Fixture trees with a fixed labeling, spine or hub first.

    - ``path(n)``: 0-1-...-(n-1)
    - ``star(k)``: hub 0, leaves 1..k
    - ``double_star(a, b)``: centers 0 and 1, ``a`` leaves on 0 then ``b`` on 1
    - ``spider(legs, leg_len)``: hub 0, each leg a path numbered outward
    - ``caterpillar(spine, leaf_counts)``: spine 0..spine-1, then the leaves
      of each spine vertex in order
    - ``star_of_stars(arms, leaves)``: hub 0, arms 1..arms, then ``leaves``
      pendants on each arm
    """
    try:
        return _FAMILIES[kind](*params)
    except KeyError:
        raise TreeError(f"unknown tree family {kind!r}") from None
    except TypeError as exc:
        raise TreeError(f"bad parameters for {kind}: {exc}") from None


def _path(n: int) -> TreeSpec:
    if n < 1:
        raise TreeError("path needs n >= 1")
    return tree_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _star(k: int) -> TreeSpec:
    if k < 0:
        raise TreeError("star needs k >= 0 leaves")
    return tree_from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def _double_star(a: int, b: int) -> TreeSpec:
    if a < 0 or b < 0:
        raise TreeError("double star leaf counts must be non-negative")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return tree_from_edges(2 + a + b, edges)


def _spider(legs: int, leg_len: int) -> TreeSpec:
    if legs < 0 or leg_len < 1 and legs > 0:
        raise TreeError("spider needs legs >= 0 and leg length >= 1")
    edges, nxt = [], 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_len):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return tree_from_edges(nxt, edges)


def _caterpillar(spine: int, leaf_counts: Sequence[int]) -> TreeSpec:
    if spine < 1 or len(leaf_counts) != spine or any(c < 0 for c in leaf_counts):
        raise TreeError("caterpillar needs spine >= 1 and one leaf count per spine vertex")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return tree_from_edges(nxt, edges)


def _star_of_stars(arms: int, leaves: int) -> TreeSpec:
    if arms < 0 or leaves < 0:
        raise TreeError("star_of_stars needs non-negative parameters")
    edges = [(0, a) for a in range(1, arms + 1)]
    nxt = arms + 1
    for a in range(1, arms + 1):
        for _ in range(leaves):
            edges.append((a, nxt))
            nxt += 1
    return tree_from_edges(nxt, edges)


_FAMILIES = {
    "path": _path,
    "star": _star,
    "double_star": _double_star,
    "spider": _spider,
    "caterpillar": _caterpillar,
    "star_of_stars": _star_of_stars,
}


# classification

@dataclass(frozen=True)
class TreeClass:
    n: int
    diam: int
    max_degree: int
    center: int | None = None
    center_degree: int | None = None
    center_pendants: int | None = None
    max_degree_off_center: int | None = None

    @property
    def diam_class(self) -> str:
        return str(self.diam) if self.diam <= 4 else ">=5"


def classify(t: TreeSpec) -> TreeClass:
    """Metric summary of a tree; center fields are set only for diameter 2 or 4."""
    if t.n < 3:
        raise TreeError(f"classification needs at least three vertices, got {t.n}")
    diam, delta = t.diam, t.max_degree
    if diam not in (2, 4):
        return TreeClass(t.n, diam, delta)
    c = t.unique_center
    assert c is not None
    return TreeClass(
        t.n, diam, delta,
        center=c,
        center_degree=t.graph.degree(c),
        center_pendants=t.pendant_count(c),
        max_degree_off_center=max_degree_excluding(t.graph, c),
    )
