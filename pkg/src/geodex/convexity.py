"""Geodesic intervals, convex hulls and exact convexity numbers.

Everything here works on int bit masks (see :mod:`geodex.bits`). The interval
table for a distance matrix is built once and cached per matrix object.
"""

from __future__ import annotations

import time
import weakref
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from geodex.bits import VertexSet, full_mask, mask_of, members
from geodex.graph import DistanceMatrix, GraphError

MAX_SOLVER_ORDER = 26


class GraphSizeError(GraphError):
    pass


class IntervalTable:
    """``rows[u][v]`` is the mask of every vertex on some u,v-geodesic."""

    def __init__(self, dm: DistanceMatrix):
        d = np.asarray(dm.dist)
        n = d.shape[0]
        self.n = n
        # on[u, v, w]: w lies on a u,v-geodesic
        on = d[:, None, :] + d[None, :, :] == d[:, :, None]
        if n <= 62:
            weights = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
            masks = (on.astype(np.int64) * weights).sum(axis=2)
            self.rows = tuple(tuple(int(x) for x in row) for row in masks)
        else:
            self.rows = tuple(
                tuple(mask_of(np.flatnonzero(on[u, v])) for v in range(n)) for u in range(n)
            )
        self.full = full_mask(n)

    def __getitem__(self, uv: tuple[int, int]) -> VertexSet:
        u, v = uv
        return self.rows[u][v]

    def interval_of_set(self, s: VertexSet) -> VertexSet:
        out = 0
        verts = list(members(s))
        for i, u in enumerate(verts):
            row = self.rows[u]
            for v in verts[i:]:
                out |= row[v]
        return out

    def is_convex(self, s: VertexSet) -> bool:
        verts = list(members(s))
        for i, u in enumerate(verts):
            row = self.rows[u]
            for v in verts[i + 1:]:
                if row[v] & ~s:
                    return False
        return True

    def close(self, s: VertexSet, frontier: VertexSet | None = None,
              forbid: VertexSet = 0) -> VertexSet | None:
        """Convex hull of ``s``.

        When ``frontier`` is given, ``s & ~frontier`` must already be convex;
        only pairs touching the frontier are expanded. Returns ``None`` as soon
        as the hull meets ``forbid``.
        """
        if frontier is None:
            frontier = s
        rows = self.rows
        rounds = 0
        while frontier:
            if s & forbid:
                return None
            rounds += 1
            assert rounds <= self.n + 1, "closure failed to reach a fixpoint"
            grow = 0
            inside = list(members(s))
            for x in members(frontier):
                row = rows[x]
                for y in inside:
                    grow |= row[y]
            frontier = grow & ~s
            s |= frontier
        if s & forbid:
            return None
        return s


_tables: "weakref.WeakKeyDictionary[DistanceMatrix, IntervalTable]" = weakref.WeakKeyDictionary()


def interval_table(dm: DistanceMatrix | IntervalTable) -> IntervalTable:
    if isinstance(dm, IntervalTable):
        return dm
    table = _tables.get(dm)
    if table is None:
        table = _tables[dm] = IntervalTable(dm)
    return table


def interval(dm: DistanceMatrix, u: int, v: int) -> VertexSet:
    return interval_table(dm)[u, v]


def interval_of_set(dm: DistanceMatrix, s: VertexSet) -> VertexSet:
    return interval_table(dm).interval_of_set(s)


def is_convex(dm: DistanceMatrix, s: VertexSet) -> bool:
    return interval_table(dm).is_convex(s)


def convex_closure(dm: DistanceMatrix, s: VertexSet) -> VertexSet:
    return interval_table(dm).close(s)


def is_hull_set(dm: DistanceMatrix, s: VertexSet) -> bool:
    table = interval_table(dm)
    return table.close(s) == table.full


@dataclass(frozen=True)
class ConvexityResult:
    value: int
    witness: VertexSet
    explored: int
    elapsed: float
    method: str = ""

    def witness_vertices(self) -> list[int]:
        return list(members(self.witness))


def _check_solvable(table: IntervalTable) -> None:
    if table.n > MAX_SOLVER_ORDER:
        raise GraphSizeError(
            f"exact solver supports at most {MAX_SOLVER_ORDER} vertices, got {table.n}"
        )


@lru_cache(maxsize=None)
def _small_masks(n: int) -> tuple[np.ndarray, np.ndarray]:
    masks = np.arange(1 << n, dtype=np.int64)
    return masks, np.bitwise_count(masks)


def k_subsets(n: int, k: int) -> np.ndarray:
    """All ``k``-element subsets of ``0..n-1`` as masks, in increasing order."""
    if k < 0 or k > n:
        return np.empty(0, dtype=np.int64)
    if k == 0:
        return np.zeros(1, dtype=np.int64)
    if k == n:
        return np.array([(1 << n) - 1], dtype=np.int64)
    if n <= 16:
        masks, counts = _small_masks(n)
        return masks[counts == k]
    top = np.int64(1 << (n - 1))
    return np.concatenate([k_subsets(n - 1, k), k_subsets(n - 1, k - 1) | top])


def convexity_number_exhaustive(dm: DistanceMatrix | IntervalTable) -> ConvexityResult:
    """Maximum proper convex set by descending-cardinality enumeration.

    Every subset of one cardinality class is tested at once with numpy: a set
    fails as soon as it holds both ends of a pair but not the whole interval.
    Pairs whose hull is already the whole graph are filtered first. The
    witness is the smallest mask among the maximum convex sets.
    """
    t0 = time.perf_counter()
    table = interval_table(dm)
    _check_solvable(table)
    n = table.n
    hulling: list[int] = []
    constraints: list[tuple[int, int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            ends = (1 << u) | (1 << v)
            iv = table.rows[u][v]
            if iv == ends:
                continue
            if table.close(ends) == table.full:
                hulling.append(ends)
            else:
                constraints.append((ends, iv))
    # wide intervals reject the most candidates, test them early
    constraints.sort(key=lambda c: -int(c[1]).bit_count())

    explored = 0
    for k in range(n - 1, -1, -1):
        cand = k_subsets(n, k)
        explored += len(cand)
        for ends in hulling:
            if not len(cand):
                break
            cand = cand[(cand & ends) != ends]
        for ends, iv in constraints:
            if not len(cand):
                break
            cand = cand[((cand & ends) != ends) | ((cand & iv) == iv)]
        if len(cand):
            witness = int(cand.min())
            return ConvexityResult(k, witness, explored, time.perf_counter() - t0, "exhaustive")
    raise AssertionError("the empty set is always convex")


def convexity_number_bnb(dm: DistanceMatrix | IntervalTable) -> ConvexityResult:
    """Maximum proper convex set by branch and bound over hull extensions.

    A proper convex set misses some vertex; taking the first missed vertex
    ``f`` in index order, it contains every vertex before ``f``. For each
    ``f`` the search starts from the hull of that prefix and grows convex
    sets one vertex (plus its re-closure) at a time, never touching ``f`` or
    any vertex already ruled out on the current branch.
    """
    t0 = time.perf_counter()
    table = interval_table(dm)
    _check_solvable(table)
    n = table.n
    best_size = -1
    best_set = 0
    nodes = 0

    def grow(current: VertexSet, cand: list[int], banned: VertexSet) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        size = current.bit_count()
        if size > best_size:
            best_size, best_set = size, current
        for j, u in enumerate(cand):
            if size + len(cand) - j <= best_size:
                return
            bigger = table.close(current | (1 << u), frontier=1 << u, forbid=banned)
            if bigger is not None:
                grow(bigger, [w for w in cand[j + 1:] if not bigger >> w & 1], banned)
            banned |= 1 << u

    for f in range(n):
        start = table.close((1 << f) - 1, forbid=1 << f)
        if start is None:
            continue
        cand = [w for w in range(n) if w != f and not start >> w & 1]
        if start.bit_count() + len(cand) <= best_size:
            continue
        grow(start, cand, 1 << f)
    return ConvexityResult(best_size, best_set, nodes, time.perf_counter() - t0, "bnb")


SOLVERS = {
    "exhaustive": convexity_number_exhaustive,
    "bnb": convexity_number_bnb,
}
