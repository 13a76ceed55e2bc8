"""Closed-form convexity numbers of complementary prisms and their witnesses.

Vertex sets returned here are masks in prism coordinates: tree vertex ``v``
is bit ``v`` and its mirror is bit ``v + n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from geodex.bits import VertexSet, full_mask, is_subset, mask_of
from geodex.convexity import interval_table
from geodex.graph import Graph, GraphError, complementary_prism, distances
from geodex.trees import TreeSpec, classify


@dataclass(frozen=True)
class FormulaVerdict:
    case: str
    predicted: int
    terms: tuple[tuple[str, int], ...] = field(default=())


def tree_prism_predict(t: TreeSpec) -> FormulaVerdict:
    """Predicted convexity number of the complementary prism of a tree (n >= 3)."""
    c = classify(t)
    n, delta = c.n, c.max_degree
    if c.diam >= 5:
        terms = (("n", n), ("2*Delta+1", 2 * delta + 1))
        return FormulaVerdict("diam>=5", max(v for _, v in terms), terms)
    if c.diam == 4:
        if c.center_degree < delta:
            return FormulaVerdict("diam4-lt", n + delta - 1, (("n+Delta-1", n + delta - 1),))
        terms = (
            ("n+Delta(T-c)-1", n + c.max_degree_off_center - 1),
            ("2*Delta+1", 2 * delta + 1),
            ("n+2e(c)-Delta+1", n + 2 * c.center_pendants - delta + 1),
        )
        return FormulaVerdict("diam4-eq", max(v for _, v in terms), terms)
    if c.diam == 3:
        return FormulaVerdict("diam3", n + delta - 1, (("n+Delta-1", n + delta - 1),))
    return FormulaVerdict("diam2", 2 * n - 1, (("2n-1", 2 * n - 1),))


def forest_prism_predict(g: Graph) -> int:
    """``2n - k`` for a disconnected graph whose smallest component has order ``k``."""
    comps = g.components()
    if len(comps) < 2:
        raise GraphError("forest_prism_predict needs a disconnected graph")
    return 2 * g.n - min(len(c) for c in comps)


def hub_witness(t: TreeSpec, x: int) -> VertexSet:
    """Closed neighborhood of ``x`` plus the mirrors of its open neighborhood."""
    if t.graph.degree(x) != t.max_degree:
        raise GraphError(f"vertex {x} does not have maximum degree {t.max_degree}")
    n = t.n
    nbrs = t.graph.adj[x]
    return mask_of(nbrs | {x}) | mask_of(v + n for v in nbrs)


def inner_witness(t: TreeSpec, w: int) -> VertexSet:
    """Pendant part of ``N[w]`` plus every mirror except those of non-pendant neighbors."""
    if t.diam > 4:
        raise GraphError(f"needs diameter at most 4, got {t.diam}")
    g, n = t.graph, t.n
    if g.degree(w) < 2:
        raise GraphError(f"vertex {w} is pendant")
    inner = {y for y in g.adj[w] if g.degree(y) >= 2}
    tree_part = mask_of((g.adj[w] | {w}) - inner)
    mirror_part = mask_of(v + n for v in range(n) if v not in inner)
    return tree_part | mirror_part


def hub_witness_size(t: TreeSpec) -> int:
    return 2 * t.max_degree + 1


def inner_witness_size(t: TreeSpec, w: int) -> int:
    return t.n - t.graph.degree(w) + 2 * t.pendant_count(w) + 1


@dataclass
class LemmaLedger:
    """Per-lemma pass/fail/skip counts plus the first few failures."""

    passed: dict[str, int] = field(default_factory=dict)
    failed: dict[str, int] = field(default_factory=dict)
    skipped: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def record(self, lemma: str, ok: bool, detail: str = "") -> None:
        bucket = self.passed if ok else self.failed
        bucket[lemma] = bucket.get(lemma, 0) + 1
        if not ok and len(self.failures) < 50:
            self.failures.append(f"{lemma}: {detail}")

    def skip(self, lemma: str) -> None:
        self.skipped[lemma] = self.skipped.get(lemma, 0) + 1

    def merge(self, other: "LemmaLedger") -> None:
        for mine, theirs in ((self.passed, other.passed), (self.failed, other.failed),
                             (self.skipped, other.skipped)):
            for k, v in theirs.items():
                mine[k] = mine.get(k, 0) + v
        self.failures.extend(other.failures[: max(0, 50 - len(self.failures))])

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())


LEMMAS = (
    "path_transfer", "mirrors_plus_vertex", "distance3_pair", "edge_mirrors_d6", "peripheral_mirrors_d5",
    "path_mirrors_d5", "hub_witness", "center_mirrors_d4", "inner_witness",
)


def lemma_hull_checks(t: TreeSpec, ledger: LemmaLedger | None = None) -> LemmaLedger:
    """Replay the hull lemmas and witness constructions on one tree.

    Each check computes the relevant hull in the complementary prism and
    records whether the stated containment holds. Checks whose diameter
    hypothesis does not apply are counted as skipped.
    """
    ledger = ledger if ledger is not None else LemmaLedger()
    g, n = t.graph, t.n
    prism = complementary_prism(g)
    table = interval_table(distances(prism))
    full = table.full
    mirrors = full_mask(n) << n
    tag = t.canonical_code
    d = t.dm
    diam = t.diam

    def bar(*vs: int) -> VertexSet:
        return mask_of(v + n for v in vs)

    # mirrors plus any single tree vertex hull everything
    for u in range(n):
        ledger.record("mirrors_plus_vertex", table.close(mirrors | 1 << u) == full, f"{tag} u={u}")

    # a tree pair at distance 3 hulls everything
    pairs3 = [(u, v) for u, v in combinations(range(n), 2) if d(u, v) == 3]
    if pairs3:
        for u, v in pairs3:
            ledger.record("distance3_pair", table.close(1 << u | 1 << v) == full, f"{tag} u={u} v={v}")
    else:
        ledger.skip("distance3_pair")

    # diameter >= 6, mirrors of adjacent vertices hull all mirrors
    if diam >= 6:
        for u, v in g.edges():
            ok = is_subset(mirrors, table.close(bar(u, v)))
            ledger.record("edge_mirrors_d6", ok, f"{tag} u={u} v={v}")
    else:
        ledger.skip("edge_mirrors_d6")

    # diameter exactly 5
    if diam == 5:
        per = d.periphery
        for u in per:
            for v in g.adj[u]:
                ok = is_subset(mirrors, table.close(bar(u, v)))
                ledger.record("peripheral_mirrors_d5", ok, f"{tag} u={u} v={v}")
        # u - v - w path with v adjacent to both
        for v in range(n):
            for u, w in combinations(sorted(g.adj[v]), 2):
                ok = is_subset(mirrors, table.close(bar(u, v, w)))
                ledger.record("path_mirrors_d5", ok, f"{tag} u={u} v={v} w={w}")
    else:
        ledger.skip("peripheral_mirrors_d5")
        ledger.skip("path_mirrors_d5")

    # diameter 4, x central, u, v neighbors of x with deg(u) >= 2
    if diam == 4:
        x = t.unique_center
        for u in g.adj[x]:
            if g.degree(u) < 2:
                continue
            for v in g.adj[x]:
                if v == u:
                    continue
                ok = is_subset(mirrors, table.close(bar(u, v, x)))
                ledger.record("center_mirrors_d4", ok, f"{tag} x={x} u={u} v={v}")
    else:
        ledger.skip("center_mirrors_d4")

    # hub witness on every maximum-degree vertex
    for x in range(n):
        if g.degree(x) != t.max_degree:
            continue
        h = hub_witness(t, x)
        ok = table.is_convex(h) and h != full and h.bit_count() == hub_witness_size(t)
        ledger.record("hub_witness", ok, f"{tag} x={x}")

    # inner witness on every non-pendant vertex (the center first when diameter is 4)
    if diam <= 4 and n >= 3:
        ws = [w for w in range(n) if g.degree(w) >= 2]
        if diam == 4:
            ws.sort(key=lambda w: w != t.unique_center)
        for w in ws:
            h = inner_witness(t, w)
            ok = table.is_convex(h) and h.bit_count() == inner_witness_size(t, w)
            ledger.record("inner_witness", ok, f"{tag} w={w}")
    else:
        ledger.skip("inner_witness")

    _path_transfer(t, table, ledger)
    return ledger


def _tree_paths(g: Graph) -> list[list[int]]:
    """Every path with at least two vertices, as a vertex list (both directions)."""
    paths = []
    for s in range(g.n):
        stack = [[s]]
        while stack:
            p = stack.pop()
            if len(p) >= 2:
                paths.append(p)
            for y in g.adj[p[-1]]:
                if y not in p:
                    stack.append(p + [y])
    return paths


def _path_transfer(t: TreeSpec, table, ledger: LemmaLedger) -> None:
    """If ``v1`` and the mirrors of ``v2..vk`` are in a hull, so is ``vk``.

    Hulls are drawn from every subset of at most three prism vertices plus, for
    each path, the exact premise set itself.
    """
    n = t.n
    seeds = [mask_of(c) for k in range(4) for c in combinations(range(2 * n), k)]
    hulls = {table.close(s) for s in seeds}
    for p in _tree_paths(t.graph):
        premise = 1 << p[0] | mask_of(v + n for v in p[1:])
        ok = True
        for h in hulls | {table.close(premise)}:
            if is_subset(premise, h) and not h >> p[-1] & 1:
                ok = False
                break
        ledger.record("path_transfer", ok, f"{t.canonical_code} path={p}")
