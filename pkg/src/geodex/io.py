"""Edge-list and graph6 readers, edge-list writer.

Edge-list format::

    # comment lines start with '#'
    n m
    u v        (m lines, 0-indexed)
"""

from __future__ import annotations

from typing import Iterable, TextIO

from geodex.graph import Graph, GraphError, from_edges


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


def parse_edgelist(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        rows.append((lineno, s.split()))
    if not rows:
        raise ParseError("missing 'n m' header")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise ParseError(f"header must be two integers 'n m', got {' '.join(head)!r}", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", lineno)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow", last)
    edges = []
    for lineno, toks in body:
        try:
            u, v = (int(x) for x in toks)
        except ValueError:
            raise ParseError(f"edge line must be two integers 'u v', got {' '.join(toks)!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"invalid edge ({u}, {v}) for n={n}", lineno)
        edges.append((u, v))
    return from_edges(n, edges)


def format_edgelist(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_edgelist(g: Graph, out: TextIO, comment: str | None = None) -> None:
    out.write(format_edgelist(g, comment))


def decode_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header allowed)."""
    if isinstance(line, str):
        line = line.encode("ascii")
    data = line.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise ParseError("empty graph6 string")
    if any(not 63 <= b <= 126 for b in data):
        raise ParseError("graph6 bytes must lie in 63..126")
    vals = [b - 63 for b in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = _bigend(vals[1:4]), 4
    elif len(vals) >= 8 and vals[1] == 63:
        n, pos = _bigend(vals[2:8]), 8
    else:
        raise ParseError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def _bigend(chunks: Iterable[int]) -> int:
    x = 0
    for c in chunks:
        x = x << 6 | c
    return x


def parse_graph6(text: str) -> list[Graph]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            out.append(decode_graph6(raw))
        except (ParseError, GraphError) as exc:
            raise ParseError(str(exc), lineno) from None
    return out


def read_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        graphs = parse_graph6(text)
        if len(graphs) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(graphs)}")
        return graphs[0]
    raise ValueError(f"unknown format {fmt!r}")
