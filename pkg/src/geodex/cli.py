"""Command-line entry point: ``geodex <subcommand> ...``.

Exit codes: 0 success, 1 verification mismatch or solver disagreement,
2 parse or usage error, 3 graph rejected (disconnected or too large).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from geodex.convexity import SOLVERS
from geodex.graph import Graph, GraphError, complementary_prism, distances, from_edges
from geodex.io import ParseError, format_edgelist, read_graph
from geodex.oracle import LEMMAS, LemmaLedger, lemma_hull_checks, tree_prism_predict
from geodex.trees import TreeError, TreeSpec, classify, enumerate_free_trees, named_family

EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_REJECTED = 3

RECORD_FIELDS = ("n", "canonicalCode", "diamClass", "maxDegree", "case",
                 "predicted", "exact", "match", "solveNodes", "elapsedMs")
TIMING_FIELDS = ("elapsedMs",)


@dataclass
class VerificationRecord:
    n: int
    canonicalCode: str
    diamClass: str
    maxDegree: int
    case: str
    predicted: int
    exact: int
    match: bool
    solveNodes: int
    elapsedMs: float


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


class CliExit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_graph(args) -> Graph:
    try:
        return read_graph(_read_input(args.input), args.format)
    except OSError as exc:
        raise CliExit(EXIT_PARSE, f"cannot read {args.input}: {exc}") from None
    except (ParseError, GraphError) as exc:
        raise CliExit(EXIT_PARSE, f"parse failure: {exc}") from None


def _fields(fields: Sequence[str], timing: bool) -> list[str]:
    return [f for f in fields if timing or f not in TIMING_FIELDS]


def _emit(row: dict, fields: Sequence[str], as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps({f: row[f] for f in fields}) + "\n")
    else:
        out.write("\t".join(_cell(row[f]) for f in fields) + "\n")


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.3f}"
    return str(x)


# con

def cmd_con(args) -> int:
    g = _load_graph(args)
    try:
        if args.prism:
            g = complementary_prism(g)
        dm = distances(g)
        names = ["exhaustive", "bnb"] if args.solver == "both" else [args.solver]
        results = [SOLVERS[name](dm) for name in names]
    except GraphError as exc:
        raise CliExit(EXIT_REJECTED, f"rejected: {exc}") from None
    first = results[0]
    agree = all(r.value == first.value for r in results)
    if args.json:
        obj = {"con": first.value, "n": g.n, "witness": first.witness_vertices(), "agree": agree,
               "solvers": [{"solver": r.method, "value": r.value, "witness": r.witness_vertices(),
                            "explored": r.explored}
                           | ({} if args.no_timing else {"elapsedMs": round(r.elapsed * 1e3, 3)})
                           for r in results]}
        print(json.dumps(obj))
    else:
        print(f"con={first.value}")
        print("witness=" + " ".join(map(str, first.witness_vertices())))
        for r in results:
            line = f"solver={r.method}\tvalue={r.value}\texplored={r.explored}"
            if not args.no_timing:
                line += f"\telapsedMs={r.elapsed * 1e3:.3f}"
            print(line)
    if not agree:
        print("error: solvers disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


# prism / gen / enum

def cmd_prism(args) -> int:
    g = _load_graph(args)
    try:
        p = complementary_prism(g)
    except GraphError as exc:
        raise CliExit(EXIT_REJECTED, str(exc)) from None
    sys.stdout.write(format_edgelist(p))
    return 0


def _param(tok: str):
    if "," in tok:
        return [int(x) for x in tok.split(",") if x]
    return int(tok)


def cmd_gen(args) -> int:
    try:
        t = named_family(args.family, *(_param(p) for p in args.params))
    except (ValueError, TreeError) as exc:
        raise CliExit(EXIT_PARSE, str(exc)) from None
    g = complementary_prism(t.graph) if args.prism else t.graph
    sys.stdout.write(format_edgelist(g))
    return 0


def cmd_enum(args) -> int:
    for t in enumerate_free_trees(args.n):
        edges = " ".join(f"{u}-{v}" for u, v in t.edges())
        print(f"{t.canonical_code}\t{t.n}\t{edges}")
    return 0


# verify-trees

def verify_tree(edges: list[tuple[int, int]], n: int, solver: str = "exhaustive") -> VerificationRecord:
    t = TreeSpec(from_edges(n, edges))
    verdict = tree_prism_predict(t)
    dm = distances(complementary_prism(t.graph))
    names = ["exhaustive", "bnb"] if solver == "both" else [solver]
    results = [SOLVERS[name](dm) for name in names]
    result = results[0]
    agree = all(r.value == result.value for r in results)
    return VerificationRecord(
        n=n,
        canonicalCode=t.canonical_code,
        diamClass=classify(t).diam_class,
        maxDegree=t.max_degree,
        case=verdict.case,
        predicted=verdict.predicted,
        exact=result.value,
        match=agree and verdict.predicted == result.value,
        solveNodes=sum(r.explored for r in results),
        elapsedMs=round(sum(r.elapsed for r in results) * 1e3, 3),
    )


def _verify_job(job: tuple[list[tuple[int, int]], int, str]) -> VerificationRecord:
    return verify_tree(*job)


def verify_trees(max_n: int, jobs: int = 1, solver: str = "exhaustive",
                 min_n: int = 3) -> Iterable[VerificationRecord]:
    """One record per free tree with ``min_n <= n <= max_n``, in enumeration order."""
    work = [(t.edges(), n, solver) for n in range(min_n, max_n + 1) for t in enumerate_free_trees(n)]
    if jobs <= 1:
        yield from map(_verify_job, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_verify_job, work, chunksize=4)


def cmd_verify_trees(args) -> int:
    limit = 11 if args.allow_slow else 9
    if not 3 <= args.max_n <= limit:
        raise CliExit(EXIT_PARSE, f"max-n must lie in 3..{limit} (--allow-slow raises the cap to 11)")
    fields = _fields(RECORD_FIELDS, not args.no_timing)
    out = sys.stdout
    if not args.json:
        out.write("# " + "\t".join(fields) + "\n")
    t0 = time.perf_counter()
    total = mismatches = 0
    for rec in verify_trees(args.max_n, args.jobs, args.solver):
        total += 1
        mismatches += not rec.match
        _emit(asdict(rec), fields, args.json, out)
    wall = time.perf_counter() - t0
    summary = {"trees": total, "mismatches": mismatches}
    if not args.no_timing:
        summary["wallSeconds"] = round(wall, 3)
    if args.json:
        out.write(json.dumps({"summary": summary}) + "\n")
    else:
        out.write("# summary\t" + "\t".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    return EXIT_MISMATCH if mismatches else 0


# lemmas

def cmd_lemmas(args) -> int:
    if not 3 <= args.max_n <= 8:
        raise CliExit(EXIT_PARSE, "max-n must lie in 3..8")
    ledger = LemmaLedger()
    for n in range(3, args.max_n + 1):
        for t in enumerate_free_trees(n):
            lemma_hull_checks(t, ledger)
    fields = ("lemma", "passed", "failed", "skipped")
    if not args.json:
        print("# " + "\t".join(fields))
    for name in LEMMAS:
        row = {"lemma": name, "passed": ledger.passed.get(name, 0),
               "failed": ledger.failed.get(name, 0), "skipped": ledger.skipped.get(name, 0)}
        _emit(row, fields, args.json, sys.stdout)
    for line in ledger.failures:
        print(f"FAIL {line}", file=sys.stderr)
    return 0 if ledger.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geodex", description="Geodesic convexity of complementary prisms.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("input", help="graph file, or - for stdin")
        sp.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")

    def reporting(sp):
        sp.add_argument("--json", action="store_true", help="one JSON object per line")
        sp.add_argument("--no-timing", action="store_true", help="omit timing fields")

    sp = sub.add_parser("con", help="exact convexity number of a graph")
    graph_input(sp)
    reporting(sp)
    sp.add_argument("--prism", action="store_true", help="solve the complementary prism of the input")
    sp.add_argument("--solver", choices=["exhaustive", "bnb", "both"], default="exhaustive")
    sp.set_defaults(func=cmd_con)

    sp = sub.add_parser("prism", help="emit the complementary prism as an edge list")
    graph_input(sp)
    sp.set_defaults(func=cmd_prism)

    sp = sub.add_parser("gen", help="emit a named tree as an edge list")
    sp.add_argument("family", choices=["path", "star", "double_star", "spider", "caterpillar", "star_of_stars"])
    sp.add_argument("params", nargs="*", help="integers; comma-separated for lists")
    sp.add_argument("--prism", action="store_true", help="emit the complementary prism instead")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("enum", help="list free trees: canonical code, n, edges")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("verify-trees", help="check the tree formula against the exact solver")
    sp.add_argument("max_n", type=int, nargs="?", default=9)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--solver", choices=["exhaustive", "bnb", "both"], default="exhaustive")
    sp.add_argument("--allow-slow", action="store_true")
    reporting(sp)
    sp.set_defaults(func=cmd_verify_trees)

    sp = sub.add_parser("lemmas", help="replay the hull lemmas on all small trees")
    sp.add_argument("max_n", type=int, nargs="?", default=8)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_lemmas)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except TreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
