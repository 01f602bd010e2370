"""Command-line front end.

Exit codes: 0 success, 1 a verified property failed, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .cache import ResultCache, make_key
from .canon import canonical_digraph
from .classifiers import classify
from .constructions import (
    UniversalTreeSpec,
    count_universal_tree,
    greedy_embed_forest,
    greedy_embed_tree,
    matching_reversal_family,
    out_star,
    star_freeness_monte_carlo,
    universal_tree,
    universal_tree_minus,
)
from .enumeration import (
    DEFAULT_CAPS,
    Caps,
    CountReport,
    Method,
    count_f_free_subgraphs,
    count_h_free_orientations,
    d_n_h,
    ex,
    n_n_f,
)
from .errors import InvalidArgumentError, OrientFreeError, ParseError, ResourceLimitError
from .graphs import (
    OrientedGraph,
    UndirectedGraph,
    directed_cycle,
    directed_path,
    q_path,
    transitive_tournament,
    turan_graph,
    underlying,
)
from .kozma_moran import verify_kozma_moran
from .pathalgo import run_state_algorithm
from .textio import emit_graph, graph_to_json, parse_graph, parse_lines
from .verify import DEFAULT_SEED, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# Largest host (in edges) accepted by count/subcount unless --cap-edges says otherwise.
DEFAULT_COUNT_EDGES = 40

FAMILIES = (
    "matching",
    "out-star",
    "universal",
    "universal-minus",
    "directed-path",
    "directed-cycle",
    "transitive-tournament",
    "q",
    "turan",
    "embed",
    "star-mc",
)


class UsageError(Exception):
    pass


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if not sep or a > b or a < 0:
        raise argparse.ArgumentTypeError(f"expected a..b with 0 <= a <= b, got {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    common.add_argument("--no-meta", action="store_true", help="omit timings and cache flags")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--cap-vertices", type=int)
    common.add_argument("--cap-edges", type=int)

    parser = argparse.ArgumentParser(prog="orientfree", description="Count and certify H-free orientations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    def method(p: argparse.ArgumentParser) -> None:
        p.add_argument("--method", choices=[m.value for m in Method], default=Method.PRUNED.value)

    p = add("count", "D(G,H): number of H-free orientations of G")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-p", "--pattern", required=True)
    p.add_argument("--workers", type=int, default=1)
    method(p)

    p = add("subcount", "N(G,F): number of F-free spanning subgraphs of G")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-p", "--pattern", required=True)
    method(p)

    p = add("dnh", "D(n,H): maximum of D(G,H) over n-vertex graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-p", "--pattern", required=True)
    p.add_argument("--workers", type=int, default=1)
    method(p)

    for name, text in (("ex", "ex(n,F): Turan number"), ("nnf", "N(n,F): F-free labeled graphs on n vertices")):
        p = add(name, text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("-p", "--pattern", required=True)
        method(p)

    p = add("classify", "forest / antidirected / 1-almost antidirected / predicted growth")
    p.add_argument("-p", "--pattern", required=True)

    p = add("construct", "emit a member of a named family")
    p.add_argument("family", nargs="?", choices=FAMILIES)
    p.add_argument("--list", action="store_true", help="list families, or with a family stream every member")
    for flag in ("--n", "--k", "--s", "--t", "--tprime", "--trials"):
        p.add_argument(flag, type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("-p", "--pattern")

    p = add("trace", "run the state-assignment algorithm on an oriented graph")
    p.add_argument("-g", "--graph", required=True)

    p = add("km-verify", "check D(G,H) <= |str| <= N(G,F)")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-p", "--pattern", required=True)

    p = add("sweep", "tabulate D(n,H) over a range of n, resumable")
    p.add_argument("-p", "--pattern", required=True)
    p.add_argument("--range", type=_parse_range, required=True, dest="span")
    p.add_argument("--workers", type=int, default=1)

    add("verify-all", "run the full invariant suite")
    return parser


# ---------------------------------------------------------------------------
# Inputs


def _read_graph(text: str, kind: str) -> Any:
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            body = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        graphs = parse_lines(body, kind)  # type: ignore[arg-type]
        if len(graphs) != 1:
            raise UsageError(f"{path} must contain exactly one graph, found {len(graphs)}")
        return graphs[0]
    return parse_graph(text, kind)  # type: ignore[arg-type]


def _undirected(text: str) -> UndirectedGraph:
    return _read_graph(text, "undirected")


def _oriented(text: str) -> OrientedGraph:
    return _read_graph(text, "oriented")


def _caps(args: argparse.Namespace) -> Caps:
    changes: dict[str, int] = {}
    if args.cap_vertices is not None:
        field = {
            "dnh": "dnh_vertices",
            "sweep": "dnh_vertices",
            "ex": "ex_vertices",
            "nnf": "nnf_vertices",
            "construct": "tree_vertices",
            "trace": "path_vertices",
        }.get(args.command)
        if field:
            changes[field] = args.cap_vertices
    if args.cap_edges is not None and args.command == "km-verify":
        changes["shatter_ground"] = args.cap_edges
    return dataclasses.replace(DEFAULT_CAPS, **changes)


def _require(args: argparse.Namespace, *names: str) -> list[int]:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


# ---------------------------------------------------------------------------
# Output


def _edges_text(g: UndirectedGraph | None) -> str:
    return "" if g is None else " ".join(f"{u}-{v}" for u, v in g.edges)


def _report_row(n: int, rep: CountReport, meta: bool) -> dict[str, Any]:
    return {
        "n": n,
        "value": str(rep.value),
        "witness-edges": _edges_text(rep.witness),
        "elapsed_ms": rep.elapsed_ms if meta else "",
    }


def _render(payload: Any, fmt: str, rows: list[dict[str, Any]] | None = None) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows is None:
            rows = [{k: (json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v)
                     for k, v in payload.items()}]
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if rows is not None:
        keys = list(rows[0])
        widths = [max(len(k), *(len(str(r[k])) for r in rows)) for k in keys]
        lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
        lines += ["  ".join(str(r[k]).ljust(w) for k, w in zip(keys, widths)) for r in rows]
        return "\n".join(line.rstrip() for line in lines) + "\n"
    if isinstance(payload, str):
        return payload if payload.endswith("\n") else payload + "\n"
    out = []
    for k, v in payload.items():
        out.append(f"{k}: {json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Commands


def _cmd_count(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    g, h = _undirected(args.graph), _oriented(args.pattern)
    limit = args.cap_edges if args.cap_edges is not None else DEFAULT_COUNT_EDGES
    if g.m > limit:
        raise ResourceLimitError("count_edges", limit, g.m)
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    rep = count_h_free_orientations(g, h, Method(args.method), args.workers)
    return rep.to_json(not args.no_meta), [_report_row(g.n, rep, not args.no_meta)], EXIT_OK


def _cmd_subcount(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    g, f = _undirected(args.graph), _undirected(args.pattern)
    limit = args.cap_edges if args.cap_edges is not None else DEFAULT_COUNT_EDGES
    if g.m > limit:
        raise ResourceLimitError("count_edges", limit, g.m)
    rep = count_f_free_subgraphs(g, f, Method(args.method))
    return rep.to_json(not args.no_meta), [_report_row(g.n, rep, not args.no_meta)], EXIT_OK


def _cmd_maximum(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    method = Method(args.method)
    if args.command == "dnh":
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        rep = d_n_h(args.n, _oriented(args.pattern), caps, method, args.workers)
    elif args.command == "ex":
        rep = ex(args.n, _undirected(args.pattern), caps, method)
    else:
        rep = n_n_f(args.n, _undirected(args.pattern), caps, method)
    return rep.to_json(not args.no_meta), [_report_row(args.n, rep, not args.no_meta)], EXIT_OK


def _cmd_classify(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    return classify(_oriented(args.pattern)), None, EXIT_OK


def _construct_one(args: argparse.Namespace, caps: Caps) -> Any:
    fam = args.family
    if fam == "out-star":
        (k,) = _require(args, "k")
        return out_star(k)
    if fam in ("universal", "universal-minus"):
        if fam == "universal":
            s, t = _require(args, "s", "t")
            spec = UniversalTreeSpec(s, t, args.tprime)
        else:
            (t,) = _require(args, "t")
            spec = None
        try:
            return universal_tree(spec, caps.tree_vertices) if spec else universal_tree_minus(t, caps.tree_vertices)
        except ResourceLimitError:
            if spec is not None:
                v, o, i = count_universal_tree(spec)
                sys.stderr.write(f"H has {v} vertices ({o} out-leaves, {i} in-leaves)\n")
            raise
    if fam == "directed-path":
        return directed_path(_require(args, "k")[0])
    if fam == "directed-cycle":
        return directed_cycle(_require(args, "k")[0])
    if fam == "transitive-tournament":
        return transitive_tournament(_require(args, "k")[0])
    if fam == "q":
        return q_path()
    if fam == "turan":
        n, k = _require(args, "n", "k")
        return turan_graph(n, k)
    if fam == "matching":
        (n,) = _require(args, "n")
        return next(matching_reversal_family(n))
    if fam == "embed":
        if args.pattern is None:
            raise UsageError("embed needs --pattern")
        (k,) = _require(args, "k")
        h = _oriented(args.pattern)
        tree_like = underlying(h).is_connected()
        emb = greedy_embed_tree(h, k) if tree_like else greedy_embed_forest(h, k)
        host = f"H_{{{k},{k}}}" if tree_like else f"H_{{{k + 1},{k}}}"
        return {"host": host, "mapping": list(emb.mapping)}
    if fam == "star-mc":
        k, n, trials = _require(args, "k", "n", "trials")
        eps = args.epsilon if args.epsilon is not None else 0.2
        est = star_freeness_monte_carlo(k, n, eps, trials, seed=args.seed)
        out = dataclasses.asdict(est)
        out["probability"] = f"{est.probability:.6f}"
        if est.log2_lower_bound is not None:
            out["log2_lower_bound"] = f"{est.log2_lower_bound:.3f}"
        out["target_exponent"] = f"{est.target_exponent:.3f}"
        return out
    raise UsageError(f"unknown family {fam}")


def _cmd_construct(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    if args.family is None:
        if not args.list:
            raise UsageError("construct needs a family (see --list)")
        if args.format == "json":
            return {"families": list(FAMILIES)}, None, EXIT_OK
        return "\n".join(FAMILIES), None, EXIT_OK
    if args.list:
        if args.family != "matching":
            raise UsageError("--list streams members of the matching family only")
        (n,) = _require(args, "n")
        members = [emit_graph(m) for m in matching_reversal_family(n)]
        if args.format == "json":
            return {"members": members}, None, EXIT_OK
        return "\n".join(members), None, EXIT_OK
    result = _construct_one(args, caps)
    if isinstance(result, (UndirectedGraph, OrientedGraph)):
        if args.format == "json":
            return {"graph": emit_graph(result), **graph_to_json(result)}, None, EXIT_OK
        return emit_graph(result), None, EXIT_OK
    return result, None, EXIT_OK


def _cmd_trace(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    d = _oriented(args.graph)
    if d.n > caps.path_vertices:
        raise ResourceLimitError("path_vertices", caps.path_vertices, d.n)
    return run_state_algorithm(d).to_json(), None, EXIT_OK


def _cmd_km(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    rep = verify_kozma_moran(_undirected(args.graph), _oriented(args.pattern), caps=caps)
    return rep.to_json(), None, EXIT_OK if rep.ok else EXIT_FAILED


def _cmd_sweep(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    h = _oriented(args.pattern)
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    lo, hi = args.span
    if hi > caps.dnh_vertices:
        raise ResourceLimitError("dnh_vertices", caps.dnh_vertices, hi)
    cache = ResultCache()
    canonical = emit_graph(canonical_digraph(h))
    meta = not args.no_meta
    rows, table = [], []
    for n in range(lo, hi + 1):
        key = make_key("dnh", {"n": n, "pattern": canonical}, caps)
        hit = cache.get(key)
        if hit is None:
            rep = d_n_h(n, h, caps, Method.PRUNED, args.workers)
            hit = {
                "value": str(rep.value),
                "witness": graph_to_json(rep.witness),
                "elapsed_ms": rep.elapsed_ms,
            }
            cache.put(key, hit)
            cached = False
        else:
            cached = True
        row: dict[str, Any] = {"n": n, "value": hit["value"], "witness": hit["witness"]}
        if meta:
            row["elapsed_ms"] = hit["elapsed_ms"]
            row["cached"] = cached
        rows.append(row)
        edges = " ".join(f"{u}-{v}" for u, v in hit["witness"]["edges"])
        table.append({"n": n, "value": hit["value"], "witness-edges": edges,
                      "elapsed_ms": hit["elapsed_ms"] if meta else ""})
    return {"pattern": emit_graph(h), "rows": rows}, table, EXIT_OK


def _cmd_verify_all(args: argparse.Namespace, caps: Caps) -> tuple[Any, list | None, int]:
    report = run_suite(args.seed, meta=not args.no_meta)
    rows = [{"check": c["name"], "passed": c["passed"]} for c in report["checks"]]
    return report, rows, EXIT_OK if report["passed"] else EXIT_FAILED


COMMANDS = {
    "count": _cmd_count,
    "subcount": _cmd_subcount,
    "dnh": _cmd_maximum,
    "ex": _cmd_maximum,
    "nnf": _cmd_maximum,
    "classify": _cmd_classify,
    "construct": _cmd_construct,
    "trace": _cmd_trace,
    "km-verify": _cmd_km,
    "sweep": _cmd_sweep,
    "verify-all": _cmd_verify_all,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        caps = _caps(args)
        payload, rows, code = COMMANDS[args.command](args, caps)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except (UsageError, InvalidArgumentError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except OrientFreeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    text = _render(payload, args.format, rows if args.format != "json" else None)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
