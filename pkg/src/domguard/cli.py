"""Command-line front end.

Subcommands: gen, solve, verify, construct, audit, ng, conjecture.
Graphs come from exactly one source: --family SPEC, --input FILE (graph6,
one per line) or stdin.  Family specs use a small colon/comma grammar:

    spec      := composite | atom
    atom      := path:N | cycle:N | complete:N | star:N | empty:N
               | hypercube:N | hamming:K:N | randomtree:N | g6:<graph6>
    composite := prod:spec,spec | join:spec,spec
               | corona:spec,N | complement:spec

Exit codes: 0 success (including incomplete audits), 1 usage error,
2 an applicable bound failed during audit, 3 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import bounds as bounds_mod
from . import constructions as cons
from .graph import (Graph, GraphError, VertexSet, cartesian_product, complement,
                    corona, generate, join)
from .graph6 import EdgeListError, Graph6Error, parse_graph6, write_graph6
from .protection import (GuardFunction, ProtectionError, defense_moves,
                         first_failing_vertex, is_df, is_k_dominating, is_rdf,
                         is_secure_dominating, is_wrdf)
from .solvers import DEFAULT_LIMITS, INVARIANT_IDS, LimitExceeded, SolverLimits, solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUND_VIOLATION = 2
EXIT_IO = 3


class SpecError(ValueError):
    """Family-spec grammar error with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree (random parent-sequence decode)."""
    if n < 1:
        raise GraphError(f"random tree order must be >= 1, got {n}")
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(n, edges)


_G6_CHARS = frozenset(chr(c) for c in range(63, 127))


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        raise SpecError("expected an integer", pos)
    return int(text[pos:end]), end


def _parse_name(text: str, pos: int) -> tuple[str, int]:
    end = pos
    while end < len(text) and (text[end].isalnum() or text[end] == "_"):
        end += 1
    if end == pos:
        raise SpecError("expected a family or operator name", pos)
    return text[pos:end], end


def _expect(text: str, pos: int, ch: str) -> int:
    if pos >= len(text) or text[pos] != ch:
        raise SpecError(f"expected {ch!r}", pos)
    return pos + 1


def _parse_spec(text: str, pos: int, rng: random.Random) -> tuple[Graph, int]:
    name, pos = _parse_name(text, pos)
    start = pos - len(name)
    try:
        if name in ("prod", "join"):
            pos = _expect(text, pos, ":")
            left, pos = _parse_spec(text, pos, rng)
            pos = _expect(text, pos, ",")
            right, pos = _parse_spec(text, pos, rng)
            op = cartesian_product if name == "prod" else join
            return op(left, right), pos
        if name == "corona":
            pos = _expect(text, pos, ":")
            base, pos = _parse_spec(text, pos, rng)
            pos = _expect(text, pos, ",")
            t, pos = _parse_int(text, pos)
            return corona(base, t), pos
        if name == "complement":
            pos = _expect(text, pos, ":")
            base, pos = _parse_spec(text, pos, rng)
            return complement(base), pos
        if name == "g6":
            pos = _expect(text, pos, ":")
            end = pos
            while end < len(text) and text[end] in _G6_CHARS and text[end] != ",":
                end += 1
            if end == pos:
                raise SpecError("expected graph6 data after g6:", pos)
            return parse_graph6(text[pos:end]), end
        if name == "randomtree":
            pos = _expect(text, pos, ":")
            n, pos = _parse_int(text, pos)
            return random_tree(n, rng), pos
        if name == "hamming":
            pos = _expect(text, pos, ":")
            k, pos = _parse_int(text, pos)
            pos = _expect(text, pos, ":")
            t, pos = _parse_int(text, pos)
            return generate("hamming", k, t), pos
        if name in ("path", "cycle", "complete", "star", "empty", "hypercube"):
            pos = _expect(text, pos, ":")
            t, pos = _parse_int(text, pos)
            return generate(name, t), pos
    except (GraphError, Graph6Error) as exc:
        raise SpecError(str(exc), start) from exc
    raise SpecError(f"unknown family or operator {name!r}", start)


def parse_family_spec(text: str, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    g, pos = _parse_spec(text, 0, rng)
    if pos != len(text):
        raise SpecError("trailing input after a complete spec", pos)
    return g


# ---------------------------------------------------------------------------
# Input plumbing.
# ---------------------------------------------------------------------------

@dataclass
class CliConfig:
    family: Optional[str]
    input_path: Optional[str]
    fmt: str
    limit_n: Optional[int]
    workers: int
    seed: int

    def limits(self) -> SolverLimits:
        if self.limit_n is not None:
            if self.limit_n < 1:
                raise SpecError("--limit-n must be positive", 0)
            return DEFAULT_LIMITS.scaled(self.limit_n)
        return DEFAULT_LIMITS


def _config(args) -> CliConfig:
    return CliConfig(getattr(args, "family", None), getattr(args, "input", None),
                     getattr(args, "format", "text"), getattr(args, "limit_n", None),
                     getattr(args, "workers", 1), getattr(args, "seed", 0))


def _read_graph_lines(cfg: CliConfig) -> list[str]:
    if cfg.family is not None and cfg.input_path is not None:
        raise SpecError("choose one input source: --family or --input", 0)
    if cfg.family is not None:
        return [write_graph6(parse_family_spec(cfg.family, cfg.seed))]
    if cfg.input_path is not None:
        with open(cfg.input_path, "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return [line.strip() for line in text.splitlines() if line.strip()]


def _read_graphs(cfg: CliConfig) -> list[Graph]:
    return [parse_graph6(line) for line in _read_graph_lines(cfg)]


def _read_single_graph(cfg: CliConfig) -> Graph:
    graphs = _read_graphs(cfg)
    if len(graphs) != 1:
        raise SpecError(f"this command expects exactly one graph, got {len(graphs)}", 0)
    return graphs[0]


def _emit(payload, fmt: str, render_text, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(render_text(payload))


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    cfg = _config(args)
    rng = random.Random(cfg.seed)
    for spec in args.specs:
        g, pos = _parse_spec(spec, 0, rng)
        if pos != len(spec):
            raise SpecError("trailing input after a complete spec", pos)
        print(write_graph6(g))
    return EXIT_OK


def _cmd_solve(args) -> int:
    cfg = _config(args)
    limits = cfg.limits()
    wanted = args.invariants.split(",") if args.invariants else ["gamma", "gamma_weak_roman", "gamma_secure"]
    for inv in wanted:
        if inv not in INVARIANT_IDS and not (inv.startswith("gamma_") and inv[6:].isdigit()):
            raise SpecError(f"unknown invariant {inv!r}; known: {', '.join(INVARIANT_IDS)}", 0)
    results = []
    for line in _read_graph_lines(cfg):
        g = parse_graph6(line)
        entry = {"graph6": line, "n": g.n, "results": []}
        for inv in wanted:
            try:
                entry["results"].append(solve(g, inv, limits).to_json_dict())
            except LimitExceeded as exc:
                entry["results"].append({"invariant_id": inv, "error": str(exc)})
        results.append(entry)

    def render(payload) -> str:
        lines = []
        for entry in payload:
            lines.append(f"graph {entry['graph6']} (n={entry['n']})")
            for res in entry["results"]:
                if "error" in res:
                    lines.append(f"  {res['invariant_id']}: skipped ({res['error']})")
                else:
                    w = res["witness"]
                    wtxt = w.get("text") or w.get("sets") or w.get("edges")
                    lines.append(f"  {res['invariant_id']} = {res['value']}  "
                                 f"witness {wtxt}  nodes {res['nodes_explored']}")
        return "\n".join(lines) + "\n"

    _emit(results, cfg.fmt, render)
    return EXIT_OK


_SET_CLASSES = ("df", "secure", "kdom")
_FUNCTION_CLASSES = ("rdf", "wrdf")


def _cmd_verify(args) -> int:
    cfg = _config(args)
    g = _read_single_graph(cfg)
    kind = args.cls
    if kind in _FUNCTION_CLASSES:
        obj = GuardFunction.from_text(g, args.object)
        ok = is_rdf(g, obj) if kind == "rdf" else is_wrdf(g, obj)
    elif kind in _SET_CLASSES:
        members = VertexSet.from_text(args.object, g.n)
        if kind == "df":
            ok = is_df(g, members)
        elif kind == "secure":
            ok = is_secure_dominating(g, members)
        else:
            ok = is_k_dominating(g, members, args.k)
        obj = members
    else:
        raise SpecError(f"unknown class {args.cls!r}", 0)
    failing = None if ok else first_failing_vertex(g, kind, obj, args.k)
    payload = {"class": kind, "object": args.object, "ok": ok, "failing_vertex": failing,
               "moves": None}
    if kind in ("wrdf", "secure") and failing is not None:
        f = obj if kind == "wrdf" else GuardFunction.from_vertex_set(g, obj)
        if f.values[failing] == 0:
            payload["moves"] = [{"attacked": m.attacked, "defender": m.defender,
                                 "valid": m.valid} for m in defense_moves(g, f, failing)]

    def render(p) -> str:
        lines = [f"class {p['class']}: {'VALID' if p['ok'] else 'INVALID'}"]
        if p["failing_vertex"] is not None:
            lines.append(f"first failing vertex: {p['failing_vertex']}")
        if p["moves"] is not None:
            for m in p["moves"]:
                lines.append(f"  defender {m['defender']}: {'valid' if m['valid'] else 'leaves an undefended vertex'}")
        return "\n".join(lines) + "\n"

    _emit(payload, cfg.fmt, render)
    return EXIT_OK


_ALGORITHMS = ("two-thirds", "tree-secure", "complement-secure", "clique-cover",
               "two-dominating", "product-lift", "product-secure", "aaaa")


def _cmd_construct(args) -> int:
    cfg = _config(args)
    limits = cfg.limits()
    g = _read_single_graph(cfg)
    alg = args.algorithm
    second = None
    if args.second is not None:
        second = parse_family_spec(args.second, cfg.seed)
    if alg == "two-thirds":
        cert = cons.tree_wrdf_two_thirds(g)
    elif alg == "tree-secure":
        cert = cons.tree_secure_set(g)
    elif alg == "complement-secure":
        cert = cons.complement_secure_set(g, limits)
    elif alg == "clique-cover":
        cert = cons.clique_cover_secure_set(g, limits)
    elif alg == "two-dominating":
        cert = cons.two_dominating_as_secure(g, limits)
    elif alg == "product-lift":
        if second is None or args.object is None:
            raise SpecError("product-lift needs --second H and --object (function on the input graph)", 0)
        cert = cons.product_wrdf_lift(GuardFunction.from_text(g, args.object), second)
    elif alg == "product-secure":
        if second is None:
            raise SpecError("product-secure needs --second H", 0)
        cert = cons.product_secure_set(g, second, limits)
    elif alg == "aaaa":
        if second is None or args.object is None:
            raise SpecError("aaaa needs --second H and --object (function on H)", 0)
        cert = cons.product_wrdf_aaaa(g, GuardFunction.from_text(second, args.object), limits)
    else:
        raise SpecError(f"unknown algorithm {alg!r}; known: {', '.join(_ALGORITHMS)}", 0)
    payload = cert.to_json_dict()

    def render(p) -> str:
        return (f"{p['theorem_id']}: claimed <= {p['claimed_bound']}, achieved {p['achieved']}, "
                f"valid={p['valid']}\nobject: {p['object']['text']}\n")

    _emit(payload, cfg.fmt, render)
    return EXIT_OK


def _audit_one_line(line: str, limit_n: Optional[int]) -> dict:
    limits = DEFAULT_LIMITS.scaled(limit_n) if limit_n else DEFAULT_LIMITS
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return {"graph6": line, "error": str(exc)}
    if limit_n is not None and g.n > limit_n:
        return {"graph6": line, "skipped": f"order {g.n} above --limit-n {limit_n}"}
    try:
        return bounds_mod.audit(g, limits).to_json_dict()
    except LimitExceeded as exc:
        return {"graph6": line, "skipped": str(exc)}


def _cmd_audit(args) -> int:
    cfg = _config(args)
    if cfg.workers < 1:
        raise SpecError("--workers must be positive", 0)
    lines = _read_graph_lines(cfg)
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            reports = list(pool.map(_audit_one_line, lines,
                                    [cfg.limit_n] * len(lines)))
    else:
        reports = [_audit_one_line(line, cfg.limit_n) for line in lines]
    violation = any(not rep.get("pass", True) for rep in reports if "bounds" in rep)
    bad_parse = any("error" in rep for rep in reports)

    def render(payload) -> str:
        lines_out = []
        for rep in payload:
            if "error" in rep:
                lines_out.append(f"{rep['graph6']}: PARSE ERROR {rep['error']}")
            elif "skipped" in rep:
                lines_out.append(f"{rep['graph6']}: skipped ({rep['skipped']})")
            else:
                verdict = "pass" if rep["pass"] else "FAIL"
                extra = " (incomplete)" if rep["incomplete"] else ""
                applicable = sum(1 for b in rep["bounds"] if b["applicable"])
                lines_out.append(f"{rep['graph6']}: {verdict}{extra} "
                                 f"({applicable} bounds applicable)")
                for b in rep["bounds"]:
                    if b["applicable"] and not b["holds"]:
                        lines_out.append(f"  VIOLATED {b['id']}: claimed {b['claimed']}, actual {b['actual']}")
        return "\n".join(lines_out) + "\n"

    _emit(reports, cfg.fmt, render)
    if bad_parse:
        return EXIT_IO
    return EXIT_BOUND_VIOLATION if violation else EXIT_OK


def _cmd_ng(args) -> int:
    cfg = _config(args)
    g = _read_single_graph(cfg)
    record = bounds_mod.nordhaus_gaddum(g, cfg.limits())

    def render(p) -> str:
        lines = [f"n={p['n']}  weak_roman={p['gamma_weak_roman']} secure={p['gamma_secure']}  "
                 f"complement: weak_roman={p['gamma_weak_roman_complement']} secure={p['gamma_secure_complement']}",
                 f"secure sum {p['sum_secure']} <= {p['sum_bound']}; "
                 f"secure product {p['product_secure']} <= {p['product_bound']}"]
        if p["refined_applicable"]:
            lines.append(f"refined bounds apply via {p['refined_via']}: "
                         f"sum <= {p['refined_sum_bound']}, product <= {p['refined_product_bound']}")
        lines.append("all checks pass" if p["pass"] else "CHECK FAILED")
        return "\n".join(lines) + "\n"

    _emit(record, cfg.fmt, render)
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    cfg = _config(args)
    family = {"path": "path_x_k2", "cycle": "cycle_x_k2"}[args.family]
    rows = bounds_mod.conjecture_scan(family, args.t_max, cfg.limits())
    payload = {"family": family, "rows": rows}

    def render(p) -> str:
        lines = [f"{'t':>3} {'exact':>6} {'conjectured':>12} match"]
        for r in p["rows"]:
            lines.append(f"{r['t']:>3} {r['exact']:>6} {r['conjectured']:>12} {r['match']}")
        return "\n".join(lines) + "\n"

    _emit(payload, cfg.fmt, render)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing.
# ---------------------------------------------------------------------------

def _add_io_options(p: argparse.ArgumentParser, multi: bool = True) -> None:
    p.add_argument("--family", help="family spec (see grammar in the main help)")
    p.add_argument("--input", help="file of graph6 lines (default: stdin)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--limit-n", type=int, dest="limit_n",
                   help="clamp every solver limit to this order")
    p.add_argument("--seed", type=int, default=0, help="seed for random specs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domguard", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit family graphs as graph6")
    p_gen.add_argument("specs", nargs="+", help="family specs, one graph6 line each")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(fn=_cmd_gen)

    p_solve = sub.add_parser("solve", help="exact invariant values with witnesses")
    _add_io_options(p_solve)
    p_solve.add_argument("--invariants",
                         help=f"comma list from: {', '.join(INVARIANT_IDS)} "
                              "(default gamma,gamma_weak_roman,gamma_secure)")
    p_solve.set_defaults(fn=_cmd_solve)

    p_verify = sub.add_parser("verify", help="check a guard function or vertex set")
    _add_io_options(p_verify)
    p_verify.add_argument("--class", dest="cls", required=True,
                          choices=_SET_CLASSES + _FUNCTION_CLASSES)
    p_verify.add_argument("--object", required=True,
                          help="guard digits '2,0,1' for rdf/wrdf, indices '0,2' for set classes")
    p_verify.add_argument("--k", type=int, default=2, help="k for the kdom class")
    p_verify.set_defaults(fn=_cmd_verify)

    p_con = sub.add_parser("construct", help="run a constructive bound, print its certificate")
    _add_io_options(p_con)
    p_con.add_argument("--algorithm", required=True, choices=_ALGORITHMS)
    p_con.add_argument("--second", help="family spec of the second factor (product algorithms)")
    p_con.add_argument("--object", help="guard function text for product-lift (on the input) / aaaa (on --second)")
    p_con.set_defaults(fn=_cmd_construct)

    p_audit = sub.add_parser("audit", help="evaluate every applicable bound per graph")
    _add_io_options(p_audit)
    p_audit.add_argument("--workers", type=int, default=1)
    p_audit.set_defaults(fn=_cmd_audit)

    p_ng = sub.add_parser("ng", help="Nordhaus-Gaddum record for one graph")
    _add_io_options(p_ng)
    p_ng.set_defaults(fn=_cmd_ng)

    p_conj = sub.add_parser("conjecture", help="exact prism values versus the conjectured closed form")
    p_conj.add_argument("--family", choices=("path", "cycle"), required=True)
    p_conj.add_argument("--t-max", type=int, dest="t_max", required=True)
    p_conj.add_argument("--format", choices=("text", "json"), default="text")
    p_conj.add_argument("--limit-n", type=int, dest="limit_n")
    p_conj.set_defaults(fn=_cmd_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, EdgeListError, ProtectionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (GraphError, cons.InapplicableError, LimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
