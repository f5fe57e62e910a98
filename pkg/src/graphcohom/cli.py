"""Command-line interface.

Verbs: compute, family, batch, chromatic, check-ses, check-les,
check-kunneth, check-pendant.  Shared flags can also come from environment
variables with the GRAPHCOHOM_ prefix (command-line flags win).  JSON output
is deterministic: the same config and input produce byte-identical bytes
regardless of worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .chromatic import (
    chromatic_deletion_contraction,
    chromatic_state_sum,
    substitute_one_plus_q,
)
from .graphs import (
    Graph,
    LoopContractionError,
    ParseError,
    components,
    cycle_graph,
    null_graph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    permute_edge_order,
    simplify,
)
from .homology import (
    BigradedGroups,
    chain_level_euler,
    cohomology,
    graded_euler_characteristic,
    poincare_polynomial,
)
from .oracles import (
    cycle_cohomology,
    kunneth_report,
    les_report,
    null_cohomology,
    pendant_report,
    ses_report,
    tree_cohomology,
)
from .poly import IntPoly, format_poly, format_two_var_poly
from .states import (
    DEFAULT_EDGE_BUDGET,
    CapacityError,
    cube_sign_crosscheck,
    dump_differentials,
    enumerate_basis,
    verify_d_squared,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 3
EXIT_IO = 4
EXIT_CAPACITY = 5

ENV_PREFIX = "GRAPHCOHOM_"

FAMILIES = {"null": null_graph, "tree_path": path_graph, "cycle": cycle_graph}
FAMILY_ORACLES = {
    "null": null_cohomology,
    "tree_path": tree_cohomology,
    "cycle": cycle_cohomology,
}


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: input source plus the shared knobs."""

    source: str | None = None
    fmt: str = "edgelist"
    output: str = "json"
    verify: str = "none"
    budget: int = DEFAULT_EDGE_BUDGET
    workers: int | None = None
    seed: int = 0


def _env_default(name: str, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    if isinstance(fallback, int):
        try:
            return int(raw)
        except ValueError:
            raise SystemExit(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")
    return raw


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", dest="fmt", choices=["edgelist", "graph6"],
                        default=_env_default("FORMAT", "edgelist"))
    shared.add_argument("--output", choices=["json", "table"],
                        default=_env_default("OUTPUT", "json"))
    shared.add_argument("--verify", choices=["none", "fast", "all"],
                        default=_env_default("VERIFY", "none"))
    shared.add_argument("--budget", type=int,
                        default=_env_default("BUDGET", DEFAULT_EDGE_BUDGET))
    shared.add_argument("--workers", type=int,
                        default=_env_default("WORKERS", 0) or None)
    shared.add_argument("--seed", type=int, default=_env_default("SEED", 0))

    parser = argparse.ArgumentParser(
        prog="graphcohom",
        description="Exact bigraded cohomology of multigraphs over Z.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", parents=[shared],
                       help="cohomology of one graph from a file")
    p.add_argument("--input", required=True, help="input path, or - for stdin")
    p.add_argument("--dump-matrices", metavar="PATH",
                   help="also write all differential entries as 'i j row col value' lines")

    p = sub.add_parser("family", parents=[shared],
                       help="cohomology of a family member, checked against its formula")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("n", type=int)

    p = sub.add_parser("batch", parents=[shared],
                       help="compute every input listed in a manifest file")
    p.add_argument("manifest")

    p = sub.add_parser("chromatic", parents=[shared],
                       help="chromatic polynomial only")
    p.add_argument("--input", required=True)

    for verb, needs_edge in [("check-ses", True), ("check-les", True),
                             ("check-pendant", True)]:
        p = sub.add_parser(verb, parents=[shared])
        p.add_argument("--input", required=True)
        p.add_argument("--edge", type=int, default=None,
                       help="edge index; default checks every applicable edge")

    p = sub.add_parser("check-kunneth", parents=[shared])
    p.add_argument("--input", required=True)
    p.add_argument("--other", required=True, help="second graph file")

    return parser


def _config_from_args(args, source=None) -> RunConfig:
    return RunConfig(
        source=source if source is not None else getattr(args, "input", None),
        fmt=args.fmt,
        output=args.output,
        verify=args.verify,
        budget=args.budget,
        workers=args.workers,
        seed=args.seed,
    )


def _load_graph(path: str, fmt: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    if fmt == "graph6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _graph_payload(g: Graph) -> dict:
    return {"vertex_count": g.vertex_count, "edges": [[a, b] for a, b in g.edges]}


def _groups_payload(h: BigradedGroups) -> list[dict]:
    return [
        {"i": i, "j": j, "free_rank": grp.free_rank, "torsion": list(grp.torsion)}
        for (i, j), grp in h.items()
    ]


def _is_tree(g: Graph) -> bool:
    return (
        g.vertex_count >= 1
        and not g.has_loop()
        and not g.has_parallel_edges()
        and g.edge_count == g.vertex_count - 1
        and components(g, (1 << g.edge_count) - 1).count == 1
    )


def _is_polygon(g: Graph) -> bool:
    return (
        g.vertex_count >= 3
        and not g.has_loop()
        and not g.has_parallel_edges()
        and g.edge_count == g.vertex_count
        and components(g, (1 << g.edge_count) - 1).count == 1
        and all(d == 2 for d in g.degrees())
    )


def run_checks(g: Graph, cfg: RunConfig) -> dict[str, bool]:
    """The verification set for one graph, keyed by check name."""
    if cfg.verify == "none":
        return {}
    h = cohomology(g, cfg.budget)
    euler = graded_euler_characteristic(h)
    checks = {
        "d_squared": verify_d_squared(g, cfg.budget),
        "euler_match": (
            euler == chain_level_euler(g, cfg.budget)
            and euler == substitute_one_plus_q(chromatic_deletion_contraction(g))
        ),
    }
    if cfg.verify != "all":
        return checks
    checks["cube_equivalence"] = cube_sign_crosscheck(g, cfg.budget)
    rng = random.Random(cfg.seed)
    n = g.edge_count
    invariant = True
    for _ in range(3):
        sigma = list(range(n))
        rng.shuffle(sigma)
        if cohomology(permute_edge_order(g, sigma), cfg.budget) != h:
            invariant = False
            break
    checks["ordering_invariance"] = invariant
    if g.has_loop():
        checks["loop_trivial"] = h.is_trivial()
    elif not g.edges:
        checks["null_formula"] = h == null_cohomology(g.vertex_count)
    elif _is_tree(g):
        checks["tree_formula"] = h == tree_cohomology(g.edge_count)
    elif _is_polygon(g):
        checks["cycle_formula"] = h == cycle_cohomology(g.edge_count)
    if g.has_parallel_edges() and not g.has_loop():
        checks["simplify_invariant"] = h == cohomology(simplify(g).graph, cfg.budget)
    return checks


def compute_report(g: Graph, cfg: RunConfig) -> tuple[dict, bool]:
    h = cohomology(g, cfg.budget)
    chrom = chromatic_deletion_contraction(g)
    checks = run_checks(g, cfg)
    report = {
        "graph": _graph_payload(g),
        "groups": _groups_payload(h),
        "poincare": [list(t) for t in poincare_polynomial(h).pairs()],
        "euler": [list(p) for p in graded_euler_characteristic(h).pairs()],
        "chromatic": [list(p) for p in chrom.pairs()],
        "checks": checks,
    }
    return report, all(checks.values())


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _emit_compute_table(report: dict, h: BigradedGroups, g: Graph) -> None:
    out = sys.stdout
    edges = ", ".join(f"({a},{b})" for a, b in g.edges) or "none"
    out.write(f"graph: {g.vertex_count} vertices, edges [{edges}]\n")
    heights = h.heights()
    if not heights:
        out.write("H^*: 0\n")
    for i in heights:
        out.write(f"H^{i}: {h.row_notation(i)}\n")
    out.write("poincare: " + format_two_var_poly(poincare_polynomial(h)) + "\n")
    out.write("euler: " + format_poly(graded_euler_characteristic(h)) + "\n")
    chrom = IntPoly({e: c for e, c in report["chromatic"]})
    out.write("chromatic: " + format_poly(chrom, var="L") + "\n")
    if report["checks"]:
        rendered = " ".join(
            f"{name}={'ok' if ok else 'FAIL'}" for name, ok in report["checks"].items()
        )
        out.write("checks: " + rendered + "\n")


def cmd_compute(args) -> int:
    cfg = _config_from_args(args)
    g = _load_graph(cfg.source, cfg.fmt)
    report, ok = compute_report(g, cfg)
    if getattr(args, "dump_matrices", None):
        basis = enumerate_basis(g, cfg.budget)
        with open(args.dump_matrices, "w", encoding="utf-8") as fh:
            dump_differentials(g, basis, fh)
    if cfg.output == "json":
        _emit_json(report)
    else:
        _emit_compute_table(report, cohomology(g, cfg.budget), g)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_family(args) -> int:
    cfg = _config_from_args(args, source=f"{args.name}:{args.n}")
    try:
        g = FAMILIES[args.name](args.n)
        expected = FAMILY_ORACLES[args.name](args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report, ok = compute_report(g, cfg)
    h = cohomology(g, cfg.budget)
    report["family"] = {"name": args.name, "n": args.n}
    report["checks"]["family_formula"] = h == expected
    ok = ok and report["checks"]["family_formula"]
    if cfg.output == "json":
        _emit_json(report)
    else:
        _emit_compute_table(report, h, g)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _batch_row(job: tuple) -> dict:
    path, fmt, verify, budget, seed = job
    cfg = RunConfig(source=path, fmt=fmt, verify=verify, budget=budget, seed=seed)
    started = time.perf_counter()
    row = {"input": path, "status": "ok", "report": None, "error": None}
    try:
        g = _load_graph(path, fmt)
        report, ok = compute_report(g, cfg)
        row["report"] = report
        if not ok:
            row["status"] = "check_failed"
    except ParseError as exc:
        row["status"], row["error"] = "parse_error", str(exc)
    except CapacityError as exc:
        row["status"], row["error"] = "capacity_error", str(exc)
    except OSError as exc:
        row["status"], row["error"] = "io_error", str(exc)
    row["elapsed_ms"] = (time.perf_counter() - started) * 1000.0
    return row


def cmd_batch(args) -> int:
    cfg = _config_from_args(args, source=args.manifest)
    with open(args.manifest, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    base = os.path.dirname(os.path.abspath(args.manifest))
    paths = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        paths.append(line if os.path.isabs(line) else os.path.join(base, line))
    jobs = [(p, cfg.fmt, cfg.verify, cfg.budget, cfg.seed) for p in paths]
    workers = cfg.workers or os.cpu_count() or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_batch_row, jobs))
    else:
        rows = [_batch_row(job) for job in jobs]
    passed = sum(1 for row in rows if row["status"] == "ok")
    if cfg.output == "json":
        # timings vary run to run, so JSON stays free of them for determinism
        clean = [{k: v for k, v in row.items() if k != "elapsed_ms"} for row in rows]
        _emit_json({"rows": clean, "passed": passed, "failed": len(rows) - passed})
    else:
        for row in rows:
            sys.stdout.write(
                f"{row['input']}: {row['status']} ({row['elapsed_ms']:.1f} ms)\n"
            )
        sys.stdout.write(f"passed {passed}/{len(rows)}\n")
    return EXIT_OK if passed == len(rows) else EXIT_CHECK_FAILED


def cmd_chromatic(args) -> int:
    cfg = _config_from_args(args)
    g = _load_graph(cfg.source, cfg.fmt)
    chrom = chromatic_deletion_contraction(g)
    payload = {
        "graph": _graph_payload(g),
        "chromatic": [list(p) for p in chrom.pairs()],
        "checks": {},
    }
    ok = True
    if cfg.verify != "none":
        payload["checks"]["state_sum_match"] = chrom == chromatic_state_sum(g, cfg.budget)
        ok = payload["checks"]["state_sum_match"]
    if cfg.output == "json":
        _emit_json(payload)
    else:
        sys.stdout.write("chromatic: " + format_poly(chrom, var="L") + "\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _edge_check(args, name: str, runner, applicable) -> int:
    cfg = _config_from_args(args)
    g = _load_graph(cfg.source, cfg.fmt)
    if args.edge is not None:
        edge_indexes = [args.edge]
    else:
        edge_indexes = [e for e in range(g.edge_count) if applicable(g, e)]
    results = []
    ok = True
    for e in edge_indexes:
        failure = runner(g, e, cfg.budget)
        results.append({"edge": e, "ok": failure is None, "first_failure": failure})
        ok = ok and failure is None
    payload = {"graph": _graph_payload(g), "check": name, "edges": results, "ok": ok}
    if cfg.output == "json":
        _emit_json(payload)
    else:
        for row in results:
            state = "ok" if row["ok"] else f"FAIL at {row['first_failure']}"
            sys.stdout.write(f"{name} edge {row['edge']}: {state}\n")
        sys.stdout.write(("all checks passed" if ok else "checks FAILED") + "\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _non_loop(g: Graph, e: int) -> bool:
    a, b = g.edges[e]
    return a != b


def _is_pendant(g: Graph, e: int) -> bool:
    a, b = g.edges[e]
    if a == b:
        return False
    deg = g.degrees()
    return deg[a] == 1 or deg[b] == 1


def cmd_check_kunneth(args) -> int:
    cfg = _config_from_args(args)
    g1 = _load_graph(args.input, cfg.fmt)
    g2 = _load_graph(args.other, cfg.fmt)
    failure = kunneth_report(g1, g2, cfg.budget)
    payload = {
        "graphs": [_graph_payload(g1), _graph_payload(g2)],
        "check": "kunneth",
        "ok": failure is None,
        "first_failure": failure,
    }
    if cfg.output == "json":
        _emit_json(payload)
    else:
        sys.stdout.write(
            "kunneth: ok\n" if failure is None else f"kunneth: FAIL at {failure}\n"
        )
    return EXIT_OK if failure is None else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "compute":
            return cmd_compute(args)
        if args.verb == "family":
            return cmd_family(args)
        if args.verb == "batch":
            return cmd_batch(args)
        if args.verb == "chromatic":
            return cmd_chromatic(args)
        if args.verb == "check-ses":
            return _edge_check(args, "ses", ses_report, _non_loop)
        if args.verb == "check-les":
            return _edge_check(args, "les", les_report, _non_loop)
        if args.verb == "check-pendant":
            return _edge_check(args, "pendant", pendant_report, _is_pendant)
        if args.verb == "check-kunneth":
            return cmd_check_kunneth(args)
        parser.error(f"unknown verb {args.verb}")
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (LoopContractionError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def entrypoint() -> None:
    sys.exit(main())
