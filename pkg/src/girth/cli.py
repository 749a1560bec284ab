"""``girth`` command line: exact, approx, gen, sweep.

Exit status: 0 success, 1 usage / parse / I/O error, 2 guarantee violation.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from . import approx
from .cycles import CycleWitness, exact_girth, itai_rodeh_search
from .generators import MODELS, GeneratorSpec, generate
from .graph import Graph, GraphError, parse_edge_list, build_graph, write_graph
from .report import ACYCLIC, RunReport, SweepRow, median_slope, write_sweep_csv

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2
ALGORITHMS = ("ir-additive", "sample", "det-sample", "theorem1", "theorem2")
DEFAULT_ORACLE_CAP = 5000


class UsageError(Exception):
    pass


def run_algorithm(g: Graph, algo: str, params: dict[str, Any]) -> tuple[CycleWitness | None, int, int | None]:
    """Dispatch by CLI name; returns (witness, visited_total, seed used)."""
    k = int(params.get("k", 2))
    seed = params.get("seed")
    if algo == "ir-additive":
        out = itai_rodeh_search(g)
        return out.witness, out.visited, None
    if algo == "theorem1":
        x = params.get("x")
        p = approx.TheoremOneParams(k=k, x=None if x is None else int(x),
                                    phase2_cap=params.get("phase2_cap"))
        r = approx.theorem_one(g, p)
        return r.witness, r.visited_total, None
    if algo == "theorem2":
        seed = int(seed or 0)
        r = approx.theorem_two(g, approx.TheoremTwoParams(k=k, seed=seed))
        return r.witness, r.visited_total, seed
    x = params.get("x") or max(1.0, math.sqrt(g.n))
    y = params.get("y") or max(1, g.n)
    if algo == "sample":
        seed = int(seed or 0)
        r = approx.algorithm_a(g, float(x), int(y), seed)
        return r.witness, r.visited_total, seed
    if algo == "det-sample":
        r = approx.algorithm_a_det(g, float(x), int(y))
        return r.witness, r.visited_total, None
    raise UsageError(f"unknown algorithm {algo!r}; expected one of {', '.join(ALGORITHMS)}")


def guarantee_for(algo: str, girth: int, k: int) -> int | None:
    if algo == "ir-additive":
        return girth + 1
    if algo == "theorem1":
        return approx.theorem_one_bound(girth, k)
    if algo == "theorem2":
        return approx.theorem_two_bound(girth, k)
    return None


def make_report(g: Graph, algo: str, params: dict[str, Any], source: dict[str, Any],
                with_oracle: bool, oracle_cap: int = DEFAULT_ORACLE_CAP) -> RunReport:
    t0 = time.perf_counter()
    witness, visited, seed = run_algorithm(g, algo, params)
    elapsed = (time.perf_counter() - t0) * 1000.0
    if witness is not None:
        witness.check(g)
    oracle = bound = None
    if with_oracle and g.n <= oracle_cap:
        found = exact_girth(g)
        if found is not None:
            oracle = found[0]
            bound = guarantee_for(algo, oracle, int(params.get("k", 2)))
    shown = {k: v for k, v in params.items() if v is not None and k != "seed"}
    return RunReport(
        algorithm={"name": algo, "params": shown},
        input=source,
        girth_estimate=ACYCLIC if witness is None else witness.length,
        cycle=[] if witness is None else list(witness.vertices),
        oracle_girth=oracle, guarantee_bound=bound, visited_total=int(visited),
        elapsed_ms=elapsed, seed=seed,
    )


def _load(path: str) -> Graph:
    if path == "-":
        return build_graph(parse_edge_list(sys.stdin))
    with open(path, encoding="utf-8") as fh:
        return build_graph(parse_edge_list(fh))


def _emit(report: RunReport, output: str | None) -> None:
    text = report.to_json()
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def cmd_exact(args) -> int:
    g = _load(args.input)
    t0 = time.perf_counter()
    found = exact_girth(g)
    elapsed = (time.perf_counter() - t0) * 1000.0
    report = RunReport(
        algorithm={"name": "exact", "params": {}},
        input={"path": args.input},
        girth_estimate=ACYCLIC if found is None else found[0],
        cycle=[] if found is None else list(found[1].vertices),
        oracle_girth=None if found is None else found[0],
        elapsed_ms=elapsed,
    )
    _emit(report, args.output)
    return EXIT_OK


def cmd_approx(args) -> int:
    g = _load(args.input)
    params = {"k": args.k, "x": args.x, "y": args.y, "phase2_cap": args.phase2_cap,
              "seed": args.seed}
    if args.algo not in ("theorem1", "theorem2"):
        params.pop("k")
    report = make_report(g, args.algo, params, {"path": args.input},
                         args.with_oracle, args.oracle_cap)
    _emit(report, args.output)
    problems = report.violations()
    for msg in problems:
        print(f"girth: guarantee violation: {msg}", file=sys.stderr)
    return EXIT_VIOLATION if problems else EXIT_OK


def _gen_spec(args) -> GeneratorSpec:
    params: dict[str, Any] = {}
    if args.model == "named":
        if not args.name:
            raise UsageError("--name is required for the named model")
        params["name"] = args.name
        if args.n is not None:
            params["n"] = args.n
    elif args.model == "gnp":
        if args.n is None or args.p is None:
            raise UsageError("gnp needs --n and --p")
        params.update(n=args.n, p=args.p)
    elif args.model == "random-regular":
        if args.n is None or args.d is None:
            raise UsageError("random-regular needs --n and --d")
        params.update(n=args.n, d=args.d)
    else:
        if args.g is None:
            raise UsageError("cycle-with-pendant-trees needs --g")
        params.update(g=args.g, depth=args.depth, branching=args.branching)
    return GeneratorSpec(args.model, params, args.seed)


def cmd_gen(args) -> int:
    g = generate(_gen_spec(args))
    write_graph(g, args.output)
    info = {"n": g.n, "m": g.m, "output": args.output}
    if args.with_oracle and g.n <= args.oracle_cap:
        found = exact_girth(g)
        info["oracle_girth"] = ACYCLIC if found is None else found[0]
    print(json.dumps(info, sort_keys=True))
    return EXIT_OK


def parse_algo_spec(text: str) -> tuple[str, dict[str, Any]]:
    """``theorem1:k=3,x=10`` -> ("theorem1", {"k": 3, "x": 10})."""
    name, _, rest = text.partition(":")
    if name not in ALGORITHMS:
        raise UsageError(f"unknown algorithm {name!r}")
    params: dict[str, Any] = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise UsageError(f"bad algorithm parameter {item!r}")
        params[key.strip()] = float(val) if "." in val else int(val)
    return name, params


def _sweep_cell(cell) -> SweepRow:
    n, avg_degree, name, params, seed, with_oracle, label = cell
    g = generate(GeneratorSpec("gnp", {"n": n, "p": min(1.0, avg_degree / n)}, seed))
    report = make_report(g, name, dict(params, seed=seed), {}, with_oracle, oracle_cap=n)
    ok = None
    if report.oracle_girth is not None:
        ok = not report.violations()
    return SweepRow(n=n, algo=label, k=params.get("k"), girth_estimate=report.girth_estimate,
                    oracle_girth=report.oracle_girth, guarantee_ok=ok,
                    visited_total=report.visited_total, elapsed_ms=report.elapsed_ms,
                    seed=seed)


def algo_label(name: str, params: dict[str, Any]) -> str:
    extra = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
    return f"{name}:{extra}" if extra else name


def run_sweep(sizes, algos, seeds, avg_degree=8.0, with_oracle=False, jobs=1,
              seed_base=0) -> tuple[list[SweepRow], dict[str, float]]:
    """One row per (n, algorithm, seed) in that order, plus per-algorithm slopes."""
    if not sizes or not algos or seeds < 1:
        raise UsageError("sweep needs at least one size, one algorithm and one seed")
    labels = [algo_label(name, params) for name, params in algos]
    cells = [(n, avg_degree, name, params, seed_base + s, with_oracle, lbl)
             for n in sizes for (name, params), lbl in zip(algos, labels)
             for s in range(seeds)]
    if jobs > 1:
        # map() yields in submission order regardless of completion order
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_cell, cells))
    else:
        rows = [_sweep_cell(c) for c in cells]
    slopes = {lbl: median_slope(rows, lbl) for lbl in labels} if len(set(sizes)) > 1 else {}
    return rows, slopes


def cmd_sweep(args) -> int:
    if args.spec:
        with open(args.spec, encoding="utf-8") as fh:
            spec = json.load(fh)
        sizes = spec.get("sizes", [])
        algos = [parse_algo_spec(a) if isinstance(a, str) else (a["name"], a.get("params", {}))
                 for a in spec.get("algorithms", [])]
        seeds = int(spec.get("seeds_per_point", 1))
        avg = float(spec.get("avg_degree", args.avg_degree))
        output = spec.get("output", args.output)
    else:
        sizes = [int(s) for s in args.sizes.split(",") if s] if args.sizes else []
        algos = [parse_algo_spec(a) for a in args.algo or []]
        seeds, avg, output = args.seeds, args.avg_degree, args.output
    if not output:
        raise UsageError("sweep needs --output")
    rows, slopes = run_sweep(sizes, algos, seeds, avg, args.with_oracle, args.jobs, args.seed)
    with open(output, "w", encoding="utf-8", newline="") as fh:
        write_sweep_csv(rows, slopes, fh)
    for lbl, slope in slopes.items():
        print(f"{lbl}\tslope={slope:.3f}")
    bad = [r for r in rows if r.guarantee_ok is False and r.algo.split(":")[0] != "theorem2"]
    return EXIT_VIOLATION if bad else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="girth", description="Girth approximation algorithms.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exact", help="exact girth by BFS from every vertex")
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.add_argument("--output", "-o", help="also write the JSON report here")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("approx", help="run an approximation algorithm")
    p.add_argument("input")
    p.add_argument("--algo", required=True, choices=ALGORITHMS)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--x", type=float, help="sampling / ball-size parameter")
    p.add_argument("--y", type=int, help="visit bound (sample, det-sample)")
    p.add_argument("--phase2-cap", type=int, dest="phase2_cap")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("output")
    p.add_argument("--model", required=True, choices=MODELS)
    p.add_argument("--name")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--d", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--branching", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="scaling sweep over G(n, d/n) as CSV")
    p.add_argument("--spec", help="JSON sweep spec (overrides the flags below)")
    p.add_argument("--sizes", help="comma-separated n values")
    p.add_argument("--algo", action="append", help="name[:k=v,...]; repeatable")
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="first seed")
    p.add_argument("--avg-degree", type=float, default=8.0)
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError, KeyError, OSError) as exc:
        print(f"girth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
