"""Compare the numba kernels with the interpreted fallback.

Each backend runs in its own interpreter because the switch is read at
import time.  Usage::

    python benchmarks/bench_kernels.py [--n 400] [--repeat 3]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import timeit

CASES = {
    "exact_girth": "exact_girth(g)",
    "itai_rodeh": "itai_rodeh_search(g)",
    "radius_table": "radius_table(g, 20)",
    "hitting_set": "greedy_hitting_set(closest_node_sets(g, 20))",
    "theorem_one_k2": "theorem_one(g, TheoremOneParams(k=2))",
    "theorem_two_k2": "theorem_two(g, TheoremTwoParams(k=2, seed=1))",
}

SETUP = """
from girth.approx import TheoremOneParams, TheoremTwoParams, theorem_one, theorem_two
from girth.cycles import exact_girth, itai_rodeh_search, radius_table
from girth.generators import random_regular
from girth.hitting import closest_node_sets, greedy_hitting_set
g = random_regular({n}, 3, 7)
"""


def measure(n: int, repeat: int) -> dict[str, float]:
    """Best-of-``repeat`` seconds per case in the current interpreter."""
    setup = SETUP.format(n=n)
    out = {}
    for name, stmt in CASES.items():
        timeit.timeit(stmt, setup, number=1)  # compile / warm caches
        out[name] = min(timeit.repeat(stmt, setup, number=1, repeat=repeat))
    return out


def run_backend(pure: bool, n: int, repeat: int) -> dict[str, float]:
    env = dict(os.environ, GIRTH_PURE_PYTHON="1" if pure else "0")
    cmd = [sys.executable, __file__, "--child", "--n", str(n), "--repeat", str(repeat)]
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        json.dump(measure(args.n, args.repeat), sys.stdout)
        return
    jit = run_backend(False, args.n, args.repeat)
    py = run_backend(True, args.n, args.repeat)
    print(f"random 3-regular graph, n={args.n}, best of {args.repeat}")
    print(f"{'case':<16}{'numba ms':>12}{'python ms':>12}{'speedup':>10}")
    for name in CASES:
        print(f"{name:<16}{jit[name] * 1e3:>12.2f}{py[name] * 1e3:>12.2f}"
              f"{py[name] / max(jit[name], 1e-9):>9.1f}x")


if __name__ == "__main__":
    main()
