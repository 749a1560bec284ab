"""Sampling-based girth approximations.

``algorithm_a`` / ``algorithm_a_det`` pick a root set (random or by greedy
hitting set over closest-node balls) and run bounded stop-early BFS from
each root.  ``theorem_one`` combines the deterministic sampler with an
incremental-subgraph pass and always returns a cycle of length at most
``theorem_one_bound(g, k)``; ``theorem_two`` runs ``k`` random samplers at
geometric scales and is within ``2**k * ceil(g / 2)`` with high probability.

All logarithms are natural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import _kernels
from .cycles import CycleWitness, radius_table
from .generators import rng_for
from .graph import Graph, Scratch, component_subgraphs
from .hitting import _as_system, closest_sets


@dataclass(frozen=True)
class ApproxResult:
    witness: CycleWitness | None
    visited_total: int
    seed: int | None = None
    guarantee_bound: int | None = None

    @property
    def length(self) -> int | None:
        return None if self.witness is None else self.witness.length

    def with_bound(self, bound: int | None) -> ApproxResult:
        return replace(self, guarantee_bound=bound)


@dataclass(frozen=True)
class TheoremOneParams:
    k: int = 2
    x: int | None = None
    phase2_cap: int | None = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.x is not None and self.x < 1:
            raise ValueError(f"x must be >= 1, got {self.x}")
        if self.phase2_cap is not None and self.phase2_cap < 1:
            raise ValueError("phase2_cap must be positive")


@dataclass(frozen=True)
class TheoremTwoParams:
    k: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")


# -- guarantees -------------------------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def theorem_one_bound(g: int, k: int) -> int:
    """2*ceil(g/2) + 2*ceil(g/(2(k-1)))."""
    if g < 1 or k < 2:
        raise ValueError("need g >= 1 and k >= 2")
    return 2 * _ceil_div(g, 2) + 2 * _ceil_div(g, 2 * (k - 1))


def theorem_two_bound(g: int, k: int) -> int:
    return 2 ** k * _ceil_div(g, 2)


def corollary_params(l: int) -> tuple[int, Fraction]:
    """k = 2l - ceil(l/3) + 2 and the ratio 1 + 3/(2l+1) it achieves for girth > 2l - 1."""
    if l < 1:
        raise ValueError("l must be a positive integer")
    return 2 * l - _ceil_div(l, 3) + 2, 1 + Fraction(3, 2 * l + 1)


def corollary_counterexample(l_max: int, g_max: int) -> tuple[int, int] | None:
    """First (l, g) with 2l <= g <= g_max where the ratio bound fails, else None."""
    for l in range(1, l_max + 1):
        k, ratio = corollary_params(l)
        for g in range(2 * l, g_max + 1):
            if theorem_one_bound(g, k) > ratio * g:
                return l, g
    return None


def verify_corollary_arithmetic(l_max: int, g_max: int) -> bool:
    return corollary_counterexample(l_max, g_max) is None


# -- samplers ---------------------------------------------------------------

def _search(g: Graph, roots: np.ndarray, bound: int, s: Scratch) -> tuple[CycleWitness | None, int]:
    length, _, total = _kernels.multi_source_bfs_cycle(
        g.indptr, g.indices, roots, min(bound, g.n), g.no_mask(), 0,
        s.dist, s.parent, s.queue, s.out, s.tmp, s.best)
    w = CycleWitness(tuple(int(v) for v in s.best[:length])) if length else None
    return w, int(total)


def _sample(n: int, x: float, rng: np.random.Generator) -> np.ndarray:
    p = min(x / n, 1.0) if n else 0.0
    return np.flatnonzero(rng.random(n) < p).astype(np.int64)


def algorithm_a(g: Graph, x: float, y: int, seed: int) -> ApproxResult:
    """Sample each vertex with probability min(x/n, 1), then bounded search from each."""
    if x <= 0 or y <= 0:
        raise ValueError("x and y must be positive")
    roots = _sample(g.n, x, rng_for(seed))
    w, visited = _search(g, roots, math.ceil(y), Scratch(g.n))
    return ApproxResult(w, visited, seed=seed)


def hitting_roots(g: Graph, set_size: int) -> tuple[np.ndarray, int]:
    """Greedy hitting set of the ``set_size``-closest-node sets, ascending.

    Components smaller than ``set_size`` contribute their whole vertex set
    as the ball.  Returns (roots, dequeues spent building the sets).
    """
    size = max(1, min(int(set_size), g.n))
    out, lens, visited = closest_sets(g, size)
    sys = _as_system(g.n, out, lens)
    chosen, _, _ = _kernels.greedy_hitting_set(sys.set_ptr, sys.elements, g.n)
    return np.sort(chosen), visited


def det_set_size(n: int, x: float) -> int:
    """ceil(n ln n / x), clamped to [1, n]."""
    if n <= 1:
        return 1
    return max(1, min(n, math.ceil(n * math.log(n) / x)))


def algorithm_a_det(g: Graph, x: float, y: int) -> ApproxResult:
    """Deterministic sampler: roots hit every ceil(n ln n / x)-closest-node set."""
    if x <= 0 or y <= 0:
        raise ValueError("x and y must be positive")
    if g.n == 0:
        return ApproxResult(None, 0)
    roots, built = hitting_roots(g, det_set_size(g.n, x))
    w, visited = _search(g, roots, math.ceil(y), Scratch(g.n))
    return ApproxResult(w, visited + built)


# -- two-pass scheme -------------------------------------------------------

def default_x(n: int, k: int) -> int:
    """(n ln n)^(1/k) rounded to the nearest integer, at least 2."""
    if n <= 1:
        return 2
    return max(2, int(math.floor((n * math.log(n)) ** (1.0 / k) + 0.5)))


def default_phase2_cap(n: int, x: int, k: int) -> int:
    # Both caps appear in the analysis; the larger keeps the correctness step valid.
    cap = max(math.ceil(n * math.log(n) / x) if n > 1 else 1, x ** (k - 1))
    return max(1, min(cap, n))


@dataclass(frozen=True)
class PhaseResults:
    x: int
    phase2_cap: int
    roots: np.ndarray
    radii: np.ndarray
    phase1: ApproxResult
    phase2: ApproxResult


def theorem_one_phases(g: Graph, p: TheoremOneParams) -> PhaseResults:
    """Both passes of the deterministic two-pass scheme on a connected graph."""
    n = g.n
    x = int(p.x) if p.x is not None else default_x(n, p.k)
    cap = p.phase2_cap if p.phase2_cap is not None else default_phase2_cap(n, x, p.k)
    s = Scratch(n)

    # pass 1: deterministic sampler with x-closest sets and unbounded searches
    roots, built = hitting_roots(g, x)
    w1, v1 = _search(g, roots, n, s)

    # pass 2: descending r(u), searches confined to the processed prefix
    table = radius_table(g, x)
    r = table.r
    ids = np.arange(n, dtype=np.int64)
    order = np.lexsort((ids, -r))
    order = order[r[order] > 0].astype(np.int64)
    pos = np.full(n, n, dtype=np.int64)
    pos[order] = np.arange(order.shape[0], dtype=np.int64)
    length, _, v2 = _kernels.incremental_bfs_cycle(
        g.indptr, g.indices, order, order.shape[0], min(cap, n), pos,
        s.dist, s.parent, s.queue, s.out, s.tmp, s.best)
    w2 = CycleWitness(tuple(int(v) for v in s.best[:length])) if length else None
    return PhaseResults(
        x=x, phase2_cap=min(cap, n), roots=roots, radii=r,
        phase1=ApproxResult(w1, int(v1) + built),
        phase2=ApproxResult(w2, int(v2) + table.visited),
    )


def _shorter(a: CycleWitness | None, b: CycleWitness | None) -> CycleWitness | None:
    if a is None:
        return b
    if b is None or a.length <= b.length:
        return a
    return b


def theorem_one(g: Graph, p: TheoremOneParams | None = None) -> ApproxResult:
    """Deterministic cycle of length <= theorem_one_bound(girth, k).

    Runs per connected component (forest components are skipped) and keeps
    the shortest witness; default ``x`` is chosen per component.
    """
    p = p or TheoremOneParams()
    best = None
    visited = 0
    for ids, sub in component_subgraphs(g):
        if sub.m < sub.n:
            continue
        ph = theorem_one_phases(sub, p)
        visited += ph.phase1.visited_total + ph.phase2.visited_total
        w = _shorter(ph.phase1.witness, ph.phase2.witness)
        if w is not None:
            w = CycleWitness(tuple(int(ids[v]) for v in w.vertices))
        best = _shorter(best, w)
    return ApproxResult(best, visited)


# -- k-round sampling -------------------------------------------------------

def theorem_two_schedule(n: int, k: int) -> list[tuple[float, int]]:
    """(sampling rate x_i, visit bound y_i) for i = 1..k."""
    logn = math.log(n) if n > 1 else 0.0
    return [(n ** (1 + (1 - i) / k) * logn, max(1, math.ceil(n ** (i / k))))
            for i in range(1, k + 1)]


def theorem_two(g: Graph, p: TheoremTwoParams | None = None) -> ApproxResult:
    """k random samplers; iteration i draws from ``rng_for(seed, i)``."""
    p = p or TheoremTwoParams()
    n = g.n
    best = None
    visited = 0
    s = Scratch(n)
    for i, (x, y) in enumerate(theorem_two_schedule(n, p.k), start=1):
        roots = _sample(n, x, rng_for(p.seed, i))
        w, v = _search(g, roots, y, s)
        visited += v
        best = _shorter(best, w)
    return ApproxResult(best, visited, seed=p.seed)
