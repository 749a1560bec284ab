"""Seeded test-corpus generators.

All randomness comes from ``numpy.random.Generator(PCG64)`` seeded through
``SeedSequence``; see :func:`rng_for`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .graph import Graph, GraphError, from_edges

MODELS = ("cycle-with-pendant-trees", "gnp", "named", "random-regular")
NAMED = ("triangle", "k4", "petersen", "heawood", "grid3x3", "hypercube", "q4", "cycle")


def rng_for(seed: int, *stream: int) -> np.random.Generator:
    """PCG64 generator for ``seed`` and an optional spawn path.

    ``rng_for(s, i)`` is the i-th child of ``SeedSequence(s)`` -- the same
    stream ``SeedSequence(s).spawn(i + 1)[i]`` yields -- so sub-streams are
    independent and reproducible from the master seed alone.
    """
    ss = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1), spawn_key=tuple(stream))
    return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True)
class GeneratorSpec:
    model: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int = 0

    def describe(self) -> dict[str, Any]:
        return {"model": self.model, "params": dict(self.params), "seed": self.seed}


def generate(spec: GeneratorSpec) -> Graph:
    p = spec.params
    if spec.model == "named":
        return named(p["name"], n=p.get("n"))
    if spec.model == "gnp":
        return gnp(int(p["n"]), float(p["p"]), spec.seed)
    if spec.model == "cycle-with-pendant-trees":
        return cycle_with_pendant_trees(int(p["g"]), int(p.get("depth", 2)), spec.seed,
                                        branching=int(p.get("branching", 2)))
    if spec.model == "random-regular":
        return random_regular(int(p["n"]), int(p["d"]), spec.seed)
    raise GraphError(f"unknown generator model {spec.model!r}; expected one of {MODELS}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, j) for j in range(1, leaves + 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return from_edges(rows * cols, edges)


def hypercube(dim: int) -> Graph:
    n = 1 << dim
    return from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(dim)
                          if v < v ^ (1 << b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def heawood() -> Graph:
    # LCF notation [5, -5]^7
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + (5 if i % 2 == 0 else -5)) % 14) for i in range(14)]
    return from_edges(14, edges)


def named(name: str, n: int | None = None) -> Graph:
    key = name.lower()
    if key == "triangle":
        return complete_graph(3)
    if key == "k4":
        return complete_graph(4)
    if key == "petersen":
        return petersen()
    if key == "heawood":
        return heawood()
    if key == "grid3x3":
        return grid_graph(3, 3)
    if key in ("hypercube", "q4"):
        return hypercube(4)
    if key == "cycle" or (key.startswith("c") and key[1:].isdigit()):
        size = n if key == "cycle" else int(key[1:])
        if size is None:
            raise GraphError("named cycle needs n")
        return cycle_graph(int(size))
    raise GraphError(f"unknown named graph {name!r}; expected one of {NAMED} or c<n>")


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), one row of Bernoulli draws per vertex."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError(f"infeasible gnp parameters n={n}, p={p}")
    rng = rng_for(seed)
    chunks = []
    for u in range(n - 1):
        hits = np.flatnonzero(rng.random(n - u - 1) < p)
        if hits.size:
            chunks.append(np.column_stack([np.full(hits.size, u), hits + u + 1]))
    edges = np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)
    return from_edges(n, edges)


def cycle_with_pendant_trees(g: int, depth: int, seed: int, branching: int = 2) -> Graph:
    """C_g with random trees of height <= ``depth`` hung off its vertices.

    Every added vertex gets exactly one edge back to an existing vertex, so
    no new cycle appears and the girth is exactly ``g``.
    """
    if g < 3:
        raise GraphError(f"girth parameter must be >= 3, got {g}")
    if depth < 0 or branching < 0:
        raise GraphError("depth and branching must be non-negative")
    rng = rng_for(seed)
    edges = [(i, (i + 1) % g) for i in range(g)]
    frontier = list(range(g))
    nxt_id = g
    for _ in range(depth):
        new_frontier = []
        for v in frontier:
            for _ in range(int(rng.integers(0, branching + 1))):
                edges.append((v, nxt_id))
                new_frontier.append(nxt_id)
                nxt_id += 1
        frontier = new_frontier
    return from_edges(nxt_id, edges)


def random_regular(n: int, d: int, seed: int, max_tries: int = 1000) -> Graph:
    """Uniform-ish d-regular simple graph by configuration-model rejection."""
    if n * d % 2 or d >= n or d < 0:
        raise GraphError(f"infeasible random-regular parameters n={n}, d={d}")
    rng = rng_for(seed)
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    for _ in range(max_tries):
        pairs = rng.permutation(stubs).reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        if np.unique(lo * n + hi).size != pairs.shape[0]:
            continue
        return from_edges(n, pairs)
    raise GraphError(f"no simple {d}-regular graph on {n} vertices after {max_tries} tries")
