"""Stop-early BFS cycle search, ball radii and exact-girth oracles."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, Scratch


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle given by its vertices in traversal order."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def check(self, g: Graph) -> None:
        """Raise WitnessError unless this is a simple cycle of ``g``."""
        vs = self.vertices
        if len(vs) < 3:
            raise WitnessError(f"cycle of length {len(vs)} is too short")
        if len(set(vs)) != len(vs):
            raise WitnessError("repeated vertex in cycle")
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise WitnessError(f"({u}, {v}) is not an edge")

    def is_valid(self, g: Graph) -> bool:
        try:
            self.check(g)
        except WitnessError:
            return False
        return True


@dataclass(frozen=True)
class SearchOutcome:
    witness: CycleWitness | None
    visited: int


@dataclass(frozen=True)
class BallRadiusTable:
    r: np.ndarray
    threshold: int
    visited: int = 0


def _witness(buf: np.ndarray, length: int) -> CycleWitness | None:
    if length <= 0:
        return None
    return CycleWitness(tuple(int(v) for v in buf[:length]))


def bfs_cycle(g: Graph, root: int, bound: int | None = None,
              scratch: Scratch | None = None) -> SearchOutcome:
    """BFS from ``root`` that stops at the first non-tree edge it scans.

    The returned cycle is the closing edge plus the two tree paths up to
    their lowest common ancestor.  With ``bound`` at most that many vertices
    are dequeued; running out first gives an outcome without a witness.
    """
    if not 0 <= root < g.n:
        raise IndexError(f"root {root} out of range for n={g.n}")
    if bound is not None and bound < 1:
        raise ValueError("bound must be positive")
    s = scratch or Scratch(g.n)
    cap = g.n if bound is None else min(int(bound), g.n)
    length, visited = _kernels.bfs_cycle(g.indptr, g.indices, root, cap, g.no_mask(), 0,
                                         s.dist, s.parent, s.queue, s.out, s.tmp)
    return SearchOutcome(_witness(s.out, length), int(visited))


def ball_size(g: Graph, u: int, radius: int, cap: int) -> int:
    """min(|B(u, radius)|, cap)."""
    if radius < 0 or cap < 1:
        raise ValueError("radius must be >= 0 and cap >= 1")
    s = Scratch(g.n)
    return int(_kernels.ball_size(g.indptr, g.indices, u, radius, cap, s.dist, s.queue))


def radius_table(g: Graph, x: int) -> BallRadiusTable:
    """Per-vertex largest r with |B(u, r)| <= x (eccentricity when the ball never exceeds x)."""
    x = int(x)
    if x < 1:
        raise ValueError(f"threshold x must be >= 1, got {x}")
    s = Scratch(g.n)
    r = np.empty(g.n, dtype=np.int64)
    visited = _kernels.radius_table(g.indptr, g.indices, x, s.dist, s.queue, r)
    r.setflags(write=False)
    return BallRadiusTable(r=r, threshold=x, visited=int(visited))


def exact_girth(g: Graph) -> tuple[int, CycleWitness] | None:
    """Exact girth and a shortest cycle, or None for a forest.

    Ties between roots go to the smallest root id.
    """
    s = Scratch(g.n)
    value, length, _, _ = _kernels.exact_girth(g.indptr, g.indices, s.dist, s.parent,
                                               s.queue, s.out, s.tmp, s.best)
    if value == 0:
        return None
    assert value == length, (value, length)
    return int(value), _witness(s.best, length)


def girth(g: Graph) -> int | None:
    found = exact_girth(g)
    return None if found is None else found[0]


def girth_edge_oracle(g: Graph) -> int | None:
    """Girth via edge deletion: min over edges uv of d_{G-uv}(u, v) + 1.

    Shares no code with :func:`exact_girth`; kept as an independent check.
    """
    s = Scratch(g.n)
    value = _kernels.edge_deletion_girth(g.indptr, g.indices, s.dist, s.queue)
    return int(value) or None


def itai_rodeh_additive(g: Graph) -> CycleWitness | None:
    """Shortest of the unbounded stop-early searches from every vertex (length <= g + 1)."""
    return itai_rodeh_search(g).witness


def itai_rodeh_search(g: Graph) -> SearchOutcome:
    s = Scratch(g.n)
    roots = np.arange(g.n, dtype=np.int64)
    length, _, total = _kernels.multi_source_bfs_cycle(
        g.indptr, g.indices, roots, g.n, g.no_mask(), 0,
        s.dist, s.parent, s.queue, s.out, s.tmp, s.best)
    return SearchOutcome(_witness(s.best, length), int(total))
