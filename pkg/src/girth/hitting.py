"""Deterministic greedy hitting sets and closest-node set systems."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .graph import Graph, Scratch, components


class SetSystemError(ValueError):
    pass


@dataclass(frozen=True)
class SetSystem:
    """``k`` sets over ``0..universe_size-1`` stored CSR-style.

    Use :meth:`from_sets` for lists of lists.  ``uniform`` records whether
    every set has the same size, which the size bound of the greedy needs.
    """

    universe_size: int
    set_ptr: np.ndarray
    elements: np.ndarray

    @classmethod
    def from_sets(cls, universe_size: int, sets: Sequence[Sequence[int]]) -> SetSystem:
        sizes = np.array([len(s) for s in sets], dtype=np.int64)
        ptr = np.zeros(len(sets) + 1, dtype=np.int64)
        np.cumsum(sizes, out=ptr[1:])
        flat = np.fromiter((int(e) for s in sets for e in s), dtype=np.int64, count=int(ptr[-1]))
        return cls(int(universe_size), ptr, flat)

    @property
    def k(self) -> int:
        return int(self.set_ptr.shape[0] - 1)

    @property
    def sizes(self) -> np.ndarray:
        return np.diff(self.set_ptr)

    def __getitem__(self, i: int) -> np.ndarray:
        return self.elements[self.set_ptr[i]:self.set_ptr[i + 1]]

    def __len__(self) -> int:
        return self.k

    @property
    def uniform(self) -> bool:
        sizes = self.sizes
        return sizes.size == 0 or bool(np.all(sizes == sizes[0]))

    def check(self, require_uniform: bool = True) -> None:
        sizes = self.sizes
        if np.any(sizes == 0):
            raise SetSystemError(f"set {int(np.flatnonzero(sizes == 0)[0])} is empty")
        if self.elements.size and (self.elements.min() < 0
                                   or self.elements.max() >= self.universe_size):
            raise SetSystemError("element id outside the universe")
        for i in range(self.k):
            if np.unique(self[i]).size != sizes[i]:
                raise SetSystemError(f"set {i} has repeated elements")
        if require_uniform and not self.uniform:
            raise SetSystemError("sets must all have the same size")


@dataclass(frozen=True)
class HittingSet:
    elements: tuple[int, ...]
    covered_by: tuple[int, ...]
    operations: int = 0

    def __len__(self) -> int:
        return len(self.elements)


def size_bound(n: int, x: int, k: int) -> int:
    """ceil((n / x) * ln k), natural log."""
    return math.ceil(n / x * math.log(k)) if k > 0 else 0


def greedy_hitting_set(sys: SetSystem, require_uniform: bool = True) -> HittingSet:
    """Repeatedly take the element lying in the most unhit sets.

    Multiplicity ties go to the smallest element id.  ``require_uniform``
    is relaxed only by callers that pad undersized sets themselves.
    """
    sys.check(require_uniform=require_uniform)
    chosen, covered, ops = _kernels.greedy_hitting_set(sys.set_ptr, sys.elements,
                                                        sys.universe_size)
    return HittingSet(tuple(int(v) for v in chosen), tuple(int(v) for v in covered), int(ops))


class SmallComponentError(SetSystemError):
    def __init__(self, vertex: int, component_size: int, size: int):
        super().__init__(f"component of vertex {vertex} has {component_size} vertices, "
                         f"fewer than the requested {size}")
        self.vertex = vertex
        self.component_size = component_size


def closest_sets(g: Graph, size: int) -> tuple[np.ndarray, np.ndarray, int]:
    """Raw kernel output: (n x size matrix, row lengths, dequeues)."""
    if size < 1:
        raise ValueError("size must be positive")
    s = Scratch(g.n)
    out = np.empty((g.n, size), dtype=np.int64)
    lens = np.empty(g.n, dtype=np.int64)
    visited = _kernels.closest_sets(g.indptr, g.indices, size, s.dist, s.queue, out, lens)
    return out, lens, int(visited)


def closest_node_sets(g: Graph, size: int, pad: bool = False) -> SetSystem:
    """A_u = the ``size`` vertices nearest u in BFS discovery order (u first).

    A component with fewer than ``size`` vertices is an error unless ``pad``
    is set, in which case those sets are the whole component.
    """
    out, lens, _ = closest_sets(g, size)
    short = np.flatnonzero(lens < size)
    if short.size and not pad:
        u = int(short[0])
        _, labels = components(g)
        raise SmallComponentError(u, int(np.count_nonzero(labels == labels[u])), size)
    return _as_system(g.n, out, lens)


def _as_system(n: int, out: np.ndarray, lens: np.ndarray) -> SetSystem:
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(lens, out=ptr[1:])
    if lens.size and np.all(lens == out.shape[1]):
        flat = out.reshape(-1).copy()
    else:
        flat = out[np.arange(out.shape[1])[None, :] < lens[:, None]]
    return SetSystem(n, ptr, flat)
