"""Immutable CSR graphs and the edge-list text format.

Edge-list format (UTF-8, one record per line)::

    # comment
    p <n> <m>        optional header, must precede edges
    <u> <v>          one undirected edge, 0-based ids

Serialisation writes the header followed by every edge once with ``u < v``
in lexicographic order, so ``parse -> build -> serialize`` is a fixed point.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np

from . import _kernels


class GraphError(ValueError):
    """Raised for inputs that cannot become a simple undirected graph."""


class EdgeListParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class EdgeList:
    n: int
    edges: list[tuple[int, int]] = field(default_factory=list)
    declared_n: int | None = None


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Simple undirected graph stored as CSR arrays.

    Neighbour order is part of the value: ``build_graph`` sorts every list
    ascending, and all searches scan neighbours in that order.
    """

    __slots__ = ("indptr", "indices", "_zeros")

    def __init__(self, indptr: np.ndarray, indices: np.ndarray):
        self.indptr = _readonly(np.ascontiguousarray(indptr, dtype=np.int64))
        self.indices = _readonly(np.ascontiguousarray(indices, dtype=np.int64))
        self._zeros = None

    @property
    def n(self) -> int:
        return int(self.indptr.shape[0] - 1)

    @property
    def m(self) -> int:
        return int(self.indices.shape[0] // 2)

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    @property
    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(u).tolist() for u in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = int(np.searchsorted(nb, v))
        return i < nb.shape[0] and int(nb[i]) == v

    def edges(self) -> Iterable[tuple[int, int]]:
        for u in range(self.n):
            for v in self.neighbors(u).tolist():
                if u < v:
                    yield u, v

    def no_mask(self) -> np.ndarray:
        """All-zero position array: lets the masked BFS kernel see every vertex."""
        if self._zeros is None:
            self._zeros = _readonly(np.zeros(self.n, dtype=np.int64))
        return self._zeros

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self) -> int:
        return hash((self.indptr.tobytes(), self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Scratch:
    """Per-graph BFS work arrays; ``dist`` is kept at -1 between searches."""

    def __init__(self, n: int):
        size = max(n, 1)
        self.dist = np.full(size, -1, dtype=np.int64)
        self.parent = np.full(size, -1, dtype=np.int64)
        self.queue = np.empty(size, dtype=np.int64)
        self.out = np.empty(size, dtype=np.int64)
        self.tmp = np.empty(size, dtype=np.int64)
        self.best = np.empty(size, dtype=np.int64)


def parse_edge_list(source: str | TextIO) -> EdgeList:
    """Parse edge-list text (a string or an open text stream)."""
    stream = io.StringIO(source) if isinstance(source, str) else source
    declared = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if declared is not None:
                raise EdgeListParseError(line_no, "duplicate header")
            if edges:
                raise EdgeListParseError(line_no, "header after edges")
            if len(parts) != 3:
                raise EdgeListParseError(line_no, "header must be 'p <n> <m>'")
            try:
                declared, _ = int(parts[1]), int(parts[2])
            except ValueError:
                raise EdgeListParseError(line_no, f"bad header {line!r}") from None
            if declared < 0:
                raise EdgeListParseError(line_no, "negative vertex count")
            continue
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(line_no, "negative vertex id")
        if declared is not None and (u >= declared or v >= declared):
            raise EdgeListParseError(
                line_no, f"vertex id {max(u, v)} out of range for n={declared}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = max(declared or 0, max_id + 1)
    return EdgeList(n=n, edges=edges, declared_n=declared)


def build_graph(e: EdgeList) -> Graph:
    """Deduplicate, symmetrise and sort; self-loops are rejected."""
    return from_edges(e.n, e.edges)


def from_edges(n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> Graph:
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64).reshape(-1, 2)
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise GraphError(f"vertex id out of range for n={n}")
    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        v = int(arr[loops][0, 0])
        raise GraphError(f"self-loop on vertex {v}")
    both = np.concatenate([arr, arr[:, ::-1]])
    # row-major unique on (src, dst) gives sorted CSR order directly
    keys = np.unique(both[:, 0] * max(n, 1) + both[:, 1])
    src = keys // max(n, 1)
    dst = keys % max(n, 1)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(indptr, dst)


def serialize(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return build_graph(parse_edge_list(fh))


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(g))


def validate(g: Graph) -> None:
    """Raise GraphError unless ``g`` is a well-formed simple undirected graph."""
    n = g.n
    if g.indptr[0] != 0 or np.any(np.diff(g.indptr) < 0):
        raise GraphError("indptr is not a valid offset array")
    if g.indptr[-1] != g.indices.shape[0]:
        raise GraphError("indptr does not cover indices")
    if g.indices.shape[0] % 2:
        raise GraphError("odd total adjacency length")
    if g.indices.size and (g.indices.min() < 0 or g.indices.max() >= n):
        raise GraphError("neighbour id out of range")
    for u in range(n):
        nb = g.neighbors(u)
        if np.any(nb == u):
            raise GraphError(f"self-loop on vertex {u}")
        if nb.shape[0] > 1 and np.any(np.diff(nb) <= 0):
            raise GraphError(f"adjacency of {u} is not strictly increasing")
        for v in nb.tolist():
            if not g.has_edge(v, u):
                raise GraphError(f"edge ({u}, {v}) is not symmetric")


def components(g: Graph) -> tuple[int, np.ndarray]:
    labels = np.full(g.n, -1, dtype=np.int64)
    queue = np.empty(max(g.n, 1), dtype=np.int64)
    count = _kernels.component_labels(g.indptr, g.indices, labels, queue)
    return int(count), labels


def connected_and_cyclic(g: Graph) -> tuple[bool, bool]:
    """(is_connected, has_cycle); a forest has exactly n - c edges."""
    count, _ = components(g)
    return count <= 1, g.m > g.n - count


def induced_subgraph(g: Graph, vertices: np.ndarray) -> Graph:
    """Subgraph on ``vertices`` (ascending), relabelled 0..len-1 in that order.

    Relabelling is monotone, so sorted adjacency stays sorted.
    """
    vertices = np.asarray(vertices, dtype=np.int64)
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[vertices] = np.arange(vertices.shape[0], dtype=np.int64)
    counts = g.indptr[vertices + 1] - g.indptr[vertices]
    rows = np.concatenate([g.neighbors(int(u)) for u in vertices]) if len(vertices) else \
        np.empty(0, dtype=np.int64)
    owner = np.repeat(np.arange(vertices.shape[0]), counts)
    mapped = new_id[rows]
    keep = mapped >= 0
    indptr = np.zeros(vertices.shape[0] + 1, dtype=np.int64)
    np.cumsum(np.bincount(owner[keep], minlength=vertices.shape[0]), out=indptr[1:])
    return Graph(indptr, mapped[keep])


def component_subgraphs(g: Graph) -> list[tuple[np.ndarray, Graph]]:
    """Each component as (original vertex ids, relabelled subgraph)."""
    count, labels = components(g)
    if count == 1:
        return [(np.arange(g.n, dtype=np.int64), g)]
    order = np.argsort(labels, kind="stable")
    bounds = np.searchsorted(labels[order], np.arange(count + 1))
    return [(order[bounds[c]:bounds[c + 1]], induced_subgraph(g, order[bounds[c]:bounds[c + 1]]))
            for c in range(count)]
