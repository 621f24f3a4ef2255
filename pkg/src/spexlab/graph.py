"""Immutable simple undirected graphs and basic invariants.

Graphs on at most 64 vertices are stored densely as a tuple of integer
bitmasks (bit ``u`` of ``rows[v]`` is set iff ``uv`` is an edge).  Larger
graphs use a CSR layout (``indptr``/``indices`` numpy arrays) whose
neighbor lists are sorted and duplicate free.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DENSE_LIMIT = 64
MAX_VERTICES = 10**6


class GraphError(ValueError):
    """Invalid graph data or an argument outside an operation's domain."""


class DisconnectedGraphError(GraphError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A loop-free undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_rows", "_indptr", "_indices", "_m")

    def __init__(self, n, rows=None, indptr=None, indices=None):
        # Use the classmethods; this does no validation.
        self.n = n
        self._rows = rows
        self._indptr = indptr
        self._indices = indices
        if rows is not None:
            self._m = sum(r.bit_count() for r in rows) // 2
        else:
            self._m = len(indices) // 2

    # -- construction -------------------------------------------------

    @classmethod
    def empty(cls, n: int, sparse: bool | None = None) -> "Graph":
        return cls.from_edges(n, (), sparse=sparse)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], sparse: bool | None = None) -> "Graph":
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} out of range")
        if sparse is None:
            sparse = n > DENSE_LIMIT
        if not sparse and n > DENSE_LIMIT:
            raise GraphError(f"dense storage supports n <= {DENSE_LIMIT}")
        if not sparse:
            rows = [0] * n
            for u, v in edges:
                u, v = int(u), int(v)
                _check_pair(n, u, v)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            return cls(n, rows=tuple(rows))
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphError("edges must be pairs")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise GraphError("edge endpoint out of range")
        if np.any(arr[:, 0] == arr[:, 1]):
            raise GraphError("self-loops are not allowed")
        src = np.concatenate([arr[:, 0], arr[:, 1]])
        dst = np.concatenate([arr[:, 1], arr[:, 0]])
        key = np.unique(src * n + dst)
        src, dst = key // n, key % n
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(indptr, src + 1, 1)
        np.cumsum(indptr, out=indptr)
        return cls(n, indptr=indptr, indices=dst.astype(np.int64))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        if n > DENSE_LIMIT:
            raise GraphError(f"dense storage supports n <= {DENSE_LIMIT}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or (r >> v) & 1:
                raise GraphError(f"bad adjacency row for vertex {v}")
        for v, r in enumerate(rows):
            for u in _bits(r):
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"adjacency not symmetric at {u},{v}")
        return cls(n, rows=tuple(rows))

    # -- queries --------------------------------------------------------

    @property
    def dense(self) -> bool:
        return self._rows is not None

    @property
    def rows(self) -> tuple[int, ...]:
        if self._rows is None:
            raise GraphError("bitset rows are only available for dense graphs")
        return self._rows

    @property
    def num_edges(self) -> int:
        return self._m

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if self._rows is not None:
            return bool((self._rows[u] >> v) & 1)
        nb = self._indices[self._indptr[u]:self._indptr[u + 1]]
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        if self._rows is not None:
            return list(_bits(self._rows[v]))
        return self._indices[self._indptr[v]:self._indptr[v + 1]].tolist()

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        if self._rows is not None:
            return self._rows[v].bit_count()
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> list[int]:
        if self._rows is not None:
            return [r.bit_count() for r in self._rows]
        return np.diff(self._indptr).tolist()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        if self._rows is not None:
            for u, r in enumerate(self._rows):
                for v in _bits(r >> (u + 1) << (u + 1)):
                    yield u, v
        else:
            for u in range(self.n):
                for v in self._indices[self._indptr[u]:self._indptr[u + 1]]:
                    if v > u:
                        yield u, int(v)

    # -- derived graphs -------------------------------------------------

    def with_edges(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> "Graph":
        if self._rows is not None:
            rows = list(self._rows)
            for u, v in add:
                _check_pair(self.n, u, v)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            for u, v in remove:
                _check_pair(self.n, u, v)
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            return Graph(self.n, rows=tuple(rows))
        es = set(self.edges())
        es.update((min(e), max(e)) for e in add)
        es.difference_update((min(e), max(e)) for e in remove)
        return Graph.from_edges(self.n, sorted(es), sparse=True)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which vertex ``v`` is renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("not a permutation of the vertex set")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()), sparse=not self.dense)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise GraphError("repeated vertex")
        for v in vertices:
            self._check_vertex(v)
        if self._rows is not None and len(vertices) <= DENSE_LIMIT:
            rows = []
            for v in vertices:
                r = 0
                for u in _bits(self._rows[v]):
                    if u in pos:
                        r |= 1 << pos[u]
                rows.append(r)
            return Graph(len(vertices), rows=tuple(rows))
        es = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        return Graph.from_edges(len(vertices), es)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def to_dense(self) -> "Graph":
        return Graph.from_edges(self.n, self.edges(), sparse=False)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def to_scipy(self):
        import scipy.sparse as sp

        if self._rows is not None:
            return sp.csr_matrix(self.adjacency_matrix().astype(float))
        data = np.ones(len(self._indices), dtype=float)
        return sp.csr_matrix((data, self._indices, self._indptr), shape=(self.n, self.n))

    # -- dunder ---------------------------------------------------------

    def _key(self):
        return (self.n, tuple(self.edges()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self.n != other.n or self._m != other._m:
            return False
        if self._rows is not None and other._rows is not None:
            return self._rows == other._rows
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._rows is not None:
            return hash((self.n, self._rows))
        return hash(self._key())

    def __getstate__(self):
        return (self.n, self._rows, self._indptr, self._indices)

    def __setstate__(self, state):
        n, rows, indptr, indices = state
        Graph.__init__(self, n, rows, indptr, indices)

    def __repr__(self) -> str:
        kind = "dense" if self.dense else "sparse"
        return f"Graph(n={self.n}, m={self._m}, {kind})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
    if u == v:
        raise GraphError("self-loops are not allowed")


# -- invariants ---------------------------------------------------------


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def neighborhood_shells(g: Graph, u: int, depth: int) -> list[set[int]]:
    """Vertex sets at distance ``0..depth`` from ``u`` (trailing shells may be empty)."""
    g._check_vertex(u)
    if depth < 0:
        raise GraphError("depth must be non-negative")
    shells = [{u}]
    seen = {u}
    frontier = [u]
    for _ in range(depth):
        nxt = set()
        for w in frontier:
            for x in g.neighbors(w):
                if x not in seen:
                    seen.add(x)
                    nxt.add(x)
        shells.append(nxt)
        frontier = sorted(nxt)
    return shells


def count_edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    a, b = set(a), set(b)
    if a & b:
        raise GraphError("vertex sets overlap")
    for v in a | b:
        g._check_vertex(v)
    if g.dense:
        bmask = sum(1 << v for v in b)
        return sum((g.rows[v] & bmask).bit_count() for v in a)
    return sum(1 for v in a for w in g.neighbors(v) if w in b)


def count_edges_within(g: Graph, a: Iterable[int]) -> int:
    a = set(a)
    return sum(1 for v in a for w in g.neighbors(v) if w in a and w > v)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    if not g.dense and g.n > 1000:
        from scipy.sparse.csgraph import connected_components as cc

        _, labels = cc(g.to_scipy(), directed=False)
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(labels.tolist()):
            groups.setdefault(c, []).append(v)
        return sorted(groups.values(), key=lambda c: c[0])
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def smallest_class_size(self) -> int:
        return min(len(self.side_a), len(self.side_b))


def bipartition(g: Graph) -> Bipartition | None:
    """Unique 2-colouring of a connected graph, or ``None`` if it has an odd cycle.

    ``side_a`` is the colour class containing vertex 0.  Disconnected input
    raises :class:`DisconnectedGraphError` because the classes are not unique.
    """
    if g.n == 0:
        return Bipartition(frozenset(), frozenset())
    if not is_connected(g):
        raise DisconnectedGraphError("bipartition needs a connected graph; split into components first")
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if colour[w] < 0:
                colour[w] = 1 - colour[v]
                queue.append(w)
            elif colour[w] == colour[v]:
                return None
    a = frozenset(v for v in range(g.n) if colour[v] == 0)
    return Bipartition(a, frozenset(range(g.n)) - a)


def smallest_class_size(g: Graph) -> int | None:
    bp = bipartition(g)
    return None if bp is None else bp.smallest_class_size
