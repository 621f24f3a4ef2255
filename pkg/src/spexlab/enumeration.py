"""Generation of all graphs on n vertices up to isomorphism.

Canonical augmentation: every class C on n vertices has a canonical
deleted vertex m(C), and C is produced only from the representative of
C - m(C).  A parent on n-1 vertices is extended by a new vertex joined to
each subset of its vertices; the child is kept iff the new vertex could be
m(child) (cheap invariant prefilter) and C - m(C) is isomorphic to the
parent.  Isomorphic siblings are then collapsed by canonical form.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .canon import canonical_rows
from .constructions import CycleSpec
from .graph import Graph, GraphError, _bits, is_connected
from .graph6 import graph6_encode, read_graph6
from .subgraph import contains_intersecting_even_cycles, contains_subgraph

MAX_N = 9


@dataclass(frozen=True)
class EnumFilter:
    connected_only: bool = False
    min_edges: int | None = None
    max_edges: int | None = None
    freeness: CycleSpec | Graph | None = None

    def __post_init__(self):
        if self.min_edges is not None and self.max_edges is not None and self.min_edges > self.max_edges:
            raise GraphError("min_edges exceeds max_edges")

    def is_free(self, g: Graph) -> bool:
        f = self.freeness
        if f is None:
            return True
        if isinstance(f, CycleSpec):
            return contains_intersecting_even_cycles(g, f) is None
        if f.n > g.n:
            return True
        return contains_subgraph(g, f) is None

    def post(self, g: Graph) -> bool:
        # non-hereditary conditions, checked on the final level only
        m = g.num_edges
        if self.min_edges is not None and m < self.min_edges:
            return False
        if self.max_edges is not None and m > self.max_edges:
            return False
        return not self.connected_only or is_connected(g)


def default_workers() -> int:
    env = os.environ.get("SPEXLAB_WORKERS")
    if env:
        try:
            w = int(env)
        except ValueError:
            raise GraphError(f"SPEXLAB_WORKERS must be an integer, got {env!r}") from None
        if w < 1:
            raise GraphError("SPEXLAB_WORKERS must be positive")
        return w
    return os.cpu_count() or 1


def _invariant(rows, v):
    r = rows[v]
    return (r.bit_count(), sorted((rows[w].bit_count() for w in _bits(r)), reverse=True))


def _children(parent: tuple[int, ...], freeness, hereditary: bool) -> list[tuple[int, ...]]:
    """Accepted children of one canonical parent, as canonical row tuples."""
    n = len(parent) + 1
    v = n - 1
    flt = EnumFilter(freeness=freeness)
    out = []
    seen = set()
    base = list(parent) + [0]
    for s in range(1 << (n - 1)):
        rows = base[:]
        rows[v] = s
        for w in _bits(s):
            rows[w] |= 1 << v
        # the new vertex must carry the maximal invariant
        inv = _invariant(rows, v)
        if any(_invariant(rows, w) > inv for w in range(v)):
            continue
        g = Graph(n, rows=tuple(rows))
        cert, order = canonical_rows(g)
        if cert in seen:
            continue
        top = [w for w in range(n) if _invariant(rows, w) == inv]
        m = next(w for w in order if w in top)
        if m != v and canonical_rows(g.delete_vertex(m))[0] != parent:
            continue
        seen.add(cert)
        child = Graph(n, rows=cert)
        if hereditary and not flt.is_free(child):
            continue
        out.append(cert)
    return out


def _hereditary(flt: EnumFilter) -> bool:
    # forbidding a subgraph is closed under vertex deletion, so non-free
    # parents never have free children
    return flt.freeness is not None


def _level_iter(level, freeness, hereditary, workers) -> Iterator[list[tuple[int, ...]]]:
    if workers <= 1 or len(level) < 2 * workers:
        for p in level:
            yield _children(p, freeness, hereditary)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(level) // (workers * 8))
        # map preserves input order, so the merge is deterministic
        yield from pool.map(_children, level, [freeness] * len(level), [hereditary] * len(level), chunksize=chunk)


def enumerate_graphs(n: int, flt: EnumFilter | None = None, workers: int = 1, prune: bool = True) -> Iterator[Graph]:
    """One canonical representative per isomorphism class passing ``flt``.

    With ``prune`` (the default) a freeness filter is applied at every
    level, so parents containing the forbidden graph are never extended.
    ``prune=False`` generates every class and filters at the end, which is
    the slow reference pipeline.  Emission order is deterministic and does
    not depend on ``workers``.
    """
    if not 1 <= n <= MAX_N:
        raise GraphError(f"built-in enumeration supports 1 <= n <= {MAX_N}, got {n}")
    flt = flt or EnumFilter()
    hereditary = prune and _hereditary(flt)
    level: list[tuple[int, ...]] = [(0,)]
    if hereditary and not flt.is_free(Graph(1, rows=(0,))):
        level = []
    for _ in range(2, n):
        nxt = []
        for kids in _level_iter(level, flt.freeness, hereditary, workers):
            nxt.extend(kids)
        level = nxt
    finals = [level] if n == 1 else _level_iter(level, flt.freeness, hereditary, workers)
    for kids in finals:
        for cert in kids:
            g = Graph(n, rows=cert)
            if not hereditary and not flt.is_free(g):
                continue
            if flt.post(g):
                yield g


def count_graphs(n: int, flt: EnumFilter | None = None, workers: int = 1) -> int:
    return sum(1 for _ in enumerate_graphs(n, flt, workers))


def stream_graph6(source: str | os.PathLike | TextIO) -> Iterator[Graph]:
    """Decode graph6 lines from a path, ``"-"`` (stdin) or an open text file.

    Blank lines are skipped; a malformed line raises with its line number.
    """
    if hasattr(source, "read"):
        yield from read_graph6(source)
        return
    if str(source) == "-":
        import sys

        yield from read_graph6(sys.stdin)
        return
    with open(source, "r", encoding="ascii") as fh:
        yield from read_graph6(fh)


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(graph6_encode(g) + "\n")
        count += 1
    return count
