"""Containment tests: subgraph isomorphism, intersecting even cycles,
paths, disjoint path systems and small minors.

"Contains" always means a (not necessarily induced) subgraph.  All searches
are exhaustive, so ``None`` is a proof of absence.  Host graphs are dense
(at most 64 vertices) and work on bitmask rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .canon import canonical_form, canonical_graph
from .constructions import CycleSpec
from .graph import DENSE_LIMIT, Graph, GraphError, _bits

MINOR_H_LIMIT = 8
MINOR_G_LIMIT = 12


def _dense_rows(g: Graph, what: str = "host graph") -> tuple[int, ...]:
    if g.n > DENSE_LIMIT:
        raise GraphError(f"{what} has {g.n} vertices; at most {DENSE_LIMIT} supported")
    return g.to_dense().rows


def _is_path(rows, seq) -> bool:
    return all(rows[a] >> b & 1 for a, b in zip(seq, seq[1:]))


# -- generic subgraph isomorphism ---------------------------------------


def _match_order(h: Graph) -> list[int]:
    # Grow from the highest-degree vertex, always taking the vertex with the
    # most already-ordered neighbours so candidate sets stay small.
    rows = h.rows
    deg = [r.bit_count() for r in rows]
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        v = max(remaining, key=lambda u: ((rows[u] & placed).bit_count(), deg[u], -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def contains_subgraph(g: Graph, h: Graph) -> dict[int, int] | None:
    """An injective adjacency-preserving map ``V(h) -> V(g)``, or ``None``."""
    grows = _dense_rows(g)
    if h.n > g.n:
        raise GraphError(f"pattern has {h.n} vertices but host only {g.n}")
    hrows = h.to_dense().rows
    if h.num_edges > g.num_edges:
        return None
    if h.n == 0:
        return {}
    gdeg = [r.bit_count() for r in grows]
    hdeg = [r.bit_count() for r in hrows]
    # the i-th largest pattern degree needs an i-th largest host degree at least as big
    if any(a > b for a, b in zip(sorted(hdeg, reverse=True), sorted(gdeg, reverse=True))):
        return None
    order = _match_order(h)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in _bits(hrows[v]) if pos[w] < i] for i, v in enumerate(order)]
    by_degree = [0] * (max(hdeg) + 1)
    for d in range(len(by_degree)):
        by_degree[d] = sum(1 << v for v in range(g.n) if gdeg[v] >= d)
    full = (1 << g.n) - 1
    image = [0] * h.n

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        u = order[i]
        cand = full & ~used & by_degree[hdeg[u]]
        for w in back[i]:
            cand &= grows[image[w]]
        for x in _bits(cand):
            image[u] = x
            if extend(i + 1, used | 1 << x):
                return True
        return False

    if not extend(0, 0):
        return None
    mapping = {v: image[v] for v in range(h.n)}
    if not check_witness(g, h, mapping):
        raise AssertionError("subgraph witness failed re-validation")
    return mapping


# -- intersecting even cycles --------------------------------------------


@dataclass(frozen=True)
class CycleWitness:
    """Center vertex and one vertex sequence per cycle, each starting at the center."""

    center: int
    cycles: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph, spec: CycleSpec) -> bool:
        rows = g.to_dense().rows
        if sorted(len(c) for c in self.cycles) != sorted(2 * k for k in spec.ks):
            return False
        seen = set()
        for c in self.cycles:
            if c[0] != self.center or len(set(c)) != len(c):
                return False
            if not _is_path(rows, list(c) + [c[0]]):
                return False
            inner = set(c[1:])
            if inner & seen:
                return False
            seen |= inner
        return self.center not in seen

    def to_dict(self) -> dict:
        return {"center": self.center, "cycles": [list(c) for c in self.cycles]}


def contains_intersecting_even_cycles(g: Graph, spec: CycleSpec) -> CycleWitness | None:
    """Search for ``t`` cycles of lengths ``2k_i`` meeting only at one center.

    Centers are tried in decreasing degree order.  Cycles are placed
    longest first; each one is a path on ``2k-1`` unused vertices between
    two neighbours ``a < b`` of the center.  Consecutive cycles of equal
    length must have increasing ``a``, which removes the permutations of
    equal slots.
    """
    rows = _dense_rows(g)
    n = g.n
    ks = sorted(spec.ks, reverse=True)
    t = len(ks)
    if n < spec.num_vertices:
        return None
    deg = [r.bit_count() for r in rows]
    centers = sorted((v for v in range(n) if deg[v] >= 2 * t), key=lambda v: (-deg[v], v))

    for c in centers:
        nb = rows[c]
        found: list[list[int]] = []

        def place(i: int, used: int, min_start: int) -> bool:
            if i == t:
                return True
            avail_nb = nb & ~used
            if avail_nb.bit_count() < 2 * (t - i):
                return False
            length = 2 * ks[i] - 1
            for a in _bits(avail_nb):
                if a < min_start:
                    continue
                path = [a]

                def grow(u: int, used2: int) -> bool:
                    left = length - len(path)
                    if left == 1:
                        ends = rows[u] & nb & ~used2 & ~((2 << a) - 1)
                        for b in _bits(ends):
                            path.append(b)
                            found.append([c] + path)
                            nxt = ks[i + 1] if i + 1 < t else None
                            if place(i + 1, used2 | 1 << b, a + 1 if nxt == ks[i] else 0):
                                return True
                            found.pop()
                            path.pop()
                        return False
                    for x in _bits(rows[u] & ~used2):
                        path.append(x)
                        if grow(x, used2 | 1 << x):
                            return True
                        path.pop()
                    return False

                if grow(a, used | 1 << a):
                    return True
            return False

        if place(0, 1 << c, 0):
            w = CycleWitness(c, tuple(tuple(p) for p in found))
            if not w.validate(g, spec):
                raise AssertionError("cycle witness failed re-validation")
            return w
    return None


def is_free(g: Graph, spec: CycleSpec) -> bool:
    return contains_intersecting_even_cycles(g, spec) is None


# -- paths --------------------------------------------------------------


def restricted_graph(g: Graph, U: Iterable[int], W: Iterable[int]) -> Graph:
    """``g`` without the edges inside ``W``; ``U`` and ``W`` must partition ``V(g)``."""
    rows = _dense_rows(g)
    U, W = set(U), set(W)
    if U & W or U | W != set(range(g.n)):
        raise GraphError("U and W must partition the vertex set")
    wmask = sum(1 << w for w in W)
    return Graph(g.n, rows=tuple(r & ~wmask if v in W else r for v, r in enumerate(rows)))


def _reach(rows, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def has_path_on(g: Graph, ell: int) -> list[int] | None:
    """A simple path on ``ell`` vertices, or ``None`` if there is none.

    Depth-first search; failed (endpoint, visited set) states are memoised
    and branches whose reachable region is too small are cut.
    """
    if ell < 1:
        raise GraphError("ell must be at least 1")
    rows = _dense_rows(g)
    n = g.n
    if ell > n:
        return None
    if ell == 1:
        return [0]
    full = (1 << n) - 1
    dead: set[tuple[int, int]] = set()
    path: list[int] = []

    def dfs(u: int, used: int) -> bool:
        left = ell - len(path)
        if left == 0:
            return True
        if (u, used) in dead:
            return False
        free = full & ~used
        if (_reach(rows, u, free).bit_count() - 1) < left:
            dead.add((u, used))
            return False
        for x in _bits(rows[u] & free):
            path.append(x)
            if dfs(x, used | 1 << x):
                return True
            path.pop()
        dead.add((u, used))
        return False

    for s in range(n):
        path[:] = [s]
        if dfs(s, 1 << s):
            if not (_is_path(rows, path) and len(set(path)) == ell):
                raise AssertionError("path witness failed re-validation")
            return list(path)
    return None


@dataclass(frozen=True)
class PathSystem:
    """Vertex-disjoint paths with both endpoints in ``U``."""

    paths: tuple[tuple[int, ...], ...]
    U: frozenset
    W: frozenset

    def validate(self, g: Graph, spec: CycleSpec | None = None) -> bool:
        rows = restricted_graph(g, self.U, self.W).rows
        seen: set[int] = set()
        for p in self.paths:
            if p[0] not in self.U or p[-1] not in self.U:
                return False
            if set(p) & seen or len(set(p)) != len(p) or not _is_path(rows, p):
                return False
            seen |= set(p)
        if spec is not None:
            want = sorted(2 * (k - 1) + 1 for k in spec.ks)
            if sorted(len(p) for p in self.paths) != want:
                return False
        return True

    def to_dict(self) -> dict:
        return {"paths": [list(p) for p in self.paths], "U": sorted(self.U), "W": sorted(self.W)}


def find_disjoint_path_system(g: Graph, U: Iterable[int], W: Iterable[int], spec: CycleSpec) -> PathSystem | None:
    """``t`` disjoint paths on ``2k_i - 1`` vertices with both ends in ``U``.

    Only edges inside ``U`` and between ``U`` and ``W`` are used.  Paths
    are placed longest first; a path is oriented so its smaller endpoint
    comes first, and equal-length paths have increasing first vertices.
    """
    U, W = frozenset(U), frozenset(W)
    rows = restricted_graph(g, U, W).rows
    umask = sum(1 << u for u in U)
    lengths = sorted((2 * k - 1 for k in spec.ks), reverse=True)
    t = len(lengths)
    if sum(lengths) > g.n:
        return None
    full = (1 << g.n) - 1
    found: list[list[int]] = []
    dead: set[tuple[int, int, int]] = set()

    def place(i: int, used: int, min_start: int) -> bool:
        if i == t:
            return True
        key = (i, used, min_start)
        if key in dead:
            return False
        free = full & ~used
        if (umask & free).bit_count() < 2 * (t - i):
            dead.add(key)
            return False
        length = lengths[i]
        for a in _bits(umask & free & ~((1 << min_start) - 1)):
            path = [a]

            def grow(u: int, used2: int) -> bool:
                left = length - len(path)
                if left == 1:
                    for b in _bits(rows[u] & umask & ~used2 & ~((2 << a) - 1)):
                        path.append(b)
                        found.append(list(path))
                        same = i + 1 < t and lengths[i + 1] == length
                        if place(i + 1, used2 | 1 << b, a + 1 if same else 0):
                            return True
                        found.pop()
                        path.pop()
                    return False
                for x in _bits(rows[u] & ~used2):
                    path.append(x)
                    if grow(x, used2 | 1 << x):
                        return True
                    path.pop()
                return False

            if grow(a, used | 1 << a):
                return True
        dead.add(key)
        return False

    if not place(0, 0, 0):
        return None
    ps = PathSystem(tuple(tuple(p) for p in found), U, W)
    if not ps.validate(g, spec):
        raise AssertionError("path system failed re-validation")
    return ps


# -- minors -------------------------------------------------------------


def _contract(g: Graph, u: int, v: int) -> Graph:
    # merge v into u, then drop v
    rows = list(g.rows)
    for w in _bits(rows[v] & ~(1 << u)):
        rows[w] |= 1 << u
    rows[u] = (rows[u] | rows[v]) & ~(1 << u)
    keep = [w for w in range(g.n) if w != v]
    return Graph(g.n, rows=tuple(rows)).induced(keep)


def contains_minor(g: Graph, h: Graph) -> bool:
    """Whether ``h`` is a minor of ``g``.

    ``h`` is a minor iff it is a subgraph of some graph obtained from ``g``
    by contracting edges, so contractions are explored breadth first up to
    isomorphism and each one is tested with :func:`contains_subgraph`.
    """
    if h.n > MINOR_H_LIMIT or g.n > MINOR_G_LIMIT:
        raise GraphError(f"minor test supports |V(h)| <= {MINOR_H_LIMIT} and |V(g)| <= {MINOR_G_LIMIT}")
    if h.n > g.n:
        return False
    h = h.to_dense()
    level = {canonical_form(g): canonical_graph(g.to_dense())}
    while level:
        nxt = {}
        for cur in level.values():
            if cur.num_edges < h.num_edges:
                continue
            if contains_subgraph(cur, h) is not None:
                return True
            if cur.n == h.n:
                continue
            for u, v in cur.edges():
                c = _contract(cur, u, v)
                key = canonical_form(c)
                if key not in nxt:
                    nxt[key] = c
        level = nxt
    return False


def check_witness(g: Graph, h: Graph, mapping: dict[int, int]) -> bool:
    rows = g.to_dense().rows
    if sorted(mapping) != list(range(h.n)) or len(set(mapping.values())) != h.n:
        return False
    return all(rows[mapping[a]] >> mapping[b] & 1 for a, b in h.edges())

