"""Canonical labelling by colour refinement and individualisation.

The search tree is the usual one: refine to an equitable ordered
partition, individualise each vertex of the first non-singleton cell, and
recurse.  Every leaf yields a relabelled adjacency certificate and the
largest certificate wins.  Automorphisms found when two leaves share a
certificate prune sibling subtrees lying in the same orbit.
"""

from __future__ import annotations

from .graph import DENSE_LIMIT, Graph, GraphError
from .graph6 import encode_rows


def _refine(rows, cells):
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                r = rows[v]
                key = tuple((r & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
        if not split:
            return out
        cells = out


class _Orbits:
    def __init__(self, n, gens):
        self.parent = list(range(n))
        for g in gens:
            for v, w in enumerate(g):
                self.union(v, w)

    def find(self, v):
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


class _Abort(Exception):
    def __init__(self, level):
        self.level = level


def _search(rows, n):
    best_cert = None
    best_order = None
    seen = {}
    gens = []
    stack = []  # per level: (individualised vertex, completed siblings)

    def leaf(cells):
        nonlocal best_cert, best_order
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            r = rows[v]
            x = 0
            while r:
                low = r & -r
                x |= 1 << pos[low.bit_length() - 1]
                r ^= low
            cert.append(x)
        cert = tuple(cert)
        if best_cert is None or cert > best_cert:
            best_cert, best_order = cert, order
        old = seen.get(cert)
        if old is None:
            seen[cert] = order
            return
        gamma = [0] * n
        for a, b in zip(order, old):
            gamma[a] = b
        gens.append(gamma)
        # Abandon the shallowest in-progress child that gamma maps into the
        # orbit of an already completed sibling.
        for level, (v, done) in enumerate(stack):
            if any(gamma[w] != w for w, _ in stack[:level]):
                break
            if not done:
                continue
            fixing = [g for g in gens if all(g[w] == w for w, _ in stack[:level])]
            orb = _Orbits(n, fixing)
            rv = orb.find(v)
            if any(orb.find(w) == rv for w in done):
                raise _Abort(level)

    def recurse(cells):
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf(cells)
            return
        cell = cells[target]
        level = len(stack)
        done = []
        for v in cell:
            if done:
                prefix = [w for w, _ in stack]
                fixing = [g for g in gens if all(g[w] == w for w in prefix)]
                if fixing:
                    orb = _Orbits(n, fixing)
                    rv = orb.find(v)
                    if any(orb.find(w) == rv for w in done):
                        continue
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            stack.append((v, done))
            try:
                recurse(_refine(rows, child))
            except _Abort as ab:
                if ab.level != level:
                    stack.pop()
                    raise
            stack.pop()
            done.append(v)

    recurse(_refine(rows, [list(range(n))]) if n else [])
    if n == 0:
        return (), []
    return best_cert, best_order


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order whose relabelling gives the canonical graph.

    ``order[i]`` is the vertex that receives canonical label ``i``.
    """
    if g.n > DENSE_LIMIT or not g.dense:
        raise GraphError(f"canonical labelling supports dense graphs with n <= {DENSE_LIMIT}")
    return _search(g.rows, g.n)[1]


def canonical_rows(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    if g.n > DENSE_LIMIT or not g.dense:
        raise GraphError(f"canonical labelling supports dense graphs with n <= {DENSE_LIMIT}")
    return _search(g.rows, g.n)


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabelled graph; equal iff isomorphic."""
    cert, _ = canonical_rows(g)
    return encode_rows(g.n, cert).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    cert, _ = canonical_rows(g)
    return Graph(g.n, rows=cert)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
