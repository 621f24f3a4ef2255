"""Builders for the named graph families.

Labelling conventions are fixed so tests can compare exact edge sets:
clique vertices come first (``0..k-1``), the extra edge of ``S+`` is
``{k, k+1}``, matching edges are ``{k, k+1}, {k+2, k+3}, ...`` with any
unmatched vertex last, and intersecting cycles are centred at vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import DENSE_LIMIT, Graph, GraphError


@dataclass(frozen=True)
class CycleSpec:
    """Half-lengths ``k_1 <= ... <= k_t`` of the cycles ``C_{2k_1}, ..., C_{2k_t}``."""

    ks: tuple[int, ...]

    def __init__(self, ks: Sequence[int]):
        ks = tuple(sorted(int(k) for k in ks))
        if not ks:
            raise GraphError("a cycle spec needs at least one cycle")
        if ks[0] < 2:
            raise GraphError("every k_i must be at least 2")
        object.__setattr__(self, "ks", ks)

    @classmethod
    def parse(cls, text: str) -> "CycleSpec":
        try:
            ks = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError:
            raise GraphError(f"malformed spec {text!r}") from None
        return cls(ks)

    @property
    def t(self) -> int:
        return len(self.ks)

    @property
    def kappa(self) -> int:
        return sum(self.ks) - len(self.ks)

    @property
    def num_vertices(self) -> int:
        return 2 * self.kappa + self.t + 1

    @property
    def all_four_cycles(self) -> bool:
        return self.ks[-1] == 2

    def __str__(self) -> str:
        return ",".join(map(str, self.ks))


@dataclass(frozen=True)
class CyclePathSpec:
    """Cycles ``C_{2k_i}`` and paths on ``2p_i`` vertices glued at one vertex."""

    cycle_ks: tuple[int, ...] = field(default=())
    path_ps: tuple[int, ...] = field(default=())

    def __init__(self, cycle_ks: Sequence[int] = (), path_ps: Sequence[int] = ()):
        cycle_ks = tuple(sorted(int(k) for k in cycle_ks))
        path_ps = tuple(sorted(int(p) for p in path_ps))
        if not cycle_ks and not path_ps:
            raise GraphError("need at least one cycle or path")
        if any(k < 2 for k in cycle_ks + path_ps):
            raise GraphError("cycle and path parameters must be at least 2")
        object.__setattr__(self, "cycle_ks", cycle_ks)
        object.__setattr__(self, "path_ps", path_ps)

    @property
    def t(self) -> int:
        return len(self.cycle_ks) + len(self.path_ps)

    @property
    def kappa(self) -> int:
        return sum(self.cycle_ks) + sum(self.path_ps) - self.t


def _build(n: int, edges) -> Graph:
    return Graph.from_edges(n, edges, sparse=n > DENSE_LIMIT)


def _join_edges(k: int, n: int) -> np.ndarray:
    """Clique on ``0..k-1`` joined to every vertex of ``k..n-1``."""
    iu = np.triu_indices(k, 1)
    clique = np.stack(iu, axis=1)
    a = np.repeat(np.arange(k), n - k)
    b = np.tile(np.arange(k, n), k)
    return np.concatenate([clique, np.stack([a, b], axis=1)]).astype(np.int64)


def make_S(n: int, k: int) -> Graph:
    """``K_k`` joined to ``n-k`` isolated vertices."""
    if not 0 <= k <= n:
        raise GraphError(f"need 0 <= k <= n, got n={n}, k={k}")
    return _build(n, _join_edges(k, n))


def make_S_plus(n: int, k: int) -> Graph:
    if k < 0 or n < k + 2:
        raise GraphError(f"S+ needs n >= k + 2, got n={n}, k={k}")
    edges = np.concatenate([_join_edges(k, n), [[k, k + 1]]]).astype(np.int64)
    return _build(n, edges)


def _matching_edges(start: int, count: int) -> np.ndarray:
    firsts = np.arange(start, start + 2 * (count // 2), 2)
    return np.stack([firsts, firsts + 1], axis=1).astype(np.int64).reshape(-1, 2)


def make_F(n: int, k: int) -> Graph:
    """``K_k`` joined to a maximal matching on ``n-k`` vertices."""
    if not 0 <= k <= n:
        raise GraphError(f"need 0 <= k <= n, got n={n}, k={k}")
    edges = np.concatenate([_join_edges(k, n), _matching_edges(k, n - k)])
    return _build(n, edges)


def make_matching(k: int) -> Graph:
    if k < 0:
        raise GraphError("k must be non-negative")
    return _build(k, _matching_edges(0, k))


def make_intersecting_even_cycles(spec: CycleSpec) -> Graph:
    """``t`` even cycles sharing only vertex 0; larger cycles get lower labels."""
    edges = []
    nxt = 1
    for k in sorted(spec.ks, reverse=True):
        path = list(range(nxt, nxt + 2 * k - 1))
        nxt += 2 * k - 1
        cyc = [0] + path
        edges.extend(zip(cyc, cyc[1:] + [0]))
    return _build(nxt, edges)


def make_intersecting_cycles_paths(spec: CyclePathSpec) -> Graph:
    """Cycles first, then paths on ``2p`` vertices attached at one end to vertex 0."""
    edges = []
    nxt = 1
    for k in sorted(spec.cycle_ks, reverse=True):
        path = list(range(nxt, nxt + 2 * k - 1))
        nxt += 2 * k - 1
        cyc = [0] + path
        edges.extend(zip(cyc, cyc[1:] + [0]))
    for p in sorted(spec.path_ps, reverse=True):
        path = [0] + list(range(nxt, nxt + 2 * p - 1))
        nxt += 2 * p - 1
        edges.extend(zip(path, path[1:]))
    return _build(nxt, edges)


def make_K(a: int, b: int) -> Graph:
    """Complete bipartite graph; side A is ``0..a-1``, side B is ``a..a+b-1``."""
    if a < 0 or b < 0:
        raise GraphError("side sizes must be non-negative")
    return _build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def make_Kp(a: int, b: int) -> Graph:
    """``K_{a,b}`` plus the path ``a - (a+1) - (a+2)`` inside side B."""
    if b < 3 or a < 0:
        raise GraphError("K^p needs b >= 3")
    return make_K(a, b).with_edges([(a, a + 1), (a + 1, a + 2)])


def make_Km(a: int, b: int) -> Graph:
    """``K_{a,b}`` plus the edges ``{a, a+1}`` and ``{a+2, a+3}`` inside side B."""
    if b < 4 or a < 0:
        raise GraphError("K^m needs b >= 4")
    return make_K(a, b).with_edges([(a, a + 1), (a + 2, a + 3)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return _build(n, [(i, (i + 1) % n) for i in range(n)])


def make_path(n: int) -> Graph:
    return _build(n, [(i, i + 1) for i in range(n - 1)])


def make_complete(n: int) -> Graph:
    return make_S(n, n)


def predicted_extremal(n: int, spec: CycleSpec) -> Graph | None:
    """``F_{n,t}`` when every cycle is a 4-cycle, otherwise ``S+_{n,kappa}``.

    ``None`` when the construction is undefined at this order.
    """
    if spec.all_four_cycles:
        return make_F(n, spec.t) if n >= spec.t else None
    if n < spec.kappa + 2:
        return None
    return make_S_plus(n, spec.kappa)


FAMILIES = {
    "S": make_S,
    "S+": make_S_plus,
    "F": make_F,
    "K": make_K,
    "Kp": make_Kp,
    "Km": make_Km,
    "M": make_matching,
}
