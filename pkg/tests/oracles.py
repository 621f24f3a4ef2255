"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import networkx as nx
import numpy as np

from spexlab.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[a], idx[b]) for a, b in h.edges()])


def dense_lambda(g: Graph) -> float:
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.adjacency_matrix().astype(float))[-1])


def _cycle_type(perm):
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            c = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                c += 1
            out.append(c)
    return out


def burnside_class_count(n: int) -> int:
    """Number of graphs on n vertices up to isomorphism, by Burnside's lemma.

    Sums 2^(orbits of the permutation on vertex pairs) over all n! permutations.
    """
    total = 0
    pairs = list(itertools.combinations(range(n), 2))
    for perm in itertools.permutations(range(n)):
        index = {p: i for i, p in enumerate(pairs)}
        on_pairs = [index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
        total += 2 ** len(_cycle_type(on_pairs))
    assert total % math.factorial(n) == 0
    return total // math.factorial(n)


def brute_min_label(n: int, edges) -> tuple:
    """Lexicographically smallest relabelled edge list over all permutations."""
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def contains_nx(g: Graph, h: Graph) -> bool:
    gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
    return gm.subgraph_is_monomorphic()


def frac_sqrt_ge(x: Fraction, y: Fraction) -> bool:
    """sqrt(x) >= y for nonnegative rationals, exactly."""
    return y <= 0 or x >= y * y


def brute_minor(g: Graph, h: Graph) -> bool:
    """Branch-set search: each vertex of g goes to one branch set or is deleted."""
    if h.n > g.n:
        return False
    G = to_nx(g)
    hedges = list(h.edges())
    for assign in itertools.product(range(h.n + 1), repeat=g.n):
        sets = [[v for v in range(g.n) if assign[v] == i] for i in range(h.n)]
        if any(not s for s in sets):
            continue
        if not all(nx.is_connected(G.subgraph(s)) for s in sets):
            continue
        if all(any(G.has_edge(x, y) for x in sets[a] for y in sets[b]) for a, b in hedges):
            return True
    return False


def simple_paths_between(g: Graph, U, allowed_edges, length: int):
    """Every vertex sequence of ``length`` vertices forming a path in ``allowed_edges`` with ends in U."""
    adj = {v: set() for v in range(g.n)}
    for a, b in allowed_edges:
        adj[a].add(b)
        adj[b].add(a)
    out = []

    def grow(p):
        if len(p) == length:
            if p[0] in U and p[-1] in U:
                out.append(tuple(p))
            return
        for x in adj[p[-1]]:
            if x not in p:
                grow(p + [x])

    for s in U:
        grow([s])
    return out


def brute_path_system(g: Graph, U, W, ks) -> bool:
    U, W = set(U), set(W)
    allowed = [(a, b) for a, b in g.edges() if not (a in W and b in W)]
    options = [simple_paths_between(g, U, allowed, 2 * k - 1) for k in ks]

    def place(i, used):
        if i == len(options):
            return True
        return any(not (set(p) & used) and place(i + 1, used | set(p)) for p in options[i])

    return place(0, set())
