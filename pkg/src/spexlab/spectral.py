"""Spectral radius, Perron vectors and exact spectral comparisons."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import poly
from .graph import Graph, GraphError, connected_components

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10**6
EXACT_LIMIT = 12
TIE_TOL = 1e-9


class NotEquitableError(GraphError):
    pass


@dataclass
class SpectralResult:
    lam: float
    perron: np.ndarray
    residual: float
    iterations: int
    converged: bool = True

    @property
    def error_bound(self) -> float:
        """Distance from ``lam`` to the spectrum (symmetric residual bound)."""
        return self.residual * math.sqrt(len(self.perron)) / float(np.linalg.norm(self.perron))


HEAVY_ROW = 256


def _matvec(a):
    """``x -> A x`` with pairwise summation on rows of degree >= HEAVY_ROW.

    Sequential CSR accumulation over very long rows leaves a rounding bias
    that keeps the residual above 1e-10 for n around 1e5.
    """
    if isinstance(a, np.ndarray):
        return lambda x: a @ x
    deg = np.diff(a.indptr)
    heavy = np.flatnonzero(deg >= HEAVY_ROW)
    if not len(heavy):
        return lambda x: a @ x
    light = a.copy()
    for v in heavy:
        light.data[light.indptr[v]:light.indptr[v + 1]] = 0
    light.eliminate_zeros()
    cols = [a.indices[a.indptr[v]:a.indptr[v + 1]] for v in heavy.tolist()]
    rows = heavy.tolist()

    def mv(x):
        y = light @ x
        for v, ix in zip(rows, cols):
            y[v] = x[ix].sum()
        return y

    return mv


def _iterate(a, tol, max_iter, shift):
    # x <- (A + shift I) x / max entry, starting from all ones
    mv = _matvec(a)
    x = np.ones(a.shape[0])
    best = None
    for it in range(1, max_iter + 1):
        ax = mv(x)
        lam = float(np.sum(x * ax) / np.sum(x * x))
        r = float(np.max(np.abs(ax - lam * x)))
        if best is None or r < best[2]:
            best = (lam, x, r)
        if r <= tol:
            return lam, x, r, it, True
        y = ax + shift * x
        x = y / y.max()
    lam, x, r = best
    return lam, x, r, max_iter, False


def default_shift(max_degree: int) -> float:
    """``max(1, sqrt(D)/2)`` for maximum degree ``D``.

    Any shift >= 1 rules out the period-2 oscillation of bipartite graphs;
    since ``sqrt(D) <= lambda``, the shift never exceeds ``lambda/2``, and it
    damps the ``-lambda`` end of the spectrum that dominates convergence on
    join-type graphs.
    """
    return max(1.0, math.sqrt(max_degree) / 2)


def power_iteration(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                    shift: float | None = None) -> SpectralResult:
    """Largest adjacency eigenvalue and Perron vector of ``g``.

    Each component is iterated separately with ``A + shift*I`` (see
    :func:`default_shift`; pass ``shift=1`` for the plain ``A + I``
    iteration).  The component with the largest eigenvalue (lowest vertex
    on ties) wins, and the returned vector is zero elsewhere with max entry
    1.  A run that exhausts ``max_iter`` returns its best iterate with
    ``converged=False``.
    """
    if g.n == 0:
        raise GraphError("power iteration needs a nonempty graph")
    if tol <= 0:
        raise GraphError("tol must be positive")
    if shift is not None and shift < 1:
        raise GraphError("shift must be at least 1")
    comps = connected_components(g)
    best = None
    total = 0
    ok = True
    for comp in comps:
        if len(comp) == 1:
            cand = (0.0, np.ones(1), 0.0, 1, True)
        else:
            sub = g if len(comps) == 1 else g.induced(comp)
            a = sub.adjacency_matrix().astype(float) if sub.dense else sub.to_scipy()
            s = default_shift(max(sub.degrees())) if shift is None else shift
            cand = _iterate(a, tol, max_iter, s)
        total += cand[3]
        ok = ok and cand[4]
        if best is None or cand[0] > best[1][0] + TIE_TOL:
            best = (comp, cand)
    comp, (lam, x, r, _, _) = best
    vec = np.zeros(g.n)
    vec[comp] = x / x.max()
    return SpectralResult(lam=lam, perron=vec, residual=r, iterations=total, converged=ok)


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return power_iteration(g, tol).lam


def lambda_S_closed_form(n: int, k: int) -> float:
    """Spectral radius of ``K_k`` joined to ``n-k`` isolated vertices."""
    if not 1 <= k <= n:
        raise GraphError(f"need 1 <= k <= n, got n={n}, k={k}")
    return (k - 1 + math.sqrt((k - 1) ** 2 + 4 * k * (n - k))) / 2


@dataclass
class QuotientMatrix:
    classes: list[list[int]]
    matrix: list[list[int]]


def quotient_matrix(g: Graph, classes: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Quotient of an equitable partition; raises :class:`NotEquitableError` otherwise."""
    cells = [sorted(c) for c in classes if len(c)]
    flat = [v for c in cells for v in c]
    if sorted(flat) != list(range(g.n)):
        raise GraphError("classes must partition the vertex set")
    cell_of = {}
    for i, c in enumerate(cells):
        for v in c:
            cell_of[v] = i
    mat = []
    for i, c in enumerate(cells):
        row = None
        for v in c:
            counts = [0] * len(cells)
            for w in g.neighbors(v):
                counts[cell_of[w]] += 1
            if row is None:
                row = counts
            elif counts != row:
                raise NotEquitableError(f"cell {i} is not equitable (vertex {v})")
        mat.append(row)
    return QuotientMatrix(cells, mat)


def quotient_spectral_radius(g: Graph, classes: Sequence[Sequence[int]], fallback: bool = False) -> float:
    """Largest eigenvalue of the quotient matrix of an equitable partition.

    The root is isolated exactly (Sturm sequence on the integer
    characteristic polynomial) and bisected to relative width 1e-15.  With
    ``fallback=True`` a non-equitable partition falls back to power
    iteration instead of raising.
    """
    try:
        q = quotient_matrix(g, classes)
    except NotEquitableError:
        if not fallback:
            raise
        return power_iteration(g).lam
    iv = poly.largest_root(poly.charpoly(q.matrix))
    if iv is None:
        return 0.0
    scale = max(abs(iv.hi), abs(iv.lo), Fraction(1))
    iv.refine(scale * Fraction(1, 10**15))
    return iv.midpoint()


def adjacency_charpoly(g: Graph) -> list[int]:
    return poly.charpoly(g.adjacency_matrix().tolist())


def exact_lambda_compare(g1: Graph, g2: Graph) -> int:
    """Sign of ``lambda(g1) - lambda(g2)``: -1, 0 or 1.

    Exact for graphs with at most 12 vertices; larger inputs are compared in
    floating point with ties declared below 1e-9.
    """
    if g1.n == 0 or g2.n == 0:
        raise GraphError("empty graph")
    if g1.n > EXACT_LIMIT or g2.n > EXACT_LIMIT:
        d = spectral_radius(g1) - spectral_radius(g2)
        return 0 if abs(d) <= TIE_TOL else (1 if d > 0 else -1)
    return poly.compare_largest_roots(adjacency_charpoly(g1), adjacency_charpoly(g2))


def certified_lower_bound(g: Graph, y: Sequence[float], c: float) -> bool:
    """True iff ``A y >= c y`` entrywise, checked in exact rational arithmetic.

    A true result certifies ``lambda(g) >= c`` for nonnegative nonzero ``y``.
    """
    if len(y) != g.n:
        raise GraphError(f"vector length {len(y)} does not match n={g.n}")
    ys = [Fraction(v) for v in (y.tolist() if isinstance(y, np.ndarray) else y)]
    if any(v < 0 for v in ys) or not any(ys):
        raise GraphError("y must be nonnegative and nonzero")
    cf = Fraction(c)
    for v in range(g.n):
        s = sum((ys[w] for w in g.neighbors(v)), Fraction(0))
        if s < cf * ys[v]:
            return False
    return True


def lambda_bounds(n: int, spec) -> tuple[float, float]:
    """Lower and upper spectral bounds for ``n``-vertex graphs free of ``spec``."""
    if n <= spec.kappa:
        raise GraphError("need n > kappa")
    return lambda_S_closed_form(n, spec.kappa), math.sqrt((4 * spec.kappa + spec.t) * (n - 1))


def perron_min_entry(res: SpectralResult) -> float:
    return float(res.perron.min())
