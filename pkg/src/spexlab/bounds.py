"""Closed-form edge and degree bounds for intersecting even cycles.

Everything rational is computed with :class:`fractions.Fraction` so that
comparisons against search results never suffer from rounding.  The only
irrational quantity, the Alon-Krivelevich-Sudakov bound, is exposed both as
a float and through its exact square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constructions import CycleSpec
from .graph import GraphError

AKS_NOTE = "lower-order O(1/n) correction dropped; the value is a slightly looser upper bound"


@dataclass(frozen=True)
class BoundQuery:
    """Bipartite ``H`` with sides of size ``a`` and ``b`` (max degree ``r`` on
    side ``b``) against an ``n``-vertex host of average degree ``d``."""

    a: int
    b: int
    r: int
    n: int
    d: Fraction

    def __init__(self, a: int, b: int, r: int, n: int, d):
        d = Fraction(d)
        if a < 1 or b < 1 or r < 1:
            raise GraphError("need a, b, r >= 1")
        if n < 1 or not 0 <= d <= n - 1:
            raise GraphError("need n >= 1 and 0 <= d <= n - 1")
        for name, val in (("a", a), ("b", b), ("r", r), ("n", n), ("d", d)):
            object.__setattr__(self, name, val)


def alon_lhs(q: BoundQuery) -> Fraction:
    """``d^r / n^(r-1) - C(n, r) ((a+b-1)/n)^r``."""
    return q.d**q.r / Fraction(q.n) ** (q.r - 1) - math.comb(q.n, q.r) * Fraction(q.a + q.b - 1, q.n) ** q.r


def alon_condition(q: BoundQuery) -> bool:
    """True when the average degree forces a copy of ``H``."""
    return alon_lhs(q) > q.a - 1


def aks_bound_squared(n: int, spec: CycleSpec) -> Fraction:
    """Exact square of :func:`aks_bound`: ``(kappa + (2kappa+t)^2/2) n^3 / 4``."""
    if n < 1:
        raise GraphError("n must be positive")
    k, t = spec.kappa, spec.t
    return (k + Fraction((2 * k + t) ** 2, 2)) * n**3 / 4


def aks_bound(n: int, spec: CycleSpec) -> float:
    """``(1/2) (kappa + (2kappa+t)^2/2)^(1/2) n^(3/2)``; see :data:`AKS_NOTE`."""
    return math.sqrt(aks_bound_squared(n, spec))


def within_aks_bound(edges: int, n: int, spec: CycleSpec) -> bool:
    """``edges <= aks_bound(n, spec)``, decided without rounding."""
    return edges * edges <= aks_bound_squared(n, spec)


def erdos_gallai_bound(n: int, ell: int) -> Fraction:
    """Maximum edge count ``(ell-2) n / 2`` of a graph with no path on ``ell`` vertices."""
    if ell < 2:
        raise GraphError("ell must be at least 2")
    return Fraction((ell - 2) * n, 2)


def degree_square_bound(n: int, spec: CycleSpec) -> int:
    """``(4kappa + t)(n-1)n``; free graphs have degree-square sum strictly below it."""
    if n < 1:
        raise GraphError("n must be positive")
    return (4 * spec.kappa + spec.t) * (n - 1) * n


def bipartition_edge_bound(n_u: int, n_total: int, spec: CycleSpec) -> Fraction:
    """``(4kappa + t - 2)(|U| + n)/2``.

    When ``2e(U) + e(U, W)`` exceeds this, the disjoint path system with
    ends in ``U`` exists.
    """
    if not 0 <= n_u <= n_total:
        raise GraphError("need 0 <= |U| <= n")
    return Fraction((4 * spec.kappa + spec.t - 2) * (n_u + n_total), 2)


def fmt(x) -> str:
    """Render an exact value as a short decimal string."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{float(x):.6f}".rstrip("0").rstrip(".")
    if isinstance(x, float):
        return f"{x:.6f}".rstrip("0").rstrip(".")
    return str(x)


TABLE_HEADER = ["n", "spec", "kappa", "t", "aks_bound", "degree_square_bound", "lambda_upper"]


def bound_table(ns, specs) -> list[list[str]]:
    """One row of bounds per ``(n, spec)``; ``lambda_upper`` is ``sqrt((4kappa+t)(n-1))``."""
    rows = []
    for spec in specs:
        for n in ns:
            rows.append([
                str(n),
                str(spec),
                str(spec.kappa),
                str(spec.t),
                fmt(aks_bound(n, spec)),
                str(degree_square_bound(n, spec)),
                fmt(math.sqrt((4 * spec.kappa + spec.t) * (n - 1))),
            ])
    return rows
