"""Exact characteristic polynomials and real-root isolation.

Polynomials are coefficient lists, highest degree first, over ``int`` or
``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def charpoly(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Monic characteristic polynomial ``det(xI - M)`` of an integer matrix.

    Faddeev-LeVerrier recursion; every division is exact over the integers.
    """
    n = len(matrix)
    a = [list(map(int, row)) for row in matrix]
    coeffs = [1]
    m = [[0] * n for _ in range(n)]  # M_0 = 0
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[sum(a[i][l] * m[l][j] for l in range(n) if a[i][l]) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += c
        m = am
        tr = sum(a[i][l] * m[l][i] for i in range(n) for l in range(n) if a[i][l])
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c = q
        coeffs.append(c)
    return coeffs


def _strip(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return list(p[i:])


def evaluate(p, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def derivative(p):
    d = len(p) - 1
    return _strip([c * (d - i) for i, c in enumerate(p[:-1])]) or [0]


def poly_rem(a, b):
    a = [Fraction(c) for c in _strip(a)]
    b = [Fraction(c) for c in _strip(b)]
    while len(a) >= len(b) and any(a):
        f = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    return _strip(a) if a else [Fraction(0)]


def poly_div(a, b):
    a = [Fraction(c) for c in _strip(a)]
    b = [Fraction(c) for c in _strip(b)]
    q = []
    while len(a) >= len(b):
        f = a[0] / b[0]
        q.append(f)
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    return _strip(q) if q else [Fraction(0)]


def _is_zero(p):
    return all(c == 0 for c in p)


def poly_gcd(a, b):
    a, b = _strip(a), _strip(b)
    while not _is_zero(b):
        a, b = b, poly_rem(a, b)
    a = [Fraction(c) for c in a]
    return [c / a[0] for c in a]


def squarefree(p):
    """``p / gcd(p, p')``, monic: same roots, all simple."""
    g = poly_gcd(p, derivative(p))
    q = poly_div(p, g)
    return [c / q[0] for c in q]


def sturm_sequence(p):
    seq = [list(map(Fraction, p)), derivative(list(map(Fraction, p)))]
    while len(seq[-1]) > 1 or seq[-1][0] != 0:
        r = poly_rem(seq[-2], seq[-1])
        if _is_zero(r):
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(seq, x):
    prev = 0
    changes = 0
    for p in seq:
        v = evaluate(p, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def count_roots(seq, lo, hi):
    """Distinct real roots in ``(lo, hi]`` of the squarefree head of ``seq``."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(p) -> Fraction:
    """Cauchy bound: every root has absolute value below this."""
    p = _strip(p)
    lead = Fraction(p[0])
    return 1 + max((abs(Fraction(c) / lead) for c in p[1:]), default=Fraction(0))


class RootInterval:
    """Half-open interval ``(lo, hi]`` holding exactly one root of ``poly``."""

    __slots__ = ("poly", "seq", "lo", "hi")

    def __init__(self, poly, seq, lo, hi):
        self.poly, self.seq, self.lo, self.hi = poly, seq, lo, hi

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def width(self):
        return self.hi - self.lo

    def bisect(self):
        if self.exact:
            return
        mid = (self.lo + self.hi) / 2
        if evaluate(self.poly, mid) == 0:
            self.lo = self.hi = mid
        elif count_roots(self.seq, mid, self.hi):
            self.lo = mid
        else:
            self.hi = mid

    def refine(self, width):
        while not self.exact and self.hi - self.lo > width:
            self.bisect()
        return self

    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)


def largest_root(p) -> RootInterval | None:
    """Isolating interval for the largest real root of ``p`` (``None`` if no real root)."""
    q = squarefree(p)
    if len(q) == 1:
        return None
    seq = sturm_sequence(q)
    b = root_bound(q)
    lo, hi = -b, b
    if count_roots(seq, lo, hi) == 0:
        return None
    if evaluate(q, hi) == 0:
        return RootInterval(q, seq, hi, hi)
    while count_roots(seq, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots(seq, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    iv = RootInterval(q, seq, lo, hi)
    if evaluate(q, hi) == 0:
        iv.lo = hi
    return iv


def compare_largest_roots(p1, p2) -> int:
    """Sign of ``maxroot(p1) - maxroot(p2)`` computed exactly.

    Both polynomials must have a real root.  Equality is decided by testing
    whether ``gcd(p1, p2)`` has a root inside both isolating intervals.
    """
    a, b = largest_root(p1), largest_root(p2)
    if a is None or b is None:
        raise ValueError("polynomial without real roots")
    g = poly_gcd(a.poly, b.poly)
    if len(g) > 1:
        gseq = sturm_sequence(g)

        def has_root(iv):
            if iv.exact:
                return evaluate(g, iv.lo) == 0
            return count_roots(gseq, iv.lo, iv.hi) > 0

        if has_root(a) and has_root(b):
            return 0
    # Roots differ; refine until the intervals separate.
    while True:
        if a.lo >= b.hi:
            return 1
        if b.lo >= a.hi:
            return -1
        if not a.exact and (b.exact or a.width() >= b.width()):
            a.bisect()
        else:
            b.bisect()
