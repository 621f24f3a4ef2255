"""Brute-force ex(n, F) and spex(n, F) over enumerated graphs."""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from . import bounds
from .canon import canonical_form
from .constructions import (
    CyclePathSpec,
    CycleSpec,
    make_F,
    make_intersecting_cycles_paths,
    make_S,
    make_S_plus,
    predicted_extremal,
)
from .enumeration import EnumFilter, enumerate_graphs
from .graph import Graph, GraphError, _bits, bipartition, connected_components, is_connected
from .graph6 import graph6_decode
from .spectral import TIE_TOL, exact_lambda_compare, power_iteration
from .subgraph import contains_intersecting_even_cycles, contains_subgraph

SCHEMA = 1
PERRON_SLACK = 1e-6


@dataclass
class ExtremalReport:
    n: int
    forbidden: str  # spec string ("2,3") or graph6 of the forbidden graph
    mode: str  # "edges" or "lambda"
    optimum: float | int | None
    argmax: list[str]
    prediction: str | None = None
    matches_prediction: bool | None = None
    tie_set: list[str] = field(default_factory=list)
    unique: bool | None = None
    connected: list[bool] = field(default_factory=list)
    perron_min: list[float] = field(default_factory=list)
    perron_bound_ok: bool | None = None
    prediction_free: bool | None = None
    searched: int = 0
    maximal_only: bool = False
    bounds: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {"schema": SCHEMA}
        for k, v in self.__dict__.items():
            d[k] = v
        return d

    def verdict(self) -> str:
        if self.matches_prediction is None:
            return "no-prediction"
        return "match" if self.matches_prediction else "mismatch"


def _g6(g: Graph) -> str:
    return canonical_form(g).decode("ascii")


def _detector(forbidden):
    if isinstance(forbidden, CycleSpec):
        return lambda g: contains_intersecting_even_cycles(g, forbidden) is not None
    h = forbidden

    def contains(g):
        return h.n <= g.n and contains_subgraph(g, h) is not None

    return contains


def _forbidden_label(forbidden) -> str:
    if isinstance(forbidden, CycleSpec):
        return str(forbidden)
    return _g6(forbidden)


def is_bridgeless(h: Graph) -> bool:
    """Every edge of ``h`` lies on a cycle."""
    base = len(connected_components(h))
    return all(len(connected_components(h.with_edges(remove=[e]))) == base for e in h.edges())


def is_maximal_free(g: Graph, contains) -> bool:
    """No non-edge can be added without creating the forbidden graph."""
    rows = g.rows
    for u in range(g.n):
        for v in _bits(~rows[u] & ((1 << g.n) - 1) & ~((2 << u) - 1)):
            if not contains(g.with_edges([(u, v)])):
                return False
    return True


def _score(cert, n, forbidden, maximal_only):
    g = Graph(n, rows=cert)
    if maximal_only and not is_maximal_free(g, _detector(forbidden)):
        return None
    return power_iteration(g).lam


def _free_graphs(n: int, forbidden, workers: int) -> Iterable[Graph]:
    if isinstance(forbidden, Graph) and forbidden.n > n:
        return enumerate_graphs(n, EnumFilter(), workers)
    return enumerate_graphs(n, EnumFilter(freeness=forbidden), workers)


def _check_n(n: int):
    if not 1 <= n <= 9:
        raise GraphError(f"brute-force search supports 1 <= n <= 9, got {n}")


def ex_search(n: int, spec: CycleSpec, workers: int = 1, graphs: Iterable[Graph] | None = None) -> ExtremalReport:
    """Maximum edge count over F-free graphs on ``n`` vertices and all graphs attaining it.

    ``graphs`` may supply an external stream (for instance a graph6 file);
    it is filtered for freeness here.
    """
    contains = _detector(spec)
    if graphs is None:
        _check_n(n)
        source = _free_graphs(n, spec, workers)
    else:
        source = (g for g in graphs if g.n == n and not contains(g))
    best = -1
    arg: list[str] = []
    searched = 0
    for g in source:
        searched += 1
        m = g.num_edges
        if m > best:
            best, arg = m, [_g6(g)]
        elif m == best:
            arg.append(_g6(g))
    rep = ExtremalReport(n=n, forbidden=str(spec), mode="edges", optimum=best if best >= 0 else None,
                         argmax=sorted(set(arg)), searched=searched)
    rep.unique = len(rep.argmax) == 1
    for s in rep.argmax:
        g = graph6_decode(s)
        if contains(g) or g.num_edges != best:
            raise AssertionError("argmax graph failed re-validation")
        rep.connected.append(is_connected(g))
    rep.bounds = {
        "aks_bound": bounds.fmt(bounds.aks_bound(n, spec)),
        "within_aks_bound": bounds.within_aks_bound(max(best, 0), n, spec),
        "aks_note": bounds.AKS_NOTE,
    }
    return rep


def _spex(n: int, forbidden, prediction: Graph | None, workers: int, maximal_only: bool,
          graphs: Iterable[Graph] | None) -> ExtremalReport:
    contains = _detector(forbidden)
    if graphs is None:
        _check_n(n)
        source = _free_graphs(n, forbidden, workers)
    else:
        source = (g.to_dense() for g in graphs if g.n == n and not contains(g))
    certs = [g.rows for g in source]
    score = functools.partial(_score, n=n, forbidden=forbidden, maximal_only=maximal_only)
    if workers > 1 and len(certs) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            lams = list(pool.map(score, certs, chunksize=max(1, len(certs) // (workers * 8))))
    else:
        lams = [score(c) for c in certs]
    scored = [(lam, c) for lam, c in zip(lams, certs) if lam is not None]
    rep = ExtremalReport(n=n, forbidden=_forbidden_label(forbidden), mode="lambda", optimum=None,
                         argmax=[], searched=len(certs), maximal_only=maximal_only)
    if prediction is not None:
        rep.prediction = _g6(prediction)
        rep.prediction_free = not contains(prediction)
    if not scored:
        return rep
    lead = max(lam for lam, _ in scored)
    ties = [Graph(n, rows=c) for lam, c in scored if lam >= lead - TIE_TOL]
    # exact comparison settles which near-ties are true maxima
    top = [ties[0]]
    for g in ties[1:]:
        c = exact_lambda_compare(g, top[0])
        if c > 0:
            top = [g]
        elif c == 0:
            top.append(g)
    rep.tie_set = sorted(_g6(g) for g in ties)
    rep.argmax = sorted(_g6(g) for g in top)
    rep.unique = len(rep.argmax) == 1
    results = [power_iteration(graph6_decode(s)) for s in rep.argmax]
    rep.optimum = max(r.lam for r in results)
    ok = True
    for s, r in zip(rep.argmax, results):
        g = graph6_decode(s)
        if contains(g) or abs(r.lam - rep.optimum) > TIE_TOL:
            raise AssertionError("argmax graph failed re-validation")
        conn = is_connected(g)
        rep.connected.append(conn)
        rep.perron_min.append(float(r.perron.min()))
        if conn and r.lam > 0 and r.perron.min() < 1 / r.lam - PERRON_SLACK:
            ok = False
    rep.perron_bound_ok = ok
    if rep.prediction is not None:
        rep.matches_prediction = rep.argmax == [rep.prediction]
    return rep


def spex_search(n: int, spec: CycleSpec, workers: int = 1, maximal_only: bool = True,
                graphs: Iterable[Graph] | None = None) -> ExtremalReport:
    """Graphs of maximum spectral radius among ``spec``-free graphs on ``n`` vertices.

    Intersecting even cycles have no bridges, so a spectral maximiser is
    connected and hence maximal free (adding an edge to a connected graph
    strictly increases the spectral radius).  Only maximal free graphs are
    scored unless ``maximal_only=False``.  The prediction is ``F_{n,t}``
    when every cycle is a 4-cycle and ``S+_{n,kappa}`` otherwise.
    """
    rep = _spex(n, spec, predicted_extremal(n, spec), workers, maximal_only, graphs)
    if rep.prediction is None:
        rep.notes.append("prediction undefined at this n")
    return rep


def spex_search_forbidden_graph(n: int, h: Graph, workers: int = 1, maximal_only: bool | None = None,
                                prediction: Graph | None = None) -> ExtremalReport:
    """Spectral extremal graphs avoiding an explicit graph ``h``.

    For connected bipartite ``h`` with smaller side of size ``s`` the
    prediction is ``S_{n,s-1}``.  Maximal-only scoring is used by default
    only when ``h`` is bridgeless; otherwise a disconnected maximiser need
    not be maximal and every free graph is scored.
    """
    h = h.to_dense()
    if maximal_only is None:
        maximal_only = h.num_edges > 0 and is_connected(h) and is_bridgeless(h)
    notes = []
    if prediction is None:
        bp = bipartition(h) if h.n and is_connected(h) else None
        if bp is None:
            notes.append("h is not connected bipartite; prediction omitted")
        elif 0 <= bp.smallest_class_size - 1 <= n:
            prediction = make_S(n, bp.smallest_class_size - 1)
    rep = _spex(n, h, prediction, workers, maximal_only, None)
    rep.notes.extend(notes)
    return rep


def cycle_path_prediction(n: int, spec: CyclePathSpec) -> Graph | None:
    """``S+_{n,kappa}`` when some parameter is at least 3, else ``F_{n,t}``.

    The first case needs at least one cycle or at least two paths;
    ``None`` when no prediction applies or it is undefined at ``n``.
    """
    params = spec.cycle_ks + spec.path_ps
    if max(params) >= 3:
        if not (spec.cycle_ks or len(spec.path_ps) >= 2) or n < spec.kappa + 2:
            return None
        return make_S_plus(n, spec.kappa)
    return make_F(n, spec.t) if n >= spec.t else None


def spex_search_cycle_paths(n: int, spec: CyclePathSpec, workers: int = 1) -> ExtremalReport:
    """Spectral extremal graphs avoiding cycles and paths glued at one vertex."""
    h = make_intersecting_cycles_paths(spec)
    pred = cycle_path_prediction(n, spec)
    rep = spex_search_forbidden_graph(n, h, workers, prediction=pred)
    if pred is None:
        rep.notes.append("no prediction for these parameters at this n")
    return rep


def report_table(rep: ExtremalReport) -> str:
    lines = [
        f"n={rep.n} forbidden={rep.forbidden} mode={rep.mode}",
        f"optimum={rep.optimum} searched={rep.searched} unique={rep.unique}",
        f"prediction={rep.prediction} verdict={rep.verdict()}",
    ]
    for s, conn in zip(rep.argmax, rep.connected):
        lines.append(f"  argmax {s} connected={conn}")
    for note in rep.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)
