"""Runnable checks of the structural, spectral and extremal claims.

Each check returns a :class:`VerificationRecord` whose verdict is
``pass``, ``fail`` or ``out-of-theorem-range``.  The last one marks
small-n disagreement with statements that only hold for large n.  A fail
record always carries a concrete counterexample in its evidence.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from . import bounds
from .constructions import (
    CycleSpec,
    make_F,
    make_intersecting_even_cycles,
    make_K,
    make_Km,
    make_Kp,
    make_S,
    make_S_plus,
    predicted_extremal,
)
from .enumeration import EnumFilter, enumerate_graphs
from .extremal import spex_search, spex_search_forbidden_graph
from .graph import Graph, GraphError, bipartition, count_edges_between, count_edges_within, is_connected
from .graph6 import graph6_encode
from .spectral import lambda_S_closed_form, quotient_spectral_radius
from .subgraph import (
    contains_intersecting_even_cycles,
    contains_minor,
    contains_subgraph,
    find_disjoint_path_system,
    has_path_on,
    restricted_graph,
)

PASS, FAIL, OUT_OF_RANGE = "pass", "fail", "out-of-theorem-range"
SCHEMA = 1

CLAIMS = (
    "almost-bipartite",
    "degree-squares",
    "disjoint-paths",
    "kab-containment",
    "lambda-bounds",
    "main-theorems",
    "minor-freeness",
    "small-subgraph",
)


@dataclass
class VerificationRecord:
    claim_id: str
    parameters: dict
    verdict: str
    evidence: dict = field(default_factory=dict)
    runtime: float = 0.0

    def to_dict(self, include_runtime: bool = False) -> dict:
        # runtime is left out by default so identical runs serialise identically
        d = {"schema": SCHEMA, "claim_id": self.claim_id, "parameters": self.parameters,
             "verdict": self.verdict, "evidence": self.evidence}
        if include_runtime:
            d["runtime"] = round(self.runtime, 3)
        return d


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rec = fn(*args, **kwargs)
        dt = time.perf_counter() - t0
        for r in rec if isinstance(rec, list) else [rec]:
            r.runtime = dt
        return rec

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _spec_param(spec: CycleSpec) -> str:
    return str(spec)


@_timed
def verify_kab_containment(spec: CycleSpec) -> VerificationRecord:
    """``K_{kappa+1, kappa+t}`` contains the intersecting cycles when every ``k_i >= 3``."""
    if spec.ks[0] < 3:
        raise GraphError("this containment needs every k_i >= 3")
    if spec.num_vertices > 20:
        raise GraphError("spec too large (2kappa+t+1 must be at most 20)")
    a, b = spec.kappa + 1, spec.kappa + spec.t
    w = contains_intersecting_even_cycles(make_K(a, b), spec)
    ev = {"host": f"K_{{{a},{b}}}"}
    if w is None:
        ev["counterexample"] = graph6_encode(make_K(a, b))
        return VerificationRecord("kab-containment", {"spec": _spec_param(spec)}, FAIL, ev)
    ev["witness"] = w.to_dict()
    return VerificationRecord("kab-containment", {"spec": _spec_param(spec)}, PASS, ev)


@_timed
def verify_almost_bipartite(spec: CycleSpec) -> VerificationRecord:
    """Complete bipartite graphs with a path or a 2-matching added on one side.

    All 4-cycles: ``K^p_{t,2t+1}`` contains ``C_{4,...,4}``.  Otherwise both
    ``K^p`` and ``K^m`` on sides ``kappa, kappa+t+1`` contain the cycles.
    """
    t, k = spec.t, spec.kappa
    if spec.all_four_cycles:
        hosts = {f"Kp_{{{t},{2 * t + 1}}}": make_Kp(t, 2 * t + 1)}
    else:
        hosts = {f"Kp_{{{k},{k + t + 1}}}": make_Kp(k, k + t + 1), f"Km_{{{k},{k + t + 1}}}": make_Km(k, k + t + 1)}
    if any(h.n > 20 for h in hosts.values()):
        raise GraphError("host graph exceeds 20 vertices")
    ev = {"hosts": {}}
    verdict = PASS
    for name, host in hosts.items():
        w = contains_intersecting_even_cycles(host, spec)
        if w is None:
            verdict = FAIL
            ev["hosts"][name] = {"found": False, "counterexample": graph6_encode(host)}
        else:
            ev["hosts"][name] = {"found": True, "witness": w.to_dict()}
    return VerificationRecord("almost-bipartite", {"spec": _spec_param(spec)}, verdict, ev)


@_timed
def verify_degree_squares(n_max: int, spec: CycleSpec, workers: int = 1) -> VerificationRecord:
    """Every free graph on ``2..n_max`` vertices has degree-square sum below ``(4kappa+t)(n-1)n``.

    ``n = 1`` is skipped: the bound is 0 there and a strict inequality
    cannot hold for the single-vertex graph.
    """
    if not 2 <= n_max <= 8:
        raise GraphError("n_max must be between 2 and 8")
    params = {"n_max": n_max, "spec": _spec_param(spec)}
    counts = {}
    worst = {}
    for n in range(2, n_max + 1):
        bound = bounds.degree_square_bound(n, spec)
        c = 0
        top = 0
        for g in enumerate_graphs(n, EnumFilter(freeness=spec), workers):
            c += 1
            s = sum(d * d for d in g.degrees())
            top = max(top, s)
            if not s < bound:
                ev = {"counterexample": graph6_encode(g), "n": n, "degree_square_sum": s, "bound": bound}
                return VerificationRecord("degree-squares", params, FAIL, ev)
        counts[str(n)] = c
        worst[str(n)] = [top, bound]
    return VerificationRecord("degree-squares", params, PASS, {"graphs_checked": counts, "max_sum_vs_bound": worst})


def random_instance(rng: random.Random, n: int) -> tuple[Graph, list[int], list[int]]:
    """G(n, p) with ``p`` uniform in [0.05, 0.95] and a uniform random split ``U, W``."""
    p = rng.uniform(0.05, 0.95)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    g = Graph.from_edges(n, edges)
    in_u = [rng.random() < 0.5 for _ in range(n)]
    U = [v for v in range(n) if in_u[v]]
    W = [v for v in range(n) if not in_u[v]]
    return g, U, W


@_timed
def verify_disjoint_paths(trials: int, n: int, spec: CycleSpec, seed: int = 0) -> VerificationRecord:
    """Path system with ends in ``U`` must exist under either hypothesis.

    Hypothesis A: ``E(U) + E(U, W)`` contains a path on ``4kappa+t`` vertices.
    Hypothesis B: ``2e(U) + e(U, W)`` exceeds the bipartition edge bound.
    """
    if not 1 <= n <= 20:
        raise GraphError("n must be between 1 and 20")
    if trials < 0:
        raise GraphError("trials must be non-negative")
    params = {"n": n, "seed": seed, "spec": _spec_param(spec), "trials": trials}
    rng = random.Random(seed)
    ell = 4 * spec.kappa + spec.t
    stats = {"path_hypothesis": 0, "threshold_hypothesis": 0, "systems_found": 0}
    for trial in range(trials):
        g, U, W = random_instance(rng, n)
        h = restricted_graph(g, U, W)
        hyp_a = ell <= n and has_path_on(h, ell) is not None
        weight = 2 * count_edges_within(g, U) + count_edges_between(g, U, W)
        hyp_b = weight > bounds.bipartition_edge_bound(len(U), n, spec)
        stats["path_hypothesis"] += hyp_a
        stats["threshold_hypothesis"] += hyp_b
        if not (hyp_a or hyp_b):
            continue
        ps = find_disjoint_path_system(g, U, W, spec)
        if ps is None:
            ev = dict(stats, counterexample=graph6_encode(g), U=U, W=W, trial=trial,
                      violated="path" if hyp_a else "threshold")
            return VerificationRecord("disjoint-paths", params, FAIL, ev)
        stats["systems_found"] += 1
    return VerificationRecord("disjoint-paths", params, PASS, stats)


def _main_record(rep, spec: CycleSpec) -> VerificationRecord:
    n = rep.n
    ev = {
        "argmax": rep.argmax,
        "connected": rep.connected,
        "optimum": rep.optimum,
        "perron_bound_ok": rep.perron_bound_ok,
        "perron_min": rep.perron_min,
        "prediction": rep.prediction,
        "searched": rep.searched,
        "tie_set": rep.tie_set,
        "unique": rep.unique,
    }
    upper = math.sqrt((4 * spec.kappa + spec.t) * (n - 1))
    params = {"n": n, "spec": _spec_param(spec)}
    if rep.optimum is not None and rep.optimum > upper + 1e-9:
        ev["violated"] = "spectral upper bound"
        ev["counterexample"] = rep.argmax[0]
        return VerificationRecord("main-theorems", params, FAIL, ev)
    if rep.perron_bound_ok is False:
        ev["violated"] = "Perron entries at least 1/lambda"
        ev["counterexample"] = rep.argmax[0]
        return VerificationRecord("main-theorems", params, FAIL, ev)
    verdict = PASS if rep.unique and rep.matches_prediction else OUT_OF_RANGE
    return VerificationRecord("main-theorems", params, verdict, ev)


def verify_main_theorems(n_range, spec: CycleSpec, workers: int = 1) -> list[VerificationRecord]:
    """Per-n spectral extremal search against the predicted construction.

    Also checks that every connected maximiser has Perron entries at least
    ``1/lambda - 1e-6`` and that the optimum respects ``sqrt((4kappa+t)(n-1))``.
    """
    out = []
    for n in n_range:
        if not 1 <= n <= 9:
            raise GraphError("n must be between 1 and 9")
        t0 = time.perf_counter()
        rec = _main_record(spex_search(n, spec, workers), spec)
        rec.runtime = time.perf_counter() - t0
        out.append(rec)
    return out


def _construction_lambda(n: int, spec: CycleSpec) -> tuple[str, float] | None:
    g = predicted_extremal(n, spec)
    if g is None:
        return None
    k = spec.kappa
    if spec.all_four_cycles:
        t = spec.t
        cells = [list(range(t)), list(range(t, t + 2 * ((n - t) // 2))), list(range(t + 2 * ((n - t) // 2), n))]
        return f"F_{{{n},{t}}}", quotient_spectral_radius(g, cells)
    cells = [list(range(k)), [k, k + 1], list(range(k + 2, n))]
    return f"S+_{{{n},{k}}}", quotient_spectral_radius(g, cells)


@_timed
def verify_lambda_bounds(grid) -> VerificationRecord:
    """The chain ``sqrt(kappa n) <= lambda(S_{n,kappa}) <= lambda(P) <= sqrt((4kappa+t)(n-1)) < sqrt(5 kappa n)``.

    ``P`` is the predicted extremal construction, evaluated through its
    quotient matrix.  Every violated link is listed as a counterexample.
    """
    grid = [(int(n), spec) for n, spec in grid]
    params = {"grid": [[n, _spec_param(s)] for n, s in grid]}
    points = []
    violations = []
    for n, spec in grid:
        k, t = spec.kappa, spec.t
        if n <= k:
            raise GraphError(f"need n > kappa at grid point n={n}, spec={spec}")
        closed = lambda_S_closed_form(n, k)
        upper = math.sqrt((4 * k + t) * (n - 1))
        pt = {"n": n, "spec": str(spec), "closed_form": closed, "upper": upper}
        links = {
            "sqrt(kappa n) <= closed form": math.sqrt(k * n) <= closed,
            "upper < sqrt(5 kappa n)": (4 * k + t) * (n - 1) < 5 * k * n,
        }
        cons = _construction_lambda(n, spec)
        if cons is not None:
            name, lam = cons
            pt["construction"], pt["lambda"] = name, lam
            links["closed form <= lambda(P)"] = closed <= lam + 1e-9
            links["lambda(P) <= upper"] = lam <= upper + 1e-9
        pt["links"] = links
        points.append(pt)
        for link, ok in links.items():
            if not ok:
                violations.append({"n": n, "spec": str(spec), "link": link})
    ev = {"points": points}
    if violations:
        ev["counterexamples"] = violations
        return VerificationRecord("lambda-bounds", params, FAIL, ev)
    return VerificationRecord("lambda-bounds", params, PASS, ev)


@_timed
def verify_minor_freeness(spec: CycleSpec, n: int) -> VerificationRecord:
    """The predicted construction has no minor isomorphic to the intersecting cycles."""
    h = make_intersecting_even_cycles(spec)
    g = predicted_extremal(n, spec)
    if g is None:
        raise GraphError("prediction undefined at this n")
    params = {"n": n, "spec": _spec_param(spec)}
    if contains_minor(g, h):
        return VerificationRecord("minor-freeness", params, FAIL, {"counterexample": graph6_encode(g)})
    return VerificationRecord("minor-freeness", params, PASS, {"host": graph6_encode(g), "minor": graph6_encode(h)})


def small_subgraph_hypotheses(h: Graph, spec: CycleSpec, n: int) -> list[str]:
    """Reasons ``h`` falls outside the forbidden-subgraph statement (empty if none)."""
    problems = []
    if h.n == 0 or not is_connected(h):
        return ["h is not connected"]
    bp = bipartition(h)
    if bp is None:
        return ["h is not bipartite"]
    c = make_intersecting_even_cycles(spec)
    if h.n > c.n or contains_subgraph(c, h) is None:
        problems.append("h is not a subgraph of the intersecting cycles")
    if bp.smallest_class_size != spec.kappa + 1:
        problems.append(f"smallest colour class has {bp.smallest_class_size} vertices, not kappa+1 = {spec.kappa + 1}")
    if spec.ks[-1] >= 3:
        host = make_S_plus(n, spec.kappa) if n >= spec.kappa + 2 else None
        if host is None or h.n > host.n or contains_subgraph(host, h) is None:
            problems.append("h is not a subgraph of S+_{n,kappa}")
    elif len(set(spec.ks)) == 1:
        host = make_F(n, spec.kappa)
        if h.n > host.n or contains_subgraph(host, h) is None:
            problems.append("h is not a subgraph of F_{n,kappa}")
    return problems


def verify_small_subgraph(h: Graph, spec: CycleSpec, n: int, workers: int = 1) -> VerificationRecord:
    """``SPEX(n, h) = {S_{n,kappa}}`` for suitable subgraphs ``h`` of the intersecting cycles.

    When ``h`` does not meet the hypotheses the search is skipped and the
    record says why.
    """
    t0 = time.perf_counter()
    params = {"h": graph6_encode(h), "n": n, "spec": _spec_param(spec)}
    problems = small_subgraph_hypotheses(h, spec, n)
    if problems:
        rec = VerificationRecord("small-subgraph", params, OUT_OF_RANGE, {"skipped": problems})
    else:
        rep = spex_search_forbidden_graph(n, h, workers, prediction=make_S(n, spec.kappa))
        ev = {"argmax": rep.argmax, "optimum": rep.optimum, "prediction": rep.prediction, "unique": rep.unique}
        verdict = PASS if rep.matches_prediction else OUT_OF_RANGE
        rec = VerificationRecord("small-subgraph", params, verdict, ev)
    rec.runtime = time.perf_counter() - t0
    return rec


def default_suite(workers: int = 1) -> list[VerificationRecord]:
    """A quick run over every claim at small parameters, ordered by claim id."""
    recs = []
    recs.append(verify_almost_bipartite(CycleSpec([2, 2])))
    recs.append(verify_almost_bipartite(CycleSpec([3])))
    recs.append(verify_degree_squares(6, CycleSpec([2]), workers))
    recs.append(verify_disjoint_paths(200, 12, CycleSpec([2]), seed=0))
    recs.append(verify_kab_containment(CycleSpec([3])))
    recs.append(verify_lambda_bounds([(100, CycleSpec([2])), (100, CycleSpec([3])), (10**4, CycleSpec([3]))]))
    recs.extend(verify_main_theorems(range(5, 8), CycleSpec([2]), workers))
    recs.append(verify_minor_freeness(CycleSpec([2]), 10))
    recs.append(verify_small_subgraph(make_intersecting_even_cycles(CycleSpec([3])).with_edges(remove=[(2, 3)]),
                                      CycleSpec([3]), 9, workers))
    return sorted(recs, key=lambda r: r.claim_id)
