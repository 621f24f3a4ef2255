import math

import networkx as nx
import numpy as np
import pytest

from oracles import contains_nx, from_nx
from spexlab.canon import canonical_form
from spexlab.constructions import CyclePathSpec, CycleSpec, make_complete, make_F, make_intersecting_even_cycles, make_path, make_S
from spexlab.extremal import (
    cycle_path_prediction,
    ex_search,
    is_bridgeless,
    report_table,
    spex_search,
    spex_search_cycle_paths,
    spex_search_forbidden_graph,
)
from spexlab.graph import GraphError
from spexlab.graph6 import graph6_decode
from spexlab.bounds import within_aks_bound


def _atlas(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def _atlas_optimum(n, spec, key):
    """Brute force over the networkx graph atlas (all graphs up to 7 vertices)."""
    h = nx.Graph(list(make_intersecting_even_cycles(spec).edges()))
    free = [g for g in _atlas(n) if not nx.algorithms.isomorphism.GraphMatcher(g, h).subgraph_is_monomorphic()]
    vals = [key(g) for g in free]
    best = max(vals)
    return best, {canonical_form(from_nx(g)) for g, v in zip(free, vals) if abs(v - best) < 1e-9}


def _nx_lambda(g):
    if g.number_of_edges() == 0:
        return 0.0
    return float(np.linalg.eigvalsh(nx.to_numpy_array(g))[-1])


@pytest.mark.parametrize("n", [4, 5, 6, 7])
@pytest.mark.parametrize("ks", [[2], [3], [2, 2]])
def test_ex_matches_atlas(n, ks):
    spec = CycleSpec(ks)
    best, arg = _atlas_optimum(n, spec, lambda g: g.number_of_edges())
    rep = ex_search(n, spec)
    assert rep.optimum == best
    assert {s.encode() for s in rep.argmax} == arg


def test_ex_examples():
    assert ex_search(4, CycleSpec([2])).optimum == 4
    assert ex_search(6, CycleSpec([2])).optimum == 7
    assert ex_search(5, CycleSpec([2, 2])).optimum == 10


@pytest.mark.parametrize("n", [4, 5, 6, 7])
@pytest.mark.parametrize("ks", [[2], [3], [2, 2]])
def test_spex_matches_atlas(n, ks):
    spec = CycleSpec(ks)
    best, arg = _atlas_optimum(n, spec, _nx_lambda)
    rep = spex_search(n, spec)
    assert abs(rep.optimum - best) < 1e-9
    assert {s.encode() for s in rep.argmax} == arg


@pytest.mark.parametrize("n", [5, 6, 7])
@pytest.mark.parametrize("ks", [[2], [3], [2, 2], [2, 3]])
def test_maximal_only_is_sound(n, ks):
    spec = CycleSpec(ks)
    fast = spex_search(n, spec, maximal_only=True)
    full = spex_search(n, spec, maximal_only=False)
    assert fast.argmax == full.argmax
    assert fast.optimum == pytest.approx(full.optimum, abs=1e-12)
    assert fast.searched == full.searched


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_four_cycle_windmill(n):
    rep = spex_search(n, CycleSpec([2]))
    assert rep.unique and rep.verdict() == "match"
    assert rep.argmax == [canonical_form(make_F(n, 1)).decode()]
    assert rep.perron_bound_ok and all(rep.connected)


def test_argmax_free_by_vf2():
    spec = CycleSpec([3])
    h = make_intersecting_even_cycles(spec)
    rep = spex_search(8, spec)
    for s in rep.argmax + rep.tie_set:
        assert not contains_nx(graph6_decode(s), h)
    assert rep.prediction_free


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
@pytest.mark.parametrize("ks", [[2], [2, 2], [3]])
def test_ex_within_aks(n, ks):
    spec = CycleSpec(ks)
    rep = ex_search(n, spec)
    assert rep.bounds["within_aks_bound"]
    assert within_aks_bound(rep.optimum, n, spec)


def test_forbidden_path_gives_star():
    rep = spex_search_forbidden_graph(8, make_path(4))
    assert not rep.maximal_only  # P4 has bridges
    assert rep.argmax == [canonical_form(make_S(8, 1)).decode()]
    assert rep.verdict() == "match"
    assert rep.optimum == pytest.approx(math.sqrt(7), abs=1e-9)


def test_forbidden_edge():
    rep = spex_search_forbidden_graph(5, make_complete(2))
    assert rep.optimum == 0
    assert rep.searched == 1


def test_bridgeless():
    assert is_bridgeless(make_intersecting_even_cycles(CycleSpec([2, 3])))
    assert not is_bridgeless(make_path(3))


def test_cycle_path_prediction():
    assert cycle_path_prediction(9, CyclePathSpec([3], [])) is not None
    assert cycle_path_prediction(9, CyclePathSpec([], [3])) is None
    assert cycle_path_prediction(9, CyclePathSpec([2], [2])) == make_F(9, 2)
    rep = spex_search_cycle_paths(7, CyclePathSpec([2], [2]))
    assert rep.argmax and rep.prediction is not None


def test_report_serialisation():
    rep = spex_search(6, CycleSpec([2]))
    d = rep.to_dict()
    assert d["schema"] == 1 and d["mode"] == "lambda"
    assert "verdict=match" in report_table(rep)


def test_range_checks():
    with pytest.raises(GraphError):
        spex_search(10, CycleSpec([2]))
    with pytest.raises(GraphError):
        ex_search(0, CycleSpec([2]))


def test_external_graph_stream():
    spec = CycleSpec([2])
    gs = [make_F(6, 1), make_S(6, 2), make_path(6)]
    rep = spex_search(6, spec, graphs=gs)
    assert rep.argmax == [canonical_form(make_F(6, 1)).decode()]
    assert rep.searched == 2  # S_{6,2} contains a 4-cycle
