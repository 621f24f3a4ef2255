import json

import pytest

from spexlab.constructions import CycleSpec, make_cycle, make_intersecting_even_cycles, make_path
from spexlab.graph import GraphError
from spexlab.graph6 import graph6_decode
from spexlab.verify import (
    CLAIMS,
    FAIL,
    OUT_OF_RANGE,
    PASS,
    default_suite,
    random_instance,
    small_subgraph_hypotheses,
    verify_almost_bipartite,
    verify_degree_squares,
    verify_disjoint_paths,
    verify_kab_containment,
    verify_lambda_bounds,
    verify_main_theorems,
    verify_minor_freeness,
    verify_small_subgraph,
)
from spexlab.subgraph import contains_intersecting_even_cycles
from spexlab.constructions import make_K


@pytest.mark.parametrize("ks", [[3], [3, 3], [3, 4], [4], [3, 3, 3]])
def test_kab_containment(ks):
    rec = verify_kab_containment(CycleSpec(ks))
    assert rec.verdict == PASS
    assert "witness" in rec.evidence


def test_kab_needs_long_cycles():
    with pytest.raises(GraphError):
        verify_kab_containment(CycleSpec([2, 3]))


@pytest.mark.parametrize("ks", [[2, 2], [3], [2, 3], [3, 3], [2]])
def test_almost_bipartite(ks):
    rec = verify_almost_bipartite(CycleSpec(ks))
    assert rec.verdict == PASS
    assert all(h["found"] for h in rec.evidence["hosts"].values())


@pytest.mark.parametrize("ks", [[2], [2, 2]])
def test_degree_squares(ks):
    rec = verify_degree_squares(7, CycleSpec(ks))
    assert rec.verdict == PASS
    for top, bound in rec.evidence["max_sum_vs_bound"].values():
        assert top < bound


def test_degree_squares_range():
    with pytest.raises(GraphError):
        verify_degree_squares(9, CycleSpec([2]))


def test_disjoint_paths_small_run():
    rec = verify_disjoint_paths(500, 10, CycleSpec([2]), seed=1)
    assert rec.verdict == PASS
    assert rec.evidence["systems_found"] > 0
    again = verify_disjoint_paths(500, 10, CycleSpec([2]), seed=1)
    assert again.to_dict() == rec.to_dict()


def test_random_instance_splits_vertices():
    import random

    g, U, W = random_instance(random.Random(0), 12)
    assert sorted(U + W) == list(range(12))


def test_main_theorem_records():
    recs = verify_main_theorems(range(5, 8), CycleSpec([2]))
    assert [r.parameters["n"] for r in recs] == [5, 6, 7]
    assert all(r.verdict == PASS for r in recs)
    recs = verify_main_theorems([7], CycleSpec([3]))
    # small orders disagree with the asymptotic prediction
    assert recs[0].verdict == OUT_OF_RANGE
    assert recs[0].evidence["unique"]


def test_lambda_bounds_records():
    ok = verify_lambda_bounds([(100, CycleSpec([3])), (10**4, CycleSpec([3])), (1000, CycleSpec([2, 2]))])
    assert ok.verdict == PASS
    bad = verify_lambda_bounds([(100, CycleSpec([2]))])
    assert bad.verdict == FAIL
    assert [c["link"] for c in bad.evidence["counterexamples"]] == ["sqrt(kappa n) <= closed form"]


def test_lambda_bounds_smallest_order():
    # n = kappa + 2 with kappa = 2: S+_{4,2} is K4 minus an edge
    rec = verify_lambda_bounds([(4, CycleSpec([3]))])
    pt = rec.evidence["points"][0]
    assert pt["links"]["lambda(P) <= upper"]
    assert pt["links"]["closed form <= lambda(P)"]


def test_minor_freeness():
    assert verify_minor_freeness(CycleSpec([3]), 10).verdict == PASS
    assert verify_minor_freeness(CycleSpec([2]), 10).verdict == PASS


def test_small_subgraph_hypotheses():
    spec = CycleSpec([3])
    p6 = make_intersecting_even_cycles(spec).with_edges(remove=[(2, 3)])
    assert small_subgraph_hypotheses(p6, spec, 9) == []
    assert small_subgraph_hypotheses(make_cycle(5), spec, 9) == ["h is not bipartite"]
    rec = verify_small_subgraph(make_path(3), spec, 9)
    assert rec.verdict == OUT_OF_RANGE and rec.evidence["skipped"]


def test_small_subgraph_run():
    spec = CycleSpec([3])
    p6 = make_intersecting_even_cycles(spec).with_edges(remove=[(2, 3)])
    rec = verify_small_subgraph(p6, spec, 8)
    assert rec.verdict in (PASS, OUT_OF_RANGE)
    assert rec.evidence["argmax"]


def test_records_serialise_without_runtime():
    rec = verify_kab_containment(CycleSpec([3]))
    assert rec.runtime >= 0
    assert "runtime" not in rec.to_dict()
    assert "runtime" in rec.to_dict(include_runtime=True)
    json.dumps(rec.to_dict(), sort_keys=True)


def test_claim_ids_sorted():
    assert list(CLAIMS) == sorted(CLAIMS)
