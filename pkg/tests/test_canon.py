import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oracles import brute_min_label, burnside_class_count, labeled_graphs, to_nx
from spexlab.canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from spexlab.constructions import make_cycle, make_K, make_path, make_S
from spexlab.graph import Graph, GraphError


def test_relabelled_c4_same_form():
    c4 = make_cycle(4)
    forms = {canonical_form(c4.relabel(p)) for p in itertools.permutations(range(4))}
    assert len(forms) == 1


def test_star_vs_path():
    assert canonical_form(make_S(4, 1)) != canonical_form(make_path(4))


def test_eleven_graphs_on_four_vertices():
    forms = {canonical_form(g) for g in labeled_graphs(4)}
    assert len(forms) == 11
    # and the classes agree with a brute-force permutation search
    brute = {brute_min_label(4, list(g.edges())) for g in labeled_graphs(4)}
    assert len(brute) == 11


def test_classes_agree_with_permutation_search_n5():
    by_form = {}
    for g in labeled_graphs(5):
        by_form.setdefault(canonical_form(g), set()).add(brute_min_label(5, list(g.edges())))
    assert len(by_form) == 34
    assert all(len(v) == 1 for v in by_form.values())


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_class_counts_of_all_labelled_graphs(n):
    forms = {canonical_form(g) for g in labeled_graphs(n)}
    assert len(forms) == burnside_class_count(n)


@given(graphs(max_n=12), st.randoms(use_true_random=False))
def test_permutation_invariance(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    assert canonical_form(g) == canonical_form(g.relabel(perm))


@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_matches_networkx(g, h):
    if g.n != h.n:
        return
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(max_n=10))
def test_labeling_reproduces_canonical_graph(g):
    order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    assert g.relabel(perm) == canonical_graph(g)


def test_symmetric_graphs_are_fast():
    # highly symmetric inputs exercise the automorphism pruning
    for g in (Graph.empty(20), make_K(8, 8), make_cycle(30), make_S(30, 3)):
        assert canonical_form(g) == canonical_form(g.relabel(list(reversed(range(g.n)))))


def test_random_regular_pairs():
    rng = random.Random(5)
    for _ in range(20):
        a = nx.random_regular_graph(3, 12, seed=rng.randrange(10**6))
        b = nx.random_regular_graph(3, 12, seed=rng.randrange(10**6))
        ga = Graph.from_edges(12, a.edges())
        gb = Graph.from_edges(12, b.edges())
        assert is_isomorphic(ga, gb) == nx.is_isomorphic(a, b)


def test_sparse_rejected():
    with pytest.raises(GraphError):
        canonical_form(Graph.empty(100))
