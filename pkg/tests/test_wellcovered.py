import itertools
import json

import networkx as nx
import pytest
from hypothesis import given, settings

from indroots.canon import canonical_key
from indroots.engine import BudgetExceeded, independence_number
from indroots.enumeration import connected_min_girth, connected_unicyclic, topp_volkmann_members, trees
from indroots.families import complete, corona, cycle, g_2n, path
from indroots.graph import Graph, is_tree
from indroots.wellcovered import (
    is_very_well_covered,
    is_well_covered,
    maximal_independent_sets,
    pendant_edges_perfect_matching,
    wellcovered_branch,
)

from conftest import graphs, to_nx


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graph_report(n):
    rep = maximal_independent_sets(complete(n))
    assert dict(rep.sizes) == {1: n}
    assert rep.well_covered


def test_path_five():
    rep = maximal_independent_sets(path(5))
    assert dict(rep.sizes) == {2: 3, 3: 1}
    assert not is_well_covered(path(5))
    assert len(rep.min_witness) == 2 and len(rep.max_witness) == 3


def test_c7_well_covered_not_very():
    rep = maximal_independent_sets(cycle(7))
    assert set(rep.sizes) == {3}
    assert is_well_covered(cycle(7)) and not is_very_well_covered(cycle(7))


@pytest.mark.parametrize("n", range(1, 9))
def test_coronas_of_trees_very_well_covered(n):
    for T in trees(n):
        assert is_very_well_covered(corona(T))


def test_pendant_matching_examples():
    assert pendant_edges_perfect_matching(corona(path(4)))
    assert not pendant_edges_perfect_matching(path(5))
    assert not pendant_edges_perfect_matching(g_2n(5))
    assert pendant_edges_perfect_matching(path(2))
    assert not pendant_edges_perfect_matching(path(3))


def test_budget():
    with pytest.raises(BudgetExceeded):
        maximal_independent_sets(path(23))


def _nx_maximal_sizes(G):
    # maximal independent sets are the maximal cliques of the complement
    return sorted(len(c) for c in nx.find_cliques(nx.complement(to_nx(G))))


@settings(max_examples=200)
@given(graphs(1, 10))
def test_report_matches_networkx(G):
    rep = maximal_independent_sets(G)
    got = sorted(itertools.chain.from_iterable([k] * v for k, v in rep.sizes.items()))
    assert got == _nx_maximal_sizes(G)
    assert max(rep.sizes) == independence_number(G)
    for W in (rep.min_witness, rep.max_witness):
        assert all(not G.has_edge(a, b) for a, b in itertools.combinations(W, 2))
        assert all(v in W or any(G.has_edge(v, w) for w in W) for v in range(G.n))


def test_girth_six_criterion():
    c7 = canonical_key(cycle(7))
    for n in range(2, 11):
        for G in connected_min_girth(n, 6):
            if canonical_key(G) != c7:
                assert is_well_covered(G) == pendant_edges_perfect_matching(G)


def test_tree_criterion():
    for n in range(2, 11):
        coronas = {canonical_key(corona(T)) for T in trees(n // 2)} if n % 2 == 0 else set()
        for T in trees(n):
            assert is_well_covered(T) == (canonical_key(T) in coronas)


def test_unicyclic_characterisation():
    for n in range(3, 10):
        members = {k.encode() for k in topp_volkmann_members(n)}
        for G in connected_unicyclic(n):
            assert is_well_covered(G) == (canonical_key(G) in members), n


def test_wellcovered_branch():
    # triangle 0,1,2 with P_2* hanging at vertex 0
    G = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5), (5, 6)])
    assert wellcovered_branch(G, 0) == frozenset({0, 3, 4, 5, 6})
    assert wellcovered_branch(G, 1) is None
    # a tree component that does not give a well-covered tree is ignored
    H = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    assert wellcovered_branch(H, 0) is None


def test_report_json():
    rep = maximal_independent_sets(cycle(7)).to_json(7)
    assert rep == {"sizes": {"3": 7}, "well_covered": True, "very_well_covered": False}
    json.dumps(maximal_independent_sets(corona(path(3))).to_json(6))
    assert maximal_independent_sets(corona(path(3))).to_json(6)["very_well_covered"]


def test_trees_are_trees():
    assert all(is_tree(T) for T in trees(9))
