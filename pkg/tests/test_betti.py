import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from edgeres.betti import (
    INF,
    BettiTable,
    betti_squarefree,
    hochster_betti,
    hochster_regularity,
    index_via_cycles,
    is_almost_maximal,
    resolution_stats,
)
from edgeres.families import FamilySpec, build_family
from edgeres.field import GF2, GF3, QQ, Field
from edgeres.graph import Graph, complement
from edgeres.homology import independence_complex
from edgeres.monomial import edge_ideal, ideal_from_strings, polarize
from oracles import brute_hochster


def of_complement(gbar):
    return complement(gbar)


def test_two_disjoint_edges():
    t = hochster_betti(Graph.from_edges(4, [(1, 2), (3, 4)]))
    assert t.entries == {(0, 2): 2, (1, 4): 1}
    s = resolution_stats(t)
    assert (s.index, s.pd, s.reg, s.almost_maximal) == (1, 1, 3, False)


def test_a1_t1_nonlinear_entries():
    t = hochster_betti(of_complement(build_family(FamilySpec("A1", 1))))
    assert t[1, 4] == 1 and t[2, 4] == 1 and t[2, 5] == 1
    assert resolution_stats(t).pd == 2


def test_d1_regularity_four():
    t = hochster_betti(of_complement(build_family(FamilySpec("D1"))))
    assert t[2, 6] == 1
    assert resolution_stats(t).reg == 4


def test_principal_cubic():
    t = betti_squarefree(ideal_from_strings(["x1*x2*x3"]))
    assert t.entries == {(0, 3): 1}
    assert t.d == 3


def test_polarized_square_of_maximal_ideal():
    pol, _ = polarize(ideal_from_strings(["x1^2", "x1*x2", "x2^2"]))
    assert betti_squarefree(pol).entries == {(0, 2): 3, (1, 3): 2}


def test_unit_and_zero_ideals():
    assert betti_squarefree(ideal_from_strings(["1"], ["x1"])).entries == {(0, 0): 1}
    assert not hochster_betti(Graph.empty(3))
    with pytest.raises(ValueError):
        resolution_stats(hochster_betti(Graph.empty(3)))
    with pytest.raises(ValueError):
        betti_squarefree(ideal_from_strings(["x1^2"]))


def test_stats_examples():
    gc = resolution_stats(hochster_betti(of_complement(build_family(FamilySpec("C")))))
    assert (gc.index, gc.pd, gc.reg, gc.almost_maximal) == (1, 2, 3, True)
    path = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    chordal = resolution_stats(hochster_betti(of_complement(path)))
    assert chordal.index == INF and chordal.reg == 2 and chordal.linear


def test_index_via_cycles_examples():
    assert index_via_cycles(of_complement(Graph.cycle(5))) == 2
    assert index_via_cycles(of_complement(Graph.complete(4))) == INF
    assert index_via_cycles(of_complement(build_family(FamilySpec("B", 3)))) == 3


def test_almost_maximal_examples():
    assert is_almost_maximal(of_complement(build_family(FamilySpec("A2", 2))))
    assert not is_almost_maximal(of_complement(Graph.cycle(6)))
    assert not is_almost_maximal(Graph.from_edges(2, [(1, 2)]))


def test_table_validation_and_serialization():
    with pytest.raises(ValueError):
        BettiTable(2, {(1, 2): 1})
    t = BettiTable(2, {(1, 4): 1, (0, 2): 2, (2, 5): 0})
    assert t.to_tsv() == "0\t2\t2\n1\t4\t1\n"
    assert BettiTable.from_json(t.to_json()) == t
    assert t.nonlinear() == {(1, 4): 1}


@settings(max_examples=40)
@given(graphs(max_n=7), st.sampled_from([0, 2, 3]))
def test_hochster_matches_full_subset_sum(g, p):
    expected = brute_hochster(g.n, g.edges(), p)
    assert hochster_betti(g, Field(p)).entries == expected


@given(graphs(max_n=8), st.sampled_from([QQ, GF2, GF3]))
def test_eghp_index(g, field):
    t = hochster_betti(g, field)
    if not t:
        return
    assert resolution_stats(t).index == index_via_cycles(g)


@given(graphs(max_n=8))
def test_basic_table_laws(g):
    t = hochster_betti(g)
    if not t:
        return
    assert t[0, 2] == g.num_edges()
    assert all(j <= g.n for _, j in t.entries)
    s = resolution_stats(t)
    assert s.linear == (s.reg == 2)


@given(graphs(max_n=8))
def test_reg_only_mode_matches_full_table(g):
    if not g.num_edges():
        return
    c = independence_complex(g)
    assert hochster_regularity(c) == resolution_stats(hochster_betti(g)).reg


@settings(max_examples=30)
@given(graphs(max_n=7))
def test_edge_ideal_route_matches_graph_route(g):
    if not g.num_edges():
        return
    assert betti_squarefree(edge_ideal(g)) == hochster_betti(g)


def test_thread_count_does_not_change_tables():
    g = of_complement(build_family(FamilySpec("B", 2)))
    one = hochster_betti(g, QQ, threads=1)
    assert hochster_betti(g, QQ, threads=3) == one
    assert hochster_regularity(independence_complex(g), QQ, threads=2) == resolution_stats(one).reg
