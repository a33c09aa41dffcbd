import itertools

import pytest

from edgeres.betti import hochster_betti, resolution_stats
from edgeres.families import (
    KINDS,
    FamilySpec,
    all_specs,
    build_family,
    expected_nonlinear_betti,
    expected_pd_from_n,
    recognize_family,
    specs_with_n,
)
from edgeres.field import GF2, GF3, QQ
from edgeres.graph import Graph, SizeGuardError, canonical_form, complement, enumerate_induced_cycles

SMALL = [s for n in range(5, 10) for s in specs_with_n(n)]


def test_spec_validation():
    assert FamilySpec("a2", 3).kind == "A2"
    assert str(FamilySpec("B", 2)) == "B(t=2)" and str(FamilySpec("C")) == "C"
    with pytest.raises(ValueError):
        FamilySpec("A1", 0)
    with pytest.raises(ValueError):
        FamilySpec("C", 2)
    with pytest.raises(ValueError):
        FamilySpec("E")


@pytest.mark.parametrize("spec", all_specs(4), ids=str)
def test_vertex_counts(spec):
    assert build_family(spec).n == spec.n


def test_a1_smallest_member():
    g = build_family(FamilySpec("A1", 1))
    assert (g.n, g.num_edges()) == (5, 5)
    assert enumerate_induced_cycles(g) == [(1, 2, 3, 4)]


def test_c_has_three_induced_squares():
    cycles = enumerate_induced_cycles(build_family(FamilySpec("C")))
    assert len(cycles) == 3 and all(len(c) == 4 for c in cycles)


def test_d1_is_the_octahedron():
    d1 = build_family(FamilySpec("D1"))
    assert d1.num_edges() == 12
    octahedron = complement(Graph.from_edges(6, [(1, 3), (2, 4), (5, 6)]))
    assert d1 == octahedron


def test_d2_has_the_listed_triangles():
    d2 = build_family(FamilySpec("D2"))
    triangles = [t for t in itertools.combinations(range(1, 7), 3)
                 if all(d2.has_edge(a, b) for a, b in itertools.combinations(t, 2))]
    assert triangles == [(1, 2, 5), (1, 4, 6), (1, 5, 6), (2, 3, 5), (3, 4, 6), (3, 5, 6)]


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_recognition_round_trip(spec):
    assert recognize_family(build_family(spec)) == spec


def test_distinct_specs_are_not_isomorphic():
    forms = [(s.n, canonical_form(build_family(s))) for s in SMALL]
    assert len(set(forms)) == len(forms)


def test_recognition_negatives_and_relabeling():
    assert recognize_family(Graph.cycle(6)) is None
    d2 = build_family(FamilySpec("D2"))
    perm = {1: 4, 2: 6, 3: 1, 4: 5, 5: 2, 6: 3}
    relabeled = Graph.from_edges(6, [(perm[u], perm[v]) for u, v in d2.edges()])
    assert recognize_family(relabeled) == FamilySpec("D2")
    with pytest.raises(SizeGuardError):
        recognize_family(Graph.cycle(10))


@pytest.mark.parametrize("spec", all_specs(4), ids=str)
def test_complement_has_no_isolated_vertex(spec):
    g = complement(build_family(spec))
    assert all(any(g.has_edge(v, w) for w in range(1, g.n + 1) if w != v) for v in range(1, g.n + 1))


def test_expected_values_examples():
    e = expected_nonlinear_betti(FamilySpec("A1", 1))
    assert e.table.entries == {(1, 4): 1, (2, 4): 1, (2, 5): 1}
    assert (e.index, e.pd, e.reg) == (1, 2, 3)
    d1 = expected_nonlinear_betti(FamilySpec("D1"))
    assert d1.table.entries == {(1, 4): 3, (2, 6): 1} and d1.reg == 4


@pytest.mark.parametrize("spec", all_specs(3), ids=str)
@pytest.mark.parametrize("field", [QQ, GF2, GF3], ids=str)
def test_expected_tables_match_computation(spec, field):
    exp = expected_nonlinear_betti(spec)
    table = hochster_betti(complement(build_family(spec)), field)
    for pos in exp.positions(spec.t):
        assert table[pos] == exp.table[pos]
    stats = resolution_stats(table)
    assert (stats.index, stats.pd, stats.reg) == (exp.index, exp.pd, exp.reg)
    assert stats.pd == expected_pd_from_n(spec)
    assert stats.almost_maximal


def test_kinds_cover_seven_families():
    assert len(KINDS) == 7
