from __future__ import annotations

import pytest

from oracles import P
from partcalc.errors import (
    BadSelection,
    Disconnected,
    InvalidGraph,
    KindMismatch,
    RangesNotDisjoint,
    ResultNotAdmissible,
    ValidationError,
)
from partcalc.graphs import (
    AdmissibleGraph,
    FeynmanDiagram,
    OrdinaryGraph,
    StructureMap,
    bracket_graphs,
    compose_graphs,
    insert_admissible,
    insert_graph,
    involutions,
    is_connected,
    lines,
    partition_compose_lift,
    quotient_disconnected,
    quotient_graph,
    selection_components,
    subgraph,
    validate,
)
from partcalc.lie import bracket
from partcalc.partition import quotient


def sigma(*pairs, fixed=()):
    return StructureMap.from_pairs(pairs, fixed)


@pytest.fixture
def feynman():
    return FeynmanDiagram(sigma((1, 2), (3, 4), (5, 6), fixed=(7, 8)), P([1, 3, 7], [2, 5], [4, 6, 8]))


@pytest.fixture
def wedge():
    return AdmissibleGraph(sigma((1, 3), (2, 4)), P([1, 2]), P([3], [4]))


@pytest.fixture
def triangle():
    return OrdinaryGraph(sigma((1, 4), (2, 5), (3, 6)), P([1, 2], [4, 3], [5, 6]))


def test_structure_map_must_be_involution():
    with pytest.raises(ValidationError, match="sigma not an involution"):
        StructureMap.from_pairs([(1, 2), (2, 3)])
    assert not StructureMap({1: 2, 2: 3, 3: 1}).is_involution()


def test_structure_map_queries():
    s = sigma((1, 2), fixed=(3,))
    assert s(1) == 2 and s(3) == 3
    assert s.fixed_points == {3}
    assert s.pairs == [(1, 2)]
    assert s.is_involution()


def test_involution_count():
    # involutions on 4 points: 1 + 6 + 3
    assert len(list(involutions([1, 2, 3, 4]))) == 10
    assert len(list(involutions([1, 2, 3, 4], fixed_point_free=True))) == 3


def test_validate_examples(wedge):
    g = FeynmanDiagram(sigma((1, 2), fixed=(3,)), P([1, 3], [2]))
    assert validate(g) == []
    bad = OrdinaryGraph(sigma((1, 2), fixed=(3,)), P([1, 3], [2]))
    assert "fixed point in ordinary graph" in validate(bad)
    assert validate(wedge) == []


@pytest.mark.parametrize("g, message", [
    (AdmissibleGraph(sigma((1, 2)), P([1, 2]), P()), "tadpole at first-type vertex"),
    (AdmissibleGraph(sigma((1, 2), (3, 4)), P([1]), P([2, 3], [4])), "edge between second-type vertices"),
    (AdmissibleGraph(sigma((1, 3), (2, 4)), P([1, 2], [3, 4]), P()), "multiple edge between first-type vertices"),
    (AdmissibleGraph(sigma((1, 3), (2, 4)), P([1, 2]), P([3, 4])), "multiple edge from first-type to second-type vertex"),
    (AdmissibleGraph(sigma((1, 2), fixed=(3,)), P([1, 3]), P([2])), "fixed point in admissible graph"),
])
def test_validate_admissible_clauses(g, message):
    assert message in validate(g)


def test_vertex_range_must_match_carrier():
    g = FeynmanDiagram(sigma((1, 2)), P([1]))
    assert "vertex range differs from sigma carrier" in validate(g)


def test_lines_examples(wedge):
    g = FeynmanDiagram(sigma((1, 2), (3, 4), fixed=(5, 6)), P([1, 3, 5], [2, 4, 6]))
    ext, internal = lines(g)
    assert ext == {5, 6}
    assert set(internal) == {(1, 2), (3, 4)}
    assert lines(wedge) == (frozenset(), [(1, 3), (2, 4)])


def test_lines_rejects_invalid():
    with pytest.raises(InvalidGraph):
        lines(OrdinaryGraph(sigma(fixed=(1,)), P([1])))


def test_admissible_orientation_starts_in_first_type():
    g = AdmissibleGraph(sigma((1, 3)), P([3]), P([1]))
    assert lines(g)[1] == [(3, 1)]


def test_connectivity(triangle):
    assert is_connected(FeynmanDiagram(sigma((1, 2)), P([1], [2])))
    assert not is_connected(FeynmanDiagram(sigma(fixed=(1, 2)), P([1], [2])))
    assert is_connected(triangle)


def test_feynman_subgraph_example(feynman):
    sub = subgraph(feynman, [{1, 3, 7}, {4, 6, 8}])
    assert sub.sigma.pairs == [(3, 4)]
    assert sub.sigma.fixed_points == {1, 6, 7, 8}
    assert validate(sub) == []


def test_ordinary_subgraph_of_triangle(triangle):
    sub = subgraph(triangle, [{1, 2}, {3, 4}])
    assert sub.vertices == P([1], [4])
    assert sub.sigma.pairs == [(1, 4)]


def test_admissible_subgraph_example(wedge):
    sub = subgraph(wedge, ([{1, 2}], [{3}]))
    assert sub.carrier == {1, 3}
    assert sub.first_type == P([1]) and sub.second_type == P([3])


def test_admissible_subgraph_needs_hit_second_type():
    g = AdmissibleGraph(sigma((1, 3), (2, 4)), P([1], [2]), P([3], [4]))
    with pytest.raises(BadSelection):
        subgraph(g, ([{1}], [{4}]))


def test_bad_selection(feynman):
    with pytest.raises(BadSelection):
        subgraph(feynman, [{1, 3}])
    with pytest.raises(BadSelection):
        subgraph(feynman, [])


def test_feynman_quotient_example(feynman):
    q = quotient_graph(feynman, [{1, 3, 7}, {4, 6, 8}])
    assert q.vertices == P([1, 6, 7, 8], [2, 5])
    assert q.sigma.pairs == [(1, 2), (5, 6)]
    assert q.sigma.fixed_points == {7, 8}
    ext, internal = lines(q)
    assert len(internal) == 2 and len(ext) == 2
    assert q.vertices == quotient(feynman.vertices, {3, 4}).partition


def test_quotient_by_isolated_vertex_is_identity(feynman):
    assert quotient_graph(feynman, [{2, 5}]) == feynman


def test_admissible_wedge_quotient(wedge):
    q = quotient_graph(wedge, ([{1, 2}], [{3}]))
    assert q.first_type == P([2])
    assert q.second_type == P([4])
    assert q.sigma.pairs == [(2, 4)]


def test_quotient_needs_connected_selection():
    chain = OrdinaryGraph(sigma((1, 2), (3, 4), (5, 6)), P([1], [2, 3], [4, 5], [6]))
    with pytest.raises(Disconnected):
        quotient_graph(chain, [{1}, {4, 5}])


def test_quotient_needs_connected_graph():
    g = FeynmanDiagram(sigma(fixed=(1, 2)), P([1], [2]))
    with pytest.raises(Disconnected):
        quotient_graph(g, [{1}])


def test_quotient_disconnected_is_order_independent():
    chain = OrdinaryGraph(sigma((1, 2), (3, 4), (5, 6), (7, 8)), P([1], [2, 3], [4, 5], [6, 7], [8]))
    assert len(selection_components(chain, [{1}, {2, 3}, {4, 5}])) == 1
    comps = selection_components(chain, [{1}, {2, 3}, {6, 7}, {8}])
    assert len(comps) == 2
    a = quotient_disconnected(chain, comps)
    b = quotient_disconnected(chain, comps[::-1])
    assert a == b
    assert a.vertices == P([3], [4, 5], [6])
    assert a.sigma.pairs == [(3, 4), (5, 6)]
    assert quotient_disconnected(chain, []) == chain


def test_insert_graph_example():
    host = FeynmanDiagram(sigma(fixed=(1, 2)), P([1, 2]))
    guest = FeynmanDiagram(sigma((3, 4)), P([3], [4]))
    got = insert_graph(host, 0, guest, {1: 0, 2: 1})
    assert got.vertices == P([1, 3], [2, 4])
    assert got.sigma.pairs == [(3, 4)] and got.sigma.fixed_points == {1, 2}


def test_insert_graph_kind_and_range_checks():
    host = FeynmanDiagram(sigma(fixed=(1,)), P([1]))
    with pytest.raises(KindMismatch):
        insert_graph(host, 0, OrdinaryGraph(sigma((2, 3)), P([2], [3])), {1: 0})
    with pytest.raises(RangesNotDisjoint):
        insert_graph(host, 0, FeynmanDiagram(sigma(fixed=(1,)), P([1])), {1: 0})


def test_compose_graphs_matches_partition_compose():
    g1 = FeynmanDiagram(sigma((1, 2)), P([1], [2]))
    g2 = FeynmanDiagram(sigma(fixed=(3, 4)), P([3, 4]))
    assert compose_graphs(g1, g2) == partition_compose_lift(g1, g2)


def test_bracket_graphs_examples():
    a = FeynmanDiagram(sigma(fixed=(1,)), P([1]))
    b = FeynmanDiagram(sigma(fixed=(2,)), P([2]))
    assert not bracket_graphs(a, b)
    two = FeynmanDiagram(sigma((1, 2)), P([1], [2]))
    pair = FeynmanDiagram(sigma((3, 4)), P([3, 4]))
    got = bracket_graphs(two, pair)
    assert got.terms == bracket(two.vertices, pair.vertices)
    assert got.sigma == sigma((1, 2), (3, 4))
    assert bracket_graphs(pair, two).terms == -got.terms


def test_insert_admissible_trivial_mode(wedge):
    guest = AdmissibleGraph(sigma((5, 7), (6, 8)), P([5, 6]), P([7], [8]))
    out = insert_admissible(wedge, guest, "trivial", 0, {1: 0, 2: 0})
    assert out.first_type == P([1, 2, 5, 6])
    assert out.second_type == P([3], [4], [7], [8])


def test_insert_admissible_paired_mode():
    host = AdmissibleGraph(sigma((1, 2)), P([1]), P([2]))
    guest = AdmissibleGraph(sigma((3, 4), (5, 6)), P([3], [4, 5]), P([6]))
    out = insert_admissible(host, guest, "paired", 0, {1: 0}, 0, {2: 0})
    assert out.first_type == P([1, 3], [4, 5]) and out.second_type == P([2, 6])


def test_insert_admissible_double_edge_rejected(wedge):
    guest = AdmissibleGraph(sigma((5, 6)), P([5]), P([6]))
    with pytest.raises(ResultNotAdmissible):
        insert_admissible(wedge, guest, "paired", 0, {1: 0, 2: 0}, 0, {3: 0})
