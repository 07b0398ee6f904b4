from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

from partcalc.errors import ParseError, ValidationError
from partcalc.graphs import AdmissibleGraph, FeynmanDiagram, OrdinaryGraph
from partcalc.linear import LinComb
from partcalc.partition import Partition, PartitionTuple
from partcalc.serialize import dumps, parse

FIXTURES = sorted((Path(__file__).parent / "fixtures").glob("*.json"))


def test_fixture_corpus_size():
    assert len(FIXTURES) == 20


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.stem)
def test_round_trip(path):
    first = parse(path.read_text(encoding="utf-8"))
    text = dumps(first)
    second = parse(text)
    assert second == first
    assert dumps(second) == text


def test_partition_document():
    doc = parse('[["1","2"],["3"]]')
    assert doc.kind == "partition"
    assert doc.payload == Partition([["1", "2"], ["3"]])


def test_partition_printing_is_canonical():
    assert dumps(parse('[["3"], ["2","1"]]')) == '[["1","2"],["3"]]'


def test_feynman_document():
    doc = parse('{"sigma":[["1","2"]],"fixed":["3"],"vertices":[["1","3"],["2"]]}')
    assert doc.kind == "feynman"
    assert isinstance(doc.payload, FeynmanDiagram)
    assert doc.payload.sigma.fixed_points == {"3"}


def test_graph_kinds():
    assert isinstance(parse('{"kind":"ordinary","sigma":[["1","2"]],"vertices":[["1"],["2"]]}').payload, OrdinaryGraph)
    wedge = parse('{"sigma":[["1","3"],["2","4"]],"vertices":[["1","2"]],"second_type":[["3"],["4"]]}')
    assert isinstance(wedge.payload, AdmissibleGraph)


def test_overlapping_blocks_rejected():
    with pytest.raises(ValidationError, match="blocks not disjoint"):
        parse('[["1","2"],["2"]]')


def test_invalid_graph_lists_violations():
    with pytest.raises(ValidationError) as info:
        parse('{"kind":"ordinary","sigma":[],"fixed":["1"],"vertices":[["1"]]}')
    assert "fixed point in ordinary graph" in info.value.violations


def test_parse_error_has_position():
    with pytest.raises(ParseError) as info:
        parse('[["1",\n  ]')
    assert info.value.line == 2
    assert info.value.column > 0


def test_bad_atom_and_coefficient():
    with pytest.raises(ValidationError):
        parse('[[1.5]]')
    with pytest.raises(ValidationError):
        parse('{"kind":"lincomb","terms":[{"coeff":"x","term":[["1"]]}]}')


def test_lincomb_coefficients_are_fractions():
    doc = parse('{"kind":"lincomb","terms":[{"coeff":"-2/4","term":[["1"]]}]}')
    assert doc.payload.coeff(Partition([["1"]])) == Fraction(-1, 2)
    assert dumps(doc) == '{"kind":"lincomb","terms":[{"coeff":"-1/2","term":[["1"]]}]}'


def test_tuple_and_tensor_terms():
    t = PartitionTuple([Partition([["1"]])])
    x = LinComb.single((PartitionTuple([]), t))
    text = dumps(x)
    assert text == '{"kind":"lincomb","terms":[{"coeff":"1/1","term":{"tensor":[{"tuple":[]},{"tuple":[[["1"]]]}]}}]}'
    assert parse(text).payload == x


def test_unknown_kind():
    with pytest.raises(ValidationError):
        parse('{"kind":"hypergraph"}')
