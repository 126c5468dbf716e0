"""Tests for circuit validation."""

import pytest

from circ_minors import common
from circ_minors.circuits import resolve_vertex_sequence, validate_circuit
from circ_minors.digraphs import build_D, build_G
from circ_minors.errors import (
    AmbiguousStepError,
    NoRowArcError,
    NotClosedError,
    RepeatedVertexError,
    UnknownArcError,
    ZeroWindingError,
)


def test_bad_arc_circuit_parameters(bad_arc_circuit):
    assert bad_arc_circuit.vertices[0] == 1
    assert bad_arc_circuit.s == 5
    assert bad_arc_circuit.p == 2
    assert bad_arc_circuit.total_length == 24
    assert bad_arc_circuit.count(common.ArcKinds.FORWARD) == 4
    assert bad_arc_circuit.count(common.ArcKinds.REVERSE) == 2


def test_circuit_is_rotated_to_smallest_vertex(example_circuit):
    assert example_circuit.sequence() == (2, 3, 4, 9, 12, 5, 6, 10, 11, 2)
    assert str(example_circuit) == "(2,3,4,9,12,5,6,10,11,2)"
    assert (example_circuit.s, example_circuit.p) == (5, 2)


def test_arc_specs_as_triples_and_mappings(example_digraph):
    triples = [(4, 9, "row"), (9, 12, "row"), (12, 5, "row"), (5, 4, "rev")]
    mappings = [{"tail": t, "head": h, "kind": k} for t, h, k in triples]
    first = validate_circuit(example_digraph, triples)
    second = validate_circuit(example_digraph, mappings)
    assert first == second
    assert (first.s, first.p) == (3, 1)
    assert first.to_document()[0] == {"tail": 4, "head": 9, "kind": "row"}


def test_not_closed(example_digraph):
    with pytest.raises(NotClosedError):
        validate_circuit(example_digraph, [(4, 9, "row"), (9, 12, "row")])
    with pytest.raises(NotClosedError):
        validate_circuit(example_digraph, [])


def test_repeated_vertex(example_digraph):
    spec = [(1, 2, "fwd"), (2, 1, "rev"), (1, 2, "fwd"), (2, 1, "rev")]
    with pytest.raises(RepeatedVertexError):
        validate_circuit(example_digraph, spec)


def test_zero_winding(example_digraph):
    with pytest.raises(ZeroWindingError):
        validate_circuit(example_digraph, [(1, 2, "fwd"), (2, 1, "rev")])


def test_all_forward_circuit_has_no_row_arc(example_digraph):
    spec = [(j, j % 12 + 1, "fwd") for j in range(1, 13)]
    with pytest.raises(NoRowArcError):
        validate_circuit(example_digraph, spec)


def test_unknown_arc(example_digraph):
    with pytest.raises(UnknownArcError):
        validate_circuit(example_digraph, [(1, 5, "row"), (5, 1, "row")])


def test_vertex_sequence_needs_kinds_only_when_ambiguous(example_digraph):
    arcs = resolve_vertex_sequence(example_digraph, [4, 9, 12, 5, 4])
    assert [a.kind for a in arcs] == ["row", "row", "row", "rev"]
    d = build_D(4, 3)
    with pytest.raises(AmbiguousStepError):
        resolve_vertex_sequence(d, [2, 1, 4, 3])


def test_circuit_of_g():
    g = build_G(12, 5)
    arcs = resolve_vertex_sequence(g, [1, 6, 11, 4, 9, 2, 7])
    circuit = validate_circuit(g, arcs)
    assert circuit.p == 3
    assert circuit.count(common.ArcKinds.ROW) == 6
    assert circuit.count(common.ArcKinds.LONG) == 1
