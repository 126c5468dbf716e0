"""Tests for jump counts and bad arcs."""

import pytest

from circ_minors.circuits import (
    bad_arcs,
    check_jump_theorem,
    classify,
    jump_counts,
    reconstruct_row_arcs,
    resolve_vertex_sequence,
    validate_circuit,
)
from circ_minors.digraphs import build_G
from circ_minors.errors import InvalidParameterError


def test_one_bad_arc(example_digraph, bad_arc_circuit):
    bad = bad_arcs(example_digraph, bad_arc_circuit)
    assert [(arc.tail, arc.head, k) for arc, k in bad] == [(12, 5, 1)]
    assert bad[0][0].row == 1


def test_example_circuit_has_no_bad_arcs(example_digraph, example_circuit):
    assert bad_arcs(example_digraph, example_circuit) == []
    counts = jump_counts(example_digraph, example_circuit)
    assert {k for _, k in counts} == {2}


def test_family_has_no_bad_arcs(example_digraph, example_family):
    assert bad_arcs(example_digraph, example_family) == []


def test_jump_theorem_on_bad_arc_circuit(example_digraph, bad_arc_circuit):
    jumps = check_jump_theorem(example_digraph, bad_arc_circuit)
    counts = dict(((a.tail, a.head), k) for a, k in jumps)
    assert counts[(12, 5)] == 1
    assert counts[(1, 8)] == 2
    assert len(counts) == 6


def test_row_arcs_are_reconstructed(bad_arc_circuit, example_circuit):
    for circuit in (bad_arc_circuit, example_circuit):
        own = tuple(sorted((a.tail, a.head) for a in circuit.row_arcs))
        assert reconstruct_row_arcs(classify(circuit), circuit.p) == own
    assert reconstruct_row_arcs(classify(bad_arc_circuit), 2) == (
        (1, 8),
        (4, 9),
        (6, 10),
        (9, 12),
        (11, 2),
    )


def test_jumps_need_row_arcs():
    g = build_G(12, 5)
    circuit = validate_circuit(g, resolve_vertex_sequence(g, [1, 6, 11, 4, 9, 2, 7]))
    with pytest.raises(InvalidParameterError):
        jump_counts(g, circuit)
