"""Tests for report rendering."""

import json

import pytest

from circ_minors.cli import reports
from circ_minors.synthesis import circuits_to_minor, minor_to_circuits


def test_render_modes():
    report = reports.Report("analyze", {"b": 1, "a": [1, 2]}, ["first", "second"])
    assert reports.render(report, "text") == "first\nsecond"
    assert json.loads(reports.render(report, "json")) == {"a": [1, 2], "b": 1}
    with pytest.raises(ValueError):
        reports.render(report, "xml")


def test_family_document(example_family):
    doc = reports.family_document(example_family)
    assert (doc["a"], doc["s"], doc["p"]) == (2, 6, 2)
    assert doc["essential"] == [1, 4, 6, 9, 10, 12]
    assert doc["circles"] == [11]
    assert doc["circuits"][1]["vertices"] == [4, 9, 12, 5, 4]
    json.dumps(doc)


def test_witness_document(example_matrix, example_family):
    doc = reports.witness_document(circuits_to_minor(example_matrix, example_family))
    assert doc["bullets"] == [1, 4, 6, 9, 10, 12]
    assert doc["minor"]["provenance"] == "contraction"
    json.dumps(doc)


def test_trace_document_and_lines(example_matrix):
    _, trace = minor_to_circuits(example_matrix, (2, 5, 8, 10, 12), 2)
    doc = reports.trace_document(trace)
    assert doc["normalized"] == [2, 5, 9, 10, 12]
    assert doc["windows"][2] == {"j": 3, "b": 8, "R": [3], "r": 3, "h": 1, "b_prime": 9}
    assert doc["T"] == [[11, 2], [12, 5], [4, 9], [6, 10], [9, 12]]
    assert doc["P"] == [1, 2, 4]
    assert doc["P_vertices"] == [2, 5, 10]
    assert doc["Q"] == [] and doc["Q_vertices"] == []
    assert doc["forward_paths"] == {"1": [[2, 3], [3, 4]], "2": [[5, 6]], "4": [[10, 11]]}
    assert doc["reverse_paths"] == {}
    lines = reports.trace_lines(trace)
    assert lines[0] == "B={2,5,8,10,12} -> B'={2,5,9,10,12} (1 pass(es))"
    assert "  T: (11,2), (12,5), (4,9), (6,10), (9,12)" in lines
    assert "  P: {1,2,4} at vertices {2,5,10}" in lines
    assert "    F_1: (2,3), (3,4)" in lines
    assert "  Q: {} at vertices {}" in lines
    json.dumps(doc)


def test_minor_lines(example_matrix, example_family):
    witness = circuits_to_minor(example_matrix, example_family)
    lines = reports.minor_lines(witness.minor)
    assert lines[0] == "Minor on columns {1,4,6,9,10,12} (contraction):"
    assert len(lines) == 1 + len(witness.minor.traces)
    for line, t in zip(lines[1:], witness.minor.traces):
        assert line.endswith("{" + ",".join(str(v) for v in t) + "}")


def test_matrix_lines(example_matrix):
    lines = reports.matrix_lines(example_matrix)
    assert lines[0] == "Matrix example: n=12, m=6"
    assert lines[6] == "  row 6: [12,2] size 3"


def test_family_lines(example_family):
    lines = reports.family_lines(example_family)
    assert lines[0] == "Family of 2 circuit(s), s=6, p=2"
    assert "  essential bullets {1,4,6,9,10,12}" in lines
