"""Rendering of command results as text or JSON."""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

from circ_minors import common
from circ_minors.circuits import Circuit, CircuitFamily
from circ_minors.matrices import CircularMatrix, Minor
from circ_minors.synthesis import MinorWitness, SynthesisTrace

logger = logging.getLogger(__name__)

__all__ = [
    "Report",
    "render",
    "circuit_document",
    "family_document",
    "witness_document",
    "minor_document",
    "trace_document",
    "matrix_lines",
    "family_lines",
    "trace_lines",
    "minor_lines",
]


@dataclass
class Report:
    """Result of a command: a structured document and its text rendering.

    `ok` is False when the command ran but found a discrepancy.
    """

    command: str
    document: Dict[str, Any]
    lines: List[str] = field(default_factory=list)
    ok: bool = True


def render(report: Report, mode: str) -> str:
    if mode == common.OutputModes.JSON:
        return json.dumps(report.document, indent=2, sort_keys=True)
    elif mode == common.OutputModes.TEXT:
        return "\n".join(report.lines)
    else:
        raise ValueError(f"Unknown output mode: {mode}")


def _set(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _arcs(arcs) -> List[List[int]]:
    return [[arc.tail, arc.head] for arc in arcs]


def _pairs(arcs) -> str:
    return ", ".join(f"({a.tail},{a.head})" for a in arcs)


def circuit_document(circuit: Circuit) -> Dict[str, Any]:
    return {
        "vertices": list(circuit.sequence()),
        "kinds": [arc.kind for arc in circuit.arcs],
        "s": circuit.s,
        "p": circuit.p,
    }


def family_document(family: CircuitFamily) -> Dict[str, Any]:
    doc = {
        "a": family.a,
        "s": family.s,
        "p": family.p,
        "circuits": [circuit_document(c) for c in family.circuits],
    }
    if family.classification is not None:
        cls = family.classification
        doc["circles"] = sorted(cls.circles)
        doc["crosses"] = sorted(cls.crosses)
        doc["bullets"] = sorted(cls.bullets)
        doc["essential"] = list(cls.essential)
    return doc


def minor_document(minor: Minor) -> Dict[str, Any]:
    return {
        "columns": list(minor.columns),
        "traces": [list(t) for t in minor.traces],
        "source_rows": list(minor.source_rows),
        "provenance": minor.provenance,
    }


def witness_document(witness: MinorWitness) -> Dict[str, Any]:
    doc = {
        "bullets": list(witness.bullets),
        "removed": list(witness.removed),
        "s": witness.s,
        "p": witness.p,
        "a": witness.a,
        "normalized": None if witness.normalized is None else list(witness.normalized),
    }
    if witness.minor is not None:
        doc["minor"] = minor_document(witness.minor)
    return doc


def trace_document(trace: SynthesisTrace) -> Dict[str, Any]:
    return {
        "bullets": list(trace.bullets),
        "p": trace.p,
        "normalized": list(trace.normalized),
        "passes": trace.passes,
        "windows": [
            {
                "j": r.j,
                "b": r.b,
                "R": list(r.rows),
                "r": r.row,
                "h": r.h,
                "b_prime": r.b_prime,
            }
            for r in trace.windows
        ],
        "T": _arcs(trace.T),
        "P": list(trace.P),
        "Q": list(trace.Q),
        "P_vertices": list(trace.P_vertices),
        "Q_vertices": list(trace.Q_vertices),
        "forward_paths": {str(j): _arcs(path) for j, path in sorted(trace.forward_paths.items())},
        "reverse_paths": {str(j): _arcs(path) for j, path in sorted(trace.reverse_paths.items())},
    }


def matrix_lines(matrix: CircularMatrix) -> List[str]:
    lines = [f"Matrix {matrix.name}: n={matrix.n}, m={matrix.m}"]
    for i in matrix.row_indices():
        lo, hi = matrix.row(i).as_pair()
        lines.append(f"  row {i}: [{lo},{hi}] size {matrix.size(i)}")
    return lines


def family_lines(family: CircuitFamily) -> List[str]:
    lines = [f"Family of {family.a} circuit(s), s={family.s}, p={family.p}"]
    for c in family.circuits:
        kinds = " ".join(arc.label() for arc in c.arcs)
        lines.append(f"  {c}  [{kinds}]")
    if family.classification is not None:
        cls = family.classification
        lines.append(f"  circles {_set(sorted(cls.circles))}")
        lines.append(f"  crosses {_set(sorted(cls.crosses))}")
        lines.append(f"  essential bullets {_set(cls.essential)}")
    return lines


def trace_lines(trace: SynthesisTrace) -> List[str]:
    lines = [f"B={_set(trace.bullets)} -> B'={_set(trace.normalized)} ({trace.passes} pass(es))"]
    for r in trace.windows:
        lines.append(
            f"  j={r.j}: b={r.b} R={_set(r.rows)} r={r.row} h={r.h} b'={r.b_prime}"
        )
    lines.append("  T: " + _pairs(trace.T))
    lines.append(f"  P: {_set(trace.P)} at vertices {_set(trace.P_vertices)}")
    for j, path in sorted(trace.forward_paths.items()):
        lines.append(f"    F_{j}: {_pairs(path)}")
    lines.append(f"  Q: {_set(trace.Q)} at vertices {_set(trace.Q_vertices)}")
    for j, path in sorted(trace.reverse_paths.items()):
        lines.append(f"    R_{j}: {_pairs(path)}")
    return lines


def minor_lines(minor: Minor) -> List[str]:
    lines = [f"Minor on columns {_set(minor.columns)} ({minor.provenance}):"]
    for i, t in zip(minor.source_rows, minor.traces):
        lines.append(f"  row {i}: {_set(t)}")
    return lines
