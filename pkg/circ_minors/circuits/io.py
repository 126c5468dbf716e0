"""Reading circuit documents."""

import logging
import os
from typing import Any, List, Optional, Sequence

from omegaconf import OmegaConf

from circ_minors.circuits.base import Circuit, validate_circuit
from circ_minors.digraphs import Arc, ArcDigraph
from circ_minors.errors import (
    AmbiguousStepError,
    MalformedDocumentError,
    MissingFileError,
    UnknownArcError,
)

logger = logging.getLogger(__name__)

__all__ = ["load_circuits", "parse_circuits", "resolve_vertex_sequence"]


def resolve_vertex_sequence(
    d: ArcDigraph, vertices: Sequence[int], kinds: Optional[Sequence[str]] = None
) -> List[Arc]:
    """Turns a vertex sequence into arcs.

    The closing vertex may be repeated at the end or omitted. Without `kinds`,
    every step must be realized by exactly one arc of `d`.
    """
    vertices = [int(v) for v in vertices]
    if len(vertices) > 1 and vertices[0] == vertices[-1]:
        vertices = vertices[:-1]
    steps = list(zip(vertices, vertices[1:] + vertices[:1]))
    if kinds is not None:
        if len(kinds) != len(steps):
            raise MalformedDocumentError(
                f"Got {len(kinds)} kinds for a circuit with {len(steps)} steps."
            )
        return [d.find(u, v, str(kind)) for (u, v), kind in zip(steps, kinds)]
    arcs = []
    for u, v in steps:
        candidates = d.arcs_between(u, v)
        if not candidates:
            raise UnknownArcError(f"No arc {u} -> {v} in {d.name}.")
        if len(candidates) > 1:
            options = ", ".join(a.kind for a in candidates)
            raise AmbiguousStepError(
                f"Step {u} -> {v} matches several arcs ({options}); give explicit kinds."
            )
        arcs.append(candidates[0])
    return arcs


def _parse_circuit(d: ArcDigraph, item: Any) -> Circuit:
    if isinstance(item, dict) and "vertices" in item:
        return validate_circuit(
            d, resolve_vertex_sequence(d, item["vertices"], item.get("kinds"))
        )
    if isinstance(item, list) and item and all(isinstance(v, int) for v in item):
        return validate_circuit(d, resolve_vertex_sequence(d, item))
    if isinstance(item, list) and all(
        isinstance(a, dict) and {"tail", "head", "kind"} <= set(a) for a in item
    ):
        return validate_circuit(d, item)
    raise MalformedDocumentError(
        "A circuit is a list of {tail, head, kind} arcs, a vertex list, "
        "or a mapping with `vertices` and optional `kinds`."
    )


def parse_circuits(doc: Any, d: ArcDigraph) -> List[Circuit]:
    """Validates the circuits of a document against `d`."""
    if not isinstance(doc, dict) or not isinstance(doc.get("circuits"), list):
        raise MalformedDocumentError("Field `circuits` must be a list.")
    return [_parse_circuit(d, item) for item in doc["circuits"]]


def load_circuits(path: str, d: ArcDigraph) -> List[Circuit]:
    """Reads a YAML or JSON circuit document."""
    if not os.path.isfile(path):
        raise MissingFileError(f"Circuit file not found: {path}")
    try:
        doc = OmegaConf.to_container(OmegaConf.load(path), resolve=True)
    except Exception as e:
        raise MalformedDocumentError(f"Cannot parse {path}: {e}") from e
    circuits = parse_circuits(doc, d)
    logger.debug(f"Loaded {len(circuits)} circuit(s) from {path}.")
    return circuits
