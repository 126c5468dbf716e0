"""Jump counts of row arcs over essential bullets, and bad arcs."""

import logging
from typing import Dict, List, Optional, Tuple, Union

from circ_minors import common
from circ_minors.circuits.base import Circuit, CircuitFamily, Classification
from circ_minors.circuits.classify import classify, members_of
from circ_minors.digraphs import Arc, ArcDigraph, jumped_vertices
from circ_minors.errors import (
    BlockStructureViolationError,
    InvalidParameterError,
    JumpCountViolationError,
)

logger = logging.getLogger(__name__)

__all__ = ["bad_arcs", "check_jump_theorem", "reconstruct_row_arcs", "jump_counts"]


def _require_row_flavor(d: ArcDigraph):
    if d.flavor not in (common.Flavors.F, common.Flavors.D):
        raise InvalidParameterError(f"Jump analysis is undefined on {d.name}.")


def jump_counts(
    d: ArcDigraph, circuit: Circuit, classification: Optional[Classification] = None
) -> List[Tuple[Arc, int]]:
    """Counts the essential bullets of `circuit` jumped by every row arc of `d`.

    Raises
    ------
    JumpCountViolationError
        If a count lies outside {p - 1, p, p + 1}.
    """
    _require_row_flavor(d)
    classification = classification or classify(circuit, d.g)
    essential = frozenset(classification.essential)
    p = circuit.p
    counts = []
    for arc in d.row_arcs:
        k = len(jumped_vertices(arc, essential, d.g))
        if not p - 1 <= k <= p + 1:
            raise JumpCountViolationError(
                f"Row arc {arc} jumps {k} essential bullets of {circuit} (p={p})."
            )
        counts.append((arc, k))
    return counts


def bad_arcs(
    d: ArcDigraph, item: Union[Circuit, CircuitFamily]
) -> List[Tuple[Arc, int]]:
    """Lists the row arcs of `d` jumping p_i - 1 essential bullets of some member.

    Returns
    -------
    bad : list of (Arc, int)
        Bad arcs sorted by arc, each with its jump count for the first member
        it is bad for.
    """
    bad: Dict[Arc, int] = {}
    for circuit in members_of(item):
        for arc, k in jump_counts(d, circuit):
            if k == circuit.p - 1:
                bad.setdefault(arc, k)
    return sorted(bad.items())


def check_jump_theorem(d: ArcDigraph, circuit: Circuit) -> List[Tuple[Arc, int]]:
    """Checks the jump-count side conditions of every row arc of `d`.

    A row arc jumping p - 1 essential bullets has its tail on the circuit and
    that tail lies in a circle block; its head is a circle or off the circuit.
    A row arc jumping p + 1 essential bullets has its head on the circuit.

    Returns
    -------
    counts : list of (Arc, int)
    """
    classification = classify(circuit, d.g)
    vertices = circuit.vertex_set
    counts = jump_counts(d, circuit, classification)
    for arc, k in counts:
        if k == circuit.p - 1:
            if arc.tail not in vertices:
                raise JumpCountViolationError(f"Bad arc {arc} starts off the circuit.")
            block = classification.block_of(arc.tail, d.g)
            if block is None or block.kind != common.BlockKinds.CIRCLE:
                raise BlockStructureViolationError(
                    f"Bad arc {arc} does not start in a circle block."
                )
            if arc.head in vertices and arc.head not in classification.circles:
                raise BlockStructureViolationError(
                    f"Bad arc {arc} ends on a circuit vertex that is not a circle."
                )
        elif k == circuit.p + 1 and arc.head not in vertices:
            raise JumpCountViolationError(
                f"Row arc {arc} jumps p + 1 bullets but ends off the circuit."
            )
    return counts


def reconstruct_row_arcs(classification: Classification, p: int) -> Tuple[Tuple[int, int], ...]:
    """Returns the arcs (B-_i, B+_{i+p}) over the essential bullet indices."""
    minus, plus = classification.minus, classification.plus
    s = len(minus)
    return tuple(sorted((minus[i], plus[(i + p) % s]) for i in range(s)))
