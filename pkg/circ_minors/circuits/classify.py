"""Circles, crosses, bullets and blocks of circuits and circuit families."""

import logging
from typing import Optional, Sequence, Tuple, Union

from circ_minors import common
from circ_minors.circuits.base import Block, Circuit, CircuitFamily, Classification
from circ_minors.errors import BlockStructureViolationError
from circ_minors.ground import GroundSet

logger = logging.getLogger(__name__)

__all__ = ["classify", "members_of"]


def members_of(item: Union[Circuit, CircuitFamily, Sequence[Circuit]]) -> Tuple[Circuit, ...]:
    if isinstance(item, Circuit):
        return (item,)
    if isinstance(item, CircuitFamily):
        return item.circuits
    return tuple(item)


def _block(b: int, circles, crosses, bullets, g: GroundSet) -> Block:
    t = 1
    while g.shift(b, t) not in bullets:
        t += 1
    interior = {g.shift(b, x) for x in range(1, t)}
    v = g.shift(b, t - 1)
    if not interior:
        return Block(b, b, common.BlockKinds.BULLET, b, b)
    if interior <= circles:
        return Block(b, v, common.BlockKinds.CIRCLE, v, b)
    if interior <= crosses:
        return Block(b, v, common.BlockKinds.CROSS, b, v)
    raise BlockStructureViolationError(
        f"Block starting at {b} mixes circles and crosses: {sorted(interior)}."
    )


def classify(
    item: Union[Circuit, CircuitFamily, Sequence[Circuit]],
    g: Optional[GroundSet] = None,
) -> Classification:
    """Classifies the vertices of [n] with respect to a circuit or family.

    Circles are heads of forward short arcs, crosses are tails of reverse short
    arcs and bullets are the remaining vertices. A block runs from an essential
    bullet through the circles or crosses that follow it up to the next bullet
    (essential or not).

    Parameters
    ----------
    item : Circuit, CircuitFamily or sequence of Circuit
        Members of a family are pooled.

    g : GroundSet, optional
        Defaults to the ground set of the circuits.

    Returns
    -------
    classification : Classification

    Raises
    ------
    BlockStructureViolationError
        If a block mixes circles and crosses or the blocks do not partition the
        visited vertices.
    """
    circuits = members_of(item)
    g = g or circuits[0].g
    arcs = [arc for c in circuits for arc in c.arcs]
    circles = frozenset(a.head for a in arcs if a.kind == common.ArcKinds.FORWARD)
    crosses = frozenset(a.tail for a in arcs if a.kind == common.ArcKinds.REVERSE)
    if circles & crosses:
        raise BlockStructureViolationError(
            f"Vertices {sorted(circles & crosses)} are both circles and crosses."
        )
    bullets = frozenset(g.indices()) - circles - crosses
    visited = frozenset(arc.tail for arc in arcs)
    essential = tuple(sorted(bullets & visited))
    blocks = tuple(_block(b, circles, crosses, bullets, g) for b in essential)

    covered = [v for block in blocks for v in block.members(g)]
    if len(covered) != len(visited) or set(covered) != visited:
        raise BlockStructureViolationError("Blocks do not partition the circuit vertices.")
    return Classification(
        circles=circles,
        crosses=crosses,
        bullets=bullets,
        essential=essential,
        blocks=blocks,
    )
