"""Simple circuits of the auxiliary digraphs and their vertex classification."""

import logging
import math
from dataclasses import dataclass
from typing import Any, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union

from circ_minors import common
from circ_minors.digraphs import Arc, ArcDigraph
from circ_minors.errors import (
    NoRowArcError,
    NotClosedError,
    RepeatedVertexError,
    TheoremViolation,
    ZeroWindingError,
)
from circ_minors.ground import GroundSet

logger = logging.getLogger(__name__)

__all__ = [
    "Block",
    "Classification",
    "Circuit",
    "CircuitFamily",
    "ArcSpec",
    "validate_circuit",
]

# Types.
ArcSpec = Union[Arc, Tuple[int, int, str], Mapping[str, Any]]


@dataclass(frozen=True)
class Block:
    """The block [b, v]_n of an essential bullet b.

    `minus` is the tail of the row arc leaving the block and `plus` the head of
    the row arc entering it.
    """

    b: int
    v: int
    kind: str
    minus: int
    plus: int

    def members(self, g: GroundSet) -> Tuple[int, ...]:
        return tuple(g.shift(self.b, t) for t in range((self.v - self.b) % g.n + 1))


@dataclass(frozen=True)
class Classification:
    """Partition of [n] into circles, crosses and bullets induced by circuits.

    `essential` lists the bullets visited by the circuits in ascending order;
    `blocks[j]` is the block of `essential[j]`.
    """

    circles: FrozenSet[int]
    crosses: FrozenSet[int]
    bullets: FrozenSet[int]
    essential: Tuple[int, ...]
    blocks: Tuple[Block, ...]

    @property
    def minus(self) -> Tuple[int, ...]:
        return tuple(block.minus for block in self.blocks)

    @property
    def plus(self) -> Tuple[int, ...]:
        return tuple(block.plus for block in self.blocks)

    def block_of(self, v: int, g: GroundSet) -> Optional[Block]:
        """Returns the block containing vertex v, if any."""
        for block in self.blocks:
            if (v - block.b) % g.n <= (block.v - block.b) % g.n:
                return block
        return None


@dataclass(frozen=True)
class Circuit:
    """A simple directed circuit given by its cyclic arc sequence.

    The sequence starts at the arc leaving the smallest vertex.
    """

    arcs: Tuple[Arc, ...]
    g: GroundSet

    # --- Properties. ---

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(arc.tail for arc in self.arcs)

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    @property
    def row_arcs(self) -> Tuple[Arc, ...]:
        return tuple(arc for arc in self.arcs if arc.is_row)

    @property
    def total_length(self) -> int:
        return sum(arc.length for arc in self.arcs)

    @property
    def s(self) -> int:
        """Number of row arcs."""
        return len(self.row_arcs)

    @property
    def p(self) -> int:
        """Winding number."""
        return self.total_length // self.g.n

    # --- Methods. ---

    def count(self, kind: str) -> int:
        return sum(1 for arc in self.arcs if arc.kind == kind)

    def sequence(self) -> Tuple[int, ...]:
        """The closed vertex sequence, first vertex repeated at the end."""
        return self.vertices + (self.vertices[0],)

    def to_document(self):
        return [
            {"tail": a.tail, "head": a.head, "kind": a.kind} for a in self.arcs
        ]

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.sequence()) + ")"


@dataclass(frozen=True)
class CircuitFamily:
    """Pairwise vertex-disjoint circuits with uniform parameters.

    `s` and `p` are pooled over the members and `a` is the member count.
    `classification` is pooled as well; it is None for G(n, k) families.
    """

    circuits: Tuple[Circuit, ...]
    g: GroundSet
    s: int
    p: int
    classification: Optional[Classification] = None

    @property
    def a(self) -> int:
        return len(self.circuits)

    @property
    def bullets(self) -> Tuple[int, ...]:
        if self.classification is None:
            return ()
        return self.classification.essential

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset().union(*(c.vertex_set for c in self.circuits))

    @property
    def row_arcs(self) -> Tuple[Arc, ...]:
        return tuple(arc for c in self.circuits for arc in c.row_arcs)

    @property
    def member_s(self) -> int:
        return self.s // self.a

    @property
    def member_p(self) -> int:
        return self.p // self.a


def _resolve(d: ArcDigraph, item: ArcSpec) -> Arc:
    if isinstance(item, Arc):
        return d.find(item.tail, item.head, item.kind)
    if isinstance(item, Mapping):
        return d.find(int(item["tail"]), int(item["head"]), str(item["kind"]))
    tail, head, kind = item
    return d.find(int(tail), int(head), str(kind))


def _rotate(arcs: Sequence[Arc]) -> Tuple[Arc, ...]:
    start = min(range(len(arcs)), key=lambda t: arcs[t].tail)
    return tuple(arcs[start:]) + tuple(arcs[:start])


def validate_circuit(d: ArcDigraph, spec: Iterable[ArcSpec]) -> Circuit:
    """Checks that an arc sequence is a simple circuit of `d`.

    Parameters
    ----------
    d : ArcDigraph

    spec : iterable of arcs
        Arcs given as `Arc`, `(tail, head, kind)` triples or mappings with the
        keys `tail`, `head` and `kind`.

    Returns
    -------
    circuit : Circuit

    Raises
    ------
    UnknownArcError, NotClosedError, RepeatedVertexError, ZeroWindingError,
    NoRowArcError
    """
    arcs = [_resolve(d, item) for item in spec]
    if not arcs:
        raise NotClosedError("A circuit needs at least one arc.")
    for t, arc in enumerate(arcs):
        following = arcs[(t + 1) % len(arcs)]
        if arc.head != following.tail:
            raise NotClosedError(f"Arc {arc} is not followed by an arc leaving {arc.head}.")
    tails = [arc.tail for arc in arcs]
    if len(set(tails)) != len(tails):
        repeated = sorted({v for v in tails if tails.count(v) > 1})
        raise RepeatedVertexError(f"Vertices {repeated} are visited more than once.")
    total = sum(arc.length for arc in arcs)
    if total <= 0:
        raise ZeroWindingError(f"Arc lengths sum to {total}; the winding must be positive.")
    circuit = Circuit(_rotate(arcs), d.g)
    if d.flavor in (common.Flavors.F, common.Flavors.D):
        if circuit.s == 0:
            raise NoRowArcError(f"Circuit {circuit} has no row arc.")
        if math.gcd(circuit.s, circuit.p) != 1:
            raise TheoremViolation(
                f"Circuit {circuit} has s={circuit.s} and p={circuit.p} with gcd > 1."
            )
    return circuit
