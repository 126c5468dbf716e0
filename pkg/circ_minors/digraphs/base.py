"""Arcs and the auxiliary digraphs on [n]."""

import logging
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from circ_minors import common
from circ_minors.errors import InvalidParameterError, UnknownArcError
from circ_minors.ground import GroundSet

logger = logging.getLogger(__name__)

__all__ = ["Arc", "ArcDigraph", "jumped_vertices"]


class Arc(NamedTuple):
    """A directed arc of an auxiliary digraph.

    `length` is the signed length: the cyclic distance from tail to head for
    row and long arcs, +1 for forward short arcs and -1 for reverse short arcs.
    `row` is the originating row of a row arc and None otherwise.
    """

    tail: int
    head: int
    kind: str
    row: Optional[int]
    length: int

    @property
    def is_row(self) -> bool:
        return self.kind == common.ArcKinds.ROW

    @property
    def is_short(self) -> bool:
        return self.kind in common.ArcKinds.SHORT

    def label(self) -> str:
        if self.is_row:
            return f"row={self.row}"
        return self.kind

    def __str__(self):
        return f"{self.tail} -> {self.head} [{self.label()}]"


def jumped_vertices(arc: Arc, vertices: Iterable[int], g: GroundSet) -> FrozenSet[int]:
    """Returns the members of `vertices` the arc jumps over.

    A row or long arc (u, v) jumps over (u, v]_n. The forward arc (j - 1, j)
    and the reverse arc (j, j - 1) both jump over j only.
    """
    vertices = frozenset(vertices)
    if arc.kind == common.ArcKinds.FORWARD:
        return vertices & {arc.head}
    if arc.kind == common.ArcKinds.REVERSE:
        return vertices & {arc.tail}
    return frozenset(
        j for j in (g.shift(arc.tail, t) for t in range(1, arc.length + 1)) if j in vertices
    )


class ArcDigraph:
    """A digraph on [n] with explicitly typed arcs.

    Parameters
    ----------
    g : GroundSet

    arcs : sequence of Arc

    flavor : str
        One of `common.Flavors`.

    k : int, optional
        Circulant parameter of D(n, k) and G(n, k).

    name : str, optional
    """

    def __init__(
        self,
        g: GroundSet,
        arcs: Sequence[Arc],
        flavor: str,
        k: Optional[int] = None,
        name: Optional[str] = None,
    ):
        self.g = g
        self.flavor = flavor
        self.k = k
        self.name = name or self.__class__.__name__

        # Internals.
        self._arcs = tuple(sorted(arcs))
        self._index: Dict[Tuple[int, int, str], Arc] = {}
        self._out: Dict[int, List[Arc]] = {v: [] for v in g.indices()}
        self._in: Dict[int, List[Arc]] = {v: [] for v in g.indices()}
        for arc in self._arcs:
            key = (g.check(arc.tail), g.check(arc.head), arc.kind)
            if key in self._index:
                raise InvalidParameterError(f"Duplicate arc {arc}.")
            self._index[key] = arc
            self._out[arc.tail].append(arc)
            self._in[arc.head].append(arc)
        self._row_arcs = tuple(a for a in self._arcs if a.is_row)

    # --- Properties. ---

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        return self._arcs

    @property
    def row_arcs(self) -> Tuple[Arc, ...]:
        return self._row_arcs

    # --- Methods. ---

    def find(self, tail: int, head: int, kind: str) -> Arc:
        try:
            return self._index[(tail, head, kind)]
        except KeyError:
            raise UnknownArcError(
                f"No {kind} arc {tail} -> {head} in {self.name}."
            ) from None

    def arcs_between(self, tail: int, head: int) -> Tuple[Arc, ...]:
        return tuple(a for a in self._out.get(tail, ()) if a.head == head)

    def out_arcs(self, v: int) -> Tuple[Arc, ...]:
        return tuple(self._out[v])

    def in_arcs(self, v: int) -> Tuple[Arc, ...]:
        return tuple(self._in[v])

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def row_arc(self, i: int) -> Arc:
        """Returns the row arc of row i."""
        for arc in self._row_arcs:
            if arc.row == i:
                return arc
        raise UnknownArcError(f"No row arc for row {i} in {self.name}.")

    def to_networkx(self) -> nx.MultiDiGraph:
        """Exports the digraph as a MultiDiGraph keyed by arc kind."""
        graph = nx.MultiDiGraph(name=self.name, flavor=self.flavor)
        graph.add_nodes_from(self.g.indices())
        for arc in self._arcs:
            graph.add_edge(arc.tail, arc.head, key=arc.kind, row=arc.row, length=arc.length)
        return graph

    def dump(self) -> str:
        """Lists the arcs as `tail -> head [label]`, one per line."""
        return "\n".join(str(arc) for arc in self._arcs)

    def __repr__(self):
        return (
            f"{self.__class__.__name__}(flavor={self.flavor}, n={self.n}, "
            f"arcs={len(self._arcs)})"
        )
