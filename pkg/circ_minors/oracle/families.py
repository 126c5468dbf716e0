"""Exhaustive enumeration of circuits and disjoint circuit families."""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from circ_minors import common
from circ_minors.circuits import Circuit, CircuitFamily, member_signature, validate_circuit
from circ_minors.circuits import validate_family
from circ_minors.digraphs import Arc, ArcDigraph
from circ_minors.errors import CapExceededError, CircMinorsError, TheoremViolation

logger = logging.getLogger(__name__)

__all__ = ["FamilySearch", "FamilyViolation", "enumerate_families"]


@dataclass(frozen=True)
class FamilyViolation:
    """Circuits that failed validation although every proven property says they pass."""

    circuits: Tuple[str, ...]
    code: str
    message: str

    def __str__(self):
        return f"{' '.join(self.circuits)}: {self.code}: {self.message}"


def _bit(v: int) -> int:
    return 1 << (v - 1)


class FamilySearch:
    """Enumerates the simple circuits of a digraph and their disjoint families.

    On F(A) and D(n, k) only circuits without bad arcs are kept. A family is
    a set of pairwise vertex-disjoint circuits with the same parameters.

    Parameters
    ----------
    digraph : ArcDigraph

    max_circuits : int
        Cap on the number of kept circuits.

    max_families : int
        Cap on the number of families.

    proper : bool
        Keep only families that induce a circulant: on F(A) and D(n, k) the
        pooled parameters satisfy 2 <= p <= s - 1 and s <= n - 1; on G(n, k)
        the members have positive (n1, n2, n3) with gcd 1, d (n2 + n3) <= n - 2
        and d n1 <= k - 1.

    name : str, optional
    """

    def __init__(
        self,
        digraph: ArcDigraph,
        max_circuits: int = 200000,
        max_families: int = 100000,
        proper: bool = True,
        name: Optional[str] = None,
    ):
        self.digraph = digraph
        self.max_circuits = max_circuits
        self.max_families = max_families
        self.proper = proper
        self.name = name or self.__class__.__name__

        # Internals.
        self._row_flavor = digraph.flavor in (common.Flavors.F, common.Flavors.D)
        self._jump_masks = {
            arc: sum(_bit(digraph.g.shift(arc.tail, t)) for t in range(1, arc.length + 1))
            for arc in digraph.row_arcs
        }
        self._max_row_length = max((arc.length for arc in digraph.row_arcs), default=0)
        self._circuits: Optional[List[Circuit]] = None
        self._families: Optional[List[CircuitFamily]] = None
        self.truncated = False
        self.violations: List[FamilyViolation] = []

    # --- Properties. ---

    @property
    def num_circuits(self) -> int:
        return len(self.circuits())

    # --- Methods. ---

    def _expand(self, cycle: Sequence[int]) -> Iterator[Tuple[Arc, ...]]:
        steps = [
            self.digraph.arcs_between(cycle[t], cycle[(t + 1) % len(cycle)])
            for t in range(len(cycle))
        ]
        return itertools.product(*steps)

    def _has_bad_arc(self, arcs: Sequence[Arc], total: int) -> bool:
        visited = circles = crosses = 0
        for arc in arcs:
            visited |= _bit(arc.tail)
            if arc.kind == common.ArcKinds.FORWARD:
                circles |= _bit(arc.head)
            elif arc.kind == common.ArcKinds.REVERSE:
                crosses |= _bit(arc.tail)
        essential = visited & ~(circles | crosses)
        p = total // self.digraph.n
        return any(
            bin(mask & essential).count("1") == p - 1 for mask in self._jump_masks.values()
        )

    def _record(self, circuits: Sequence, error: CircMinorsError):
        violation = FamilyViolation(
            tuple(str(c) if isinstance(c, Circuit) else str(list(c)) for c in circuits),
            error.code,
            str(error),
        )
        logger.warning(f"Theorem violation in {self.digraph.name}: {violation}")
        self.violations.append(violation)

    def _keep(self, arcs: Tuple[Arc, ...]) -> Optional[Circuit]:
        total = sum(arc.length for arc in arcs)
        if total <= 0:
            return None
        if self._row_flavor:
            if not any(arc.is_row for arc in arcs):
                return None
            if self._has_bad_arc(arcs, total):
                return None
        try:
            return validate_circuit(self.digraph, arcs)
        except TheoremViolation as e:
            self._record([arcs], e)
            return None

    def circuits(self) -> List[Circuit]:
        """All simple circuits with positive winding, in lexicographic vertex order.

        Raises
        ------
        CapExceededError
            If more than `max_circuits` circuits are kept. The first `max_circuits`
            are cached and returned by later calls, with `truncated` set.
        """
        if self._circuits is not None:
            return self._circuits
        projection = nx.DiGraph()
        projection.add_nodes_from(self.digraph.g.indices())
        projection.add_edges_from((arc.tail, arc.head) for arc in self.digraph.arcs)

        found = []
        for cycle in nx.simple_cycles(projection):
            for arcs in self._expand(cycle):
                circuit = self._keep(arcs)
                if circuit is None:
                    continue
                found.append(circuit)
                if len(found) > self.max_circuits:
                    self._circuits = sorted(found[: self.max_circuits], key=_circuit_key)
                    self.truncated = True
                    raise CapExceededError(
                        f"More than {self.max_circuits} circuits in {self.digraph.name}.",
                        partial=self._circuits,
                    )
        self._circuits = sorted(found, key=_circuit_key)
        logger.debug(f"Kept {len(self._circuits)} circuits of {self.digraph.name}.")
        return self._circuits

    def _group_allows(self, signature: Tuple[int, ...]) -> bool:
        if not self.proper:
            return True
        if self._row_flavor:
            s, p = signature
            return p < s
        n1, n2, n3 = signature
        return min(n1, n2, n3) >= 1 and math.gcd(math.gcd(n1, n2), n3) == 1

    def _size_allows(self, signature: Tuple[int, ...], a: int) -> bool:
        if self._row_flavor:
            s, p = signature
            if a * p > self._max_row_length:
                return False
            return not self.proper or a * s <= self.digraph.n - 1
        if not self.proper:
            return True
        n1, n2, n3 = signature
        return a * (n2 + n3) <= self.digraph.n - 2 and a * n1 <= self.digraph.k - 1

    def _emits(self, signature: Tuple[int, ...], a: int) -> bool:
        return not (self.proper and self._row_flavor) or a * signature[1] >= 2

    def _combinations(self, members: List[Circuit], signature) -> Iterator[Tuple[Circuit, ...]]:
        masks = [sum(_bit(v) for v in c.vertices) for c in members]

        def extend(start: int, used: int, chosen: List[int]):
            if not self._size_allows(signature, len(chosen) + 1):
                return
            for t in range(start, len(members)):
                if masks[t] & used:
                    continue
                chosen.append(t)
                if self._emits(signature, len(chosen)):
                    yield tuple(members[u] for u in chosen)
                yield from extend(t + 1, used | masks[t], chosen)
                chosen.pop()

        return extend(0, 0, [])

    def families(self) -> List[CircuitFamily]:
        """All disjoint families with uniform parameters.

        Raises
        ------
        CapExceededError
            If there are more than `max_families` families; `partial` holds the
            families found so far in sorted order.
        """
        if self._families is not None:
            return self._families
        try:
            circuits = self.circuits()
        except CapExceededError as e:
            raise CapExceededError(str(e), partial=[]) from e
        if self.truncated:
            raise CapExceededError(
                f"Circuits of {self.digraph.name} were truncated at {self.max_circuits}.",
                partial=[],
            )
        groups: Dict[Tuple[int, ...], List[Circuit]] = {}
        for circuit in circuits:
            signature = member_signature(circuit, self.digraph.flavor)
            if self._group_allows(signature):
                groups.setdefault(signature, []).append(circuit)

        found = []
        for signature in sorted(groups):
            for members in self._combinations(groups[signature], signature):
                try:
                    family = validate_family(self.digraph, members)
                except CircMinorsError as e:
                    self._record(members, e)
                    continue
                found.append(family)
                if len(found) > self.max_families:
                    raise CapExceededError(
                        f"More than {self.max_families} families in {self.digraph.name}.",
                        partial=sorted(found[: self.max_families], key=_family_key),
                    )
        self._families = sorted(found, key=_family_key)
        logger.debug(f"Found {len(self._families)} families in {self.digraph.name}.")
        return self._families


def _circuit_key(circuit: Circuit):
    return tuple(sorted(circuit.vertices)), circuit.vertices, tuple(a.kind for a in circuit.arcs)


def _family_key(family: CircuitFamily):
    return tuple(sorted(family.vertex_set)), tuple(_circuit_key(c) for c in family.circuits)


def enumerate_families(
    digraph: ArcDigraph,
    max_circuits: int = 200000,
    max_families: int = 100000,
    proper: bool = True,
) -> List[CircuitFamily]:
    """Lists the disjoint circuit families of `digraph`; see `FamilySearch`."""
    search = FamilySearch(digraph, max_circuits, max_families, proper)
    return search.families()
