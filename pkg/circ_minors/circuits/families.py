"""Families of pairwise vertex-disjoint circuits."""

import itertools
import logging
import math
from typing import Iterable, Tuple, Union

import networkx as nx

from circ_minors import common
from circ_minors.circuits.base import ArcSpec, Circuit, CircuitFamily, validate_circuit
from circ_minors.circuits.classify import classify
from circ_minors.digraphs import ArcDigraph, jumped_vertices
from circ_minors.errors import (
    InvalidParameterError,
    JumpCountViolationError,
    JumpSetCollisionError,
    NonUniformParametersError,
    OverlapError,
    TheoremViolation,
)

logger = logging.getLogger(__name__)

__all__ = ["validate_family", "shrink_family", "member_signature"]


def member_signature(circuit: Circuit, flavor: str) -> Tuple[int, ...]:
    """Parameters that must agree across the members of a family.

    (s_i, p_i) on F(A) and D(n, k); (n1, n2, n3) on G(n, k).
    """
    if flavor == common.Flavors.G:
        return (
            circuit.p,
            circuit.count(common.ArcKinds.ROW),
            circuit.count(common.ArcKinds.LONG),
        )
    return circuit.s, circuit.p


def validate_family(
    d: ArcDigraph, circuits: Iterable[Union[Circuit, Iterable[ArcSpec]]]
) -> CircuitFamily:
    """Checks that circuits form a family and pools their parameters.

    Parameters
    ----------
    d : ArcDigraph

    circuits : iterable
        Validated circuits or arc sequences accepted by `validate_circuit`.

    Returns
    -------
    family : CircuitFamily
        Members are ordered by their smallest vertex.

    Raises
    ------
    OverlapError
        If two circuits share a vertex.

    NonUniformParametersError
        If members differ in their parameters.

    JumpCountViolationError, JumpSetCollisionError
        If a row arc of the family does not jump exactly p pooled essential
        bullets, or two row arcs jump the same set.
    """
    members = [c if isinstance(c, Circuit) else validate_circuit(d, c) for c in circuits]
    if not members:
        raise InvalidParameterError("A family needs at least one circuit.")
    for c1, c2 in itertools.combinations(members, 2):
        shared = c1.vertex_set & c2.vertex_set
        if shared:
            raise OverlapError(f"Circuits {c1} and {c2} share vertices {sorted(shared)}.")
    members.sort(key=lambda c: c.vertices[0])

    signatures = {member_signature(c, d.flavor) for c in members}
    if len(signatures) != 1:
        raise NonUniformParametersError(f"Members have parameters {sorted(signatures)}.")
    s = sum(c.s for c in members)
    p = sum(c.p for c in members)

    if d.flavor == common.Flavors.G:
        return CircuitFamily(tuple(members), d.g, s, p)

    if math.gcd(s, p) != len(members):
        raise TheoremViolation(f"gcd({s}, {p}) differs from the member count {len(members)}.")
    classification = classify(members, d.g)
    essential = frozenset(classification.essential)
    seen = {}
    for arc in (arc for c in members for arc in c.row_arcs):
        jumped = jumped_vertices(arc, essential, d.g)
        if len(jumped) != p:
            raise JumpCountViolationError(
                f"Row arc {arc} jumps {len(jumped)} pooled essential bullets, expected {p}."
            )
        if jumped in seen:
            raise JumpSetCollisionError(
                f"Row arcs {seen[jumped]} and {arc} jump the same bullets {sorted(jumped)}."
            )
        seen[jumped] = arc
    family = CircuitFamily(tuple(members), d.g, s, p, classification)

    if nx.number_weakly_connected_components(shrink_family(family)) != family.a:
        raise TheoremViolation(f"The shrunk family does not split into {family.a} circuits.")
    logger.debug(f"Validated family of {family.a} circuit(s) with s={s}, p={p}.")
    return family


def shrink_family(family: CircuitFamily) -> nx.DiGraph:
    """Contracts every block to its essential bullet.

    The result has the pooled essential bullets b_1 < ... < b_s as vertices and
    the arcs (b_i, b_{i+p}).
    """
    if family.classification is None:
        raise InvalidParameterError("Only F(A) and D(n, k) families can be shrunk.")
    bullets = family.classification.essential
    s, p = len(bullets), family.p
    graph = nx.DiGraph()
    graph.add_nodes_from(bullets)
    graph.add_edges_from((bullets[i], bullets[(i + p) % s]) for i in range(s))
    return graph
