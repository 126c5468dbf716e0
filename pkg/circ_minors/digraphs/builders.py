"""Builders of F(A), D(n, k) and G(n, k)."""

import logging

from circ_minors import common
from circ_minors.digraphs.base import Arc, ArcDigraph
from circ_minors.errors import InvalidParameterError
from circ_minors.ground import GroundSet
from circ_minors.matrices import CircularMatrix, CirculantPattern

logger = logging.getLogger(__name__)

__all__ = ["build_F", "build_D", "build_G", "short_arcs"]


def short_arcs(g: GroundSet, forward: bool = True, reverse: bool = True):
    arcs = []
    for j in g.indices():
        if forward:
            arcs.append(Arc(g.shift(j, -1), j, common.ArcKinds.FORWARD, None, 1))
        if reverse:
            arcs.append(Arc(j, g.shift(j, -1), common.ArcKinds.REVERSE, None, -1))
    return arcs


def build_F(matrix: CircularMatrix) -> ArcDigraph:
    """Builds F(A): one row arc (lo_i - 1, hi_i) per row plus all short arcs."""
    g = matrix.g
    arcs = [
        Arc(g.shift(matrix.lo(i), -1), matrix.hi(i), common.ArcKinds.ROW, i, matrix.size(i))
        for i in matrix.row_indices()
    ]
    arcs.extend(short_arcs(g))
    logger.debug(f"Built F({matrix.name}) with {len(arcs)} arcs.")
    return ArcDigraph(
        g,
        arcs,
        flavor=common.Flavors.F,
        k=matrix.pattern.k if matrix.pattern is not None else None,
        name=f"F({matrix.name})",
    )


def build_D(n: int, k: int) -> ArcDigraph:
    """Builds D(n, k): arcs (i, i + k) and (i, i - 1).

    The arc (i, i + k) is the row arc of row i + 1 of C_n^k, so D(n, k) is
    F(C_n^k) without its forward short arcs.
    """
    CirculantPattern(n, k)
    g = GroundSet(n)
    arcs = [
        Arc(i, g.shift(i, k), common.ArcKinds.ROW, g.shift(i, 1), k) for i in g.indices()
    ]
    arcs.extend(short_arcs(g, forward=False))
    return ArcDigraph(g, arcs, flavor=common.Flavors.D, k=k, name=f"D({n},{k})")


def build_G(n: int, k: int) -> ArcDigraph:
    """Builds G(n, k): arcs (i, i + k) and (i, i + k + 1).

    Arcs of length k keep the row labels of D(n, k); arcs of length k + 1 are
    of kind `long`.
    """
    g = GroundSet(n)
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"G(n, k) needs 1 <= k <= n - 1, got n={n}, k={k}.")
    arcs = []
    for i in g.indices():
        arcs.append(Arc(i, g.shift(i, k), common.ArcKinds.ROW, g.shift(i, 1), k))
        arcs.append(Arc(i, g.shift(i, k + 1), common.ArcKinds.LONG, None, k + 1))
    return ArcDigraph(g, arcs, flavor=common.Flavors.G, k=k, name=f"G({n},{k})")
