"""From circuit families to circulant minors."""

import logging
import math

from circ_minors.circuits import CircuitFamily, bad_arcs
from circ_minors.digraphs import build_F
from circ_minors.errors import (
    BadArcPresentError,
    NotCirculantMinorError,
    VerificationFailedError,
)
from circ_minors.matrices import CircularMatrix, contract, recognize_circulant, trace
from circ_minors.synthesis.base import MinorWitness

logger = logging.getLogger(__name__)

__all__ = ["circuits_to_minor"]


def circuits_to_minor(matrix: CircularMatrix, family: CircuitFamily) -> MinorWitness:
    """Builds the circulant minor induced by a family without bad arcs.

    The pooled essential bullets B of the family index the surviving columns
    and A/([n] - B) is C_s^p with the pooled s and p.

    Parameters
    ----------
    matrix : CircularMatrix

    family : CircuitFamily
        A family validated against F(A).

    Returns
    -------
    witness : MinorWitness

    Raises
    ------
    BadArcPresentError
        If some row arc of F(A) is bad for a member.

    NotCirculantMinorError
        If the pooled parameters do not satisfy 2 <= p <= s - 1.

    VerificationFailedError
        If the contraction is not the expected circulant.
    """
    d = build_F(matrix)
    bad = bad_arcs(d, family)
    if bad:
        listing = ", ".join(f"{arc.tail}->{arc.head} ({k})" for arc, k in bad)
        raise BadArcPresentError(f"The family has bad arcs: {listing}.")
    s, p = family.s, family.p
    if not 2 <= p <= s - 1:
        raise NotCirculantMinorError(f"The family induces C_{s}^{p}, which is degenerate.")

    bullets = family.bullets
    if len(bullets) != s:
        raise VerificationFailedError(f"{len(bullets)} essential bullets for {s} row arcs.")
    removed = tuple(j for j in matrix.g.indices() if j not in set(bullets))
    minor = contract(matrix, removed)
    if recognize_circulant(minor) != (s, p):
        raise VerificationFailedError(
            f"Contracting to {list(bullets)} does not give C_{s}^{p}."
        )

    family_rows = {arc.row for arc in family.row_arcs}
    for i in matrix.row_indices():
        if i not in family_rows and len(trace(matrix, i, bullets)) < p:
            raise VerificationFailedError(
                f"Row {i} keeps fewer than {p} bullets and dominates no minor row."
            )
    logger.debug(f"Family induces C_{s}^{p} at B={list(bullets)}.")
    return MinorWitness(
        bullets=bullets,
        removed=removed,
        s=s,
        p=p,
        a=math.gcd(s, p),
        minor=minor,
        normalized=bullets,
    )
