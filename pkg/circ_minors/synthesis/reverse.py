"""From circulant minors to circuit families.

Given B with A/([n] - B) = C_s^p, every bullet b_j is moved to u_{r(j)} or
l_{r(j+p)} - 1, where r(j) is the row whose trace is the window ending at b_j
with the right endpoint closest to b_j. The row arcs of the rows r(j), glued
by short paths, then split into gcd(s, p) circuits with bullet set B'.
"""

import logging
import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from circ_minors import common
from circ_minors.circuits import (
    Circuit,
    CircuitFamily,
    bad_arcs,
    validate_circuit,
    validate_family,
)
from circ_minors.digraphs import Arc, ArcDigraph, build_F
from circ_minors.errors import (
    DecompositionMismatchError,
    EmptyResultError,
    EmptyWindowError,
    InvalidParameterError,
    NotAFixpointError,
    NotCirculantMinorError,
    VerificationFailedError,
)
from circ_minors.ground import circ_dist
from circ_minors.matrices import CircularMatrix, contract, recognize_circulant, trace
from circ_minors.synthesis.base import SynthesisTrace, WindowRecord

logger = logging.getLogger(__name__)

__all__ = [
    "windows_and_R",
    "select_r",
    "normalize_bullets",
    "minor_to_circuits",
    "trace_correspondence_holds",
]

# Types.
Windows = Dict[int, Tuple[int, ...]]


def _sorted_bullets(matrix: CircularMatrix, bullets: Iterable[int]) -> Tuple[int, ...]:
    bullets = tuple(sorted({matrix.g.check(b) for b in bullets}))
    if len(bullets) < 3:
        raise InvalidParameterError(f"Need at least three bullets, got {list(bullets)}.")
    return bullets


def _check_minor(matrix: CircularMatrix, bullets: Tuple[int, ...], p: int):
    removed = [j for j in matrix.g.indices() if j not in set(bullets)]
    try:
        found = recognize_circulant(contract(matrix, removed))
    except EmptyResultError:
        found = None
    if found != (len(bullets), p):
        raise NotCirculantMinorError(
            f"Contracting to B={list(bullets)} does not give C_{len(bullets)}^{p}."
        )


def windows_and_R(
    matrix: CircularMatrix, bullets: Sequence[int], p: int
) -> Windows:
    """Maps every bullet index j to R(j).

    R(j) holds the rows whose trace on B is {b_{j-p+1}, ..., b_j}.

    Parameters
    ----------
    matrix : CircularMatrix

    bullets : sequence of int
        B in ascending order.

    p : int

    Returns
    -------
    windows : dict
        1-based j to the ascending tuple of rows in R(j).

    Raises
    ------
    EmptyWindowError
        If some R(j) is empty.
    """
    bullets = tuple(bullets)
    s = len(bullets)
    traces = {i: frozenset(trace(matrix, i, bullets)) for i in matrix.row_indices()}
    windows = {}
    for j in range(1, s + 1):
        window = frozenset(bullets[(j - 1 - t) % s] for t in range(p))
        rows = tuple(i for i, t in traces.items() if t == window)
        if not rows:
            raise EmptyWindowError(
                f"No row traces the window ending at b_{j}={bullets[j - 1]}."
            )
        windows[j] = rows
    return windows


def select_r(
    matrix: CircularMatrix,
    bullets: Sequence[int],
    p: int,
    j: int,
    windows: Optional[Windows] = None,
) -> Tuple[int, int]:
    """Returns r(j) and h_j.

    r(j) is the row of R(j) whose right endpoint is closest to b_j; h_j is
    that distance. Ties cannot occur without dominating rows and are broken by
    the row index.
    """
    windows = windows or windows_and_R(matrix, bullets, p)
    b = bullets[j - 1]
    h, row = min((circ_dist(b, matrix.hi(i), matrix.g), i) for i in windows[j])
    return row, h


def _normalize_once(
    matrix: CircularMatrix, bullets: Tuple[int, ...], p: int
) -> Tuple[Tuple[int, ...], Tuple[WindowRecord, ...]]:
    g, s = matrix.g, len(bullets)
    windows = windows_and_R(matrix, bullets, p)
    chosen = {j: select_r(matrix, bullets, p, j, windows) for j in windows}
    records = []
    for j in range(1, s + 1):
        b = bullets[j - 1]
        row, h = chosen[j]
        u = matrix.hi(row)
        lo_next = matrix.lo(chosen[(j + p - 1) % s + 1][0])
        # l_{r(j+p)} in [b_j + 1, u_{r(j)}], empty when u_{r(j)} = b_j.
        offset = circ_dist(b, lo_next, g)
        if 1 <= offset <= circ_dist(b, u, g):
            b_prime = g.shift(lo_next, -1)
        else:
            b_prime = u
        records.append(WindowRecord(j, b, windows[j], row, h, b_prime))
    return tuple(sorted(r.b_prime for r in records)), tuple(records)


def _normalize(
    matrix: CircularMatrix, bullets: Tuple[int, ...], p: int
) -> Tuple[Tuple[int, ...], Tuple[WindowRecord, ...], int]:
    current, first_records = _normalize_once(matrix, bullets, p)
    passes = 1
    while True:
        if len(current) != len(bullets):
            raise VerificationFailedError(f"Normalization merged bullets: {list(current)}.")
        _check_minor(matrix, current, p)
        following, _ = _normalize_once(matrix, current, p)
        if following == current:
            break
        if passes >= matrix.n:
            raise NotAFixpointError(
                f"No normalization fixpoint for B={list(bullets)} after {passes} passes."
            )
        current = following
        passes += 1
    if passes > 1:
        logger.warning(f"Normalization of B={list(bullets)} needed {passes} passes.")
    return current, first_records, passes


def normalize_bullets(
    matrix: CircularMatrix, bullets: Iterable[int], p: int
) -> Tuple[int, ...]:
    """Returns the normalized bullet set B'.

    b'_j = l_{r(j+p)} - 1 if l_{r(j+p)} lies in [b_j + 1, u_{r(j)}]_n and
    b'_j = u_{r(j)} otherwise. The contraction to B' is again C_s^p.

    Raises
    ------
    NotCirculantMinorError
        If B does not induce C_s^p.

    NotAFixpointError
        If repeated passes do not settle within n passes.
    """
    bullets = _sorted_bullets(matrix, bullets)
    _check_minor(matrix, bullets, p)
    normalized, _, _ = _normalize(matrix, bullets, p)
    return normalized


def trace_correspondence_holds(
    matrix: CircularMatrix, bullets: Sequence[int], normalized: Sequence[int]
) -> bool:
    """Whether every row of the minor meets B' exactly in the images of its bullets.

    b_j is paired with the member of B' in [b_j, b_{j+1})_n. Rows whose trace on
    B strictly contains another trace are skipped: they may lose a bullet, as
    [2, 8] does when {2, 5, 8, 10, 12} moves to {2, 5, 9, 10, 12}.
    """
    g = matrix.g
    bullets, normalized = tuple(sorted(bullets)), tuple(sorted(normalized))
    s = len(bullets)
    if len(normalized) != s:
        return False
    image = {}
    for j, b in enumerate(bullets):
        gap = circ_dist(b, bullets[(j + 1) % s], g) or g.n
        candidates = [x for x in normalized if circ_dist(b, x, g) < gap]
        if len(candidates) != 1:
            return False
        image[b] = candidates[0]
    traces = {i: frozenset(trace(matrix, i, bullets)) for i in matrix.row_indices()}
    for i, t in traces.items():
        if any(other < t for other in traces.values()):
            continue
        expected = {image[b] for b in t}
        if set(trace(matrix, i, normalized)) != expected:
            return False
    return True


def _forward_path(d: ArcDigraph, start: int, end: int) -> Tuple[Arc, ...]:
    steps = circ_dist(start, end, d.g)
    return tuple(
        d.find(d.g.shift(start, t), d.g.shift(start, t + 1), common.ArcKinds.FORWARD)
        for t in range(steps)
    )


def _reverse_path(d: ArcDigraph, start: int, end: int) -> Tuple[Arc, ...]:
    steps = circ_dist(end, start, d.g)
    return tuple(
        d.find(d.g.shift(start, -t), d.g.shift(start, -t - 1), common.ArcKinds.REVERSE)
        for t in range(steps)
    )


def _decompose(d: ArcDigraph, arcs: Sequence[Arc]) -> List[Circuit]:
    successor: Dict[int, Arc] = {}
    heads = set()
    for arc in arcs:
        if arc.tail in successor or arc.head in heads:
            raise DecompositionMismatchError(
                f"Vertex {arc.tail if arc.tail in successor else arc.head} "
                "has degree above one in the arc union."
            )
        successor[arc.tail] = arc
        heads.add(arc.head)
    if heads != set(successor):
        raise DecompositionMismatchError("The arc union is not a disjoint union of circuits.")
    circuits, seen = [], set()
    for start in sorted(successor):
        if start in seen:
            continue
        cycle, v = [], start
        while v not in seen:
            seen.add(v)
            cycle.append(successor[v])
            v = successor[v].head
        circuits.append(validate_circuit(d, cycle))
    return circuits


def minor_to_circuits(
    matrix: CircularMatrix, bullets: Iterable[int], p: int
) -> Tuple[CircuitFamily, SynthesisTrace]:
    """Builds a family without bad arcs whose bullet set is the normalized B.

    Parameters
    ----------
    matrix : CircularMatrix

    bullets : iterable of int
        B with A/([n] - B) = C_s^p.

    p : int

    Returns
    -------
    family : CircuitFamily
        gcd(s, p) circuits, each with s/a row arcs and winding p/a.

    trace : SynthesisTrace

    Raises
    ------
    NotCirculantMinorError
        If B does not induce C_s^p.

    DecompositionMismatchError
        If the arc union does not split into gcd(s, p) circuits with bullet set B'.
    """
    bullets = _sorted_bullets(matrix, bullets)
    _check_minor(matrix, bullets, p)
    s = len(bullets)
    normalized, records, passes = _normalize(matrix, bullets, p)

    d = build_F(matrix)
    windows = windows_and_R(matrix, normalized, p)
    rows = {j: select_r(matrix, normalized, p, j, windows)[0] for j in windows}
    T = tuple(d.row_arc(rows[j]) for j in range(1, s + 1))
    P, Q, forward, reverse = [], [], {}, {}
    for j in range(1, s + 1):
        b = normalized[j - 1]
        end = matrix.g.shift(matrix.lo(rows[(j + p - 1) % s + 1]), -1)
        u = matrix.hi(rows[j])
        if b != end:
            P.append(j)
            forward[j] = _forward_path(d, b, end)
        if b != u:
            Q.append(j)
            reverse[j] = _reverse_path(d, u, b)
    arcs = list(T)
    for path in list(forward.values()) + list(reverse.values()):
        arcs.extend(path)

    family = validate_family(d, _decompose(d, arcs))
    if family.a != math.gcd(s, p) or family.bullets != normalized:
        raise DecompositionMismatchError(
            f"Got {family.a} circuit(s) with bullets {list(family.bullets)}, expected "
            f"{math.gcd(s, p)} with {list(normalized)}."
        )
    if bad_arcs(d, family):
        raise VerificationFailedError("The constructed family has bad arcs.")
    logger.debug(f"Built {family.a} circuit(s) for B={list(bullets)}, B'={list(normalized)}.")
    return family, SynthesisTrace(
        bullets=bullets,
        p=p,
        windows=records,
        normalized=normalized,
        passes=passes,
        T=T,
        P=tuple(P),
        Q=tuple(Q),
        forward_paths=forward,
        reverse_paths=reverse,
    )
