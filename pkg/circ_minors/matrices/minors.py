"""Traces, contraction and deletion minors, and circulant recognition."""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

import numpy as np

from circ_minors import common
from circ_minors.errors import EmptyResultError, InvalidParameterError
from circ_minors.matrices.base import CircularMatrix

logger = logging.getLogger(__name__)

__all__ = [
    "Minor",
    "trace",
    "contract",
    "delete",
    "recognize_circulant",
    "is_interval_minor",
]

# Types.
Trace = Tuple[int, ...]


@dataclass(frozen=True)
class Minor:
    """A minor of a circular matrix.

    Parameters
    ----------
    columns : tuple of int
        Surviving columns in cyclic (ascending) order.

    traces : tuple of tuples of int
        Row traces on the surviving columns, in traversal order from the row's
        left endpoint.

    provenance : str
        One of `common.Provenance`.

    source_rows : tuple of int
        Original row index of every trace.
    """

    columns: Tuple[int, ...]
    traces: Tuple[Trace, ...]
    provenance: str
    source_rows: Tuple[int, ...]

    @property
    def num_rows(self) -> int:
        return len(self.traces)

    @property
    def num_columns(self) -> int:
        return len(self.columns)

    @property
    def incidence(self) -> np.ndarray:
        """The 0/1 matrix of the minor with columns in `columns` order."""
        position = {c: j for j, c in enumerate(self.columns)}
        incidence = np.zeros((self.num_rows, self.num_columns), dtype=np.int8)
        for i, t in enumerate(self.traces):
            incidence[i, [position[c] for c in t]] = 1
        return incidence


def _kept_columns(matrix: CircularMatrix, removed: Iterable[int]) -> Tuple[int, ...]:
    removed = {matrix.g.check(j) for j in removed}
    kept = tuple(j for j in matrix.g.indices() if j not in removed)
    if not kept:
        raise InvalidParameterError("At least one column must survive.")
    return kept


def trace(matrix: CircularMatrix, i: int, columns: Iterable[int]) -> Trace:
    """Returns [lo_i, hi_i]_n intersected with `columns`.

    The result is listed in traversal order from lo_i and is a cyclically
    consecutive run of the given columns.
    """
    keep = set(columns)
    return tuple(j for j in matrix.row(i).members(matrix.g) if j in keep)


def contract(matrix: CircularMatrix, removed: Iterable[int]) -> Minor:
    """Contracts the columns in `removed`.

    Traces are taken on the surviving columns. Among equal traces the smallest
    original row index is kept; traces strictly containing another trace are
    dropped. An empty trace leaves a single zero row.

    Raises
    ------
    EmptyResultError
        If every trace equals the full set of surviving columns.
    """
    columns = _kept_columns(matrix, removed)
    representative: Dict[FrozenSet[int], Tuple[int, Trace]] = {}
    for i in matrix.row_indices():
        t = trace(matrix, i, columns)
        representative.setdefault(frozenset(t), (i, t))
    supports = list(representative)
    if supports == [frozenset(columns)]:
        raise EmptyResultError(
            f"Every row contains all surviving columns {list(columns)}."
        )
    kept = sorted(
        (representative[s] for s in supports if not any(o < s for o in supports)),
        key=lambda item: item[0],
    )
    return Minor(
        columns=columns,
        traces=tuple(t for _, t in kept),
        provenance=common.Provenance.CONTRACTION,
        source_rows=tuple(i for i, _ in kept),
    )


def delete(matrix: CircularMatrix, removed: Iterable[int]) -> Minor:
    """Deletes the columns in `removed` together with every row meeting them."""
    removed = set(removed)
    columns = _kept_columns(matrix, removed)
    kept = [i for i in matrix.row_indices() if not matrix.support(i) & removed]
    return Minor(
        columns=columns,
        traces=tuple(trace(matrix, i, columns) for i in kept),
        provenance=common.Provenance.DELETION,
        source_rows=tuple(kept),
    )


def _windows(columns: Tuple[int, ...], p: int) -> FrozenSet[FrozenSet[int]]:
    s = len(columns)
    return frozenset(
        frozenset(columns[(j + t) % s] for t in range(p)) for j in range(s)
    )


def recognize_circulant(minor: Minor) -> Optional[Tuple[int, int]]:
    """Returns (s, p) if the minor is isomorphic to C_s^p, else None.

    Uses the fact that traces of a contraction are runs of the surviving
    columns in their cyclic order: the minor is C_s^p exactly when it has s
    rows, all of size p with 2 <= p <= s - 1, and every cyclic p-window of the
    columns is a row.
    """
    s = minor.num_columns
    if minor.num_rows != s:
        return None
    sizes = {len(t) for t in minor.traces}
    if len(sizes) != 1:
        return None
    (p,) = sizes
    if not 2 <= p <= s - 1:
        return None
    if frozenset(frozenset(t) for t in minor.traces) != _windows(minor.columns, p):
        return None
    return s, p


def is_interval_minor(minor: Minor) -> bool:
    """Whether some cut of the column cycle turns every trace into a linear run."""
    s = minor.num_columns
    position = {c: j for j, c in enumerate(minor.columns)}
    for cut in range(s):
        ok = True
        for t in minor.traces:
            if not t:
                continue
            offsets = sorted((position[c] - cut) % s for c in t)
            if offsets[-1] - offsets[0] != len(offsets) - 1:
                ok = False
                break
        if ok:
            return True
    return False
