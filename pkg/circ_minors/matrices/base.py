"""Circular and circulant 0/1 matrices."""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from circ_minors.errors import (
    DominatingRowError,
    FullRowError,
    InvalidParameterError,
    RowTooSmallError,
    ZeroRowOrColumnError,
)
from circ_minors.ground import CircularInterval, GroundSet, interval_members

logger = logging.getLogger(__name__)

__all__ = ["CirculantPattern", "CircularMatrix", "drop_dominated"]


@dataclass(frozen=True)
class CirculantPattern:
    """Marks a matrix as C_n^k: row i is [i, i + k)_n."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 4 or not 2 <= self.k <= self.n - 1:
            raise InvalidParameterError(
                f"Circulant parameters must satisfy n >= 4 and 2 <= k <= n - 1, "
                f"got n={self.n}, k={self.k}."
            )


class CircularMatrix:
    """A 0/1 matrix whose row i is the incidence vector of [lo_i, hi_i]_n.

    Rows are indexed from 1. The constructor checks that every row has at least
    two (and fewer than n) ones, that no row dominates another and that every
    column is covered.

    Parameters
    ----------
    g : GroundSet
        The column index set.

    rows : sequence of CircularInterval
        Row supports in row order.

    pattern : CirculantPattern, optional
        Set when the matrix is a circulant.

    name : str, optional
        The name of the matrix, used in reports.
    """

    def __init__(
        self,
        g: GroundSet,
        rows: Sequence[CircularInterval],
        pattern: Optional[CirculantPattern] = None,
        name: Optional[str] = None,
    ):
        self.g = g
        self.pattern = pattern
        self.name = name or self.__class__.__name__

        # Internals.
        self._rows = tuple(iv.validate(g) for iv in rows)
        self._supports = tuple(frozenset(interval_members(iv, g)) for iv in self._rows)
        self._incidence = None

        self._validate()

    def _validate(self):
        if not self._rows:
            raise ZeroRowOrColumnError("A circular matrix needs at least one row.")
        for i, (iv, support) in enumerate(zip(self._rows, self._supports), start=1):
            if len(support) < 2:
                raise RowTooSmallError(f"Row {i} = {iv.as_pair()} has a single one.")
            if len(support) == self.n:
                raise FullRowError(f"Row {i} = {iv.as_pair()} covers every column.")
        for i in range(1, self.m + 1):
            for j in range(1, self.m + 1):
                if i != j and self.dominates(i, j):
                    raise DominatingRowError(
                        f"Row {i} = {self.row(i).as_pair()} dominates "
                        f"row {j} = {self.row(j).as_pair()}."
                    )
        covered = frozenset().union(*self._supports)
        uncovered = sorted(set(self.g.indices()) - covered)
        if uncovered:
            raise ZeroRowOrColumnError(f"Columns {uncovered} are not covered by any row.")

    # --- Properties. ---

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def m(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> Tuple[CircularInterval, ...]:
        return self._rows

    @property
    def incidence(self) -> np.ndarray:
        """The m x n 0/1 matrix."""
        if self._incidence is None:
            incidence = np.zeros((self.m, self.n), dtype=np.int8)
            for i, support in enumerate(self._supports):
                incidence[i, [j - 1 for j in support]] = 1
            incidence.setflags(write=False)
            self._incidence = incidence
        return self._incidence

    # --- Methods. ---

    def row(self, i: int) -> CircularInterval:
        return self._rows[self._row_position(i)]

    def lo(self, i: int) -> int:
        return self.row(i).lo

    def hi(self, i: int) -> int:
        return self.row(i).hi

    def support(self, i: int) -> FrozenSet[int]:
        return self._supports[self._row_position(i)]

    def size(self, i: int) -> int:
        return len(self.support(i))

    def dominates(self, i: int, j: int) -> bool:
        """Whether the support of row i contains the support of row j."""
        return self.support(j) <= self.support(i)

    def row_indices(self) -> Tuple[int, ...]:
        return tuple(range(1, self.m + 1))

    def _row_position(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise InvalidParameterError(f"Row {i} is not in [1, {self.m}].")
        return i - 1

    def __repr__(self):
        rows = ", ".join(f"[{iv.lo},{iv.hi}]" for iv in self._rows)
        return f"{self.__class__.__name__}(n={self.n}, rows=({rows}))"


def drop_dominated(
    rows: Iterable[CircularInterval], g: GroundSet
) -> List[CircularInterval]:
    """Removes duplicate rows and rows that strictly contain another row.

    The first occurrence of a duplicated row is the one kept.
    """
    unique: Dict[FrozenSet[int], CircularInterval] = {}
    for iv in rows:
        unique.setdefault(frozenset(interval_members(iv, g)), iv)
    supports = list(unique)
    kept = []
    for support in supports:
        if any(other < support for other in supports):
            logger.debug(f"Dropping dominating row {unique[support].as_pair()}.")
            continue
        kept.append(unique[support])
    return kept
