"""Modular arithmetic and circular intervals on the ground set [n] = {1, ..., n}.

All indices are 1-based. Internally the residue 0 stands for n.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from circ_minors import common
from circ_minors.errors import IndexOutOfRangeError, InvalidParameterError

logger = logging.getLogger(__name__)

__all__ = [
    "GroundSet",
    "CircularInterval",
    "circ_dist",
    "interval_members",
    "interval_size",
    "in_interval",
]


@dataclass(frozen=True)
class GroundSet:
    """The additive group on {1, ..., n}.

    Parameters
    ----------
    n : int
        Size of the ground set. Must be at least 3.
    """

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise InvalidParameterError(f"Ground set size must be >= 3, got {self.n}.")

    # --- Methods. ---

    def check(self, a: int) -> int:
        """Returns `a` if it is an index of the ground set, raises otherwise."""
        if not isinstance(a, int) or not 1 <= a <= self.n:
            raise IndexOutOfRangeError(f"Index {a} is not in [1, {self.n}].")
        return a

    def shift(self, a: int, t: int) -> int:
        """Returns a + t in [n]."""
        return (a - 1 + t) % self.n + 1

    def indices(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1))


@dataclass(frozen=True)
class CircularInterval:
    """The circular interval [lo, hi]_n.

    The closed interval is never empty: [a, a]_n = {a} and [a, a-1]_n = [n].
    """

    lo: int
    hi: int

    def validate(self, g: GroundSet) -> "CircularInterval":
        g.check(self.lo)
        g.check(self.hi)
        return self

    def size(self, g: GroundSet) -> int:
        return interval_size(self, g)

    def members(self, g: GroundSet, closure: str = common.Closures.CLOSED):
        return interval_members(self, g, closure)

    def contains(self, j: int, g: GroundSet, closure: str = common.Closures.CLOSED):
        return in_interval(j, self, g, closure)

    def as_pair(self) -> Tuple[int, int]:
        return self.lo, self.hi


def circ_dist(a: int, b: int, g: GroundSet) -> int:
    """Returns the smallest t >= 0 such that a + t = b in [n]."""
    g.check(a)
    g.check(b)
    return (b - a) % g.n


def _closure_offsets(closure: str, span: int) -> Tuple[int, int]:
    """Returns the first and last offsets from `lo` kept by the closure."""
    if closure == common.Closures.CLOSED:
        return 0, span
    elif closure == common.Closures.LEFT_OPEN:
        return 1, span
    elif closure == common.Closures.RIGHT_OPEN:
        return 0, span - 1
    elif closure == common.Closures.OPEN:
        return 1, span - 1
    else:
        raise ValueError(f"Unknown closure: {closure}")


def interval_members(
    iv: CircularInterval, g: GroundSet, closure: str = common.Closures.CLOSED
) -> Tuple[int, ...]:
    """Lists the members of a circular interval in traversal order from `lo`.

    Parameters
    ----------
    iv : CircularInterval

    g : GroundSet

    closure : str, optional (default: "closed")
        One of `common.Closures.ALL`. The open variants drop the corresponding
        endpoints of the closed interval.

    Returns
    -------
    members : tuple of int
    """
    iv.validate(g)
    first, last = _closure_offsets(closure, circ_dist(iv.lo, iv.hi, g))
    return tuple(g.shift(iv.lo, t) for t in range(first, last + 1))


def interval_size(
    iv: CircularInterval, g: GroundSet, closure: str = common.Closures.CLOSED
) -> int:
    iv.validate(g)
    first, last = _closure_offsets(closure, circ_dist(iv.lo, iv.hi, g))
    return max(last - first + 1, 0)


def in_interval(
    j: int, iv: CircularInterval, g: GroundSet, closure: str = common.Closures.CLOSED
) -> bool:
    """Membership test that does not materialize the interval."""
    first, last = _closure_offsets(closure, circ_dist(iv.lo, iv.hi, g))
    return first <= circ_dist(iv.lo, j, g) <= last
