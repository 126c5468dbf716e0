"""Circulant specializations: shift digraphs and D(n, k) / G(n, k) parameters.

A family of a disjoint circuits of D(n, k), each with s row arcs, w reverse
arcs and winding p, satisfies p n = s k - w. A family of d disjoint circuits of
G(n, k), each with n2 arcs of length k, n3 arcs of length k + 1 and winding n1,
satisfies n1 n = n2 k + n3 (k + 1).
"""

import logging
import math
from typing import Iterator, List, NamedTuple, Optional, Tuple

from circ_minors.circuits import Circuit
from circ_minors.errors import (
    InvalidParameterError,
    PreconditionViolatedError,
    TheoremViolation,
)

logger = logging.getLogger(__name__)

__all__ = [
    "DParams",
    "GParams",
    "decompose_shift_digraph",
    "check_D_params",
    "check_G_params",
    "translate_D_to_G",
    "translate_G_to_D",
    "iter_D_params",
    "iter_G_params",
    "existence_D",
    "existence_G",
    "g_circuit_stats",
]


class DParams(NamedTuple):
    """a circuits of D(n, k), each with s row arcs, winding p and w reverse arcs."""

    a: int
    s: int
    p: int
    w: int

    @property
    def pooled(self) -> Tuple[int, int]:
        """Parameters (s, p) of the induced circulant minor."""
        return self.a * self.s, self.a * self.p


class GParams(NamedTuple):
    """d circuits of G(n, k) with winding n1, n2 arcs of length k, n3 of length k + 1."""

    d: int
    n1: int
    n2: int
    n3: int


def decompose_shift_digraph(s: int, p: int) -> List[Tuple[int, ...]]:
    """Splits the digraph on [s] with arcs (i, i + p) into its circuits.

    There are gcd(s, p) circuits, each with s / gcd arcs and winding p / gcd.
    Every circuit is listed from its smallest vertex.
    """
    if not 1 <= p <= s - 1:
        raise InvalidParameterError(f"Shift digraphs need 1 <= p <= s - 1, got s={s}, p={p}.")
    circuits, seen = [], set()
    for start in range(1, s + 1):
        if start in seen:
            continue
        cycle, v = [], start
        while v not in seen:
            seen.add(v)
            cycle.append(v)
            v = (v - 1 + p) % s + 1
        circuits.append(tuple(cycle))
    return circuits


def _check_circulant(n: int, k: int, min_k: int = 2):
    if n < 4 or not min_k <= k <= n - 1:
        raise PreconditionViolatedError(
            f"Need n >= 4 and {min_k} <= k <= n - 1, got n={n}, k={k}."
        )


def check_D_params(n: int, k: int, a: int, s: int, p: int) -> int:
    """Checks the D-side conditions and returns w = s k - p n.

    Raises
    ------
    PreconditionViolatedError
        Unless a, s, p, w are positive, gcd(s, p) = 1, a (s + w) <= n - 2 and
        a p <= k - 1.
    """
    _check_circulant(n, k)
    w = s * k - p * n
    if min(a, s, p) < 1 or w < 1:
        raise PreconditionViolatedError(
            f"a, s, p and w must be positive, got a={a}, s={s}, p={p}, w={w}."
        )
    if math.gcd(s, p) != 1:
        raise PreconditionViolatedError(f"gcd(s, p) must be 1, got s={s}, p={p}.")
    if a * (s + w) > n - 2:
        raise PreconditionViolatedError(f"a (s + w) = {a * (s + w)} exceeds n - 2 = {n - 2}.")
    if a * p > k - 1:
        raise PreconditionViolatedError(f"a p = {a * p} exceeds k - 1 = {k - 1}.")
    return w


def check_G_params(n: int, k: int, d: int, n1: int, n2: int, n3: int):
    """Checks the G-side conditions.

    Raises
    ------
    PreconditionViolatedError
        Unless d, n1, n2, n3 are positive, gcd(n1, n2, n3) = 1,
        n1 n = n2 k + n3 (k + 1), d (n2 + n3) <= n - 2 and d n1 <= k - 1.
    """
    _check_circulant(n, k, min_k=1)
    if min(d, n1, n2, n3) < 1:
        raise PreconditionViolatedError(
            f"d, n1, n2, n3 must be positive, got {(d, n1, n2, n3)}."
        )
    if math.gcd(math.gcd(n1, n2), n3) != 1:
        raise PreconditionViolatedError(f"gcd(n1, n2, n3) must be 1, got {(n1, n2, n3)}.")
    if n1 * n != n2 * k + n3 * (k + 1):
        raise PreconditionViolatedError(
            f"n1 n = {n1 * n} differs from n2 k + n3 (k + 1) = {n2 * k + n3 * (k + 1)}."
        )
    if d * (n2 + n3) > n - 2:
        raise PreconditionViolatedError(f"d (n2 + n3) = {d * (n2 + n3)} exceeds {n - 2}.")
    if d * n1 > k - 1:
        raise PreconditionViolatedError(f"d n1 = {d * n1} exceeds k - 1 = {k - 1}.")


def translate_D_to_G(n: int, k: int, a: int, s: int, p: int) -> GParams:
    """Parameters of the G(n, k) family matching a D(n, k) family.

    d = gcd(k - a p, n (a p + 1) - a s (k + 1), a (s k - n p)) and the three
    terms divided by d give n1, n2 and n3.
    """
    check_D_params(n, k, a, s, p)
    n1 = k - a * p
    n2 = n * (a * p + 1) - a * s * (k + 1)
    n3 = a * (s * k - n * p)
    if n1 * n != n2 * k + n3 * (k + 1):
        raise TheoremViolation(f"Translation identity fails for {(n, k, a, s, p)}.")
    d = math.gcd(math.gcd(n1, n2), n3)
    return GParams(d, n1 // d, n2 // d, n3 // d)


def translate_G_to_D(n: int, k: int, d: int, n1: int, n2: int, n3: int) -> DParams:
    """Parameters of the D(n, k) family matching a G(n, k) family.

    a = gcd(k - d n1, n - d (n2 + n3)), s = (n - d (n2 + n3)) / a and
    p = (k - d n1) / a, per member; `DParams.pooled` gives (a s, a p).
    """
    check_G_params(n, k, d, n1, n2, n3)
    winding = k - d * n1
    arcs = n - d * (n2 + n3)
    if winding * n != arcs * k - d * n3:
        raise TheoremViolation(f"Translation identity fails for {(n, k, d, n1, n2, n3)}.")
    a = math.gcd(winding, arcs)
    s, p = arcs // a, winding // a
    return DParams(a, s, p, s * k - p * n)


def iter_D_params(n: int, k: int, a: int) -> Iterator[Tuple[int, int, int]]:
    """Yields every (s, p, w) meeting the D-side conditions.

    Witnesses come in increasing w, then p, then s.
    """
    _check_circulant(n, k)
    if a < 1:
        raise PreconditionViolatedError(f"a must be positive, got {a}.")
    found = []
    for p in range(1, (k - 1) // a + 1):
        for s in range(1, (n - 2) // a + 1):
            w = s * k - p * n
            if w >= 1 and math.gcd(s, p) == 1 and a * (s + w) <= n - 2:
                found.append((w, p, s))
    for w, p, s in sorted(found):
        yield s, p, w


def iter_G_params(n: int, k: int, d: int) -> Iterator[Tuple[int, int, int]]:
    """Yields every (n1, n2, n3) meeting the G-side conditions.

    Witnesses come in increasing n3, then n1, then n2.
    """
    _check_circulant(n, k, min_k=1)
    if d < 1:
        raise PreconditionViolatedError(f"d must be positive, got {d}.")
    found = []
    for n1 in range(1, (k - 1) // d + 1):
        for n3 in range(1, (n - 2) // d):
            rest = n1 * n - n3 * (k + 1)
            if rest < k or rest % k:
                continue
            n2 = rest // k
            if d * (n2 + n3) <= n - 2 and math.gcd(math.gcd(n1, n2), n3) == 1:
                found.append((n3, n1, n2))
    for n3, n1, n2 in sorted(found):
        yield n1, n2, n3


def existence_D(n: int, k: int, a: int) -> Optional[Tuple[int, int, int]]:
    """Returns the first (s, p, w) witnessing a disjoint circuits in D(n, k)."""
    return next(iter_D_params(n, k, a), None)


def existence_G(n: int, k: int, d: int) -> Optional[Tuple[int, int, int]]:
    """Returns the first (n1, n2, n3) witnessing d disjoint circuits in G(n, k)."""
    return next(iter_G_params(n, k, d), None)


def g_circuit_stats(circuit: Circuit, k: int) -> Tuple[int, int, int]:
    """Returns (n1, n2, n3) of a circuit of G(n, k)."""
    n2 = sum(1 for arc in circuit.arcs if arc.length == k)
    n3 = sum(1 for arc in circuit.arcs if arc.length == k + 1)
    return circuit.p, n2, n3
