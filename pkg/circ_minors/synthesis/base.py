"""Result types of minor synthesis."""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from circ_minors.digraphs import Arc
from circ_minors.matrices import Minor

__all__ = ["MinorWitness", "WindowRecord", "SynthesisTrace"]


@dataclass(frozen=True)
class MinorWitness:
    """A bullet set B whose contraction A/([n] - B) is C_s^p.

    `normalized` is the normalized bullet set when it is known.
    """

    bullets: Tuple[int, ...]
    removed: Tuple[int, ...]
    s: int
    p: int
    a: int
    minor: Optional[Minor] = None
    normalized: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class WindowRecord:
    """Normalization data of the j-th bullet.

    `rows` is R(j), the rows whose trace is the window ending at b_j; `row` is
    the chosen r(j) with u_{r(j)} = b_j + h.
    """

    j: int
    b: int
    rows: Tuple[int, ...]
    row: int
    h: int
    b_prime: int


@dataclass(frozen=True)
class SynthesisTrace:
    """Ledger of the reverse construction.

    `windows` are computed on the input bullets, `T`, `P`, `Q` and the paths on
    the normalized ones. `P` and `Q` hold 1-based indices into `normalized`.
    """

    bullets: Tuple[int, ...]
    p: int
    windows: Tuple[WindowRecord, ...]
    normalized: Tuple[int, ...]
    passes: int
    T: Tuple[Arc, ...]
    P: Tuple[int, ...]
    Q: Tuple[int, ...]
    forward_paths: Dict[int, Tuple[Arc, ...]] = field(default_factory=dict)
    reverse_paths: Dict[int, Tuple[Arc, ...]] = field(default_factory=dict)

    @property
    def P_vertices(self) -> Tuple[int, ...]:
        return tuple(self.normalized[j - 1] for j in self.P)

    @property
    def Q_vertices(self) -> Tuple[int, ...]:
        return tuple(self.normalized[j - 1] for j in self.Q)
