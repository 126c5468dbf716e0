"""Construction of circular matrices from raw rows, files and generators."""

import logging
import os
from typing import Any, Dict, Optional, Sequence

import numpy as np
from omegaconf import OmegaConf

from circ_minors import common
from circ_minors.errors import (
    FullRowError,
    MalformedDocumentError,
    MissingFileError,
    NonCircularRowError,
    RowTooSmallError,
    ZeroRowOrColumnError,
)
from circ_minors.ground import CircularInterval, GroundSet
from circ_minors.matrices.base import CirculantPattern, CircularMatrix, drop_dominated

logger = logging.getLogger(__name__)

__all__ = [
    "parse_circular",
    "make_circulant",
    "load_matrix",
    "matrix_to_document",
    "random_circular_matrix",
]


def _dense_to_interval(i: int, dense: Sequence[int], g: GroundSet) -> CircularInterval:
    row = np.asarray(dense)
    if row.shape != (g.n,) or not np.isin(row, (0, 1)).all():
        raise MalformedDocumentError(f"Row {i} is not a 0/1 vector of length {g.n}.")
    support = np.flatnonzero(row) + 1
    if support.size == 0:
        raise ZeroRowOrColumnError(f"Row {i} is a zero row.")
    if support.size == 1:
        raise RowTooSmallError(f"Row {i} has a single one.")
    if support.size == g.n:
        raise FullRowError(f"Row {i} covers every column.")
    # An interval has exactly one member whose predecessor is missing.
    members = set(support.tolist())
    starts = [j for j in sorted(members) if g.shift(j, -1) not in members]
    if len(starts) != 1:
        raise NonCircularRowError(
            f"Row {i} with support {sorted(members)} is not a circular interval."
        )
    lo = starts[0]
    return CircularInterval(lo, g.shift(lo, support.size - 1))


def _pair_to_interval(i: int, pair: Sequence[int], g: GroundSet) -> CircularInterval:
    lo, hi = (int(v) for v in pair)
    iv = CircularInterval(lo, hi).validate(g)
    if lo == hi:
        raise RowTooSmallError(f"Row {i} = [{lo},{hi}] has a single one.")
    if g.shift(hi, 1) == lo:
        raise FullRowError(f"Row {i} = [{lo},{hi}] covers every column.")
    return iv


def parse_circular(
    raw: Sequence[Sequence[int]],
    g: GroundSet,
    drop_dominated_rows: bool = False,
    name: Optional[str] = None,
) -> CircularMatrix:
    """Builds a validated circular matrix from raw rows.

    Parameters
    ----------
    raw : sequence of sequences of int
        Either interval pairs [lo, hi] (1-based, inclusive) or dense 0/1 rows of
        length n. Since n >= 3 the two forms cannot be confused.

    g : GroundSet

    drop_dominated_rows : bool, optional (default: False)
        If set, duplicate and dominating rows are removed instead of rejected.

    name : str, optional

    Returns
    -------
    matrix : CircularMatrix
    """
    rows = []
    for i, item in enumerate(raw, start=1):
        item = list(item)
        if len(item) == 2:
            rows.append(_pair_to_interval(i, item, g))
        elif len(item) == g.n:
            rows.append(_dense_to_interval(i, item, g))
        else:
            raise MalformedDocumentError(
                f"Row {i} must be an interval pair or a dense row of length {g.n}."
            )
    if drop_dominated_rows:
        num_rows = len(rows)
        rows = drop_dominated(rows, g)
        if len(rows) < num_rows:
            logger.info(f"Dropped {num_rows - len(rows)} dominating row(s).")
    return CircularMatrix(g, rows, name=name)


def make_circulant(n: int, k: int) -> CircularMatrix:
    """Returns C_n^k, the n x n matrix whose row i is [i, i + k)_n."""
    pattern = CirculantPattern(n, k)
    g = GroundSet(n)
    rows = [CircularInterval(i, g.shift(i, k - 1)) for i in g.indices()]
    return CircularMatrix(g, rows, pattern=pattern, name=f"C_{n}^{k}")


def load_matrix(path: str, drop_dominated_rows: bool = False) -> CircularMatrix:
    """Reads a matrix document.

    The document has an integer field `n` and exactly one of `rows` (list of
    1-based [lo, hi] pairs) or `dense` (list of 0/1 rows). YAML and JSON are
    both accepted.
    """
    if not os.path.isfile(path):
        raise MissingFileError(f"Matrix file not found: {path}")
    try:
        doc = OmegaConf.to_container(OmegaConf.load(path), resolve=True)
    except Exception as e:
        raise MalformedDocumentError(f"Cannot parse {path}: {e}") from e
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int):
        raise MalformedDocumentError(f"{path}: field `n` must be an integer.")
    if ("rows" in doc) == ("dense" in doc):
        raise MalformedDocumentError(f"{path}: exactly one of `rows`/`dense` is needed.")
    raw = doc.get("rows", doc.get("dense"))
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise MalformedDocumentError(f"{path}: rows must be a list of lists.")
    name = doc.get("name") or os.path.splitext(os.path.basename(path))[0]
    logger.debug(f"Loaded matrix document {path}.")
    return parse_circular(
        raw, GroundSet(doc["n"]), drop_dominated_rows=drop_dominated_rows, name=name
    )


def matrix_to_document(matrix: CircularMatrix) -> Dict[str, Any]:
    doc = {"n": matrix.n, "rows": [list(iv.as_pair()) for iv in matrix.rows]}
    if matrix.pattern is not None:
        doc["circulant"] = {"n": matrix.pattern.n, "k": matrix.pattern.k}
    return doc


def _uniform_rows(g: GroundSet, rng: np.random.RandomState, num_rows: Optional[int]):
    n = g.n
    if num_rows is None:
        num_rows = rng.randint(2, n + 1)
    max_size = max(2, n - 2)
    rows = []
    for _ in range(num_rows):
        lo = int(rng.randint(1, n + 1))
        size = int(rng.randint(2, max_size + 1))
        rows.append(CircularInterval(lo, g.shift(lo, size - 1)))
    return rows


def _perturbed_rows(
    g: GroundSet, rng: np.random.RandomState, num_rows: Optional[int], max_shift: int
):
    n = g.n
    max_size = max(2, n - 2)
    k = int(rng.randint(min(3, max_size), max_size + 1))
    starts = g.indices()
    if num_rows is not None and num_rows < n:
        starts = sorted(int(j) + 1 for j in rng.choice(n, size=num_rows, replace=False))
    rows = []
    for lo in starts:
        lo = g.shift(lo, int(rng.randint(-max_shift, max_shift + 1)))
        size = k + int(rng.randint(-max_shift, max_shift + 1))
        size = min(max(size, 2), max_size)
        rows.append(CircularInterval(lo, g.shift(lo, size - 1)))
    return rows


def random_circular_matrix(
    n: int,
    seed: Optional[int] = None,
    rng: Optional[np.random.RandomState] = None,
    num_rows: Optional[int] = None,
    name: Optional[str] = None,
    mode: str = common.RandomModes.UNIFORM,
    max_shift: int = 2,
) -> CircularMatrix:
    """Samples a valid circular matrix.

    In `uniform` mode random intervals are drawn. In `perturbed` mode the rows
    of a random C_n^k have both endpoints moved by at most `max_shift`, which
    keeps many circulant minors around. Dominating rows are then dropped, and
    every column left uncovered receives a row of two ones. Pairs never
    dominate, so the repair loop ends after at most n steps.

    Parameters
    ----------
    n : int
        Number of columns.

    seed : int, optional
        Seed of the generator. Ignored when `rng` is given.

    rng : np.random.RandomState, optional

    num_rows : int, optional
        Number of intervals drawn before domination removal. Defaults to a
        random value in [2, n] in `uniform` mode and to n in `perturbed` mode.

    name : str, optional

    mode : str
        One of `common.RandomModes.ALL`.

    max_shift : int
        Largest endpoint move in `perturbed` mode.
    """
    g = GroundSet(n)
    rng = rng or np.random.RandomState(seed)
    if mode == common.RandomModes.UNIFORM:
        rows = _uniform_rows(g, rng, num_rows)
    elif mode == common.RandomModes.PERTURBED:
        rows = _perturbed_rows(g, rng, num_rows, max_shift)
    else:
        raise ValueError(f"Unknown random mode: {mode}")
    rows = drop_dominated(rows, g)
    while True:
        covered = set()
        for iv in rows:
            covered.update(iv.members(g))
        missing = [j for j in g.indices() if j not in covered]
        if not missing:
            break
        rows.append(CircularInterval(missing[0], g.shift(missing[0], 1)))
        rows = drop_dominated(rows, g)
    rows = sorted(rows, key=lambda iv: iv.as_pair())
    return CircularMatrix(g, rows, name=name or f"random_n{n}_seed{seed}")
