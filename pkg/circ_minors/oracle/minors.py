"""Brute-force circulant minors by subset enumeration."""

import logging
from typing import List, Optional, Union

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism

from circ_minors.errors import BoundExceededError, CircMinorsError, EmptyResultError
from circ_minors.matrices import CircularMatrix, Minor, contract, recognize_circulant
from circ_minors.synthesis import MinorWitness, normalize_bullets

logger = logging.getLogger(__name__)

__all__ = ["brute_minors", "candidate_subsets", "is_isomorphic_to_circulant"]


def candidate_subsets(matrix: CircularMatrix, max_size: Optional[int] = None) -> np.ndarray:
    """Screens all bullet sets 3 <= |B| <= n - 1 by their trace sizes.

    A contraction to B can only be C_s^p if the smallest trace size p satisfies
    2 <= p <= s - 1 and at least s rows attain it.

    Returns
    -------
    masks : np.ndarray
        Bit masks of the surviving subsets, bit j - 1 standing for column j.
    """
    n = matrix.n
    max_size = n - 1 if max_size is None else min(max_size, n - 1)
    masks = np.arange(1 << n, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int16)
    sizes = bits.sum(axis=1)
    keep = (sizes >= 3) & (sizes <= max_size)
    masks, bits, sizes = masks[keep], bits[keep], sizes[keep]

    counts = bits @ matrix.incidence.T.astype(np.int16)
    p = counts.min(axis=1)
    attained = (counts == p[:, None]).sum(axis=1)
    keep = (p >= 2) & (p <= sizes - 1) & (attained >= sizes)
    return masks[keep]


def brute_minors(matrix: CircularMatrix, max_n: int = 14) -> List[MinorWitness]:
    """Lists every bullet set B with A/([n] - B) isomorphic to C_s^p.

    Parameters
    ----------
    matrix : CircularMatrix

    max_n : int
        Largest number of columns that is enumerated.

    Returns
    -------
    catalog : list of MinorWitness
        Sorted by bullet set; `normalized` is None when normalization failed.

    Raises
    ------
    BoundExceededError
        If n exceeds `max_n`.
    """
    n = matrix.n
    if n > max_n:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {max_n}.")
    masks = candidate_subsets(matrix)
    logger.debug(f"{len(masks)} of {2 ** n} subsets of {matrix.name} pass screening.")

    catalog = []
    for mask in masks.tolist():
        bullets = tuple(j for j in matrix.g.indices() if mask >> (j - 1) & 1)
        removed = tuple(j for j in matrix.g.indices() if not mask >> (j - 1) & 1)
        try:
            minor = contract(matrix, removed)
        except EmptyResultError:
            continue
        found = recognize_circulant(minor)
        if found is None:
            continue
        s, p = found
        try:
            normalized = normalize_bullets(matrix, bullets, p)
        except CircMinorsError as e:
            logger.warning(f"Normalizing B={list(bullets)} failed: {e.code}: {e}")
            normalized = None
        catalog.append(
            MinorWitness(
                bullets=bullets,
                removed=removed,
                s=s,
                p=p,
                a=int(np.gcd(s, p)),
                minor=minor,
                normalized=normalized,
            )
        )
    catalog.sort(key=lambda w: w.bullets)
    logger.debug(f"Found {len(catalog)} circulant minors of {matrix.name}.")
    return catalog


def _bipartite(incidence: np.ndarray) -> nx.Graph:
    graph = nx.Graph()
    num_rows, num_columns = incidence.shape
    graph.add_nodes_from((("r", i) for i in range(num_rows)), side=0)
    graph.add_nodes_from((("c", j) for j in range(num_columns)), side=1)
    graph.add_edges_from(
        (("r", i), ("c", j)) for i, j in zip(*np.nonzero(incidence))
    )
    return graph


def is_isomorphic_to_circulant(minor: Union[Minor, np.ndarray], s: int, p: int) -> bool:
    """Whether rows and columns can be permuted to turn `minor` into C_s^p.

    Runs VF2 on the row/column incidence graphs, keeping rows and columns apart.
    """
    incidence = minor.incidence if isinstance(minor, Minor) else np.asarray(minor)
    if incidence.shape != (s, s) or not 1 <= p <= s - 1:
        return False
    if set(incidence.sum(axis=0).tolist()) != {p} or set(incidence.sum(axis=1).tolist()) != {p}:
        return False
    target = _circulant_incidence(s, p)
    return nx.is_isomorphic(
        _bipartite(incidence),
        _bipartite(target),
        node_match=isomorphism.categorical_node_match("side", None),
    )


def _circulant_incidence(s: int, p: int) -> np.ndarray:
    incidence = np.zeros((s, s), dtype=np.int8)
    for i in range(s):
        incidence[i, [(i + t) % s for t in range(p)]] = 1
    return incidence
