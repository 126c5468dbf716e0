"""Cross-validation of brute-force minors against circuit families."""

import collections
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Sequence, Set, Tuple

import numpy as np

from circ_minors import common
from circ_minors.circuits import check_jump_theorem, classify, reconstruct_row_arcs
from circ_minors.circulant import (
    g_circuit_stats,
    iter_D_params,
    iter_G_params,
    translate_D_to_G,
    translate_G_to_D,
)
from circ_minors.digraphs import build_D, build_F, build_G
from circ_minors.errors import (
    CapExceededError,
    CircMinorsError,
    EmptyResultError,
    PreconditionViolatedError,
)
from circ_minors.matrices import (
    CircularMatrix,
    contract,
    make_circulant,
    random_circular_matrix,
    recognize_circulant,
)
from circ_minors.oracle.families import FamilySearch
from circ_minors.oracle.minors import brute_minors, is_isomorphic_to_circulant
from circ_minors.synthesis import (
    MinorWitness,
    circuits_to_minor,
    minor_to_circuits,
    normalize_bullets,
    select_r,
    trace_correspondence_holds,
    windows_and_R,
)

logger = logging.getLogger(__name__)

__all__ = ["CrossReport", "cross_validate", "cross_validate_circulant", "sweep"]

# Types.
BulletSet = Tuple[int, ...]


@dataclass
class CrossReport:
    """Outcome of cross-validating one matrix.

    `minor_sets` holds the normalized bullet sets found by subset enumeration,
    `family_sets` the pooled essential bullets of circuit families in F(A).
    The report is clean exactly when `discrepancies` is empty. `near_misses`
    lists circulant families and arithmetic witnesses that do not match up;
    they are informational.
    """

    name: str
    n: int
    minor_sets: Set[BulletSet] = field(default_factory=set)
    family_sets: Set[BulletSet] = field(default_factory=set)
    counts: Dict[Tuple[int, int], int] = field(default_factory=dict)
    discrepancies: List[str] = field(default_factory=list)
    num_circuits: int = 0
    near_misses: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_document(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "n": self.n,
            "ok": self.ok,
            "minor_sets": [list(b) for b in sorted(self.minor_sets)],
            "family_sets": [list(b) for b in sorted(self.family_sets)],
            "counts": [
                {"s": s, "p": p, "count": c} for (s, p), c in sorted(self.counts.items())
            ],
            "num_circuits": self.num_circuits,
            "discrepancies": list(self.discrepancies),
            "near_misses": list(self.near_misses),
        }


def _label(bullets: Sequence[int]) -> str:
    return "{" + ",".join(str(b) for b in bullets) + "}"


def _check_witness(matrix: CircularMatrix, witness: MinorWitness) -> List[str]:
    label = f"B={_label(witness.bullets)}"
    if witness.normalized is None:
        return [f"{label}: normalization failed"]
    problems = []
    try:
        family, _ = minor_to_circuits(matrix, witness.bullets, witness.p)
        back = circuits_to_minor(matrix, family)
        if back.bullets != witness.normalized or (back.s, back.p) != (witness.s, witness.p):
            problems.append(
                f"{label}: round trip gives C_{back.s}^{back.p} at {_label(back.bullets)}"
            )
        if not trace_correspondence_holds(matrix, witness.bullets, witness.normalized):
            problems.append(f"{label}: traces on B' do not correspond to traces on B")
        if normalize_bullets(matrix, witness.normalized, witness.p) != witness.normalized:
            problems.append(f"{label}: B'={_label(witness.normalized)} is not a fixpoint")
        problems.extend(_check_left_endpoints(matrix, witness))
    except CircMinorsError as e:
        problems.append(f"{label}: {e.code}: {e}")
    return problems


def _check_left_endpoints(matrix: CircularMatrix, witness: MinorWitness) -> List[str]:
    # A row of R(j) starting right after b_{j-p} is the selected r(j).
    bullets, p, s = witness.bullets, witness.p, witness.s
    windows = windows_and_R(matrix, bullets, p)
    problems = []
    for j, rows in windows.items():
        start = matrix.g.shift(bullets[(j - 1 - p) % s], 1)
        for i in rows:
            if matrix.lo(i) == start and select_r(matrix, bullets, p, j, windows)[0] != i:
                problems.append(
                    f"B={_label(bullets)}: row {i} starts after b_(j-p) but r({j}) differs"
                )
    return problems


def _check_recognition(matrix: CircularMatrix, max_columns: int = 8) -> List[str]:
    problems = []
    n = matrix.n
    for size in range(3, min(max_columns, n - 1) + 1):
        for bullets in itertools.combinations(matrix.g.indices(), size):
            removed = [j for j in matrix.g.indices() if j not in bullets]
            try:
                minor = contract(matrix, removed)
            except EmptyResultError:
                continue
            found = recognize_circulant(minor)
            isomorphic = [
                (size, p) for p in range(2, size) if is_isomorphic_to_circulant(minor, size, p)
            ]
            if (found is not None) != bool(isomorphic) or (found and found != isomorphic[0]):
                problems.append(
                    f"B={_label(bullets)}: recognition gives {found}, isomorphism {isomorphic}"
                )
    return problems


def _family_sets(search: FamilySearch, report: CrossReport) -> List:
    try:
        families = search.families()
    except CapExceededError as e:
        report.discrepancies.append(f"{e.code}: {e}")
        families = e.partial or []
    report.discrepancies.extend(f"violation: {v}" for v in search.violations)
    return families


def cross_validate(
    matrix: CircularMatrix,
    max_n: int = 14,
    max_circuits: int = 200000,
    max_families: int = 100000,
    check_isomorphism: bool = False,
) -> CrossReport:
    """Compares circulant minors found by subset enumeration with circuit families.

    Checks that the normalized bullet sets of all circulant minors coincide
    with the bullet sets of the families of F(A), that every minor round trips
    through `minor_to_circuits` and `circuits_to_minor`, that every family
    bullet set is a normalization fixpoint, and that the jump counts of every
    kept circuit behave.

    Parameters
    ----------
    matrix : CircularMatrix

    max_n, max_circuits, max_families : int
        Enumeration limits.

    check_isomorphism : bool
        Also compare `recognize_circulant` with a VF2 isomorphism test on
        every contraction with at most 8 columns.

    Returns
    -------
    report : CrossReport
    """
    report, _ = _cross_validate(matrix, max_n, max_circuits, max_families, check_isomorphism)
    return report


def _cross_validate(
    matrix: CircularMatrix,
    max_n: int,
    max_circuits: int,
    max_families: int,
    check_isomorphism: bool,
) -> Tuple[CrossReport, List[MinorWitness]]:
    logger.info(f"Cross-validating {matrix.name}...")
    report = CrossReport(name=matrix.name, n=matrix.n)
    catalog = brute_minors(matrix, max_n=max_n)
    report.counts = dict(collections.Counter((w.s, w.p) for w in catalog))
    for witness in catalog:
        if witness.normalized is not None:
            report.minor_sets.add(witness.normalized)
        report.discrepancies.extend(_check_witness(matrix, witness))

    d = build_F(matrix)
    search = FamilySearch(d, max_circuits, max_families, proper=True)
    families = _family_sets(search, report)
    report.num_circuits = len(search.circuits())
    for family in families:
        report.family_sets.add(family.bullets)
        try:
            circuits_to_minor(matrix, family)
            if normalize_bullets(matrix, family.bullets, family.p) != family.bullets:
                report.discrepancies.append(
                    f"family B={_label(family.bullets)} is not a normalization fixpoint"
                )
        except CircMinorsError as e:
            report.discrepancies.append(f"family B={_label(family.bullets)}: {e.code}: {e}")
    for circuit in search.circuits():
        try:
            check_jump_theorem(d, circuit)
            own = tuple(sorted((a.tail, a.head) for a in circuit.row_arcs))
            if reconstruct_row_arcs(classify(circuit, d.g), circuit.p) != own:
                report.discrepancies.append(f"circuit {circuit}: row arcs not reconstructed")
        except CircMinorsError as e:
            report.discrepancies.append(f"circuit {circuit}: {e.code}: {e}")

    for bullets in sorted(report.minor_sets - report.family_sets):
        report.discrepancies.append(f"minor B'={_label(bullets)} has no family")
    for bullets in sorted(report.family_sets - report.minor_sets):
        report.discrepancies.append(f"family B={_label(bullets)} has no minor")
    if check_isomorphism:
        report.discrepancies.extend(_check_recognition(matrix))
    logger.info(
        f"{matrix.name}: {len(catalog)} minors, {len(report.family_sets)} family sets, "
        f"{len(report.discrepancies)} discrepancies."
    )
    return report, catalog


def _d_family_index(families) -> Dict[Tuple[FrozenSet[int], int, int, int], int]:
    index: Dict[Tuple[FrozenSet[int], int, int, int], int] = {}
    for family in families:
        key = (frozenset(family.bullets), family.a, family.member_s, family.member_p)
        index[key] = index.get(key, 0) + 1
    return index


def _check_bridge(n: int, k: int, limits: Dict[str, int], report: CrossReport):
    g_search = FamilySearch(build_G(n, k), proper=True, **limits)
    d_search = FamilySearch(build_D(n, k), proper=False, **limits)
    g_families = _family_sets(g_search, report)
    d_families = _family_sets(d_search, report)
    ground = frozenset(range(1, n + 1))

    d_index = _d_family_index(d_families)
    g_keys = set()
    for family in g_families:
        n1, n2, n3 = g_circuit_stats(family.circuits[0], k)
        complement = ground - family.vertex_set
        g_keys.add((complement, family.a, n1, n2, n3))
        try:
            params = translate_G_to_D(n, k, family.a, n1, n2, n3)
        except CircMinorsError as e:
            report.discrepancies.append(f"G-family {family.circuits[0]}: {e.code}: {e}")
            continue
        if not d_index.get((complement, params.a, params.s, params.p)):
            report.discrepancies.append(
                f"G-family with d={family.a}, {(n1, n2, n3)} has no D-family "
                f"{tuple(params)} on {_label(sorted(complement))}"
            )

    for family in d_families:
        a, s, p = family.a, family.member_s, family.member_p
        try:
            params = translate_D_to_G(n, k, a, s, p)
        except PreconditionViolatedError:
            continue
        key = (frozenset(family.bullets), params.d, params.n1, params.n2, params.n3)
        if key not in g_keys:
            report.discrepancies.append(
                f"D-family with a={a}, s={s}, p={p} has no G-family {tuple(params)} "
                f"off {_label(family.bullets)}"
            )
    return d_families, g_families


def _near_misses(n: int, k: int, d_families, g_families) -> List[str]:
    # Informational only.
    d_all = {(f.a, f.member_s, f.member_p) for f in d_families}
    d_found = {(a, s, p) for a, s, p in d_all if 2 <= a * p <= a * s - 1 and a * s <= n - 1}
    d_known = {(a, s, p) for a in range(1, k) for s, p, _ in iter_D_params(n, k, a)}
    misses = []
    for a, s, p in sorted(d_found - d_known):
        reason = "w = 0" if s * k == p * n else "no arithmetic witness"
        misses.append(f"D{(a, s, p)} enumerated, {reason}")
    for params in sorted(d_known - d_all):
        misses.append(f"D{params} arithmetic witness, not enumerated")

    g_found = {(f.a,) + tuple(g_circuit_stats(f.circuits[0], k)) for f in g_families}
    g_known = {(d,) + params for d in range(1, k) for params in iter_G_params(n, k, d)}
    for params in sorted(g_found - g_known):
        misses.append(f"G{params} enumerated, no arithmetic witness")
    for params in sorted(g_known - g_found):
        misses.append(f"G{params} arithmetic witness, not enumerated")
    return misses


def cross_validate_circulant(
    n: int,
    k: int,
    max_n: int = 14,
    max_circuits: int = 200000,
    max_families: int = 100000,
    check_isomorphism: bool = False,
) -> CrossReport:
    """Cross-validates C_n^k and checks the circulant specializations.

    On top of `cross_validate`, every minor bullet set is already normalized
    and needs no forward arcs, the family bullet sets of F(C_n^k) and D(n, k)
    coincide, and G(n, k) families correspond to D(n, k) families on the
    complementary vertex set.

    Circulant families of D(n, k) and G(n, k) are also compared with the
    arithmetic witnesses of `iter_D_params` and `iter_G_params`. Mismatches
    land in `near_misses`, not in `discrepancies`.
    """
    matrix = make_circulant(n, k)
    report, catalog = _cross_validate(
        matrix, max_n, max_circuits, max_families, check_isomorphism
    )
    limits = {"max_circuits": max_circuits, "max_families": max_families}

    for witness in catalog:
        if witness.normalized != witness.bullets:
            report.discrepancies.append(
                f"B={_label(witness.bullets)} moves to {witness.normalized} under normalization"
            )
            continue
        try:
            _, trace = minor_to_circuits(matrix, witness.bullets, witness.p)
        except CircMinorsError:
            continue
        if trace.P:
            report.discrepancies.append(
                f"B={_label(witness.bullets)} needs forward arcs at {list(trace.P_vertices)}"
            )

    d_search = FamilySearch(build_D(n, k), proper=True, **limits)
    d_sets = {f.bullets for f in _family_sets(d_search, report)}
    if d_sets != report.family_sets:
        report.discrepancies.append(
            f"F(C_{n}^{k}) and D({n},{k}) disagree on "
            f"{sorted(d_sets ^ report.family_sets)}"
        )
    d_families, g_families = _check_bridge(n, k, limits, report)
    report.near_misses = _near_misses(n, k, d_families, g_families)
    for miss in report.near_misses:
        logger.info(f"C_{n}^{k} near miss: {miss}")
    return report


def sweep(
    n_min: int = 5,
    n_max: int = 12,
    num_random: int = 200,
    random_n_min: int = 5,
    random_n_max: int = 12,
    seed: int = 0,
    max_n: int = 14,
    max_circuits: int = 200000,
    max_families: int = 100000,
    check_isomorphism: bool = False,
    circulants: bool = True,
) -> List[CrossReport]:
    """Cross-validates every C_n^k with n_min <= n <= n_max, 2 <= k <= n - 2, and random matrices.

    Random matrices are drawn from one generator seeded with `seed`, cycling
    through `common.RandomModes.ALL`.
    """
    limits = dict(max_n=max_n, max_circuits=max_circuits, max_families=max_families)
    reports = []
    if circulants:
        for n in range(n_min, n_max + 1):
            for k in range(2, n - 1):
                reports.append(
                    cross_validate_circulant(n, k, check_isomorphism=check_isomorphism, **limits)
                )
    rng = np.random.RandomState(seed)
    for t in range(num_random):
        n = int(rng.randint(random_n_min, random_n_max + 1))
        mode = common.RandomModes.ALL[t % len(common.RandomModes.ALL)]
        matrix = random_circular_matrix(n, rng=rng, name=f"random_{seed}_{t}", mode=mode)
        reports.append(cross_validate(matrix, check_isomorphism=check_isomorphism, **limits))
    failed = sum(1 for r in reports if not r.ok)
    logger.info(f"Swept {len(reports)} matrices, {failed} with discrepancies.")
    return reports
