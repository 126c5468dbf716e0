"""Commands of the command-line interface.

Every command takes the `circ_minors` config node and returns a `Report`.
"""

import logging
from typing import List

from omegaconf import DictConfig

from circ_minors import circulant as bridge
from circ_minors import common, matrices
from circ_minors.circuits import load_circuits, validate_family
from circ_minors.cli import reports
from circ_minors.cli.utils import int_list, limits_kwargs
from circ_minors.digraphs import build_F
from circ_minors.errors import (
    EmptyResultError,
    InvalidParameterError,
    MalformedDocumentError,
    NotCirculantMinorError,
)
from circ_minors.matrices import (
    CircularMatrix,
    contract,
    load_matrix,
    matrix_to_document,
    recognize_circulant,
)
from circ_minors.oracle import (
    brute_minors,
    cross_validate,
    cross_validate_circulant,
    enumerate_families,
    sweep,
)
from circ_minors.synthesis import circuits_to_minor, minor_to_circuits

logger = logging.getLogger(__name__)

__all__ = [
    "analyze",
    "minors",
    "from_circuits",
    "to_circuits",
    "circulant",
    "oracle",
    "get",
]


def _matrix(cfg: DictConfig) -> CircularMatrix:
    if cfg.matrix is None and cfg.random.n is not None:
        return matrices.get(
            "random", n=int(cfg.random.n), seed=int(cfg.seed), mode=str(cfg.random.mode)
        )
    if cfg.matrix is None:
        raise MalformedDocumentError("No matrix given; set circ_minors.matrix=<path>.")
    return load_matrix(str(cfg.matrix), drop_dominated_rows=bool(cfg.drop_dominated))


def analyze(cfg: DictConfig) -> reports.Report:
    """Validates a matrix and lists the arcs of F(A)."""
    matrix = _matrix(cfg)
    d = build_F(matrix)
    doc = matrix_to_document(matrix)
    doc["name"] = matrix.name
    doc["arcs"] = [
        {"tail": a.tail, "head": a.head, "kind": a.kind, "row": a.row, "length": a.length}
        for a in d.arcs
    ]
    lines = reports.matrix_lines(matrix) + [f"F({matrix.name}):"]
    lines += ["  " + line for line in d.dump().split("\n")]
    return reports.Report(common.Commands.ANALYZE, doc, lines)


def minors(cfg: DictConfig) -> reports.Report:
    """Lists circulant minors found by circuit families, subsets, or both."""
    matrix = _matrix(cfg)
    source = cfg.minors.source
    if source not in ("families", "subsets", "both"):
        raise ValueError(f"Unknown minor source: {source}")
    limits = limits_kwargs(cfg)
    doc, lines, ok = {"name": matrix.name}, [f"Circulant minors of {matrix.name}:"], True

    family_sets = set()
    if source in ("families", "both"):
        families = enumerate_families(
            build_F(matrix),
            max_circuits=limits["max_circuits"],
            max_families=limits["max_families"],
        )
        doc["families"] = []
        for family in families:
            witness = circuits_to_minor(matrix, family)
            family_sets.add(witness.bullets)
            entry = reports.witness_document(witness)
            entry["family"] = reports.family_document(family)
            doc["families"].append(entry)
            lines.append(f"  family: B={list(witness.bullets)} C_{witness.s}^{witness.p}")

    minor_sets, failures = set(), []
    if source in ("subsets", "both"):
        catalog = brute_minors(matrix, max_n=limits["max_n"])
        doc["subsets"] = [reports.witness_document(w) for w in catalog]
        for w in catalog:
            if w.normalized is None:
                failures.append(f"B={list(w.bullets)}: normalization failed")
                lines.append(f"  subset: B={list(w.bullets)} C_{w.s}^{w.p} normalization failed")
                continue
            minor_sets.add(w.normalized)
            lines.append(
                f"  subset: B={list(w.bullets)} C_{w.s}^{w.p} normalized {list(w.normalized)}"
            )
        if failures:
            logger.warning(f"{len(failures)} subset minor(s) failed to normalize.")
            ok = False
        doc["failures"] = failures

    if source == "both":
        agree = family_sets == minor_sets
        ok = ok and agree
        doc["agree"] = agree
        lines.append("Family and subset bullet sets " + ("agree." if agree else "DISAGREE."))
    lines += [f"  {f}" for f in failures]
    return reports.Report(common.Commands.MINORS, doc, lines, ok)


def from_circuits(cfg: DictConfig) -> reports.Report:
    """Builds the circulant minor of a family read from a circuit document."""
    matrix = _matrix(cfg)
    if cfg.circuits is None:
        raise MalformedDocumentError("No circuits given; set circ_minors.circuits=<path>.")
    d = build_F(matrix)
    family = validate_family(d, load_circuits(str(cfg.circuits), d))
    witness = circuits_to_minor(matrix, family)
    doc = reports.witness_document(witness)
    doc["family"] = reports.family_document(family)
    lines = reports.family_lines(family) + [
        f"Contracting {list(witness.removed)} gives C_{witness.s}^{witness.p} "
        f"on B={list(witness.bullets)}."
    ]
    if witness.minor is not None:
        lines += reports.minor_lines(witness.minor)
    return reports.Report(common.Commands.FROM_CIRCUITS, doc, lines)


def to_circuits(cfg: DictConfig) -> reports.Report:
    """Builds a circuit family for a bullet set inducing a circulant minor."""
    matrix = _matrix(cfg)
    bullets = int_list(cfg.bullets)
    if not bullets:
        raise MalformedDocumentError("No bullets given; set circ_minors.bullets=[...].")
    p = cfg.p
    if p is None:
        removed = [j for j in matrix.g.indices() if j not in set(bullets)]
        try:
            found = recognize_circulant(contract(matrix, removed))
        except EmptyResultError:
            found = None
        if found is None:
            raise NotCirculantMinorError(f"Contracting to B={sorted(bullets)} is not circulant.")
        p = found[1]
    family, trace = minor_to_circuits(matrix, bullets, int(p))
    doc = {"trace": reports.trace_document(trace), "family": reports.family_document(family)}
    lines = reports.trace_lines(trace) + reports.family_lines(family)
    return reports.Report(common.Commands.TO_CIRCUITS, doc, lines)


def circulant(cfg: DictConfig) -> reports.Report:
    """Translates parameters or checks existence in D(n, k) and G(n, k)."""
    node = cfg.circulant
    if node.n is None or node.k is None:
        raise MalformedDocumentError("Set circ_minors.circulant.n and circ_minors.circulant.k.")
    n, k = int(node.n), int(node.k)
    doc, lines = {"n": n, "k": k}, []

    if node.translate is not None:
        params = int_list(node.params) or []
        translate = str(node.translate).upper().replace(":", "-")
        if translate == "D-G":
            if len(params) != 3:
                raise InvalidParameterError("D-G translation needs params=[a,s,p].")
            result = bridge.translate_D_to_G(n, k, *params)
            doc["G"] = result._asdict()
            lines.append(f"D({n},{k}) {tuple(params)} -> G (d, n1, n2, n3) = {tuple(result)}")
        elif translate == "G-D":
            if len(params) != 4:
                raise InvalidParameterError("G-D translation needs params=[d,n1,n2,n3].")
            result = bridge.translate_G_to_D(n, k, *params)
            doc["D"] = dict(result._asdict(), pooled=list(result.pooled))
            lines.append(
                f"G({n},{k}) {tuple(params)} -> D (a, s, p, w) = {tuple(result)}, "
                f"minor C_{result.pooled[0]}^{result.pooled[1]}"
            )
        else:
            raise ValueError(f"Unknown translation: {node.translate}")
    elif node.exists is not None:
        count = int(node.multiplicity)
        witness = bridge.existence(node.exists, n, k, count)
        doc["exists"] = {"flavor": node.exists, "count": count, "witness": witness}
        lines.append(f"{node.exists}({n},{k}) with {count} circuit(s): {witness or 'none'}")
    else:
        doc["D"], doc["G"] = [], []
        lines.append(f"count  D(n={n},k={k}) (s,p,w)  G (n1,n2,n3)")
        for count in range(1, k):
            d_witness = bridge.existence_D(n, k, count)
            g_witness = bridge.existence_G(n, k, count)
            doc["D"].append({"a": count, "witness": d_witness})
            doc["G"].append({"d": count, "witness": g_witness})
            lines.append(f"{count:>5}  {str(d_witness or '-'):>18}  {str(g_witness or '-'):>12}")
    return reports.Report(common.Commands.CIRCULANT, doc, lines)


def _oracle_lines(report) -> List[str]:
    lines = [
        f"Oracle report for {report.name} (n={report.n})",
        f"  minors found: {len(report.minor_sets)} normalized bullet set(s)",
        f"  family sets:  {len(report.family_sets)}",
        f"  circuits:     {report.num_circuits}",
    ]
    for (s, p), count in sorted(report.counts.items()):
        lines.append(f"  C_{s}^{p}: {count}")
    lines.append(f"  discrepancies: {len(report.discrepancies)}")
    lines += [f"    {d}" for d in report.discrepancies]
    if report.near_misses:
        lines.append(f"  near misses: {len(report.near_misses)}")
        lines += [f"    {m}" for m in report.near_misses]
    return lines


def _oracle_sweep(cfg: DictConfig, limits) -> reports.Report:
    node = cfg.oracle
    found = sweep(
        n_min=int(node.n_min),
        n_max=int(node.n_max),
        num_random=int(node.num_random),
        random_n_min=int(node.n_min),
        random_n_max=int(node.n_max),
        seed=int(cfg.seed),
        **limits,
    )
    failed = [r for r in found if not r.ok]
    doc = {
        "seed": int(cfg.seed),
        "ok": not failed,
        "reports": [r.to_document() for r in found],
    }
    lines = [
        f"Oracle sweep with seed {cfg.seed}: {len(found)} matrices, {len(failed)} failed, "
        f"{sum(len(r.minor_sets) for r in found)} minor set(s)"
    ]
    for r in failed:
        lines += _oracle_lines(r)
    return reports.Report(common.Commands.ORACLE, doc, lines, not failed)


def oracle(cfg: DictConfig) -> reports.Report:
    """Cross-validates a matrix, C_n^k when no matrix is given, or a whole sweep."""
    limits = limits_kwargs(cfg)
    if cfg.oracle.sweep:
        return _oracle_sweep(cfg, limits)
    if cfg.matrix is None and cfg.circulant.n is not None and cfg.circulant.k is not None:
        report = cross_validate_circulant(int(cfg.circulant.n), int(cfg.circulant.k), **limits)
    else:
        report = cross_validate(_matrix(cfg), **limits)
    return reports.Report(
        common.Commands.ORACLE, report.to_document(), _oracle_lines(report), report.ok
    )


def get(command):
    """Returns the command function for the given command name."""
    if command == common.Commands.ANALYZE:
        fn = analyze
    elif command == common.Commands.MINORS:
        fn = minors
    elif command == common.Commands.FROM_CIRCUITS:
        fn = from_circuits
    elif command == common.Commands.TO_CIRCUITS:
        fn = to_circuits
    elif command == common.Commands.CIRCULANT:
        fn = circulant
    elif command == common.Commands.ORACLE:
        fn = oracle
    else:
        raise ValueError(f"Unknown command: {command}")
    return fn
