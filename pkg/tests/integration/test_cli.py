"""Integration tests for the command-line interface."""

import io
import json
import os

import pytest
from hydra import compose, initialize_config_module

from circ_minors.cli.run import EXIT_DOMAIN, EXIT_INPUT, EXIT_OK, run
from circ_minors.synthesis import MinorWitness
from tests.conftest import DATA_DIR


def _run(*overrides, output="json"):
    with initialize_config_module(config_module="circ_minors.cli.conf", version_base=None):
        cfg = compose(
            "config",
            overrides=[f"circ_minors.output={output}"] + list(overrides),
        )
    stream = io.StringIO()
    status = run(cfg, stream=stream)
    text = stream.getvalue()
    doc = json.loads(text) if output == "json" and text else None
    return status, doc, text


def _data(name):
    return "circ_minors.matrix='" + os.path.join(DATA_DIR, name) + "'"


def test_analyze():
    status, doc, _ = _run("circ_minors.command=analyze", _data("example.yaml"))
    assert status == EXIT_OK
    assert doc["n"] == 12
    assert len(doc["arcs"]) == 6 + 2 * 12
    row_arcs = {(a["tail"], a["head"]): a["row"] for a in doc["arcs"] if a["kind"] == "row"}
    assert row_arcs[(1, 8)] == 2


def test_minors_agree():
    status, doc, _ = _run("circ_minors.command=minors", _data("example.yaml"))
    assert status == EXIT_OK
    assert doc["agree"] is True
    bullets = {tuple(entry["bullets"]) for entry in doc["families"]}
    assert (2, 5, 9, 10, 12) in bullets
    assert (1, 4, 6, 9, 10, 12) in bullets


def test_minors_text_output():
    status, _, text = _run(
        "circ_minors.command=minors",
        "circ_minors.minors.source=families",
        _data("example.yaml"),
        output="text",
    )
    assert status == EXIT_OK
    assert text.startswith("Circulant minors of example:")
    assert "  family: B=[1, 4, 6, 9, 10, 12] C_6^2" in text


def test_from_circuits():
    status, doc, _ = _run(
        "circ_minors.command=from-circuits",
        _data("example.yaml"),
        "circ_minors.circuits='" + os.path.join(DATA_DIR, "family.yaml") + "'",
    )
    assert status == EXIT_OK
    assert doc["bullets"] == [1, 4, 6, 9, 10, 12]
    assert (doc["s"], doc["p"], doc["a"]) == (6, 2, 2)


def test_from_circuits_with_bad_arc():
    status, _, _ = _run(
        "circ_minors.command=from-circuits",
        _data("example.yaml"),
        "circ_minors.circuits='" + os.path.join(DATA_DIR, "bad_arc_circuit.yaml") + "'",
    )
    assert status == EXIT_DOMAIN


@pytest.mark.parametrize("p", ["2", "null"])
def test_to_circuits(p):
    status, doc, _ = _run(
        "circ_minors.command=to-circuits",
        _data("example.yaml"),
        "circ_minors.bullets=[2,5,8,10,12]",
        f"circ_minors.p={p}",
    )
    assert status == EXIT_OK
    assert doc["trace"]["normalized"] == [2, 5, 9, 10, 12]
    assert doc["family"]["a"] == 1


def test_to_circuits_rejects_non_minor():
    status, _, _ = _run(
        "circ_minors.command=to-circuits",
        _data("example.yaml"),
        "circ_minors.bullets=[1,2,3]",
    )
    assert status == EXIT_DOMAIN


def test_circulant_translate():
    status, doc, _ = _run(
        "circ_minors.command=circulant",
        "circ_minors.circulant.n=12",
        "circ_minors.circulant.k=5",
        "circ_minors.circulant.translate=D-G",
        "circ_minors.circulant.params=[1,5,2]",
    )
    assert status == EXIT_OK
    assert doc["G"] == {"d": 1, "n1": 3, "n2": 6, "n3": 1}

    status, doc, _ = _run(
        "circ_minors.command=circulant",
        "circ_minors.circulant.n=12",
        "circ_minors.circulant.k=5",
        "circ_minors.circulant.translate=G-D",
        "circ_minors.circulant.params=[1,3,6,1]",
    )
    assert status == EXIT_OK
    assert doc["D"]["pooled"] == [5, 2]


def test_circulant_exists_and_table():
    status, doc, _ = _run(
        "circ_minors.command=circulant",
        "circ_minors.circulant.n=12",
        "circ_minors.circulant.k=5",
        "circ_minors.circulant.exists=G",
    )
    assert status == EXIT_OK
    assert doc["exists"]["witness"] == [3, 6, 1]

    status, doc, _ = _run(
        "circ_minors.command=circulant",
        "circ_minors.circulant.n=12",
        "circ_minors.circulant.k=5",
    )
    assert status == EXIT_OK
    assert [row["a"] for row in doc["D"]] == [1, 2, 3, 4]
    assert doc["D"][0]["witness"] == [5, 2, 1]


def test_oracle_on_circulant():
    status, doc, _ = _run(
        "circ_minors.command=oracle",
        "circ_minors.circulant.n=9",
        "circ_minors.circulant.k=4",
        "circ_minors/limits=small",
    )
    assert status == EXIT_OK
    assert doc["ok"] is True


@pytest.mark.parametrize(
    "overrides",
    [
        ["circ_minors.command=analyze"],
        ["circ_minors.command=unknown"],
        ["circ_minors.command=analyze", _data("missing.yaml")],
        ["circ_minors.command=circulant"],
    ],
)
def test_input_errors(overrides):
    status, _, _ = _run(*overrides)
    assert status == EXIT_INPUT


def _set(values):
    return "{" + ",".join(str(v) for v in values) + "}"


def _pairs(arcs):
    return ", ".join(f"({tail},{head})" for tail, head in arcs)


def _analyze_facts(doc):
    return [f"  row {i}: [{lo},{hi}]" for i, (lo, hi) in enumerate(doc["rows"], 1)]


def _minors_facts(doc):
    facts = [f"  family: B={e['bullets']} C_{e['s']}^{e['p']}" for e in doc["families"]]
    facts += [
        f"  subset: B={e['bullets']} C_{e['s']}^{e['p']} normalized {e['normalized']}"
        for e in doc["subsets"]
    ]
    return facts


def _from_circuits_facts(doc):
    minor = doc["minor"]
    facts = [f"Minor on columns {_set(minor['columns'])} ({minor['provenance']}):"]
    facts += [f"  row {i}: {_set(t)}" for i, t in zip(minor["source_rows"], minor["traces"])]
    facts.append(f"gives C_{doc['s']}^{doc['p']} on B={doc['bullets']}.")
    return facts


def _to_circuits_facts(doc):
    trace = doc["trace"]
    facts = [
        "  T: " + _pairs(trace["T"]),
        f"  P: {_set(trace['P'])} at vertices {_set(trace['P_vertices'])}",
        f"  Q: {_set(trace['Q'])} at vertices {_set(trace['Q_vertices'])}",
    ]
    facts += [f"    F_{j}: {_pairs(path)}" for j, path in trace["forward_paths"].items()]
    facts += [f"    R_{j}: {_pairs(path)}" for j, path in trace["reverse_paths"].items()]
    return facts


def _circulant_facts(doc):
    facts = []
    for row in doc["D"]:
        witness = str(tuple(row["witness"])) if row["witness"] else "-"
        facts.append(f"{row['a']:>5}  {witness:>18}")
    return facts


def _oracle_facts(doc):
    return [
        f"  minors found: {len(doc['minor_sets'])} normalized bullet set(s)",
        f"  family sets:  {len(doc['family_sets'])}",
        f"  discrepancies: {len(doc['discrepancies'])}",
    ] + [f"  C_{c['s']}^{c['p']}: {c['count']}" for c in doc["counts"]]


@pytest.mark.parametrize(
    "overrides,facts",
    [
        (["circ_minors.command=analyze", _data("example.yaml")], _analyze_facts),
        (["circ_minors.command=minors", _data("example.yaml")], _minors_facts),
        (
            [
                "circ_minors.command=from-circuits",
                _data("example.yaml"),
                "circ_minors.circuits='" + os.path.join(DATA_DIR, "family.yaml") + "'",
            ],
            _from_circuits_facts,
        ),
        (
            [
                "circ_minors.command=to-circuits",
                _data("example.yaml"),
                "circ_minors.bullets=[2,5,8,10,12]",
            ],
            _to_circuits_facts,
        ),
        (
            [
                "circ_minors.command=circulant",
                "circ_minors.circulant.n=12",
                "circ_minors.circulant.k=5",
            ],
            _circulant_facts,
        ),
        (
            [
                "circ_minors.command=oracle",
                "circ_minors.circulant.n=7",
                "circ_minors.circulant.k=3",
                "circ_minors/limits=small",
            ],
            _oracle_facts,
        ),
    ],
)
def test_text_and_json_reports_agree(overrides, facts):
    status, doc, out = _run(*overrides, output="json")
    assert status == EXIT_OK
    assert out.endswith("\n")
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) == out[:-1]

    status, _, text = _run(*overrides, output="text")
    assert status == EXIT_OK
    lines = text.split("\n")
    for fact in facts(doc):
        assert any(fact in line for line in lines), fact


@pytest.mark.parametrize("alias", ["d:g", "D:G", "d-g"])
def test_circulant_translate_aliases(alias):
    status, doc, _ = _run(
        "circ_minors.command=circulant",
        "circ_minors.circulant.n=12",
        "circ_minors.circulant.k=5",
        f"circ_minors.circulant.translate='{alias}'",
        "circ_minors.circulant.params=[1,5,2]",
    )
    assert status == EXIT_OK
    assert doc["G"] == {"d": 1, "n1": 3, "n2": 6, "n3": 1}

    status, doc, _ = _run(
        "circ_minors.command=circulant",
        "circ_minors.circulant.n=12",
        "circ_minors.circulant.k=5",
        "circ_minors.circulant.translate='g:d'",
        "circ_minors.circulant.params=[1,3,6,1]",
    )
    assert status == EXIT_OK
    assert doc["D"]["pooled"] == [5, 2]


def test_minors_reports_normalization_failures(monkeypatch):
    unnormalized = MinorWitness(
        bullets=(2, 5, 8, 10, 12), removed=(1, 3, 4, 6, 7, 9, 11), s=5, p=2, a=1
    )
    monkeypatch.setattr(
        "circ_minors.cli.commands.brute_minors", lambda matrix, max_n: [unnormalized]
    )
    overrides = ["circ_minors.command=minors", "circ_minors.minors.source=subsets"]
    status, doc, _ = _run(*overrides, _data("example.yaml"))
    assert status == EXIT_DOMAIN
    assert doc["failures"] == ["B=[2, 5, 8, 10, 12]: normalization failed"]

    status, _, text = _run(*overrides, _data("example.yaml"), output="text")
    assert status == EXIT_DOMAIN
    assert "  subset: B=[2, 5, 8, 10, 12] C_5^2 normalization failed" in text
    assert "normalized []" not in text


def test_random_matrix_source():
    overrides = ["circ_minors.command=analyze", "circ_minors.random.n=9", "circ_minors.seed=3"]
    status, first, _ = _run(*overrides)
    assert status == EXIT_OK
    assert first["n"] == 9
    _, second, _ = _run(*overrides)
    assert first == second

    status, doc, _ = _run(
        "circ_minors.command=oracle",
        "circ_minors.random.n=8",
        "circ_minors.random.mode=uniform",
        "circ_minors/limits=small",
    )
    assert status == EXIT_OK
    assert doc["ok"] is True


def test_oracle_sweep():
    status, doc, _ = _run(
        "circ_minors.command=oracle",
        "circ_minors.oracle.sweep=true",
        "circ_minors.oracle.n_min=5",
        "circ_minors.oracle.n_max=7",
        "circ_minors.oracle.num_random=4",
        "circ_minors.seed=2",
        "circ_minors/limits=small",
    )
    assert status == EXIT_OK
    assert doc["seed"] == 2 and doc["ok"] is True
    assert len(doc["reports"]) == 2 + 3 + 4 + 4
    assert [r["name"] for r in doc["reports"][-4:]] == [f"random_2_{t}" for t in range(4)]
