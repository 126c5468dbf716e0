"""Shared fixtures: the running example on 12 columns and its circuits."""

import os

import pytest

from circ_minors.circuits import resolve_vertex_sequence, validate_circuit, validate_family
from circ_minors.digraphs import build_F
from circ_minors.ground import GroundSet
from circ_minors.matrices import parse_circular

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

# Rows [1,5], [2,8], [5,9], [7,10], [10,12], [12,2] on 12 columns.
EXAMPLE_ROWS = [[1, 5], [2, 8], [5, 9], [7, 10], [10, 12], [12, 2]]

# A circuit with a bad arc: (12, 5) jumps a single essential bullet.
BAD_ARC_CIRCUIT = (
    [2, 3, 4, 9, 12, 1, 8, 7, 6, 10, 11],
    ["fwd", "fwd", "row", "row", "fwd", "row", "rev", "rev", "row", "fwd", "row"],
)

# The circuit built from B = {2, 5, 9, 10, 12}; no bad arcs.
EXAMPLE_CIRCUIT = (
    [2, 3, 4, 9, 12, 5, 6, 10, 11],
    ["fwd", "fwd", "row", "row", "row", "fwd", "row", "fwd", "row"],
)

# Two disjoint circuits inducing C_6^2 on B = {1, 4, 6, 9, 10, 12}.
FAMILY = (
    ([1, 8, 7, 6, 10, 11, 2], ["row", "rev", "rev", "row", "fwd", "row", "rev"]),
    ([4, 9, 12, 5], ["row", "row", "row", "rev"]),
)


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def example_matrix():
    return parse_circular(EXAMPLE_ROWS, GroundSet(12), name="example")


@pytest.fixture
def example_digraph(example_matrix):
    return build_F(example_matrix)


@pytest.fixture
def bad_arc_circuit(example_digraph):
    return validate_circuit(
        example_digraph, resolve_vertex_sequence(example_digraph, *BAD_ARC_CIRCUIT)
    )


@pytest.fixture
def example_circuit(example_digraph):
    return validate_circuit(
        example_digraph, resolve_vertex_sequence(example_digraph, *EXAMPLE_CIRCUIT)
    )


@pytest.fixture
def example_family(example_digraph):
    return validate_family(
        example_digraph,
        [resolve_vertex_sequence(example_digraph, *member) for member in FAMILY],
    )
