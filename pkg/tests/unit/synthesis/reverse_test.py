"""Tests for building circuit families from minors."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circ_minors import common
from circ_minors.digraphs import build_F
from circ_minors.errors import InvalidParameterError, NotCirculantMinorError
from circ_minors.ground import circ_dist
from circ_minors.matrices import make_circulant, random_circular_matrix
from circ_minors.oracle import brute_minors, enumerate_families
from circ_minors.synthesis import (
    circuits_to_minor,
    minor_to_circuits,
    normalize_bullets,
    select_r,
    trace_correspondence_holds,
    windows_and_R,
)


def test_windows(example_matrix):
    windows = windows_and_R(example_matrix, (2, 5, 8, 10, 12), 2)
    assert windows == {1: (6,), 2: (1,), 3: (3,), 4: (4,), 5: (5,)}
    windows = windows_and_R(example_matrix, (2, 5, 9, 10, 12), 2)
    assert windows[2] == (1, 2)


def test_select_r(example_matrix):
    bullets = (2, 5, 8, 10, 12)
    assert select_r(example_matrix, bullets, 2, 3) == (3, 1)
    assert select_r(example_matrix, bullets, 2, 5) == (5, 0)
    # Rows [1, 5] and [2, 8] both trace {2, 5}; [1, 5] ends at the bullet.
    assert select_r(example_matrix, (2, 5, 9, 10, 12), 2, 2) == (1, 0)


@pytest.mark.parametrize(
    "bullets,expected",
    [
        ((2, 5, 8, 10, 12), (2, 5, 9, 10, 12)),
        ((2, 5, 7, 10, 12), (2, 5, 9, 10, 12)),
        ((2, 5, 9, 10, 12), (2, 5, 9, 10, 12)),
        ((1, 4, 6, 9, 10, 12), (1, 4, 6, 9, 10, 12)),
    ],
)
def test_normalize(example_matrix, bullets, expected):
    p = 2
    assert normalize_bullets(example_matrix, bullets, p) == expected
    assert normalize_bullets(example_matrix, expected, p) == expected


def test_trace_correspondence(example_matrix):
    assert trace_correspondence_holds(
        example_matrix, (2, 5, 8, 10, 12), (2, 5, 9, 10, 12)
    )
    assert not trace_correspondence_holds(
        example_matrix, (2, 5, 8, 10, 12), (2, 5, 10, 11, 12)
    )


def test_construction_on_single_circuit(example_matrix, example_circuit):
    family, trace = minor_to_circuits(example_matrix, (2, 5, 9, 10, 12), 2)
    assert [(a.tail, a.head) for a in trace.T] == [(11, 2), (12, 5), (4, 9), (6, 10), (9, 12)]
    assert trace.P == (1, 2, 4)
    assert trace.P_vertices == (2, 5, 10)
    assert trace.Q == ()
    forward = {j: [(a.tail, a.head) for a in path] for j, path in trace.forward_paths.items()}
    assert forward == {1: [(2, 3), (3, 4)], 2: [(5, 6)], 4: [(10, 11)]}
    assert trace.reverse_paths == {}
    assert family.a == 1
    assert family.circuits[0] == example_circuit


def test_construction_on_two_circuits(example_matrix, example_family):
    family, trace = minor_to_circuits(example_matrix, (1, 4, 6, 9, 10, 12), 2)
    assert trace.P_vertices == (10,)
    assert trace.Q_vertices == (1, 4, 6)
    paths = {
        j: [a.tail for a in path] + [path[-1].head] for j, path in trace.reverse_paths.items()
    }
    assert paths == {1: [2, 1], 2: [5, 4], 3: [8, 7, 6]}
    assert all(a.kind == common.ArcKinds.REVERSE for a in trace.reverse_paths[3])
    assert family.circuits == example_family.circuits


def test_construction_moves_bullets(example_matrix):
    family, trace = minor_to_circuits(example_matrix, (2, 5, 8, 10, 12), 2)
    assert trace.bullets == (2, 5, 8, 10, 12)
    assert trace.normalized == (2, 5, 9, 10, 12)
    assert trace.passes == 1
    assert [w.b_prime for w in trace.windows] == [2, 5, 9, 10, 12]
    assert family.bullets == trace.normalized


def test_round_trip(example_matrix):
    family, _ = minor_to_circuits(example_matrix, (2, 5, 7, 10, 12), 2)
    witness = circuits_to_minor(example_matrix, family)
    assert witness.bullets == (2, 5, 9, 10, 12)
    assert (witness.s, witness.p) == (5, 2)


def test_circulant_needs_no_forward_arcs():
    c = make_circulant(9, 4)
    bullets = (1, 3, 5, 7, 9)
    assert normalize_bullets(c, bullets, 2) == bullets
    family, trace = minor_to_circuits(c, bullets, 2)
    assert trace.P == ()
    assert all(a.kind != common.ArcKinds.FORWARD for c_ in family.circuits for a in c_.arcs)


def test_rejects_non_minor(example_matrix):
    with pytest.raises(NotCirculantMinorError):
        minor_to_circuits(example_matrix, (1, 2, 3), 2)
    with pytest.raises(NotCirculantMinorError):
        normalize_bullets(example_matrix, (2, 5, 9, 10, 12), 3)
    with pytest.raises(InvalidParameterError):
        normalize_bullets(example_matrix, (2, 5), 1)


def test_families_only_carry_normalized_bullets(example_matrix):
    bullet_sets = {f.bullets for f in enumerate_families(build_F(example_matrix))}
    assert (2, 5, 9, 10, 12) in bullet_sets
    assert (2, 5, 7, 10, 12) not in bullet_sets
    assert (2, 5, 8, 10, 12) not in bullet_sets


@settings(max_examples=30, deadline=None)
@given(n=st.integers(min_value=6, max_value=9), seed=st.integers(0, 2 ** 16))
def test_minors_of_random_matrices(n, seed):
    matrix = random_circular_matrix(n, seed=seed, mode=common.RandomModes.PERTURBED)
    g = matrix.g
    for w in brute_minors(matrix, max_n=9):
        assert w.normalized is not None
        assert trace_correspondence_holds(matrix, w.bullets, w.normalized)
        windows = windows_and_R(matrix, w.bullets, w.p)
        for j, rows in windows.items():
            b, following = w.bullets[j - 1], w.bullets[j % w.s]
            row, h = select_r(matrix, w.bullets, w.p, j, windows)
            assert row in rows
            assert h == circ_dist(b, matrix.hi(row), g) < circ_dist(b, following, g)
            assert all(h <= circ_dist(b, matrix.hi(i), g) for i in rows)
            start = g.shift(w.bullets[(j - 1 - w.p) % w.s], 1)
            assert all(i == row for i in rows if matrix.lo(i) == start)
