"""Tests for circulant parameter translations and existence conditions."""

import pytest

from circ_minors import circulant
from circ_minors.circulant import (
    DParams,
    GParams,
    decompose_shift_digraph,
    existence_D,
    existence_G,
    g_circuit_stats,
    iter_D_params,
    iter_G_params,
    translate_D_to_G,
    translate_G_to_D,
)
from circ_minors.circuits import resolve_vertex_sequence, validate_circuit
from circ_minors.digraphs import build_G
from circ_minors.errors import InvalidParameterError, PreconditionViolatedError


def test_decompose_shift_digraph():
    assert decompose_shift_digraph(6, 2) == [(1, 3, 5), (2, 4, 6)]
    circuits = decompose_shift_digraph(12, 8)
    assert len(circuits) == 4
    assert all(len(c) == 3 for c in circuits)
    assert decompose_shift_digraph(5, 2) == [(1, 3, 5, 2, 4)]
    with pytest.raises(InvalidParameterError):
        decompose_shift_digraph(5, 5)


@pytest.mark.parametrize(
    "n,k,a,s,p,expected",
    [(12, 5, 1, 5, 2, GParams(1, 3, 6, 1)), (14, 5, 2, 3, 1, GParams(1, 3, 6, 2))],
)
def test_d_to_g(n, k, a, s, p, expected):
    assert translate_D_to_G(n, k, a, s, p) == expected


@pytest.mark.parametrize(
    "n,k,g_params,expected",
    [
        (12, 5, (1, 3, 6, 1), DParams(1, 5, 2, 1)),
        (14, 5, (1, 3, 6, 2), DParams(2, 3, 1, 1)),
    ],
)
def test_g_to_d(n, k, g_params, expected):
    params = translate_G_to_D(n, k, *g_params)
    assert params == expected
    assert params.pooled == (expected.a * expected.s, expected.a * expected.p)


def test_translations_are_inverse():
    for n in range(5, 16):
        for k in range(2, n - 1):
            for a in range(1, k):
                for s, p, _ in iter_D_params(n, k, a):
                    g_params = translate_D_to_G(n, k, a, s, p)
                    back = translate_G_to_D(n, k, *g_params)
                    assert (back.a, back.s, back.p) == (a, s, p)


@pytest.mark.parametrize(
    "args",
    [
        (12, 5, 1, 6, 2),  # gcd(s, p) > 1
        (12, 5, 1, 2, 1),  # w < 1
        (12, 5, 3, 5, 2),  # a p > k - 1, a (s + w) > n - 2
        (12, 5, 2, 5, 2),  # a (s + w) > n - 2
        (12, 1, 1, 5, 2),  # k < 2
    ],
)
def test_d_preconditions(args):
    with pytest.raises(PreconditionViolatedError):
        translate_D_to_G(*args)


def test_g_preconditions():
    with pytest.raises(PreconditionViolatedError):
        translate_G_to_D(12, 5, 1, 3, 6, 2)
    with pytest.raises(PreconditionViolatedError):
        translate_G_to_D(12, 5, 2, 3, 6, 1)


def test_existence_d():
    assert list(iter_D_params(12, 5, 1)) == [(5, 2, 1), (3, 1, 3)]
    assert existence_D(12, 5, 1) == (5, 2, 1)
    assert existence_D(14, 5, 2) == (3, 1, 1)
    for a in (1, 2, 3):
        assert existence_D(5, 2, a) is None


def test_existence_g():
    assert list(iter_G_params(12, 5, 1)) == [(3, 6, 1), (4, 6, 3)]
    assert existence_G(12, 5, 1) == (3, 6, 1)


def test_existence_dispatch():
    assert circulant.existence("D", 12, 5, 1) == (5, 2, 1)
    assert circulant.existence("G", 12, 5, 1) == (3, 6, 1)
    with pytest.raises(ValueError):
        circulant.existence("F", 12, 5, 1)


def test_g_circuit_stats():
    g = build_G(12, 5)
    circuit = validate_circuit(g, resolve_vertex_sequence(g, [1, 6, 11, 4, 9, 2, 7]))
    assert g_circuit_stats(circuit, 5) == (3, 6, 1)
