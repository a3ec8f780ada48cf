import itertools

import pytest
from hypothesis import given

from conftest import state_pairs, states
from graphstab import oracle
from graphstab.algebra import ONE, ZERO
from graphstab.graph import Graph
from graphstab.inner import (
    StarOp,
    amplitude,
    apply_frame,
    inner_product,
    inner_product_naive,
    inner_product_stats,
    relative_state,
)
from graphstab.state import ExtendedGraphState, basis_state, is_reduced, zero_state


@given(state_pairs(max_n=7))
def test_matches_oracle(pair):
    a, b = pair
    want = oracle.dense_inner(oracle.densify(a), oracle.densify(b))
    assert abs(complex(inner_product(a, b)) - want) < 1e-12


@given(state_pairs(max_n=7))
def test_conjugate_symmetry_and_norm(pair):
    a, b = pair
    assert inner_product(b, a) == inner_product(a, b).conjugate()
    assert inner_product(a, a) == ONE


@given(state_pairs(max_n=7))
def test_star_and_per_edge_agree(pair):
    a, b = pair
    assert inner_product_naive(a, b) == inner_product(a, b)


@given(state_pairs(max_n=6))
def test_frame_round_trip(pair):
    a, b = pair
    rel = relative_state(a, b)
    assert is_reduced(rel)
    assert oracle.close(oracle.densify(apply_frame(a, rel)), oracle.densify(b))


@given(states(max_n=4))
def test_amplitudes(s):
    v = oracle.densify(s)
    for i, bits in enumerate(itertools.product("01", repeat=s.n)):
        assert abs(complex(amplitude(s, "".join(bits))) - v[i]) < 1e-12


@given(state_pairs(max_n=7))
def test_toggles_within_encountered_degree_bound(pair):
    a, b = pair
    _, stats = inner_product_stats(a, b)
    d = max(stats.max_degree, 1)
    assert stats.toggles <= a.n * d * d


def test_zero_state_and_size_mismatch():
    s = ExtendedGraphState(Graph(2))
    assert inner_product(zero_state(2), s) == ZERO
    with pytest.raises(ValueError):
        inner_product(s, ExtendedGraphState(Graph(3)))
    with pytest.raises(ValueError):
        amplitude(s, "0")


def test_orthogonal_basis_states():
    assert inner_product(basis_state("01"), basis_state("10")) == ZERO


def test_star_rejects_own_center():
    with pytest.raises(ValueError):
        StarOp(1, {1, 2})
    assert StarOp(0, [2, 1]).partners == frozenset({1, 2})
