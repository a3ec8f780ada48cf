import random

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given

from conftest import graphs, hermitian_paulis, states
from graphstab import oracle
from graphstab.algebra import LocalClifford, PauliOperator, SinglePauli
from graphstab.gates import (
    MergeSpec,
    PQCase,
    apply_cz,
    apply_gate,
    apply_local,
    apply_pauli,
    measure_pauli,
    merge_z,
    project_pauli,
    psi_pq,
    split_hh,
)
from graphstab.graph import Graph
from graphstab.state import ExtendedGraphState
from graphstab.suites import check_table1_case, random_circuit, run_circuit, run_dense

letters = st.sampled_from("XYZ")
signs = st.sampled_from((0, 2))


@given(letters, letters, signs, signs, st.booleans(), st.integers(0, 2**32))
def test_psi_pq_rows(P, Q, kp, kq, adjacent, seed):
    assert check_table1_case(random.Random(seed), P, Q, kp, kq, adjacent)


def test_psi_pq_swap_symmetry():
    g = Graph(4, [(0, 1), (1, 2), (0, 3)])
    a = psi_pq(g, PQCase(SinglePauli("Y"), SinglePauli("X"), 0, 1))
    b = psi_pq(g, PQCase(SinglePauli("X"), SinglePauli("Y"), 1, 0))
    assert oracle.close(oracle.densify(a), oracle.densify(b))


def test_psi_pq_rejects_bad_input():
    g = Graph(2)
    with pytest.raises(ValueError):
        psi_pq(g, PQCase(SinglePauli("X"), SinglePauli("Z"), 0, 0))
    with pytest.raises(ValueError):
        psi_pq(g, PQCase(SinglePauli("X", 1), SinglePauli("Z")))


@given(states(max_n=6), st.integers(0, 2**32))
def test_random_circuits_match_oracle(s, seed):
    rng = random.Random(seed)
    ops = random_circuit(rng, s.n, 25, gates=("H", "S", "SDG", "X", "Y", "Z", "CZ", "CX", "CY"))
    assert oracle.close(oracle.densify(run_circuit(s, ops)), run_dense(oracle.densify(s), s.n, ops))


@given(states(max_n=5), st.data())
def test_apply_local_matches_matrix(s, data):
    q = data.draw(st.integers(0, s.n - 1))
    c = LocalClifford.from_code(data.draw(st.integers(0, 23)), data.draw(st.integers(0, 3)))
    got = apply_local(s, q, c)
    assert oracle.close(oracle.densify(got), oracle.apply_1q(oracle.densify(s), s.n, q, oracle.local_matrix(c)))


@given(states(max_n=5).flatmap(lambda s: st.tuples(st.just(s), hermitian_paulis(s.n, nontrivial=False))))
def test_apply_pauli(sp):
    s, p = sp
    assert oracle.close(oracle.densify(apply_pauli(s, p)), oracle.pauli_matrix_apply(oracle.densify(s), s.n, p))


def test_gates_are_functional_by_default():
    s = ExtendedGraphState(Graph(2))
    t = apply_cz(s, 0, 1)
    assert s.graph.num_edges() == 0 and t.graph.num_edges() == 1
    apply_gate(s, "CZ", (0, 1), inplace=True)
    assert s.graph.num_edges() == 1


def test_cz_rejects_equal_qubits():
    with pytest.raises(ValueError):
        apply_cz(ExtendedGraphState(Graph(2)), 1, 1)


@given(graphs(), st.data())
def test_merge_all_k(g, data):
    bset = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    k = data.draw(st.integers(0, 3))
    s = merge_z(g, MergeSpec(bset, k))
    v = oracle.graph_state(g.n, g.edges())
    zb = v
    for q in bset:
        zb = oracle.apply_1q(zb, g.n, q, oracle.Z)
    assert oracle.close(oracle.densify(s), v + (1j**k) * zb)


@given(graphs(min_n=2), st.data())
def test_split_sums_to_hh(g, data):
    x, y = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    if g.has_edge(x, y):
        g.toggle_edge(x, y)
    a, b = split_hh(g, x, y)
    v = oracle.graph_state(g.n, g.edges())
    want = oracle.apply_1q(oracle.apply_1q(v, g.n, x, oracle.H), g.n, y, oracle.H)
    assert oracle.close(oracle.densify(a) + oracle.densify(b), want)


def test_split_requires_non_adjacent():
    with pytest.raises(ValueError):
        split_hh(Graph(2, [(0, 1)]), 0, 1)


@given(states(max_n=6).flatmap(lambda s: st.tuples(st.just(s), hermitian_paulis(s.n))))
def test_measure_matches_projector(sp):
    s, p = sp
    v = oracle.densify(s)
    prob, post = measure_pauli(s, p)
    proj = 0.5 * (v + oracle.pauli_matrix_apply(v, s.n, p))
    pe = np.vdot(proj, proj).real
    assert prob in (0, 0.5, 1)
    assert abs(float(prob) - pe) < 1e-12
    if prob:
        assert oracle.close(oracle.densify(post), proj / np.sqrt(pe))
    else:
        assert post.is_zero
    assert oracle.close(oracle.densify(project_pauli(s, p)), proj)


def test_measure_rejects_non_hermitian():
    with pytest.raises(ValueError):
        measure_pauli(ExtendedGraphState(Graph(1)), PauliOperator(1, 1, 0, 1))
