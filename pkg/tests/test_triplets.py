import random
from fractions import Fraction

import hypothesis.strategies as st
import numpy as np
from hypothesis import given

from conftest import hermitian_paulis, states
from graphstab import oracle
from graphstab.algebra import ZERO, PauliOperator, QOmega
from graphstab.gates import apply_cz, apply_gate_1q, apply_pauli, measure_pauli
from graphstab.inner import inner_product
from graphstab.state import basis_state, plus_state
from graphstab.suites import dependent_triple
from graphstab.triplets import (
    CZ_OVERLAP,
    S_OVERLAP,
    TripletTag,
    classify_triplet,
    complete_pair,
    format_coefficient,
    gram_determinant,
)

SQRT2 = QOmega.sqrt2()
shapes = st.sampled_from((TripletTag.PAULI, TripletTag.S, TripletTag.CZ))


def test_pauli_worked_case():
    r = classify_triplet(basis_state("0"), basis_state("1"), plus_state(1))
    assert r.tag is TripletTag.PAULI
    assert r.witness == PauliOperator.from_string("X")
    assert r.coefficients == (QOmega(-1), SQRT2)


def test_s_worked_case():
    p = plus_state(1)
    r = classify_triplet(basis_state("0"), p, apply_gate_1q(p, 0, "S"))
    assert r.tag is TripletTag.S and r.witness == (0,)
    c2, c3 = r.coefficients
    assert c2 == QOmega(1, 0, -1) / SQRT2
    assert c3 == QOmega(1, 0, 1) / SQRT2


def test_cz_worked_case():
    pp = plus_state(2)
    third = apply_cz(pp, 0, 1)
    third = apply_gate_1q(apply_gate_1q(third, 0, "Z"), 1, "Z")
    r = classify_triplet(basis_state("00"), pp, third)
    assert r.tag is TripletTag.CZ and r.witness == (0, 1)
    assert r.coefficients == (QOmega(1), QOmega(1))


@given(shapes, st.integers(0, 2**32))
def test_constructed_triples(tag, seed):
    triple = dependent_triple(random.Random(seed), tag, max_n=6)
    vecs = [oracle.densify(s) for s in triple]
    assert oracle.dense_rank(vecs) == 2
    r = classify_triplet(*triple)
    assert r.tag is tag
    residual = sum(complex(a) * v for a, v in zip(r.alphas, vecs))
    assert np.max(np.abs(residual)) < 1e-12


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(states(n, n), states(n, n), states(n, n))))
def test_classification_agrees_with_rank(triple):
    rank = oracle.dense_rank([oracle.densify(s) for s in triple])
    r = classify_triplet(*triple)
    assert r.dependent == (rank < 3)


@given(shapes.filter(lambda t: t is not TripletTag.PAULI), st.integers(0, 2**32))
def test_completion_symmetry(tag, seed):
    s1, s2, _ = dependent_triple(random.Random(seed), tag, max_n=6)
    want = S_OVERLAP if tag is TripletTag.S else CZ_OVERLAP
    s2.scalar = s2.scalar * (want * inner_product(s1, s2).inverse())
    s3 = complete_pair(s1, s2)
    assert inner_product(s1, s2) == inner_product(s2, s3) == inner_product(s3, s1) == want
    assert oracle.close(oracle.densify(s3), -(oracle.densify(s1) + oracle.densify(s2)))


@given(states(max_n=6).flatmap(lambda s: st.tuples(st.just(s), hermitian_paulis(s.n))))
def test_completion_of_pauli_pair(sp):
    s1, p = sp
    s2 = apply_pauli(s1, p)
    s3 = complete_pair(s1, s2)
    if measure_pauli(s1, p)[0] != Fraction(1, 2):
        return  # P s1 is parallel to s1
    assert s3 is not None
    assert oracle.close(oracle.densify(s3), (oracle.densify(s1) + oracle.densify(s2)) / np.sqrt(2))
    assert classify_triplet(s1, s2, s3).tag is TripletTag.PAULI


def test_completion_none_for_generic_pair():
    assert complete_pair(basis_state("00"), plus_state(2)) is None


def test_gram_determinant_of_orthonormal_triple():
    assert gram_determinant(ZERO, ZERO, ZERO) == QOmega(1)


def test_format_coefficient():
    assert format_coefficient(QOmega(1, 0, 1) / SQRT2) == "(1+1i)/2^(1/2) = 0.707106781187+0.707106781187i"
    assert format_coefficient(QOmega(-1)) == "-1 = -1"
