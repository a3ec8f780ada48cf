import numpy as np
import pytest

from graphstab import oracle
from graphstab.magic import DECOMPOSITIONS, N3, N6, N6_FIXED, dense_sum, residual


def test_n3_matches_magic_state():
    assert residual(N3) < 1e-12


def test_n6_fixed_matches_magic_state():
    assert residual(N6_FIXED) < 1e-12


def test_n6_as_printed_is_off_by_a_quarter():
    assert residual(N6) == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize("name", sorted(DECOMPOSITIONS))
def test_terms_are_unit_states(name):
    for t in DECOMPOSITIONS[name]:
        v = oracle.densify(t.state())
        assert np.linalg.norm(v) == pytest.approx(1.0)


def test_fixed_only_changes_first_term():
    assert N6[1:] == N6_FIXED[1:]
    diff = dense_sum(N6) - dense_sum(N6_FIXED)
    assert np.max(np.abs(diff)) == pytest.approx(0.25)
