"""Acceptance criteria 1-10, each at its stated size and tolerance.

Every test records a verdict through the ``acceptance`` fixture; the terminal
summary prints one PASS/FAIL line per criterion.  Parts known to fail are
strict xfails so a silent fix is noticed.
"""

import itertools
import random
import time

import numpy as np
import pytest

from graphstab import oracle
from graphstab.gates import apply_cz
from graphstab.graph import k_a, k_a_i, k_b, k_b_i, complete_bipartite, lc_orbit, w_graph
from graphstab.inner import inner_product_stats
from graphstab.magic import N3, N6, N6_FIXED, residual
from graphstab.state import ExtendedGraphState, enumerate_canonical
from graphstab.suites import (
    bounded_degree_graph,
    cz_toggle_profile,
    random_state,
    suite_canonical,
    suite_circuits,
    suite_inner,
    suite_measure,
    suite_merge,
    suite_split,
    suite_symmetry,
    suite_table1,
    suite_triplets,
    z_row_workload,
)
from graphstab.triplets import TripletTag

TOL = 1e-12


def _suite(acceptance, criterion, res, seconds=None, limit=None):
    detail = f"{res.cases} cases, {len(res.failures)} failures"
    ok = res.ok
    if limit is not None:
        detail += f", {seconds:.1f}s < {limit}s"
        ok = ok and seconds < limit
    acceptance.record(criterion, res.name, ok, detail)
    assert ok, res.failures[:5]


def test_1_canonical_counts(acceptance):
    t = time.perf_counter()
    counts = [sum(1 for _ in enumerate_canonical(n)) for n in range(1, 5)]
    seconds = time.perf_counter() - t
    ok = counts == [6, 60, 1080, 36720] and seconds < 60
    acceptance.record(1, "counts", ok, f"{counts} in {seconds:.1f}s")
    assert ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_1_pairwise_non_parallel(acceptance, n):
    vecs = np.array([oracle.densify(s) for s in enumerate_canonical(n)])
    overlaps = np.abs(vecs.conj() @ vecs.T)
    np.fill_diagonal(overlaps, 0)
    worst = float(overlaps.max())
    ok = worst < 1 - TOL
    acceptance.record(1, f"non-parallel n={n}", ok, f"max |<a|b>| = {worst:.6f}")
    assert ok


def test_2_canonicalization(acceptance):
    t = time.perf_counter()
    res = suite_canonical(random.Random(2), 1000)
    _suite(acceptance, 2, res, time.perf_counter() - t, 120)


def test_3_table1(acceptance):
    res = suite_table1(random.Random(3), 200)
    _suite(acceptance, 3, res)


def test_4_random_circuits(acceptance):
    _suite(acceptance, 4, suite_circuits(random.Random(4), 10_000))


def test_5_inner_products(acceptance):
    _suite(acceptance, 5, suite_inner(random.Random(5), 10_000))


SIZES = (16, 32, 64, 128, 256, 512)


@pytest.fixture(scope="module")
def inner_toggles():
    """Per instance: (n, input max degree, max degree encountered, toggles)."""
    rng = random.Random(55)
    rows = []
    for n in SIZES:
        for _ in range(3):
            a, b = (ExtendedGraphState(bounded_degree_graph(rng, n, 4), [rng.randrange(24) for _ in range(n)]) for _ in "ab")
            _, stats = inner_product_stats(a, b)
            d_in = max(a.graph.max_degree(), b.graph.max_degree(), 1)
            rows.append((n, d_in, max(stats.max_degree, 1), stats.toggles))
    return rows


def test_5_toggle_bound_encountered_degree(acceptance, inner_toggles):
    # c fixed at 1 before measuring; d is the largest degree the working graph reaches
    worst = max(t / (n * d * d) for n, _, d, t in inner_toggles)
    ok = worst <= 1
    acceptance.record(5, "toggles <= n*d^2 (d encountered)", ok, f"max ratio {worst:.3f}")
    assert ok


@pytest.mark.xfail(strict=True, reason="working degree grows to ~n/2 on random local Cliffords")
def test_5_toggle_bound_input_degree(acceptance, inner_toggles):
    ratios = {}
    for n, d_in, _, t in inner_toggles:
        ratios[n] = max(ratios.get(n, 0), t / (n * d_in * d_in))
    spread = ratios[SIZES[-1]] / ratios[SIZES[0]]
    # a fixed c needs the ratio to stay flat as n grows
    ok = spread < 4
    acceptance.record(
        5,
        "toggles <= c*n*d^2 (d input <= 4)",
        ok,
        f"ratio {ratios[SIZES[0]]:.1f} at n={SIZES[0]} vs {ratios[SIZES[-1]]:.1f} at n={SIZES[-1]}",
    )
    assert ok


@pytest.mark.parametrize(
    "name, run",
    [
        ("merge", lambda rng: suite_merge(rng, 1000)),
        ("merge-odd", lambda rng: suite_merge(rng, 1000, odd_only=True)),
        ("split", lambda rng: suite_split(rng, 1000)),
        ("measure", lambda rng: suite_measure(rng, 1000)),
    ],
)
def test_6_merge_split_measure(acceptance, name, run):
    _suite(acceptance, 6, run(random.Random(6)))


@pytest.mark.parametrize("sa, sb", [(2, 2), (2, 3), (3, 3)])
def test_7_orbit(acceptance, sa, sb):
    n = sa + sb
    a, b = list(range(sa)), list(range(sa, n))
    expected = [complete_bipartite(n, a, b), k_a(n, a, b), k_b(n, a, b)]
    expected += [k_a_i(n, a, b, i) for i in b]
    expected += [k_b_i(n, a, b, i) for i in a]
    expected += [w_graph(n, a, b, i, j) for i in a for j in b]
    want = {g.key() for g in expected}
    got = {g.key() for g in lc_orbit(w_graph(n, a, b, a[0], b[0]))}
    size = 3 + sa + sb + sa * sb
    ok = got == want and len(want) == size
    acceptance.record(7, f"(|A|,|B|)=({sa},{sb})", ok, f"orbit {len(got)}, expected {size}")
    assert ok


def test_8_worked_cases(acceptance):
    from graphstab.algebra import PauliOperator, QOmega
    from graphstab.gates import apply_gate_1q
    from graphstab.state import basis_state, plus_state
    from graphstab.triplets import classify_triplet

    sqrt2 = QOmega.sqrt2()
    p1, pp = plus_state(1), plus_state(2)
    r1 = classify_triplet(basis_state("0"), basis_state("1"), p1)
    r2 = classify_triplet(basis_state("0"), p1, apply_gate_1q(p1, 0, "S"))
    cz = apply_gate_1q(apply_gate_1q(apply_cz(pp, 0, 1), 0, "Z"), 1, "Z")
    r3 = classify_triplet(basis_state("00"), pp, cz)
    ok = (
        r1.tag is TripletTag.PAULI
        and r1.witness == PauliOperator.from_string("X")
        and r2.tag is TripletTag.S
        and r2.coefficients == (QOmega(1, 0, -1) / sqrt2, QOmega(1, 0, 1) / sqrt2)
        and r3.tag is TripletTag.CZ
        and r3.coefficients == (QOmega(1), QOmega(1))
    )
    acceptance.record(8, "worked cases", ok, f"{r1.tag.value}, {r2.tag.value}, {r3.tag.value}")
    assert ok


def test_8_triplets_against_rank(acceptance):
    _suite(acceptance, 8, suite_triplets(random.Random(8), 1000))


def test_8_completion_symmetry(acceptance):
    _suite(acceptance, 8, suite_symmetry(random.Random(88), 1000))


def test_9_n3(acceptance):
    r = residual(N3)
    ok = r < TOL
    acceptance.record(9, "n=3", ok, f"residual {r:.1e}")
    assert ok


@pytest.mark.xfail(strict=True, reason="first n=6 term as printed sits on the wrong star")
def test_9_n6_as_printed(acceptance):
    r = residual(N6)
    ok = r < TOL
    acceptance.record(9, "n=6 as printed", ok, f"residual {r:.1e}")
    assert ok


def test_9_n6_corrected(acceptance):
    r = residual(N6_FIXED)
    ok = r < TOL
    acceptance.record(9, "n=6 corrected star centre", ok, f"residual {r:.1e}")
    assert ok


@pytest.fixture(scope="module")
def perf_workload():
    return z_row_workload(random.Random(10))


def test_10_perf_smoke(acceptance, perf_workload):
    start, ops = perf_workload
    s = start.copy()
    t = time.perf_counter()
    for x, y in ops:
        apply_cz(s, x, y, inplace=True)
    seconds = time.perf_counter() - t
    d = s.graph.max_degree()
    ok = seconds < 5 and d <= 8 and start.n == 10_000 and len(ops) == 100_000
    acceptance.record(10, "10^5 CZ on 10^4 qubits", ok, f"{seconds:.2f}s, final max degree {d}")
    assert ok


def test_10_z_row_toggles(acceptance, perf_workload):
    start, ops = perf_workload
    profile = cz_toggle_profile(start.copy(), ops[:20_000])
    bad = [(d, t) for row, d, t in profile if row != "Z" or t > d + 1]
    ok = not bad
    acceptance.record(10, "(Z,.) rows toggle <= d+1", ok, f"{len(profile)} gates, {len(bad)} over")
    assert ok


def test_10_other_row_toggles(acceptance):
    rng = random.Random(100)
    worst, gates = 0.0, 0
    for _ in range(300):
        n = rng.randint(2, 24)
        s = random_state(rng, n)
        ops = [tuple(rng.sample(range(n), 2)) for _ in range(20)]
        for row, d, t in cz_toggle_profile(s, ops):
            if row == "other":
                worst = max(worst, t / (d + 1) ** 2)
                gates += 1
    ok = gates > 0 and worst <= 4
    acceptance.record(10, "other rows toggle <= 4(d+1)^2", ok, f"{gates} gates, max ratio {worst:.2f}")
    assert ok


def test_1_enumeration_is_canonical():
    from graphstab.state import FormClass, form_class

    for s in itertools.islice(enumerate_canonical(3), 200):
        assert form_class(s) is FormClass.CANONICAL
