"""Randomized oracle suites and the generators they share with the tests.

Every suite takes a ``random.Random`` and a case count and returns a
:class:`SuiteResult`.  Nothing here decides pass/fail thresholds beyond the
dense tolerance; callers compare ``failures`` against zero.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import oracle
from .algebra import PauliOperator, PhaseScalar, SinglePauli
from .gates import (
    GATES_1Q,
    GATES_2Q,
    MergeSpec,
    PQCase,
    apply_cz,
    apply_gate,
    apply_pauli,
    measure_pauli,
    merge_z,
    project_pauli,
    psi_pq,
    split_hh,
)
from .graph import Graph, iter_bits
from .inner import apply_frame, inner_product, inner_product_naive
from .state import CONJ, C_H, ExtendedGraphState, is_canonical, to_canonical_form
from .triplets import S_OVERLAP, CZ_OVERLAP, TripletTag, classify_triplet, complete_pair

TOL = 1e-12
_INVERSE = {"S": "SDG", "SDG": "S"}
_DENSE = {"X": oracle.X, "Y": oracle.Y, "Z": oracle.Z}


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < 20:
            self.failures.append(msg)
        else:
            self.failures.append("...")
            self.failures = self.failures[:21]

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"


# -- generators --------------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    g = Graph(n)
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            g.toggle_edge(u, v)
    g.toggles = 0
    return g


def bounded_degree_graph(rng: random.Random, n: int, d: int) -> Graph:
    """Random graph with every degree at most ``d``."""
    g = Graph(n)
    for _ in range(n * d):
        u, v = rng.sample(range(n), 2)
        if not g.has_edge(u, v) and g.degree(u) < d and g.degree(v) < d:
            g.toggle_edge(u, v)
    g.toggles = 0
    return g


def random_state(rng: random.Random, n: int, p: float = 0.4) -> ExtendedGraphState:
    """Unit state with uniform local codes and a random global phase."""
    codes = [rng.randrange(24) for _ in range(n)]
    return ExtendedGraphState(random_graph(rng, n, p), codes, PhaseScalar(b=rng.randrange(8)))


def random_dressed_state(rng: random.Random, n: int, max_word: int = 6) -> ExtendedGraphState:
    """Random graph with a random gate word of length ``<= max_word`` per qubit."""
    s = ExtendedGraphState(random_graph(rng, n))
    for q in range(n):
        for _ in range(rng.randint(0, max_word)):
            apply_gate(s, rng.choice(GATES_1Q), (q,), inplace=True)
    return s


def random_circuit(rng: random.Random, n: int, depth: int, gates=("H", "S", "SDG", "CZ", "CX", "CY")) -> list[tuple[str, tuple[int, ...]]]:
    ops = []
    for _ in range(depth):
        name = rng.choice(gates)
        if name in GATES_2Q:
            if n < 2:
                continue
            ops.append((name, tuple(rng.sample(range(n), 2))))
        else:
            ops.append((name, (rng.randrange(n),)))
    return ops


def inverse_circuit(ops: list[tuple[str, tuple[int, ...]]]) -> list[tuple[str, tuple[int, ...]]]:
    """Gate-by-gate inverse; CY is its own inverse like the rest of the 2q set."""
    return [(_INVERSE.get(name, name), qs) for name, qs in reversed(ops)]


def run_circuit(s: ExtendedGraphState, ops) -> ExtendedGraphState:
    out = s.copy()
    for name, qs in ops:
        apply_gate(out, name, qs, inplace=True)
    return out


def run_dense(vec: np.ndarray, n: int, ops) -> np.ndarray:
    for name, qs in ops:
        vec = oracle.dense_apply(vec, name, qs, n)
    return vec


def random_hermitian_pauli(rng: random.Random, n: int, nontrivial: bool = True) -> PauliOperator:
    while True:
        x, z = rng.randrange(2**n), rng.randrange(2**n)
        if x | z or not nontrivial:
            break
    return PauliOperator(n, x, z, (x & z).bit_count() + 2 * rng.randrange(2))


def fixing_circuit(rng: random.Random, n: int, depth: int) -> list[tuple[str, tuple[int, ...]]]:
    """Random circuit that fixes ``|0^n>`` with phase 1: CX, CZ, S and Z only."""
    return random_circuit(rng, n, depth, gates=("CX", "CZ", "S", "Z"))


# -- suites ---------------------------------------------------------------------------


def suite_canonical(rng: random.Random, cases: int, max_n: int = 8) -> SuiteResult:
    """Canonical form keeps the vector; two dressings of one vector agree."""
    res = SuiteResult("canonical")
    for t in range(cases):
        n = rng.randint(1, max_n)
        s = random_dressed_state(rng, n)
        v = oracle.densify(s)
        c1 = to_canonical_form(s)
        if not is_canonical(c1) or not oracle.close(oracle.densify(c1), v, TOL):
            res.fail(f"case {t}: canonical form changed the vector")
        ops = random_circuit(rng, n, rng.randint(1, 12), gates=GATES_1Q + GATES_2Q)
        s2 = run_circuit(run_circuit(s, ops), inverse_circuit(ops))
        c2 = to_canonical_form(s2)
        if c1.graph != c2.graph or c1.codes != c2.codes:
            res.fail(f"case {t}: re-dressing gave a different canonical form")
        elif c1.scalar != c2.scalar:
            res.fail(f"case {t}: canonical scalars differ on equal vectors")
        res.cases += 1
    return res


def table1_cases():
    """Every ordered letter pair, both adjacencies, all four signs."""
    for P, Q in itertools.product("XYZ", repeat=2):
        for kp, kq in itertools.product((0, 2), repeat=2):
            for adjacent in (False, True):
                yield P, Q, kp, kq, adjacent


def check_table1_case(rng: random.Random, P: str, Q: str, kp: int, kq: int, adjacent: bool, max_n: int = 8) -> bool:
    n = rng.randint(2, max_n)
    g = random_graph(rng, n)
    x, y = rng.sample(range(n), 2)
    if g.has_edge(x, y) != adjacent:
        g.toggle_edge(x, y)
    s = psi_pq(g, PQCase(SinglePauli(P, kp), SinglePauli(Q, kq), x, y))
    v = oracle.graph_state(n, g.edges())
    pv = (-1 if kp else 1) * oracle.apply_1q(v, n, x, _DENSE[P])
    qv = (-1 if kq else 1) * oracle.apply_1q(v - pv, n, y, _DENSE[Q])
    return oracle.close(oracle.densify(s), 0.5 * ((v + pv) + qv), TOL)


def suite_table1(rng: random.Random, cases: int) -> SuiteResult:
    """``cases`` random graphs for each of the 72 row/sign/adjacency combinations."""
    res = SuiteResult("table1")
    for P, Q, kp, kq, adjacent in table1_cases():
        for _ in range(cases):
            if not check_table1_case(rng, P, Q, kp, kq, adjacent):
                res.fail(f"psi_{P}{Q} signs ({kp},{kq}) adjacent={adjacent}")
            res.cases += 1
    return res


def suite_circuits(rng: random.Random, cases: int, max_n: int = 10, max_depth: int = 40) -> SuiteResult:
    res = SuiteResult("circuits")
    for t in range(cases):
        n = rng.randint(1, max_n)
        ops = random_circuit(rng, n, rng.randint(1, max_depth))
        s = run_circuit(ExtendedGraphState(Graph(n)), ops)
        v = run_dense(oracle.graph_state(n, ()), n, ops)
        if not oracle.close(oracle.densify(s), v, TOL):
            res.fail(f"case {t}: n={n} ops={ops}")
        res.cases += 1
    return res


def suite_inner(rng: random.Random, cases: int, max_n: int = 10) -> SuiteResult:
    res = SuiteResult("inner")
    for t in range(cases):
        n = rng.randint(1, max_n)
        a, b = random_state(rng, n), random_state(rng, n)
        ip = inner_product(a, b)
        want = oracle.dense_inner(oracle.densify(a), oracle.densify(b))
        if abs(complex(ip) - want) > TOL:
            res.fail(f"case {t}: {ip} vs {want}")
        if inner_product(b, a) != ip.conjugate():
            res.fail(f"case {t}: conjugate symmetry")
        if inner_product(a, a) != PhaseScalar():
            res.fail(f"case {t}: <s|s> != 1")
        if inner_product_naive(a, b) != ip:
            res.fail(f"case {t}: star and per-edge paths disagree")
        res.cases += 1
    return res


def _z_on(v: np.ndarray, n: int, qubits) -> np.ndarray:
    for q in qubits:
        v = oracle.apply_1q(v, n, q, oracle.Z)
    return v


def suite_merge(rng: random.Random, cases: int, max_n: int = 8, odd_only: bool = False) -> SuiteResult:
    """``(I + i^k Z^B)|G>``; ``odd_only`` restricts to the odd-``k`` rule."""
    res = SuiteResult("merge-odd" if odd_only else "merge")
    for t in range(cases):
        n = rng.randint(1, max_n)
        g = random_graph(rng, n)
        bset = frozenset(rng.sample(range(n), rng.randint(1, n)))
        k = rng.choice((1, 3)) if odd_only else rng.randrange(4)
        s = merge_z(g, MergeSpec(bset, k))
        v = oracle.graph_state(n, g.edges())
        if not oracle.close(oracle.densify(s), v + (1j**k) * _z_on(v, n, bset), TOL):
            res.fail(f"case {t}: k={k} B={sorted(bset)}")
        res.cases += 1
    return res


def suite_split(rng: random.Random, cases: int, max_n: int = 8) -> SuiteResult:
    res = SuiteResult("split")
    for t in range(cases):
        n = rng.randint(2, max_n)
        g = random_graph(rng, n)
        x, y = rng.sample(range(n), 2)
        if g.has_edge(x, y):
            g.toggle_edge(x, y)
        a, b = split_hh(g, x, y)
        v = oracle.graph_state(n, g.edges())
        want = oracle.apply_1q(oracle.apply_1q(v, n, x, oracle.H), n, y, oracle.H)
        if not oracle.close(oracle.densify(a) + oracle.densify(b), want, TOL):
            res.fail(f"case {t}: x={x} y={y}")
        res.cases += 1
    return res


def suite_measure(rng: random.Random, cases: int, max_n: int = 8) -> SuiteResult:
    res = SuiteResult("measure")
    for t in range(cases):
        n = rng.randint(1, max_n)
        s = random_state(rng, n)
        v = oracle.densify(s)
        p = random_hermitian_pauli(rng, n)
        prob, post = measure_pauli(s, p)
        proj = 0.5 * (v + oracle.pauli_matrix_apply(v, n, p))
        pe = float(np.vdot(proj, proj).real)
        if prob not in (0, 0.5, 1) or abs(pe - float(prob)) > TOL:
            res.fail(f"case {t}: probability {prob} vs {pe}")
        elif prob and not oracle.close(oracle.densify(post), proj / np.sqrt(pe), TOL):
            res.fail(f"case {t}: post-state")
        if not oracle.close(oracle.densify(project_pauli(s, p)), proj, TOL):
            res.fail(f"case {t}: projection")
        res.cases += 1
    return res


# -- triplets ---------------------------------------------------------------------------


def _fixed_frame(rng: random.Random, s1: ExtendedGraphState, phis) -> list[ExtendedGraphState]:
    """``U F phi`` for each ``phi``, where ``s1 = U|0^n>`` and ``F`` fixes ``|0^n>``."""
    ops = fixing_circuit(rng, s1.n, rng.randint(0, 3 * s1.n))
    out = []
    for phi in phis:
        t = run_circuit(phi, ops)
        t.phase(rng.randrange(8))
        out.append(apply_frame(s1, t))
    return out


def dependent_triple(rng: random.Random, tag: TripletTag, max_n: int = 8) -> list[ExtendedGraphState]:
    """Random dependent, pairwise non-parallel triple of the requested shape, shuffled."""
    if tag is TripletTag.PAULI:
        while True:
            n = rng.randint(1, max_n)
            s1 = random_state(rng, n)
            p = random_hermitian_pauli(rng, n)
            if measure_pauli(s1, p)[0] == Fraction(1, 2):
                break
        s2 = apply_pauli(s1, p)
        s2.phase(rng.randrange(8))
        s3 = project_pauli(s1, p)
        s3.phase(rng.randrange(8), a=-1)
        triple = [s1, s2, s3]
    else:
        k = 1 if tag is TripletTag.S else 2
        n = rng.randint(k, max_n)
        s1 = random_state(rng, n)
        hq = rng.sample(range(n), k)
        zero = ExtendedGraphState(Graph(n), [C_H] * n)
        a = zero.copy()
        for q in hq:
            a.left_mul(q, C_H)
        b = a.copy()
        if k == 1:
            apply_gate(b, "S", (hq[0],), inplace=True)
        else:
            apply_gate(b, "CZ", tuple(hq), inplace=True)
            apply_gate(b, "Z", (hq[0],), inplace=True)
            apply_gate(b, "Z", (hq[1],), inplace=True)
        triple = [s1] + _fixed_frame(rng, s1, [a, b])
    rng.shuffle(triple)
    return triple


def suite_triplets(rng: random.Random, cases: int, max_n: int = 8) -> SuiteResult:
    """Constructed dependent triples per shape, plus random triples, against oracle rank."""
    res = SuiteResult("triplets")
    for tag in (TripletTag.PAULI, TripletTag.S, TripletTag.CZ):
        for t in range(cases):
            triple = dependent_triple(rng, tag, max_n)
            vecs = [oracle.densify(s) for s in triple]
            r = classify_triplet(*triple)
            if oracle.dense_rank(vecs) != 2:
                res.fail(f"{tag.value} case {t}: constructed triple has oracle rank {oracle.dense_rank(vecs)}")
            elif r.tag is not tag:
                res.fail(f"{tag.value} case {t}: classified as {r.tag.value}")
            elif np.max(np.abs(sum(complex(a) * v for a, v in zip(r.alphas, vecs)))) > TOL:
                res.fail(f"{tag.value} case {t}: coefficients do not cancel")
            res.cases += 1
    for t in range(cases):
        n = rng.randint(1, max_n)
        triple = [random_state(rng, n) for _ in range(3)]
        rank = oracle.dense_rank([oracle.densify(s) for s in triple])
        r = classify_triplet(*triple)
        if r.dependent != (rank < 3) or (r.tag is TripletTag.PARALLEL and not _has_parallel(triple)):
            res.fail(f"random case {t}: {r.tag.value} vs oracle rank {rank}")
        res.cases += 1
    return res


def _has_parallel(triple) -> bool:
    vecs = [oracle.densify(s) for s in triple]
    return any(oracle.parallel(a, b, 1e-9) for a, b in itertools.combinations(vecs, 2))


def suite_symmetry(rng: random.Random, cases: int, max_n: int = 8) -> SuiteResult:
    """``complete_pair`` on pairs with overlap ``(i-1)/2`` or ``-1/2``: equal overlaps, exactly."""
    res = SuiteResult("symmetry")
    for t in range(cases):
        tag = rng.choice((TripletTag.S, TripletTag.CZ))
        s1, s2, _ = dependent_triple(rng, tag, max_n)
        g = inner_product(s1, s2)
        # rotate s2 so that <s1|s2> is the overlap the symmetry needs
        want = S_OVERLAP if tag is TripletTag.S else CZ_OVERLAP
        s2.scalar = s2.scalar * (want * g.inverse())
        s3 = complete_pair(s1, s2)
        if s3 is None:
            res.fail(f"case {t}: no completion for {tag.value}")
        elif not (inner_product(s2, s3) == inner_product(s3, s1) == inner_product(s1, s2) == want):
            res.fail(f"case {t}: overlaps not all equal to {want}")
        elif not oracle.close(oracle.densify(s3), -(oracle.densify(s1) + oracle.densify(s2)), TOL):
            res.fail(f"case {t}: third state is not -(s1 + s2)")
        res.cases += 1
    return res


SUITES = {
    "canonical": suite_canonical,
    "table1": suite_table1,
    "circuits": suite_circuits,
    "inner": suite_inner,
    "merge": suite_merge,
    "split": suite_split,
    "measure": suite_measure,
    "triplets": suite_triplets,
    "symmetry": suite_symmetry,
}


# -- operation counts ---------------------------------------------------------------------

_LZ = 3


def _star_ok(g: Graph, c: int, mask: int, d: int) -> bool:
    """Would toggling the star ``c x mask`` keep every degree ``<= d``?"""
    mask &= ~(1 << c)
    if ((g.adj[c] ^ mask) & ~(1 << c)).bit_count() > d:
        return False
    return all(g.adj[c] >> q & 1 or g.degree(q) < d for q in iter_bits(mask))


def _z_row_star(s: ExtendedGraphState, x: int, y: int):
    """The star a ``(Z, .)`` row toggles for ``CZ_{x,y}``, or ``None`` for other rows."""
    lx, _ = CONJ[s.codes[x] * 4 + 3]
    ly, _ = CONJ[s.codes[y] * 4 + 3]
    if lx != _LZ and ly != _LZ:
        return None
    if lx != _LZ:
        x, y, lx, ly = y, x, ly, lx
    g = s.graph
    if ly == _LZ:
        return x, 1 << y
    if ly == 1:  # X: star from the Z qubit onto N(y)
        return x, g.adj[y]
    return x, g.adj[y] | (1 << y)  # Y: star from the Z qubit onto M_y


def z_row_workload(rng: random.Random, n: int = 10_000, gates: int = 100_000, d: int = 8):
    """Start state and CZ list whose every gate hits a ``(Z, .)`` row with degrees ``<= d``.

    Half the qubits carry diagonal locals; a candidate pair is kept only when
    one end is diagonal-class and the predicted star keeps all degrees in range.
    Half the candidates are existing edges so the graph does not saturate.
    """
    diag_codes = [c for c in range(24) if CONJ[c * 4 + 3][0] == _LZ]
    codes = [rng.choice(diag_codes) if rng.random() < 0.5 else rng.randrange(24) for _ in range(n)]
    s = ExtendedGraphState(bounded_degree_graph(rng, n, d // 2), codes)
    start = s.copy()
    ops = []
    while len(ops) < gates:
        x = rng.randrange(n)
        nb = s.graph.adj[x]
        if nb and rng.random() < 0.5:
            y = rng.choice(list(iter_bits(nb)))
        else:
            y = rng.randrange(n - 1)
            y += y >= x
        star = _z_row_star(s, x, y)
        if star is None or not _star_ok(s.graph, star[0], star[1], d):
            continue
        apply_cz(s, x, y, inplace=True)
        ops.append((x, y))
    return start, ops


def cz_toggle_profile(s: ExtendedGraphState, ops) -> list[tuple[str, int, int]]:
    """Per gate: (row class ``"Z"`` or ``"other"``, pre-gate ``max(deg x, deg y)``, toggles)."""
    out = []
    g = s.graph
    for x, y in ops:
        d = max(g.degree(x), g.degree(y))
        row = "Z" if _z_row_star(s, x, y) is not None else "other"
        before = g.toggles
        apply_cz(s, x, y, inplace=True)
        out.append((row, d, g.toggles - before))
    return out
