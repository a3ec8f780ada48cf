"""Gate application on extended graph states.

Two-qubit gates reduce to the operator
``psi_PQ = 1/2 ((I + P_x) + (I - P_x) Q_y)`` applied to the bare graph state,
where ``P`` and ``Q`` are the images of ``Z_x`` and ``Z_y`` under the local
Cliffords.  ``psi_PQ`` is symmetric under swapping ``(P, x)`` with
``(Q, y)``, and negating a letter only costs an extra Pauli:
``psi_{-P,Q} = Q psi_{P,Q}`` and ``psi_{P,-Q} = P psi_{P,Q}``.

Below, ``M_v = N(v) + v``.  The six letter pairs that remain after the
symmetries have closed forms:

====== ============ =====================================================
P, Q   adjacent     result
====== ============ =====================================================
Z, Z   either       ``CZ_{x,y} |G>``
Z, X   either       ``prod_{q in N_y} CZ_{x,q} |G>``
Y, Z   either       ``S_y Z_y prod_{q in M_x} CZ_{y,q} |G>``
X, X   no           ``prod_{N_x x N_y} CZ |G>``
X, X   yes          ``H_x H_y CZ_{x,y} Z_x Z_y prod_{M_x x M_y} CZ |G>``
Y, X   no           ``prod_{T} Z prod_{T x T} CS prod_{M_x x M_x} CS |G>``, ``T = M_x ^ N_y``
Y, X   yes          ``w^-1 prod_{M_x} S H_x prod_{q in (N_x ^ N_y) - x} CZ_{x,q} |L_x G>``
Y, Y   no           ``w^-1 prod_{M_x} S H_x prod_{q in M_y} CZ_{x,q} |L_x G>``
Y, Y   yes          ``-i prod_{M_x x M_x} CS prod_{M_y x M_y} CS |G>``
====== ============ =====================================================

Products over a set range over ordered pairs with ``CU_{a,a} = U_a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LocalClifford, PauliOperator, SinglePauli
from .graph import Graph, iter_bits
from .state import (
    CONJ,
    C_H,
    C_S,
    C_SDG,
    B_SDG,
    C_Z,
    LETTER_CODE,
    ExtendedGraphState,
)

LX, LY, LZ = 1, 2, 3
_LETTER_IDX = {"X": LX, "Y": LY, "Z": LZ}


def _check_qubit(s: ExtendedGraphState, q: int) -> None:
    if not 0 <= q < s.n:
        raise ValueError(f"qubit {q} out of range for n={s.n}")


# -- Table 1 ------------------------------------------------------------------


def _pq_core(s: ExtendedGraphState, x: int, p: int, y: int, q: int) -> None:
    """Right-multiply ``psi_PQ`` for positive letters ``p`` at ``x``, ``q`` at ``y``."""
    if (p, q) in ((LX, LZ), (LZ, LY), (LX, LY)):
        x, y, p, q = y, x, q, p
    g = s.graph
    bx, by = 1 << x, 1 << y
    adj = bool(g.adj[x] & by)
    if p == LZ and q == LZ:
        g.toggle_edge(x, y)
    elif p == LZ and q == LX:
        g.toggle_star(x, g.adj[y])
        if adj:
            s.right_mul(x, C_Z)
    elif p == LY and q == LZ:
        m1 = g.adj[x] | bx
        g.toggle_star(y, m1)
        s.right_mul(y, C_S)
        if not adj:
            s.right_mul(y, C_Z)
    elif p == LX and q == LX:
        if adj:
            both = g.toggle_biclique(g.adj[x] | bx, g.adj[y] | by)
            g.toggle_edge(x, y)
            s.right_mul(x, C_H)
            s.right_mul(y, C_H)
            s.right_z(both ^ bx ^ by)
        else:
            both = g.toggle_biclique(g.adj[x], g.adj[y])
            s.right_z(both)
    elif p == LY and q == LX:
        n1, n2 = g.adj[x], g.adj[y]
        if adj:
            g.toggle_clique(n1)
            g.toggle_star(x, (n1 ^ n2) & ~bx)
            _s_h_on(s, x, n1)
        else:
            m1 = n1 | bx
            t = m1 ^ n2
            g.toggle_clique(t)
            g.toggle_clique(m1)
            s.right_s(t)
            s.right_z(t)
            s.right_s(m1)
    elif p == LY and q == LY:
        n1, n2 = g.adj[x], g.adj[y]
        if adj:
            m1, m2 = n1 | bx, n2 | by
            g.toggle_clique(m1)
            g.toggle_clique(m2)
            s.right_s(m1)
            s.right_s(m2)
            s.phase(6)
        else:
            g.toggle_clique(n1)
            g.toggle_star(x, n2 | by)
            _s_h_on(s, x, n1)
    else:  # pragma: no cover - the swap above makes this unreachable
        raise AssertionError((p, q))


def _s_h_on(s: ExtendedGraphState, x: int, n1: int) -> None:
    """``w^-1 prod_{M_x} S H_x`` as right multiplications."""
    s.right_mul(x, C_S)
    s.right_mul(x, C_H)
    s.right_s(n1)
    s.phase(7)


def _pq_signed(s: ExtendedGraphState, x: int, p: int, kp: int, y: int, q: int, kq: int) -> None:
    """``psi`` for ``i^kp P`` and ``i^kq Q`` (Hermitian, so ``kp, kq`` in ``{0, 2}``)."""
    if kp:
        s.right_mul(y, LETTER_CODE[q], 2 * kq)
    if kq:
        s.right_mul(x, LETTER_CODE[p])
    _pq_core(s, x, p, y, q)


@dataclass(frozen=True)
class PQCase:
    """Letters ``P`` on qubit ``x`` and ``Q`` on qubit ``y``."""

    P: SinglePauli
    Q: SinglePauli
    x: int = 0
    y: int = 1

    def adjacent(self, g: Graph) -> bool:
        return g.has_edge(self.x, self.y)


def psi_pq(g: Graph, case: PQCase) -> ExtendedGraphState:
    """``1/2 ((I + P_x) + (I - P_x) Q_y) |G>`` as an extended graph state."""
    P, Q, x, y = case.P, case.Q, case.x, case.y
    if x == y:
        raise ValueError("psi_pq needs two distinct qubits")
    for pauli in (P, Q):
        if not pauli.is_hermitian() or pauli.letter == "I":
            raise ValueError(f"{pauli} is not a Hermitian non-identity Pauli")
    s = ExtendedGraphState(g.copy())
    _pq_signed(s, x, _LETTER_IDX[P.letter], P.phase_exp, y, _LETTER_IDX[Q.letter], Q.phase_exp)
    return s


# -- gates ----------------------------------------------------------------------


def _maybe_copy(s: ExtendedGraphState, inplace: bool) -> ExtendedGraphState:
    return s if inplace else s.copy()


def apply_local(s: ExtendedGraphState, q: int, c: LocalClifford, inplace: bool = False) -> ExtendedGraphState:
    _check_qubit(s, q)
    out = _maybe_copy(s, inplace)
    out.left_mul(q, c.code, 2 * c.phase_exp)
    return out


def apply_gate_1q(s: ExtendedGraphState, q: int, name: str, inplace: bool = False) -> ExtendedGraphState:
    """Apply one of ``H, S, SDG, X, Y, Z`` by name."""
    _check_qubit(s, q)
    out = _maybe_copy(s, inplace)
    name = name.upper()
    if name == "SDG":
        out.left_mul(q, C_SDG, B_SDG)
    elif name in ("H", "S"):
        out.left_mul(q, C_H if name == "H" else C_S)
    elif name in _LETTER_IDX:
        out.left_mul(q, LETTER_CODE[_LETTER_IDX[name]])
    elif name != "I":
        raise ValueError(f"unknown single-qubit gate {name!r}")
    return out


def apply_pauli(s: ExtendedGraphState, p: PauliOperator, inplace: bool = False) -> ExtendedGraphState:
    if p.n != s.n:
        raise ValueError(f"Pauli size mismatch: {p.n} vs {s.n}")
    out = _maybe_copy(s, inplace)
    out.phase(2 * p.hermitian_sign_exp())
    for q in iter_bits(p.x | p.z):
        out.left_mul(q, LETTER_CODE[_bits_letter(p, q)])
    return out


def _bits_letter(p: PauliOperator, q: int) -> int:
    bx, bz = (p.x >> q) & 1, (p.z >> q) & 1
    return (0, LZ, LX, LY)[bx * 2 + bz]


def apply_cz(s: ExtendedGraphState, x: int, y: int, inplace: bool = False) -> ExtendedGraphState:
    _check_qubit(s, x)
    _check_qubit(s, y)
    if x == y:
        raise ValueError("CZ needs two distinct qubits")
    out = _maybe_copy(s, inplace)
    if out.scalar.zero:
        return out
    p, kp = CONJ[out.codes[x] * 4 + 3]
    q, kq = CONJ[out.codes[y] * 4 + 3]
    _pq_signed(out, x, p, kp, y, q, kq)
    return out


def apply_cx(s: ExtendedGraphState, control: int, target: int, inplace: bool = False) -> ExtendedGraphState:
    if control == target:
        raise ValueError("CX needs two distinct qubits")
    out = apply_gate_1q(s, target, "H", inplace)
    apply_cz(out, control, target, inplace=True)
    return apply_gate_1q(out, target, "H", inplace=True)


def apply_cy(s: ExtendedGraphState, control: int, target: int, inplace: bool = False) -> ExtendedGraphState:
    """``CY = S_t CX S_t^dagger``."""
    if control == target:
        raise ValueError("CY needs two distinct qubits")
    out = apply_gate_1q(s, target, "SDG", inplace)
    apply_cx(out, control, target, inplace=True)
    return apply_gate_1q(out, target, "S", inplace=True)


GATES_1Q = ("H", "S", "SDG", "X", "Y", "Z")
GATES_2Q = ("CZ", "CX", "CY")
_TWO_QUBIT = {"CZ": apply_cz, "CX": apply_cx, "CY": apply_cy}


def apply_gate(s: ExtendedGraphState, name: str, qubits: tuple[int, ...], inplace: bool = False) -> ExtendedGraphState:
    """Dispatch by mnemonic; qubits are 0-based."""
    name = name.upper()
    if name in _TWO_QUBIT:
        if len(qubits) != 2:
            raise ValueError(f"{name} takes two qubits")
        return _TWO_QUBIT[name](s, qubits[0], qubits[1], inplace)
    if len(qubits) != 1:
        raise ValueError(f"{name} takes one qubit")
    return apply_gate_1q(s, qubits[0], name, inplace)


# -- projector merging -----------------------------------------------------------


@dataclass(frozen=True)
class MergeSpec:
    """``I + i^k prod_{j in B} Z_j``."""

    B: frozenset[int]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "B", frozenset(self.B))
        object.__setattr__(self, "k", self.k % 4)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.B:
            m |= 1 << v
        return m


def _merge_core(s: ExtendedGraphState, bmask: int, k: int) -> None:
    """Right-multiply ``(I + i^k Z_B)`` onto the graph side of ``s``."""
    g = s.graph
    k %= 4
    if k % 2:
        # (I + i^k Z_B) = (1 + i^k) prod_B Z^{m+1} prod_{B x B} CS, k = 2m + 1
        m = k // 2
        g.toggle_clique(bmask)
        s.right_s(bmask)
        if m % 2 == 0:
            s.right_z(bmask)
        s.phase(1 if k == 1 else 7, a=-1)
        return
    # anchor a = min(B), A = N(a) + a:
    # (I + i^k Z_B) = sqrt2 H_a Z_a prod_{A x A} CS^k prod_{A x B} CZ
    a = (bmask & -bmask).bit_length() - 1
    amask = g.adj[a] | (1 << a)
    both = g.toggle_biclique(amask, bmask)
    s.right_mul(a, C_H)
    s.right_mul(a, C_Z)
    if k == 2:
        # CS^2 over ordered pairs: off-diagonal pairs cancel, diagonal gives Z
        s.right_z(amask)
    s.right_z(both)
    s.phase(0, a=-1)


def merge_z(g: Graph, spec: MergeSpec) -> ExtendedGraphState:
    """``(I + i^k Z_B) |G>``; not normalized (norm ``sqrt 2``)."""
    if not spec.B:
        raise ValueError("merge_z needs a nonempty set B")
    if max(spec.B) >= g.n or min(spec.B) < 0:
        raise ValueError("B contains an out-of-range vertex")
    s = ExtendedGraphState(g.copy())
    _merge_core(s, spec.mask, spec.k)
    return s


def pauli_to_graph_z(s: ExtendedGraphState, p: PauliOperator) -> tuple[int, int]:
    """Write ``(tensor C) ^dagger P (tensor C) |G>`` as ``i^k Z^B |G>``; returns ``(B, k)``."""
    k = p.hermitian_sign_exp()
    xm = zm = 0
    for q in iter_bits(p.x | p.z):
        letter, kk = CONJ[s.codes[q] * 4 + _bits_letter(p, q)]
        k += kk
        if letter in (LX, LY):
            xm |= 1 << q
        if letter in (LZ, LY):
            zm |= 1 << q
        if letter == LY:
            k += 1
    return s.graph_pauli_to_z(xm, zm, k % 4)


def project_pauli(s: ExtendedGraphState, p: PauliOperator, inplace: bool = False) -> ExtendedGraphState:
    """``(I + P)/2 |s>`` for Hermitian ``P``, unnormalized."""
    if p.n != s.n:
        raise ValueError(f"Pauli size mismatch: {p.n} vs {s.n}")
    if not p.is_hermitian():
        raise ValueError(f"{p} is not Hermitian")
    out = _maybe_copy(s, inplace)
    if out.is_zero:
        return out
    bmask, k = pauli_to_graph_z(out, p)
    if not bmask:
        if k == 2:
            out.set_zero()
        return out
    _merge_core(out, bmask, k)
    out.phase(0, a=2)
    return out


def measure_pauli(s: ExtendedGraphState, p: PauliOperator) -> tuple[Fraction, ExtendedGraphState]:
    """Probability of the ``+1`` outcome and the normalized post-measurement state.

    The ``-1`` branch is the same call with ``-P``.  A zero-probability
    branch returns the zero state.
    """
    if not p.is_hermitian():
        raise ValueError(f"{p} is not Hermitian")
    if p.n != s.n:
        raise ValueError(f"Pauli size mismatch: {p.n} vs {s.n}")
    out = s.copy()
    if out.is_zero:
        return Fraction(0), out
    bmask, k = pauli_to_graph_z(out, p)
    if not bmask:
        if k == 0:
            return Fraction(1), out
        out.set_zero()
        return Fraction(0), out
    _merge_core(out, bmask, k)
    out.phase(0, a=1)
    return Fraction(1, 2), out


def split_hh(g: Graph, x: int, y: int) -> tuple[ExtendedGraphState, ExtendedGraphState]:
    """Two states summing to ``H_x H_y |G>`` for non-adjacent ``x != y``.

    ``Z_x Z_y |G>`` and ``prod_{N(x)} Z prod_{N(y)} Z prod_{A x B} CZ |G>``
    with ``A = N(x) + x``, ``B = N(y) + y``.
    """
    if x == y:
        raise ValueError("split_hh needs two distinct qubits")
    if g.has_edge(x, y):
        raise ValueError("split_hh needs non-adjacent qubits; use the H-sliding rule")
    first = ExtendedGraphState(g.copy())
    first.right_mul(x, C_Z)
    first.right_mul(y, C_Z)
    second = ExtendedGraphState(g.copy())
    nx, ny = g.adj[x], g.adj[y]
    both = second.graph.toggle_biclique(nx | (1 << x), ny | (1 << y))
    second.right_z(nx ^ ny ^ both)
    return first, second


__all__ = [
    "GATES_1Q",
    "GATES_2Q",
    "MergeSpec",
    "PQCase",
    "apply_cx",
    "apply_cy",
    "apply_cz",
    "apply_gate",
    "apply_gate_1q",
    "apply_local",
    "apply_pauli",
    "measure_pauli",
    "merge_z",
    "project_pauli",
    "psi_pq",
    "split_hh",
]
