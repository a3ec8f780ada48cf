"""Linearly dependent triplets of stabilizer states.

Three unit stabilizer states are dependent iff their Gram matrix is singular,
which is decided exactly from the three pairwise inner products.  The
dependent, non-parallel triplets come in three shapes, told apart by the
pairwise overlap magnitudes:

* Pauli: ``{phi, P phi, (I + P) phi / sqrt2}``; one pair is orthogonal.
* S: ``{C|0>, C psi, C S_x psi}``; every overlap has modulus ``1/sqrt2``.
* CZ: ``{C|0>, C psi, C Z_x Z_y CZ_{x,y} psi}``; every overlap has modulus ``1/2``.

Overlap patterns can coincide at the boundaries, so the shapes are tested in
the order Pauli, S, CZ and the first match wins.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import PauliOperator, PhaseScalar, QOmega
from .gates import _merge_core, apply_cz
from .graph import Graph
from .inner import apply_frame, inner_product, relative_state
from .state import (
    CONJ,
    C_H,
    C_S,
    C_Z,
    INV,
    W_H,
    ExtendedGraphState,
    to_canonical_form,
)

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)
S_OVERLAP = PhaseScalar(a=1, b=3)  # (i - 1)/2 = 2^(-1/2) w^3
CZ_OVERLAP = PhaseScalar(a=2, b=4)  # -1/2


class TripletTag(enum.Enum):
    INDEPENDENT = "Independent"
    PARALLEL = "Parallel"
    PAULI = "PauliCase"
    S = "SCase"
    CZ = "CZCase"


@dataclass
class TripletClass:
    """Classification result.

    ``alphas`` is a nonzero ``(a1, a2, a3)`` with ``a1 s1 + a2 s2 + a3 s3 = 0``
    (``None`` when independent).  ``witness`` is the Pauli ``P`` for the Pauli
    case, ``(x,)`` for the S case and ``(x, y)`` for the CZ case, with qubits
    read in the frame of the first state of the relevant pair.
    """

    tag: TripletTag
    witness: object = None
    alphas: tuple[QOmega, QOmega, QOmega] | None = None
    gram: tuple[PhaseScalar, PhaseScalar, PhaseScalar] = field(default=None, repr=False)

    @property
    def dependent(self) -> bool:
        return self.tag is not TripletTag.INDEPENDENT

    @property
    def coefficients(self) -> tuple[QOmega, QOmega] | None:
        """``(c2, c3)`` with ``s1 = c2 s2 + c3 s3`` when such a pair exists."""
        if self.alphas is None or self.alphas[0].is_zero():
            return None
        a1, a2, a3 = self.alphas
        return (-a2 / a1, -a3 / a1)


def _check_unit(*states: ExtendedGraphState) -> None:
    n = states[0].n
    for s in states:
        if s.n != n:
            raise ValueError(f"size mismatch: {s.n} vs {n}")
        if s.is_zero or s.scalar.a != 0:
            raise ValueError("triplet routines need unit states")


def _mag2(g: PhaseScalar) -> Fraction:
    return g.abs2()


def gram_determinant(g12: PhaseScalar, g13: PhaseScalar, g23: PhaseScalar) -> QOmega:
    a, b, c = g12.to_ring(), g13.to_ring(), g23.to_ring()
    cross = a * c * b.conjugate()
    return 1 + cross + cross.conjugate() - a.abs2() - b.abs2() - c.abs2()


def _solve_pair(g23: QOmega, r2: QOmega, r3: QOmega) -> tuple[QOmega, QOmega]:
    """Solve ``[[1, g23], [conj g23, 1]] (c2, c3) = (r2, r3)``."""
    det = 1 - g23.abs2()
    c2 = (r2 - g23 * r3) / det
    c3 = (r3 - g23.conjugate() * r2) / det
    return c2, c3


def _basis_bits(psi: ExtendedGraphState) -> tuple[int, PhaseScalar] | None:
    """For ``psi = mu |B>`` return ``(B, mu)``, else ``None``."""
    c = to_canonical_form(psi)
    if c.is_zero or any(code % 6 != W_H for code in c.codes):
        return None
    bits = sum(1 << q for q, code in enumerate(c.codes) if code // 6)
    return bits, c.scalar


def pauli_witness(sa: ExtendedGraphState, sb: ExtendedGraphState) -> PauliOperator | None:
    """Hermitian ``P`` with ``sb`` parallel to ``P sa``, if one exists."""
    found = _basis_bits(relative_state(sa, sb))
    if found is None:
        return None
    bits, _ = found
    # U X^B U^dagger = (tensor C) Z^B (tensor C)^dagger
    letters = []
    for q in range(sa.n):
        letter = 0
        if (bits >> q) & 1:
            inv_code, _ = INV[sa.codes[q]]
            letter, _ = CONJ[inv_code * 4 + 3]
        letters.append("IXYZ"[letter])
    return PauliOperator.from_string("".join(letters))


def _non_h_qubits(psi: ExtendedGraphState) -> tuple[int, ...]:
    c = to_canonical_form(psi)
    return tuple(q for q, code in enumerate(c.codes) if code % 6 != W_H)


def classify_triplet(s1: ExtendedGraphState, s2: ExtendedGraphState, s3: ExtendedGraphState) -> TripletClass:
    _check_unit(s1, s2, s3)
    g12, g13, g23 = inner_product(s1, s2), inner_product(s1, s3), inner_product(s2, s3)
    gram = (g12, g13, g23)
    states = (s1, s2, s3)
    overlaps = {(0, 1): g12, (0, 2): g13, (1, 2): g23}
    mags = {k: _mag2(v) for k, v in overlaps.items()}

    for (i, j), m in mags.items():
        if m == 1:
            # s_j = <s_i|s_j> s_i
            alphas = [QOmega(), QOmega(), QOmega()]
            alphas[i] = overlaps[(i, j)].to_ring()
            alphas[j] = QOmega(-1)
            return TripletClass(TripletTag.PARALLEL, (i, j), tuple(alphas), gram)

    if not gram_determinant(g12, g13, g23).is_zero():
        return TripletClass(TripletTag.INDEPENDENT, None, None, gram)

    # s1 = c2 s2 + c3 s3; s2 and s3 are not parallel here
    c2, c3 = _solve_pair(g23.to_ring(), g12.conjugate().to_ring(), g13.conjugate().to_ring())
    alphas = (QOmega(1), -c2, -c3)

    values = sorted(mags.values())
    if values[0] == 0:
        (i, j) = next(k for k, m in mags.items() if m == 0)
        witness = pauli_witness(states[i], states[j])
        return TripletClass(TripletTag.PAULI, witness, alphas, gram)
    if values == [_HALF] * 3:
        return TripletClass(TripletTag.S, _non_h_qubits(relative_state(s1, s2)), alphas, gram)
    if values == [_QUARTER] * 3:
        return TripletClass(TripletTag.CZ, _non_h_qubits(relative_state(s1, s2)), alphas, gram)
    raise RuntimeError(f"dependent triplet with unexpected overlaps {values}")


def complete_pair(s1: ExtendedGraphState, s2: ExtendedGraphState) -> ExtendedGraphState | None:
    """A third state forming a dependent triplet with ``s1`` and ``s2``.

    * ``<s1|s2> = (i-1)/2`` or ``-1/2``: returns ``-(s1 + s2)``.
    * ``s2 = i^k P s1`` for a Pauli ``P``: returns ``(s1 + s2)/sqrt2``.
    * otherwise ``None``.
    """
    _check_unit(s1, s2)
    psi = relative_state(s1, s2)
    g = inner_product(s1, s2)
    if g == S_OVERLAP:
        (x,) = _non_h_qubits(psi)
        phi = psi.copy()
        phi.left_mul(x, C_S)
        phi.phase(2)
        return apply_frame(s1, phi)
    if g == CZ_OVERLAP:
        x, y = _non_h_qubits(psi)
        phi = psi.copy()
        apply_cz(phi, x, y, inplace=True)
        phi.left_mul(x, C_Z)
        phi.left_mul(y, C_Z)
        return apply_frame(s1, phi)
    found = _basis_bits(psi)
    if found is None:
        return None
    bits, mu = found
    if bits == 0 or mu.b % 2:
        return None
    # |0> + i^k |B> = H^n (I + i^k Z^B) |+>^n
    phi = ExtendedGraphState(Graph(s1.n))
    _merge_core(phi, bits, mu.b // 2)
    for q in range(phi.n):
        phi.left_mul(q, C_H)
    phi.phase(0, a=1)
    return apply_frame(s1, phi)


def _num(x: float) -> str:
    return f"{round(x, 12) + 0.0:.12g}"


def format_coefficient(c: QOmega) -> str:
    """``(u+vi)/2^(m/2)`` when that form exists, always followed by a decimal."""
    z = c.to_complex()
    if round(z.imag, 12) == 0:
        dec = _num(z.real)
    elif round(z.real, 12) == 0:
        dec = f"{_num(z.imag)}i"
    else:
        dec = f"{_num(z.real)}{'+' if z.imag > 0 else '-'}{_num(abs(z.imag))}i"
    g = c.gaussian_form()
    if g is None:
        return f"{c} = {dec}"
    u, v, m = g
    if v == 0:
        exact = str(u)
    elif u == 0:
        exact = f"{v}i"
    else:
        exact = f"({u}{v:+d}i)"
    if m:
        exact += f"/2^({m}/2)"
    return f"{exact} = {dec}"


__all__ = [
    "TripletClass",
    "TripletTag",
    "classify_triplet",
    "complete_pair",
    "format_coefficient",
    "gram_determinant",
    "pauli_witness",
]
