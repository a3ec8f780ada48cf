"""Exact inner products of extended graph states.

``<s1|s2> = conj(a1) <0^n| H^n prod_{E(G1)} CZ (tensor D) |G2>`` with
``D_i = C1_i^-1 C2_i``.  The ``CZ`` layer of ``G1`` is applied one star
(all edges from ``p`` to higher partners) at a time.  Before a star, the
local at ``p`` is rotated so that it maps ``Z`` to ``+-Z``; every gate of the
star then falls into a linear-cost row of the ``psi_PQ`` table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ZERO, PhaseScalar
from .gates import _pq_signed, apply_cz
from .graph import Graph, iter_bits
from .state import (
    CONJ,
    C_H,
    C_Z,
    W_H,
    ExtendedGraphState,
    INV,
    basis_state,
    is_reduced,
)

_LX, _LY, _LZ = 1, 2, 3


@dataclass(frozen=True)
class StarOp:
    """``prod_{q in partners} CZ_{center, q}``."""

    center: int
    partners: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "partners", frozenset(self.partners))
        if self.center in self.partners:
            raise ValueError("a star never includes its own center")


@dataclass
class InnerStats:
    toggles: int = 0
    max_degree: int = 0
    stars: int = 0


def zero_overlap(s: ExtendedGraphState) -> PhaseScalar:
    """``<0^n|s>`` for a reduced state."""
    if s.is_zero:
        return ZERO
    if not is_reduced(s):
        raise ValueError("zero_overlap needs a reduced state")
    k = 0
    for c in s.codes:
        if c % 6 == W_H:
            if c // 6:  # X H |+> = |1>
                return ZERO
            k += 1
    return s.scalar * PhaseScalar(a=s.n - k)


def fold_frames(s1: ExtendedGraphState, s2: ExtendedGraphState) -> ExtendedGraphState:
    """``conj(a1) a2 (tensor C1^-1 C2) |G2>``: ``s2`` seen from ``s1``'s locals."""
    work = s2.copy()
    for q, c in enumerate(s1.codes):
        inv_code, w = INV[c]
        work.left_mul(q, inv_code, w)
    work.scalar = work.scalar * s1.scalar.conjugate()
    return work


def apply_star(work: ExtendedGraphState, star: StarOp) -> None:
    """Apply ``prod_q CZ_{p,q}`` in place at linear cost per partner."""
    p = star.center
    partners = sorted(star.partners)
    if not partners:
        return
    letter, k = CONJ[work.codes[p] * 4 + 3]
    if letter == _LX:
        nb = work.graph.adj[p]
        if not nb:
            # |G> = |+>_p |G - p>, and X_p |+> = |+>: CZ_{p,q} acts as Z_q^{[sign = -1]}
            if k:
                for q in partners:
                    work.left_mul(q, C_Z)
            return
        r = (nb & -nb).bit_length() - 1
        work.hh_swap(p, r)
    elif letter == _LY:
        work.lc(p)
    for q in partners:
        lp, kp = CONJ[work.codes[p] * 4 + 3]
        lq, kq = CONJ[work.codes[q] * 4 + 3]
        _pq_signed(work, p, lp, kp, q, lq, kq)


def _relative(s1: ExtendedGraphState, s2: ExtendedGraphState, stats: InnerStats) -> ExtendedGraphState:
    work = fold_frames(s1, s2)
    g1 = s1.graph
    for p in range(s1.n):
        higher = g1.adj[p] >> (p + 1) << (p + 1)
        if not higher:
            continue
        apply_star(work, StarOp(p, frozenset(iter_bits(higher))))
        stats.stars += 1
        stats.max_degree = max(stats.max_degree, work.graph.max_degree())
    for q in range(work.n):
        work.left_mul(q, C_H)
    work.reduce()
    stats.max_degree = max(stats.max_degree, work.graph.max_degree())
    stats.toggles = work.graph.toggles
    return work


def relative_state(s1: ExtendedGraphState, s2: ExtendedGraphState) -> ExtendedGraphState:
    """``U^dagger s2`` in reduced form, where ``s1 = U |0^n>``.

    ``U = a1 (tensor C1) prod_{E(G1)} CZ H^n``; it is unitary when ``s1`` is a
    unit state.  ``<s1|s2>`` is the ``|0^n>`` amplitude of the result.
    """
    if s1.n != s2.n:
        raise ValueError(f"size mismatch: {s1.n} vs {s2.n}")
    if s1.is_zero or s2.is_zero:
        return ExtendedGraphState(Graph(s1.n), None, ZERO)
    return _relative(s1, s2, InnerStats())


def apply_frame(s1: ExtendedGraphState, phi: ExtendedGraphState) -> ExtendedGraphState:
    """``U phi`` for the frame ``U`` of :func:`relative_state`."""
    if s1.n != phi.n:
        raise ValueError(f"size mismatch: {s1.n} vs {phi.n}")
    out = phi.copy()
    for q in range(out.n):
        out.left_mul(q, C_H)
    for u, v in s1.graph.edges():
        apply_cz(out, u, v, inplace=True)
    for q, c in enumerate(s1.codes):
        out.left_mul(q, c)
    out.scalar = out.scalar * s1.scalar
    return out


def inner_product_stats(s1: ExtendedGraphState, s2: ExtendedGraphState) -> tuple[PhaseScalar, InnerStats]:
    """``<s1|s2>`` plus edge-toggle count and the largest degree observed."""
    if s1.n != s2.n:
        raise ValueError(f"size mismatch: {s1.n} vs {s2.n}")
    stats = InnerStats(max_degree=max(s1.graph.max_degree(), s2.graph.max_degree()))
    if s1.is_zero or s2.is_zero:
        return ZERO, stats
    return zero_overlap(_relative(s1, s2, stats)), stats


def inner_product(s1: ExtendedGraphState, s2: ExtendedGraphState) -> PhaseScalar:
    return inner_product_stats(s1, s2)[0]


def inner_product_naive(s1: ExtendedGraphState, s2: ExtendedGraphState) -> PhaseScalar:
    """Same value with one ``apply_cz`` per edge; a cross-check only."""
    if s1.n != s2.n:
        raise ValueError(f"size mismatch: {s1.n} vs {s2.n}")
    if s1.is_zero or s2.is_zero:
        return ZERO
    work = fold_frames(s1, s2)
    for u, v in s1.graph.edges():
        apply_cz(work, u, v, inplace=True)
    for q in range(work.n):
        work.left_mul(q, C_H)
    work.reduce()
    return zero_overlap(work)


def amplitude(s: ExtendedGraphState, bits: str) -> PhaseScalar:
    if len(bits) != s.n:
        raise ValueError(f"expected {s.n} bits, got {len(bits)}")
    return inner_product(basis_state(bits), s)


__all__ = [
    "InnerStats",
    "StarOp",
    "amplitude",
    "apply_frame",
    "apply_star",
    "fold_frames",
    "inner_product",
    "inner_product_naive",
    "inner_product_stats",
    "relative_state",
    "zero_overlap",
]
