"""Stabilizer decompositions of ``(T|+>)^n`` written as extended graph states.

Each term is ``coeff * (tensor_q W_q) |G>`` with ``W_q`` a gate word read
leftmost-outermost.  Coefficients are exact elements of ``Q(w)``.  In ``N6``
the first term sits on the star centred at qubit 5 and the sum misses the
magic state by 1/4 in max norm.  ``N6_FIXED`` moves that term to the star
centred at qubit 0, and then the sum matches.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import oracle
from .algebra import LocalClifford, QOmega
from .graph import Graph, complete_graph, empty_graph, star_graph
from .state import ExtendedGraphState

W = QOmega.omega(1)
I_ = QOmega.omega(2)
INV_SQRT2 = QOmega.sqrt2().inverse()
HALF = QOmega(Fraction(1, 2))


@dataclass(frozen=True)
class Term:
    coeff: QOmega
    graph: Graph
    words: tuple[str, ...]

    def state(self) -> ExtendedGraphState:
        """Unit-norm extended graph state for this term, coefficient excluded."""
        locals_, phase = [], None
        for word in self.words:
            c, f = LocalClifford.from_gates(word)
            locals_.append(c)
            phase = f if phase is None else phase * f
        return ExtendedGraphState.from_locals(self.graph.copy(), locals_, phase)


def _words(n: int, default: str, **special: str) -> tuple[str, ...]:
    out = [default] * n
    for key, word in special.items():
        out[int(key[1:])] = word
    return tuple(out)


N3 = (
    Term((I_ - W) * HALF, empty_graph(3), _words(3, "Z")),
    Term(-(I_ + W) * HALF, complete_graph(3), _words(3, "Z")),
    Term((1 + W) * HALF, star_graph(3, 2), _words(3, "I", q0="H", q1="H", q2="S")),
)

_T6 = (
    Term(I_ * W * HALF, star_graph(6, 0), _words(6, "I", q0="H")),
    Term(-HALF, complete_graph(6), _words(6, "SZ", q0="HSZSZ")),
    Term(-W * HALF, complete_graph(6), _words(6, "Z", q0="HZZ")),
    Term(HALF * INV_SQRT2, star_graph(6, 5), _words(6, "H", q5="HHSZ")),
    Term(-I_ * HALF, star_graph(6, 0), _words(6, "S", q0="HSS")),
)

N6 = (Term(-W * HALF * INV_SQRT2, star_graph(6, 5), _words(6, "HZ", q5="HHZ")),) + _T6
N6_FIXED = (Term(-W * HALF * INV_SQRT2, star_graph(6, 0), _words(6, "HZ", q0="HHZ")),) + _T6

DECOMPOSITIONS = {"n3": N3, "n6": N6, "n6-fixed": N6_FIXED}


def dense_sum(terms) -> np.ndarray:
    return sum(complex(t.coeff) * oracle.densify(t.state()) for t in terms)


def residual(terms) -> float:
    """Max-abs distance between the decomposition and the magic state."""
    n = terms[0].graph.n
    return float(np.max(np.abs(dense_sum(terms) - oracle.magic_state(n))))


__all__ = ["DECOMPOSITIONS", "N3", "N6", "N6_FIXED", "Term", "dense_sum", "residual"]
