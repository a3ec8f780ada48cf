"""Extended graph states ``alpha * (C_0 x ... x C_{n-1}) |G>`` and canonical forms.

Each local ``C_q`` is stored as a phase-free code ``0..23`` (Pauli times coset
word); every phase lives in the :class:`PhaseScalar`.  The in-place rewrite
methods below are the building blocks of the gate and inner-product code:

* :meth:`ExtendedGraphState.lc` rewrites ``|G>`` into ``|L_x G>``;
* :meth:`ExtendedGraphState.hh_swap` rewrites ``|G>`` across an edge ``(x, y)``
  so that both endpoints pick up an ``H`` on their graph side.

Each of them keeps the represented vector fixed, phase included.
"""

from __future__ import annotations

import enum
import itertools
import json
from typing import Iterator, Sequence

from .algebra import (
    ONE,
    PAULI_LETTERS,
    WORDS,
    ZERO,
    LocalClifford,
    PhaseScalar,
    clifford_tables,
    code_of,
    pauli_of,
    word_of,
)
from .graph import Graph, GuardError, iter_bits, to_dot as graph_to_dot

MAX_ENUM_QUBITS = 5

_CONJ, _MUL_NESTED, INV = clifford_tables()
# flat tables for the hot paths
MUL = [_MUL_NESTED[a][b] for a in range(24) for b in range(24)]
CONJ = [(PAULI_LETTERS.index(_CONJ[c][p][0]), _CONJ[c][p][1]) for c in range(24) for p in range(4)]
WORD_INDEX = [c % 6 for c in range(24)]

W_I, W_S, W_H, W_SH, W_HS, W_HSH = range(6)

C_ID = code_of("I", "I")
C_X = code_of("X", "I")
C_Y = code_of("Y", "I")
C_Z = code_of("Z", "I")
C_H = code_of("I", "H")
C_S = code_of("I", "S")
LETTER_CODE = (C_ID, C_X, C_Y, C_Z)


def _gate_code(letters: str) -> tuple[int, int]:
    """Code ``c`` and ``b`` with ``prod(letters) = w^b * M_c`` (leftmost outermost)."""
    c, b = C_ID, 0
    for ch in letters:
        c, w = MUL[c * 24 + {"H": C_H, "S": C_S, "X": C_X, "Y": C_Y, "Z": C_Z}[ch]]
        b += w
    return c, b % 8


C_SDG, B_SDG = _gate_code("SSS")
C_LC, B_LC = _gate_code("HSSSH")  # H S^dagger H

# Z-images on the graph side: D^dagger Z D is +-Z for I, S; +-X for H, SH; +-Y for HS, HSH
Z_CLASS = {W_I, W_S}
X_CLASS = {W_H, W_SH}
Y_CLASS = {W_HS, W_HSH}
ENDS_IN_H = {W_H, W_SH, W_HSH}


class FormClass(enum.Enum):
    GENERAL = "General"
    REDUCED = "Reduced"
    CANONICAL = "Canonical"


class ExtendedGraphState:
    """``scalar * tensor(locals) |graph>``; mutable, see module docstring."""

    __slots__ = ("graph", "codes", "scalar")

    def __init__(self, graph: Graph, codes: Sequence[int] | None = None, scalar: PhaseScalar = ONE):
        self.graph = graph
        self.codes = list(codes) if codes is not None else [C_ID] * graph.n
        if len(self.codes) != graph.n:
            raise ValueError("one local Clifford per qubit is required")
        self.scalar = scalar

    @classmethod
    def from_locals(cls, graph: Graph, locals_: Sequence[LocalClifford], scalar: PhaseScalar = ONE):
        k = sum(c.phase_exp for c in locals_)
        return cls(graph, [c.code for c in locals_], scalar * PhaseScalar.omega(2 * k))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def locals(self) -> list[LocalClifford]:
        return [LocalClifford.from_code(c) for c in self.codes]

    @property
    def is_zero(self) -> bool:
        return self.scalar.zero

    def copy(self) -> "ExtendedGraphState":
        return ExtendedGraphState(self.graph.copy(), self.codes, self.scalar)

    def __repr__(self):
        locs = " ".join(str(c) for c in self.locals)
        return f"ExtendedGraphState(scalar={self.scalar}, locals=[{locs}], edges={self.graph.edges()})"

    def key(self) -> tuple:
        return (self.scalar, tuple(self.codes), self.graph.key())

    # -- elementary in-place updates ----------------------------------------

    def phase(self, b: int, a: int = 0) -> None:
        """Multiply the scalar by ``2^(-a/2) w^b``."""
        if b % 8 or a:
            self.scalar = self.scalar * PhaseScalar(a=a, b=b)

    def left_mul(self, q: int, code: int, b: int = 0) -> None:
        """``C_q <- (w^b M_code) C_q``."""
        c, w = MUL[code * 24 + self.codes[q]]
        self.codes[q] = c
        if (w + b) % 8:
            self.scalar = self.scalar * PhaseScalar(b=w + b)

    def right_mul(self, q: int, code: int, b: int = 0) -> None:
        """``C_q <- C_q (w^b M_code)``: an operator applied on the graph side."""
        c, w = MUL[self.codes[q] * 24 + code]
        self.codes[q] = c
        if (w + b) % 8:
            self.scalar = self.scalar * PhaseScalar(b=w + b)

    def right_z(self, mask: int) -> None:
        for q in iter_bits(mask):
            self.right_mul(q, C_Z)

    def right_s(self, mask: int) -> None:
        for q in iter_bits(mask):
            self.right_mul(q, C_S)

    def word(self, q: int) -> int:
        return WORD_INDEX[self.codes[q]]

    def set_zero(self) -> None:
        self.scalar = ZERO
        self.graph = Graph(self.n)
        self.codes = [C_ID] * self.n

    # -- graph rewrites ------------------------------------------------------

    def lc(self, x: int) -> None:
        """``|G> = H_x S_x^dagger H_x prod_{p in N(x)} S_p |L_x G>``."""
        g = self.graph
        nb = g.adj[x]
        self.right_mul(x, C_LC, B_LC)
        self.right_s(nb)
        g.toggle_clique(nb)

    def hh_swap(self, x: int, y: int) -> None:
        """For an edge ``(x, y)``: ``|G> = H_x H_y Z_x Z_y prod_{A x B} CZ |G>``.

        ``A = N(x) + x`` and ``B = N(y) + y``.  The biclique product emits ``Z``
        on ``A & B``, which contains both ``x`` and ``y``, so those two ``Z``
        cancel against ``Z_x Z_y``.
        """
        g = self.graph
        if not g.has_edge(x, y):
            raise ValueError(f"hh_swap needs the edge ({x}, {y})")
        a = g.adj[x] | (1 << x)
        b = g.adj[y] | (1 << y)
        both = g.toggle_biclique(a, b)
        zmask = both ^ (1 << x) ^ (1 << y)
        self.right_z(zmask)
        self.right_mul(x, C_H)
        self.right_mul(y, C_H)

    # -- Pauli layer ---------------------------------------------------------

    def push_paulis_to_graph(self) -> tuple[int, int, int]:
        """Move every Pauli part to the graph side as ``i^k X^x Z^z``.

        Returns ``(x, z, k)``; the locals are left as bare words.
        """
        xm = zm = 0
        k = 0
        for q in range(self.n):
            code = self.codes[q]
            pi = code // 6
            if pi == 0:
                continue
            word_code = code % 6
            # P W = W (W^dagger P W)
            letter, kk = CONJ[word_code * 4 + pi]
            self.codes[q] = word_code
            if letter == 1:
                xm |= 1 << q
            elif letter == 3:
                zm |= 1 << q
            elif letter == 2:  # Y = i X Z
                xm |= 1 << q
                zm |= 1 << q
                kk += 1
            k += kk
        return xm, zm, k % 4

    def graph_pauli_to_z(self, xm: int, zm: int, k: int) -> tuple[int, int]:
        """Rewrite ``i^k X^xm Z^zm |G>`` as ``i^k' Z^B |G>``; returns ``(B, k')``.

        Uses ``X_q |G> = prod_{p in N(q)} Z_p |G>`` per qubit.  Reordering to
        ``Z^zm X^xm`` costs ``(-1)^{|xm & zm|}`` and pulling the ``X`` factors
        through each other's ``Z`` images costs one sign per edge inside ``xm``.
        """
        g = self.graph
        sign = (xm & zm).bit_count()
        zout = zm
        inner_edges = 0
        for q in iter_bits(xm):
            row = g.adj[q]
            zout ^= row
            inner_edges += (row & xm).bit_count()
        sign += inner_edges // 2
        return zout, (k + 2 * sign) % 4

    def eliminate_paulis(self) -> None:
        """Leave each local as ``W z`` with ``z`` in ``{I, Z}`` on the graph side."""
        if self.is_zero:
            return
        xm, zm, k = self.push_paulis_to_graph()
        zmask, k = self.graph_pauli_to_z(xm, zm, k)
        self.phase(2 * k)
        self.right_z(zmask)

    # -- pipelines -----------------------------------------------------------

    def reduce(self) -> None:
        """In-place reduction to word in ``{I, S, H}`` with no H-H edge."""
        if self.is_zero:
            self.set_zero()
            return
        while self._reduce_step():
            pass
        self.eliminate_paulis()

    def _reduce_step(self) -> bool:
        # rule priority keeps the weight sum I:0 S:0 H:1 HS:1 SH:2 HSH:3 strictly decreasing
        n = self.n
        g = self.graph
        words = [WORD_INDEX[c] for c in self.codes]
        for x in range(n):
            if words[x] in (W_SH, W_HSH):
                for y in iter_bits(g.adj[x]):
                    if words[y] in ENDS_IN_H:
                        self.hh_swap(x, y)
                        return True
                self.lc(x)
                return True
        for x in range(n):
            if words[x] == W_HS:
                self.lc(x)
                return True
        for x in range(n):
            if words[x] == W_H:
                for y in iter_bits(g.adj[x]):
                    if words[y] == W_H:
                        self.hh_swap(x, y)
                        return True
        return False

    def canonicalize(self) -> None:
        if self.is_zero:
            self.set_zero()
            return
        # each pass strictly lowers the H positions; the loop guard is a safety net
        for _ in range(self.n + 2):
            self.reduce()
            self._slide_sweep()
            self._fix_sh()
            self.eliminate_paulis()
            if is_canonical(self):
                return
        raise RuntimeError("canonicalization did not converge")

    def _slide_sweep(self) -> None:
        g = self.graph
        for x in range(self.n - 1, 0, -1):
            if self.word(x) in ENDS_IN_H:
                lower = g.adj[x] & ((1 << x) - 1)
                if lower:
                    y = (lower & -lower).bit_length() - 1
                    self.hh_swap(x, y)

    def _fix_sh(self) -> None:
        for x in range(self.n):
            if self.word(x) == W_SH:
                self.lc(x)


# -- constructors -----------------------------------------------------------------


def plus_state(n: int) -> ExtendedGraphState:
    if n < 1:
        raise ValueError("need at least one qubit")
    return ExtendedGraphState(Graph(n))


def graph_state(g: Graph) -> ExtendedGraphState:
    return ExtendedGraphState(g.copy())


def basis_state(bits: str) -> ExtendedGraphState:
    """``|b>`` as ``X^b H |+>`` per qubit."""
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"bad bit string {bits!r}")
    xh = code_of("X", "H")
    return ExtendedGraphState(Graph(len(bits)), [xh if ch == "1" else C_H for ch in bits])


def zero_state(n: int) -> ExtendedGraphState:
    return ExtendedGraphState(Graph(n), None, ZERO)


# -- forms ----------------------------------------------------------------------


def _reduced_local_ok(code: int) -> bool:
    word, pauli = code % 6, code // 6
    if word in (W_I, W_S):
        return pauli in (0, 3)
    if word == W_H:
        return pauli in (0, 1)
    return False


def is_reduced(s: ExtendedGraphState) -> bool:
    if s.is_zero:
        return True
    if not all(_reduced_local_ok(c) for c in s.codes):
        return False
    hmask = sum(1 << q for q, c in enumerate(s.codes) if c % 6 == W_H)
    return all(not (s.graph.adj[q] & hmask) for q in iter_bits(hmask))


def is_canonical(s: ExtendedGraphState) -> bool:
    if not is_reduced(s):
        return False
    for q, c in enumerate(s.codes):
        if c % 6 == W_H and s.graph.adj[q] & ((1 << q) - 1):
            return False
    return True


def form_class(s: ExtendedGraphState) -> FormClass:
    if is_canonical(s):
        return FormClass.CANONICAL
    if is_reduced(s):
        return FormClass.REDUCED
    return FormClass.GENERAL


def to_reduced_form(s: ExtendedGraphState) -> ExtendedGraphState:
    out = s.copy()
    out.reduce()
    return out


def to_canonical_form(s: ExtendedGraphState) -> ExtendedGraphState:
    out = s.copy()
    out.canonicalize()
    return out


def support_size(s: ExtendedGraphState) -> int:
    """``2^(n-k)`` for a reduced state with ``k`` H-qubits (0 for the zero state)."""
    if s.is_zero:
        return 0
    if not is_reduced(s):
        raise ValueError("support_size needs a reduced state")
    k = sum(1 for c in s.codes if c % 6 == W_H)
    return 2 ** (s.n - k)


def canonical_count(n: int) -> int:
    out = 1
    for k in range(1, n + 1):
        out *= 2 ** (k + 1) + 2
    return out


def enumerate_canonical(n: int) -> Iterator[ExtendedGraphState]:
    """Every canonical form on ``n`` qubits, each exactly once, scalar 1."""
    if n > MAX_ENUM_QUBITS:
        raise GuardError(f"canonical enumeration is limited to n <= {MAX_ENUM_QUBITS}")
    if n < 1:
        raise ValueError("need at least one qubit")
    free = [code_of(p, w) for w, p in (("I", "I"), ("I", "Z"), ("S", "I"), ("S", "Z"), ("H", "I"), ("H", "X"))]
    no_h = free[:4]
    per_qubit = []
    for k in range(n):
        choices = []
        for lower in range(2**k):
            for c in free if lower == 0 else no_h:
                choices.append((lower, c))
        per_qubit.append(choices)
    for combo in itertools.product(*per_qubit):
        g = Graph(n)
        for k, (lower, _) in enumerate(combo):
            g.toggle_star(k, lower)
        g.toggles = 0
        yield ExtendedGraphState(g, [c for _, c in combo])


def state_equal(s1: ExtendedGraphState, s2: ExtendedGraphState, up_to_phase: bool = False) -> bool:
    if s1.n != s2.n:
        raise ValueError(f"size mismatch: {s1.n} vs {s2.n}")
    c1, c2 = to_canonical_form(s1), to_canonical_form(s2)
    if c1.is_zero or c2.is_zero:
        return c1.is_zero and c2.is_zero
    if c1.graph != c2.graph or c1.codes != c2.codes:
        return False
    return up_to_phase or c1.scalar == c2.scalar


# -- serialization --------------------------------------------------------------


def to_json(s: ExtendedGraphState) -> str:
    """State file: n, 1-based edges, per-qubit word/pauli/phase_exp, scalar."""
    doc = {
        "n": s.n,
        "edges": [[u + 1, v + 1] for u, v in s.graph.edges()],
        "locals": [{"word": word_of(c), "pauli": pauli_of(c), "phase_exp": 0} for c in s.codes],
        "scalar": {"a": s.scalar.a, "b": s.scalar.b, "zero": s.scalar.zero},
    }
    return json.dumps(doc, indent=1) + "\n"


def from_json(text: str) -> ExtendedGraphState:
    doc = json.loads(text)
    n = int(doc["n"])
    g = Graph(n)
    for u, v in doc["edges"]:
        g.toggle_edge(int(u) - 1, int(v) - 1)
    g.toggles = 0
    locs = doc["locals"]
    if len(locs) != n:
        raise ValueError("locals length does not match n")
    locals_ = [LocalClifford(int(d.get("phase_exp", 0)), d["pauli"], d["word"]) for d in locs]
    sc = doc["scalar"]
    scalar = PhaseScalar(zero=bool(sc.get("zero", False)), a=int(sc["a"]), b=int(sc["b"]))
    return ExtendedGraphState.from_locals(g, locals_, scalar)


def cz_label(code: int) -> str:
    """``c`` or ``c z`` when the local is reduced, else ``P.W``."""
    if _reduced_local_ok(code):
        word = word_of(code)
        label = "" if word == "I" else word
        if code // 6:
            label += "Z"
        return label
    return f"{pauli_of(code)}.{word_of(code)}"


def to_dot(s: ExtendedGraphState) -> str:
    labels = {q: cz_label(c) for q, c in enumerate(s.codes)}
    return graph_to_dot(s.graph, labels, name="state")


__all__ = [
    "ExtendedGraphState",
    "FormClass",
    "WORDS",
    "basis_state",
    "canonical_count",
    "enumerate_canonical",
    "form_class",
    "from_json",
    "graph_state",
    "is_canonical",
    "is_reduced",
    "plus_state",
    "state_equal",
    "support_size",
    "to_canonical_form",
    "to_dot",
    "to_json",
    "to_reduced_form",
    "zero_state",
]
