"""Dense state-vector reference, used only by tests and verification.

Qubit 0 is the most significant bit of the basis index, so the basis state
``|b_0 b_1 ... b_{n-1}>`` sits at index ``int("b_0 b_1 ...", 2)``.  All gate
matrices are written out literally here and never taken from the exact
tables, so agreement between the two is a real check.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

MAX_DENSE_QUBITS = 12
RANK_TOL = 1e-9

W8 = np.exp(1j * np.pi / 4)

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S = np.array([[1, 0], [0, 1j]], dtype=complex)
SDG = S.conj().T

SINGLE = {"I": I2, "X": X, "Y": Y, "Z": Z, "H": H, "S": S, "SDG": SDG}


class DenseError(ValueError):
    pass


def _check_n(n: int) -> None:
    if n > MAX_DENSE_QUBITS:
        raise DenseError(f"dense oracle limited to n <= {MAX_DENSE_QUBITS}")


def word_matrix(letters: str) -> np.ndarray:
    """Product of single-qubit letters, leftmost outermost (``"SH"`` = S @ H)."""
    m = I2
    for ch in letters:
        if ch != "I":
            m = m @ SINGLE[ch]
    return m


def local_matrix(c) -> np.ndarray:
    """``i^k * P * W`` for a :class:`LocalClifford`."""
    return (1j ** c.phase_exp) * SINGLE[c.pauli] @ word_matrix(c.word)


def _bits(n: int) -> np.ndarray:
    idx = np.arange(2**n)
    return np.array([(idx >> (n - 1 - q)) & 1 for q in range(n)])


def apply_1q(vec: np.ndarray, n: int, q: int, m: np.ndarray) -> np.ndarray:
    t = vec.reshape([2] * n)
    t = np.tensordot(m, t, axes=([1], [q]))
    t = np.moveaxis(t, 0, q)
    return t.reshape(-1)


def diag_cz(n: int, p: int, q: int) -> np.ndarray:
    b = _bits(n)
    return np.where(b[p] & b[q], -1.0, 1.0).astype(complex)


def diag_cs(n: int, p: int, q: int) -> np.ndarray:
    """Diagonal of ``CS_{p,q}``; ``p == q`` gives ``S_p``."""
    b = _bits(n)
    return np.where(b[p] & b[q], 1j, 1.0).astype(complex)


def graph_state(n: int, edges: Iterable[tuple[int, int]]) -> np.ndarray:
    _check_n(n)
    vec = np.full(2**n, 2 ** (-n / 2), dtype=complex)
    b = _bits(n)
    for u, v in edges:
        vec = vec * np.where(b[u] & b[v], -1.0, 1.0)
    return vec


def densify(s) -> np.ndarray:
    """Dense vector of an :class:`ExtendedGraphState`."""
    n = s.n
    _check_n(n)
    vec = graph_state(n, s.graph.edges())
    for q, c in enumerate(s.locals):
        vec = apply_1q(vec, n, q, local_matrix(c))
    return complex(s.scalar) * vec


def basis_vector(bits: str) -> np.ndarray:
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1
    return v


def pauli_matrix_apply(vec: np.ndarray, n: int, p) -> np.ndarray:
    """Apply a :class:`PauliOperator` built from literal X and Z matrices."""
    out = vec
    for q in range(n):
        if (p.z >> q) & 1:
            out = apply_1q(out, n, q, Z)
        if (p.x >> q) & 1:
            out = apply_1q(out, n, q, X)
    return (1j ** p.phase_exp) * out


def dense_apply(vec: np.ndarray, gate: str, qubits: Sequence[int], n: int | None = None) -> np.ndarray:
    """Apply ``H, S, SDG, X, Y, Z, CZ, CX, CY`` (or ``CS``) to a dense vector."""
    if n is None:
        n = int(np.log2(vec.size))
    if vec.size != 2**n:
        raise DenseError("dimension mismatch")
    gate = gate.upper()
    if gate in SINGLE:
        return apply_1q(vec, n, qubits[0], SINGLE[gate])
    if gate not in ("CZ", "CS", "CX", "CY"):
        raise DenseError(f"unknown gate {gate!r}")
    a, b = qubits
    if gate == "CZ":
        return vec * diag_cz(n, a, b)
    if gate == "CS":
        return vec * diag_cs(n, a, b)
    m = X if gate == "CX" else Y
    bits = _bits(n)
    flipped = apply_1q(vec, n, b, m)
    return np.where(bits[a] == 1, flipped, vec)


def dense_inner(a: np.ndarray, b: np.ndarray) -> complex:
    if a.shape != b.shape:
        raise DenseError("dimension mismatch")
    return complex(np.vdot(a, b))


def dense_rank(states: Sequence[np.ndarray], tol: float = RANK_TOL) -> int:
    """Rank by Gaussian elimination on columns with partial pivoting."""
    if not states:
        return 0
    m = np.array(states, dtype=complex).T.copy()
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = rank + int(np.argmax(np.abs(m[rank:, c])))
        if abs(m[piv, c]) <= tol:
            continue
        m[[rank, piv]] = m[[piv, rank]]
        m[rank + 1:] -= np.outer(m[rank + 1:, c] / m[rank, c], m[rank])
        rank += 1
    return rank


def parallel(a: np.ndarray, b: np.ndarray, tol: float = 1e-12) -> bool:
    return abs(abs(np.vdot(a, b)) - np.linalg.norm(a) * np.linalg.norm(b)) <= tol


def magic_state(n: int) -> np.ndarray:
    """``(|0> + w|1>)^{tensor n} / 2^{n/2}``."""
    _check_n(n)
    one = np.array([1, W8], dtype=complex) / np.sqrt(2)
    vec = np.array([1], dtype=complex)
    for _ in range(n):
        vec = np.kron(vec, one)
    return vec


def cz_product_dense(n: int, a: Iterable[int], b: Iterable[int]) -> np.ndarray:
    """Diagonal of ``prod_{p in A, q in B} CZ_{p,q}`` over ordered pairs."""
    d = np.ones(2**n, dtype=complex)
    b = list(b)
    for p in a:
        for q in b:
            d = d * (np.where(_bits(n)[p] == 1, -1.0, 1.0) if p == q else diag_cz(n, p, q))
    return d


def cs_product_dense(n: int, a: Iterable[int]) -> np.ndarray:
    """Diagonal of ``prod_{p, q in A} CS_{p,q}`` over ordered pairs."""
    a = list(a)
    d = np.ones(2**n, dtype=complex)
    for p in a:
        for q in a:
            d = d * diag_cs(n, p, q)
    return d


def dump_amplitudes(vec: np.ndarray, tol: float = 0.0) -> str:
    """One line per basis state: binary index, real part, imaginary part."""
    n = int(np.log2(vec.size))
    lines = []
    for i, amp in enumerate(vec):
        if abs(amp) <= tol and tol > 0:
            continue
        lines.append(f"{i:0{n}b} {amp.real:.17g} {amp.imag:.17g}")
    return "\n".join(lines) + "\n"


def load_amplitudes(text: str) -> np.ndarray:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    n = len(rows[0][0])
    vec = np.zeros(2**n, dtype=complex)
    for bits, re_, im in rows:
        vec[int(bits, 2)] = complex(float(re_), float(im))
    return vec


def close(a: np.ndarray, b: np.ndarray, tol: float = 1e-12) -> bool:
    return a.shape == b.shape and bool(np.max(np.abs(a - b), initial=0.0) <= tol)
