"""Exact scalars, Pauli operators and the single-qubit Clifford group.

Conventions used everywhere in the package:

* ``w`` is the eighth root of unity ``exp(i*pi/4)``.
* A Pauli operator is ``i^k * prod_q X_q^{x_q} Z_q^{z_q}`` with ``X`` written
  to the left of ``Z`` on every qubit, so ``Y = i*X*Z = -i*Z*X``.
* A local Clifford is ``i^k * P * W`` where ``P`` is a Hermitian Pauli matrix
  (``I, X, Y, Z``) and ``W`` is one of the six coset words
  ``I, S, H, SH, HS, HSH``.  Words read right to left: ``SH`` applies ``H``
  first.  The Pauli sits on the left, away from the graph.
* Conjugation always means ``c^dagger P c`` (moving an operator from the
  outside of ``c`` to the graph side).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import math

PAULI_LETTERS = "IXYZ"
WORDS = ("I", "S", "H", "SH", "HS", "HSH")

# (x, z) bits of each Hermitian Pauli letter
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}


# ---------------------------------------------------------------------------
# Exact cyclotomic field Q(w)


class QOmega:
    """Element of Q(w), stored as rational coefficients of 1, w, w^2, w^3."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @classmethod
    def omega(cls, b: int) -> "QOmega":
        b %= 8
        coeffs = [0, 0, 0, 0]
        coeffs[b % 4] = -1 if b >= 4 else 1
        return cls(*coeffs)

    @classmethod
    def sqrt2(cls) -> "QOmega":
        return cls(0, 1, 0, -1)

    @classmethod
    def from_gaussian(cls, re_: Fraction | int, im: Fraction | int) -> "QOmega":
        return cls(re_, 0, im, 0)

    def __add__(self, other):
        other = _coerce(other)
        return QOmega(*(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return QOmega(*(-a for a in self.c))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(other.c):
                if not b:
                    continue
                k = i + j
                if k >= 4:
                    out[k - 4] -= a * b
                else:
                    out[k] += a * b
        return QOmega(*out)

    __rmul__ = __mul__

    def galois(self, k: int) -> "QOmega":
        """Image under the automorphism w -> w^k (k odd)."""
        out = QOmega()
        for i, a in enumerate(self.c):
            if a:
                out = out + QOmega.omega(i * k) * a
        return out

    def conjugate(self) -> "QOmega":
        return self.galois(7)

    def norm(self) -> Fraction:
        """Field norm to Q (product of all four Galois images)."""
        p = self * self.galois(3) * self.galois(5) * self.galois(7)
        assert not any(p.c[1:]), p
        return p.c[0]

    def inverse(self) -> "QOmega":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num = self.galois(3) * self.galois(5) * self.galois(7)
        n = self.norm()
        return QOmega(*(a / n for a in num.c))

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QOmega(other)
        if not isinstance(other, QOmega):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def abs2(self) -> "QOmega":
        return self * self.conjugate()

    def gaussian_form(self) -> tuple[int, int, int] | None:
        """Integers ``(u, v, m)`` with ``self = (u + v i) / 2^(m/2)``, if they exist."""
        c0, c1, c2, c3 = self.c
        if not c1 and not c3:
            re_, im, odd = c0, c2, 0
        elif not c0 and not c2:
            # (c1 w + c3 w^3) = ((c1 - c3) + (c1 + c3) i) / sqrt2
            re_, im, odd = c1 - c3, c1 + c3, 1
        else:
            return None
        if any(d & (d - 1) for d in (re_.denominator, im.denominator)):
            return None  # denominator is not a power of two
        k = max(re_.denominator, im.denominator).bit_length() - 1
        re_, im = re_ * 2**k, im * 2**k
        return int(re_), int(im), 2 * k + odd

    def to_complex(self) -> complex:
        w = complex(math.sqrt(0.5), math.sqrt(0.5))
        return sum(float(a) * w**i for i, a in enumerate(self.c))

    def __complex__(self):
        return self.to_complex()

    def __repr__(self):
        return f"QOmega{tuple(str(a) for a in self.c)}"

    def __str__(self):
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(f"{a}" if i == 0 else f"({a})*w^{i}")
        return " + ".join(terms) if terms else "0"


def _coerce(x) -> QOmega:
    if isinstance(x, QOmega):
        return x
    if isinstance(x, (int, Fraction)):
        return QOmega(x)
    if isinstance(x, PhaseScalar):
        return x.to_ring()
    raise TypeError(f"cannot use {type(x).__name__} as a cyclotomic number")


# ---------------------------------------------------------------------------
# PhaseScalar


_SCALAR_RE = re.compile(r"^2\^\((-?\d+(?:/2)?)\)·w\^(\d+)$")


@dataclass(frozen=True)
class PhaseScalar:
    """Either exactly 0 or ``2^(-a/2) * w^b``.

    ``a`` may be negative for un-normalized projector outputs such as the
    merge formulas, whose results have norm ``sqrt(2)``.
    """

    zero: bool = False
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.zero:
            object.__setattr__(self, "a", 0)
            object.__setattr__(self, "b", 0)
        else:
            object.__setattr__(self, "b", self.b % 8)

    @classmethod
    def one(cls) -> "PhaseScalar":
        return cls()

    @classmethod
    def zero_scalar(cls) -> "PhaseScalar":
        return cls(zero=True)

    @classmethod
    def omega(cls, b: int) -> "PhaseScalar":
        return cls(a=0, b=b)

    def __mul__(self, other: "PhaseScalar") -> "PhaseScalar":
        if not isinstance(other, PhaseScalar):
            return NotImplemented
        if self.zero or other.zero:
            return ZERO
        return PhaseScalar(a=self.a + other.a, b=self.b + other.b)

    def conjugate(self) -> "PhaseScalar":
        if self.zero:
            return self
        return PhaseScalar(a=self.a, b=-self.b)

    def inverse(self) -> "PhaseScalar":
        if self.zero:
            raise ZeroDivisionError("zero scalar has no inverse")
        return PhaseScalar(a=-self.a, b=-self.b)

    def abs2(self) -> Fraction:
        if self.zero:
            return Fraction(0)
        return Fraction(1, 2**self.a) if self.a >= 0 else Fraction(2 ** (-self.a))

    def to_complex(self) -> complex:
        if self.zero:
            return 0j
        mag = 2.0 ** (-self.a / 2)
        # table lookup keeps the axes exact (cos(pi/2) is not 0 in floats)
        h = math.sqrt(0.5)
        re_ = (1.0, h, 0.0, -h, -1.0, -h, 0.0, h)[self.b]
        im = (0.0, h, 1.0, h, 0.0, -h, -1.0, -h)[self.b]
        return complex(mag * re_, mag * im)

    def __complex__(self):
        return self.to_complex()

    def to_ring(self) -> QOmega:
        if self.zero:
            return QOmega()
        half = QOmega(0, Fraction(1, 2), 0, Fraction(-1, 2))  # 1/sqrt(2)
        base = half if self.a >= 0 else QOmega.sqrt2()
        out = QOmega.omega(self.b)
        for _ in range(abs(self.a)):
            out = out * base
        return out

    def __str__(self):
        if self.zero:
            return "0"
        e = Fraction(-self.a, 2)
        return f"2^({e})·w^{self.b}"

    @classmethod
    def parse(cls, text: str) -> "PhaseScalar":
        text = text.strip()
        if text == "0":
            return ZERO
        m = _SCALAR_RE.match(text)
        if not m:
            raise ValueError(f"malformed scalar {text!r}")
        e = Fraction(m.group(1))
        return cls(a=int(-2 * e), b=int(m.group(2)))


ZERO = PhaseScalar(zero=True)
ONE = PhaseScalar()


def scalar_mul(s1: PhaseScalar, s2: PhaseScalar) -> PhaseScalar:
    return s1 * s2


def scalar_to_complex(s: PhaseScalar) -> complex:
    return s.to_complex()


# ---------------------------------------------------------------------------
# Pauli operators


@dataclass(frozen=True)
class SinglePauli:
    """``i^phase_exp`` times a Hermitian Pauli matrix."""

    letter: str = "I"
    phase_exp: int = 0

    def __post_init__(self):
        if self.letter not in _LETTER_BITS:
            raise ValueError(f"unknown Pauli letter {self.letter!r}")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    def __mul__(self, other: "SinglePauli") -> "SinglePauli":
        letter, k = _letter_mul(self.letter, other.letter)
        return SinglePauli(letter, self.phase_exp + other.phase_exp + k)

    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    def __str__(self):
        return _phase_prefix(self.phase_exp) + self.letter


def _letter_mul(p: str, q: str) -> tuple[str, int]:
    """``P*Q = i^k * R`` for Hermitian letters; returns (R, k)."""
    x1, z1 = _LETTER_BITS[p]
    x2, z2 = _LETTER_BITS[q]
    # letter L = i^{x z} X^x Z^z
    k = x1 * z1 + x2 * z2 + 2 * (z1 * x2)
    x, z = x1 ^ x2, z1 ^ z2
    k -= x * z
    return _BITS_LETTER[(x, z)], k % 4


def _phase_prefix(k: int) -> str:
    return "" if k % 4 == 0 else f"i^{k % 4}·"


@dataclass(frozen=True)
class PauliOperator:
    """``i^phase_exp * prod_q X_q^{x_q} Z_q^{z_q}`` on ``n`` qubits.

    ``x`` and ``z`` are integer bit masks, bit ``q`` standing for qubit ``q``.
    """

    n: int
    x: int = 0
    z: int = 0
    phase_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)
        if self.x >> self.n or self.z >> self.n:
            raise ValueError("Pauli bits outside the qubit range")

    @classmethod
    def from_string(cls, text: str, phase_exp: int = 0) -> "PauliOperator":
        """Build from letters such as ``"XIZY"``; ``Y`` is the Hermitian Y.

        An optional leading sign (``+``, ``-``, ``+i``, ``-i``) is accepted.
        """
        text = text.strip()
        for prefix, k in (("+i", 1), ("-i", 3), ("i", 1), ("+", 0), ("-", 2)):
            if text.startswith(prefix) and len(text) > len(prefix) and text[len(prefix)] in PAULI_LETTERS:
                phase_exp += k
                text = text[len(prefix):]
                break
        x = z = 0
        for q, ch in enumerate(text):
            if ch not in _LETTER_BITS:
                raise ValueError(f"bad Pauli letter {ch!r} in {text!r}")
            bx, bz = _LETTER_BITS[ch]
            x |= bx << q
            z |= bz << q
            phase_exp += bx * bz
        return cls(len(text), x, z, phase_exp)

    @classmethod
    def single(cls, n: int, q: int, letter: str, phase_exp: int = 0) -> "PauliOperator":
        bx, bz = _LETTER_BITS[letter]
        return cls(n, bx << q, bz << q, phase_exp + bx * bz)

    def letter(self, q: int) -> str:
        return _BITS_LETTER[((self.x >> q) & 1, (self.z >> q) & 1)]

    def hermitian_sign_exp(self) -> int:
        """Exponent ``k`` with ``self = i^k * (tensor of Hermitian letters)``."""
        return (self.phase_exp - (self.x & self.z).bit_count()) % 4

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return pauli_mul(self, other)

    def is_hermitian(self) -> bool:
        return (self.phase_exp - (self.x & self.z).bit_count()) % 2 == 0

    def commutes_with(self, other: "PauliOperator") -> bool:
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2 == 0

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def __str__(self):
        k = self.hermitian_sign_exp()
        sign = ("+", "+i", "-", "-i")[k]
        return sign + "".join(self.letter(q) for q in range(self.n))


def pauli_mul(p1: PauliOperator, p2: PauliOperator) -> PauliOperator:
    if p1.n != p2.n:
        raise ValueError(f"Pauli size mismatch: {p1.n} vs {p2.n}")
    # Z^{z1} X^{x2} = (-1)^{z1.x2} X^{x2} Z^{z1}
    k = p1.phase_exp + p2.phase_exp + 2 * (p1.z & p2.x).bit_count()
    return PauliOperator(p1.n, p1.x ^ p2.x, p1.z ^ p2.z, k)


# ---------------------------------------------------------------------------
# Local Cliffords
#
# Internally a phase-free local Clifford is a code 0..23 = 6*pauli + word with
# pauli indexing PAULI_LETTERS and word indexing WORDS.


def code_of(pauli: str, word: str) -> int:
    return 6 * PAULI_LETTERS.index(pauli) + WORDS.index(word)


def pauli_of(code: int) -> str:
    return PAULI_LETTERS[code // 6]


def word_of(code: int) -> str:
    return WORDS[code % 6]


def _mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _mat_dagger(a):
    return ((a[0][0].conjugate(), a[1][0].conjugate()), (a[0][1].conjugate(), a[1][1].conjugate()))


def _rot(x: QOmega, b: int) -> QOmega:
    """``w^b * x`` by coefficient rotation."""
    c = list(x.c)
    for _ in range(b % 8):
        c = [-c[3], c[0], c[1], c[2]]
    return QOmega(*c)


def _mat_omega_ratio(a, b) -> int | None:
    """Return ``k`` with ``a == w^k * b``, or None."""
    flat_a = [a[0][0], a[0][1], a[1][0], a[1][1]]
    flat_b = [b[0][0], b[0][1], b[1][0], b[1][1]]
    if any(x.is_zero() != y.is_zero() for x, y in zip(flat_a, flat_b)):
        return None
    i = next(j for j, y in enumerate(flat_b) if not y.is_zero())
    for k in range(8):
        if _rot(flat_b[i], k) == flat_a[i]:
            if all(_rot(y, k) == x for x, y in zip(flat_a, flat_b)):
                return k
            return None
    return None


@lru_cache(maxsize=None)
def _exact_matrices():
    o, z = QOmega(1), QOmega()
    i = QOmega.omega(2)
    inv_sqrt2 = QOmega(0, Fraction(1, 2), 0, Fraction(-1, 2))
    paulis = {
        "I": ((o, z), (z, o)),
        "X": ((z, o), (o, z)),
        "Y": ((z, -i), (i, z)),
        "Z": ((o, z), (z, -o)),
    }
    h = ((inv_sqrt2, inv_sqrt2), (inv_sqrt2, -inv_sqrt2))
    s = ((o, z), (z, i))
    gens = {"H": h, "S": s}
    words = {}
    for w in WORDS:
        m = paulis["I"]
        for ch in w.replace("I", ""):
            m = _mat_mul(m, gens[ch])
        words[w] = m
    return paulis, [_mat_mul(paulis[pauli_of(c)], words[word_of(c)]) for c in range(24)]


@lru_cache(maxsize=None)
def _tables():
    """Exact composition, conjugation and inverse tables over the 24 codes."""
    paulis, mats = _exact_matrices()
    # conjugation: M^dagger P M = i^k L
    conj = [[None] * 4 for _ in range(24)]
    for c in range(24):
        md = _mat_dagger(mats[c])
        for pi, letter in enumerate(PAULI_LETTERS):
            m = _mat_mul(_mat_mul(md, paulis[letter]), mats[c])
            for target in PAULI_LETTERS:
                k = _mat_omega_ratio(m, paulis[target])
                if k is not None:
                    assert k % 2 == 0
                    conj[c][pi] = (target, k // 2)
                    break
            assert conj[c][pi] is not None
    action = {(conj[c][1], conj[c][3]): c for c in range(24)}

    def composed_action(a, b, pi):
        # (ab)^dagger P (ab) = b^dagger (a^dagger P a) b
        letter, k1 = conj[a][pi]
        letter, k2 = conj[b][PAULI_LETTERS.index(letter)]
        return letter, (k1 + k2) % 4

    mul = [[None] * 24 for _ in range(24)]
    for a in range(24):
        for b in range(24):
            c = action[(composed_action(a, b, 1), composed_action(a, b, 3))]
            w = _mat_omega_ratio(_mat_mul(mats[a], mats[b]), mats[c])
            assert w is not None
            mul[a][b] = (c, w)
    inv = [None] * 24
    for a in range(24):
        for b in range(24):
            c, w = mul[a][b]
            if c == 0:
                inv[a] = (b, (-w) % 8)  # a*b = w^w I  =>  a^-1 = w^-w b
                break
    return conj, mul, inv


def clifford_tables():
    """``(conj, mul, inv)`` lookup tables.

    * ``conj[c][p] = (letter, k)``: ``M_c^dagger P M_c = i^k letter``.
    * ``mul[a][b] = (c, w)``: ``M_a M_b = w^w M_c``.
    * ``inv[a] = (c, w)``: ``M_a^{-1} = w^w M_c``.
    """
    return _tables()


@dataclass(frozen=True)
class LocalClifford:
    """``i^phase_exp * pauli * word`` acting on one qubit."""

    phase_exp: int = 0
    pauli: str = "I"
    word: str = "I"

    def __post_init__(self):
        if self.pauli not in _LETTER_BITS:
            raise ValueError(f"unknown Pauli {self.pauli!r}")
        if self.word not in WORDS:
            raise ValueError(f"unknown coset word {self.word!r}")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @property
    def code(self) -> int:
        return code_of(self.pauli, self.word)

    @classmethod
    def from_code(cls, code: int, phase_exp: int = 0) -> "LocalClifford":
        return cls(phase_exp, pauli_of(code), word_of(code))

    @classmethod
    def from_gates(cls, gates: str | Iterable[str]) -> tuple["LocalClifford", PhaseScalar]:
        """Product of gate letters (``"H"``, ``"S"``, ``"X"``...), leftmost outermost.

        Returns the Clifford and a leftover ``w^b`` factor.
        """
        out, s = IDENTITY, ONE
        for g in gates:
            if g == "I":
                continue
            if g in ("X", "Y", "Z"):
                c = cls(0, g, "I")
            elif g in ("H", "S"):
                c = cls(0, "I", g)
            else:
                raise ValueError(f"unknown gate {g!r}")
            out, f = clifford_compose(out, c)
            s = s * f
        return out, s

    def inverse(self) -> tuple["LocalClifford", PhaseScalar]:
        _, _, inv = _tables()
        c, w = inv[self.code]
        return LocalClifford.from_code(c, -self.phase_exp), PhaseScalar.omega(w)

    def __str__(self):
        return f"{_phase_prefix(self.phase_exp)}{self.pauli}·{self.word}"

    @classmethod
    def parse(cls, text: str) -> "LocalClifford":
        parts = text.strip().split("·")
        k = 0
        if parts and parts[0].startswith("i^"):
            k = int(parts[0][2:])
            parts = parts[1:]
        if len(parts) != 2:
            raise ValueError(f"malformed local Clifford {text!r}")
        return cls(k, parts[0], parts[1])


IDENTITY = LocalClifford()


def clifford_compose(c1: LocalClifford, c2: LocalClifford) -> tuple[LocalClifford, PhaseScalar]:
    """``c1 * c2`` as a local Clifford plus a ``w^b`` factor with ``b`` odd or 0."""
    _, mul, _ = _tables()
    c, w = mul[c1.code][c2.code]
    k = c1.phase_exp + c2.phase_exp + w // 2
    return LocalClifford.from_code(c, k), PhaseScalar.omega(w % 2)


def conjugate_pauli(c: LocalClifford, p: SinglePauli) -> SinglePauli:
    """``c^dagger p c``."""
    conj, _, _ = _tables()
    letter, k = conj[c.code][PAULI_LETTERS.index(p.letter)]
    return SinglePauli(letter, p.phase_exp + k)
