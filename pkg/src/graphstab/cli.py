"""Command-line front end.

Circuit files are line oriented, 1-indexed, with ``#`` comments::

    QUBITS 2
    H 1
    CX 1 2
    M ZZ

Exit codes: 0 ok, 1 usage, 2 file or parse error, 3 verification mismatch,
4 guard violation.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .algebra import PauliOperator, PhaseScalar
from .gates import GATES_1Q, GATES_2Q, apply_gate, measure_pauli
from .graph import GuardError, from_edge_list, lc_orbit
from .inner import inner_product
from .oracle import DenseError
from .state import ExtendedGraphState, from_json, plus_state, to_canonical_form, to_dot, to_json
from .suites import SUITES
from .triplets import TripletTag, classify_triplet, format_coefficient

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_MISMATCH, EXIT_GUARD = 0, 1, 2, 3, 4
DEFAULT_CASES = 200


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Instruction:
    name: str
    qubits: tuple[int, ...] = ()
    pauli: PauliOperator | None = None
    line: int = 0


@dataclass
class CircuitProgram:
    n: int
    instructions: list[Instruction] = field(default_factory=list)


def _qubit(tok: str, n: int, line: int) -> int:
    try:
        q = int(tok)
    except ValueError:
        raise ParseError(line, f"bad qubit index {tok!r}") from None
    if not 1 <= q <= n:
        raise ParseError(line, f"qubit {q} out of range 1..{n}")
    return q - 1


def parse_circuit(text: str) -> CircuitProgram:
    prog = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        op = toks[0].upper()
        if prog is None:
            if op != "QUBITS" or len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
                raise ParseError(lineno, "expected 'QUBITS n' with n >= 1 first")
            prog = CircuitProgram(int(toks[1]))
            continue
        n = prog.n
        if op == "QUBITS":
            raise ParseError(lineno, "QUBITS given twice")
        if op in GATES_1Q:
            if len(toks) != 2:
                raise ParseError(lineno, f"{op} takes one qubit")
            prog.instructions.append(Instruction(op, (_qubit(toks[1], n, lineno),), line=lineno))
        elif op in GATES_2Q:
            if len(toks) != 3:
                raise ParseError(lineno, f"{op} takes two qubits")
            a, b = _qubit(toks[1], n, lineno), _qubit(toks[2], n, lineno)
            if a == b:
                raise ParseError(lineno, f"{op} on equal qubits")
            prog.instructions.append(Instruction(op, (a, b), line=lineno))
        elif op == "M":
            if len(toks) != 2:
                raise ParseError(lineno, "M takes one Pauli string")
            word = toks[1].upper()
            if len(word) != n or set(word) - set("IXYZ"):
                raise ParseError(lineno, f"Pauli string must be {n} letters over IXYZ")
            prog.instructions.append(Instruction("M", pauli=PauliOperator.from_string(word), line=lineno))
        else:
            raise ParseError(lineno, f"unknown mnemonic {toks[0]!r}")
    if prog is None:
        raise ParseError(0, "empty circuit")
    return prog


def render_scalar(s: PhaseScalar) -> str:
    """Exact form followed by a decimal complex value."""
    return f"{s} = {_decimal(complex(s))}"


def _decimal(z: complex) -> str:
    re_, im = round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0
    if im == 0:
        return f"{re_:.12g}"
    if re_ == 0:
        return f"{im:.12g}i"
    return f"{re_:.12g}{im:+.12g}i"


def execute(prog: CircuitProgram, seed: int | None = None, out=None) -> ExtendedGraphState:
    """Run a program; measurements keep the +1 branch unless ``seed`` is given."""
    out = sys.stdout if out is None else out
    rng = random.Random(seed) if seed is not None else None
    s = plus_state(prog.n)
    for q in range(prog.n):
        apply_gate(s, "H", (q,), inplace=True)
    for ins in prog.instructions:
        if ins.name != "M":
            apply_gate(s, ins.name, ins.qubits, inplace=True)
            continue
        p = ins.pauli
        prob, post = measure_pauli(s, p)
        sign = 1
        if prob == 0 or (rng is not None and prob == Fraction(1, 2) and rng.random() < 0.5):
            sign = -1
            prob, post = measure_pauli(s, PauliOperator(p.n, p.x, p.z, p.phase_exp + 2))
        print(f"M {_pauli_word(p)} (line {ins.line}): outcome {sign:+d} with probability {prob}", file=out)
        s = post
    return s


def _pauli_word(p: PauliOperator) -> str:
    return "".join(p.letter(q) for q in range(p.n))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(0, f"{path}: {exc.strerror}") from None


def _load_state(path: str) -> ExtendedGraphState:
    try:
        return from_json(_read(path))
    except (ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(0, f"{path}: malformed state file ({exc})") from None


def _describe(s: ExtendedGraphState) -> str:
    edges = " ".join(f"{u + 1}-{v + 1}" for u, v in s.graph.edges()) or "(none)"
    locs = " ".join(f"{q + 1}:{c}" for q, c in enumerate(s.locals))
    return f"scalar {render_scalar(s.scalar)}\nedges {edges}\nlocals {locs}"


def cmd_simulate(args) -> int:
    prog = parse_circuit(_read(args.circuit))
    s = execute(prog, args.sample)
    if args.canonical:
        s = to_canonical_form(s)
    print(_describe(s))
    if args.state_out:
        Path(args.state_out).write_text(to_json(s))
    if args.dot:
        Path(args.dot).write_text(to_dot(s))
    return EXIT_OK


def cmd_canon(args) -> int:
    c = to_canonical_form(_load_state(args.state))
    sys.stdout.write(to_json(c))
    return EXIT_OK


def cmd_inner(args) -> int:
    a, b = _load_state(args.state1), _load_state(args.state2)
    if a.n != b.n:
        raise ParseError(0, f"qubit counts differ: {a.n} vs {b.n}")
    print(render_scalar(inner_product(a, b)))
    return EXIT_OK


def cmd_triplet(args) -> int:
    states = [_load_state(p) for p in (args.s1, args.s2, args.s3)]
    if len({s.n for s in states}) != 1:
        raise ParseError(0, "qubit counts differ")
    r = classify_triplet(*states)
    print(f"class {r.tag.value}")
    if r.witness is not None:
        w = r.witness
        if isinstance(w, PauliOperator):
            w = str(w)
        elif r.tag is TripletTag.PARALLEL:
            w = f"states {w[0] + 1} and {w[1] + 1}"
        else:
            w = "qubits " + " ".join(str(q + 1) for q in w)
        print(f"witness {w}")
    for (i, j), g in zip(((1, 2), (1, 3), (2, 3)), r.gram):
        print(f"<s{i}|s{j}> {render_scalar(g)}")
    if r.coefficients is not None:
        c2, c3 = r.coefficients
        print("s1 = c2 s2 + c3 s3")
        print(f"c2 {format_coefficient(c2)}")
        print(f"c3 {format_coefficient(c3)}")
    elif r.alphas is not None:
        for k, a in enumerate(r.alphas, start=1):
            print(f"a{k} {format_coefficient(a)}")
    return EXIT_OK


def cmd_orbit(args) -> int:
    try:
        g = from_edge_list(_read(args.graph))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(0, str(exc)) from None
    orbit = sorted(lc_orbit(g), key=lambda h: (h.num_edges(), h.key()))
    print(f"# orbit size {len(orbit)}")
    for h in orbit:
        print(" ".join(f"{u + 1}-{v + 1}" for u, v in h.edges()) or "(empty)")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rng = random.Random(args.seed)
    bad = 0
    for name in names:
        res = SUITES[name](rng, args.cases)
        print(res.line())
        for msg in res.failures:
            print(f"  {msg}")
        bad += not res.ok
    return EXIT_MISMATCH if bad else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="graphstab", description="Exact extended-graph-state stabilizer toolkit.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("simulate", help="run a circuit file")
    p.add_argument("circuit")
    p.add_argument("--state-out", metavar="FILE")
    p.add_argument("--canonical", action="store_true", help="print the canonical form")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--sample", type=int, metavar="SEED", help="pick random measurement branches")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("canon", help="canonical form of a state file")
    p.add_argument("state")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("inner", help="exact inner product of two state files")
    p.add_argument("state1")
    p.add_argument("state2")
    p.set_defaults(func=cmd_inner)

    p = sub.add_parser("triplet", help="classify three state files")
    p.add_argument("s1")
    p.add_argument("s2")
    p.add_argument("s3")
    p.set_defaults(func=cmd_triplet)

    p = sub.add_parser("orbit", help="local-complementation orbit of an edge-list graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="randomized oracle suites")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=DEFAULT_CASES)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GuardError, DenseError) as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
