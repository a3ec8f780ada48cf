import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import HealthCheck, settings

from graphstab.algebra import PauliOperator, PhaseScalar
from graphstab.graph import Graph
from graphstab.state import ExtendedGraphState

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.integers(0, 2 ** len(pairs) - 1)) if pairs else 0
    return Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@st.composite
def states(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    g.toggles = 0
    codes = draw(st.lists(st.integers(0, 23), min_size=g.n, max_size=g.n))
    b = draw(st.integers(0, 7))
    return ExtendedGraphState(g, codes, PhaseScalar(b=b))


@st.composite
def state_pairs(draw, min_n=1, max_n=7):
    a = draw(states(min_n, max_n))
    codes = draw(st.lists(st.integers(0, 23), min_size=a.n, max_size=a.n))
    pairs = list(itertools.combinations(range(a.n), 2))
    mask = draw(st.integers(0, 2 ** len(pairs) - 1)) if pairs else 0
    g = Graph(a.n, [p for i, p in enumerate(pairs) if mask >> i & 1])
    return a, ExtendedGraphState(g, codes, PhaseScalar(b=draw(st.integers(0, 7))))


@st.composite
def hermitian_paulis(draw, n, nontrivial=True):
    lo = 1 if nontrivial else 0
    x = draw(st.integers(0, 2**n - 1))
    z = draw(st.integers(0 if x else lo, 2**n - 1))
    sign = draw(st.sampled_from((0, 2)))
    return PauliOperator(n, x, z, (x & z).bit_count() + sign)


class AcceptanceLog:
    """Collects per-part verdicts; a criterion passes only if every part does."""

    def __init__(self):
        self.parts: dict[int, list[tuple[str, bool, str]]] = {}

    def record(self, criterion: int, part: str, ok: bool, detail: str) -> bool:
        self.parts.setdefault(criterion, []).append((part, ok, detail))
        return ok

    def lines(self) -> list[str]:
        out = []
        for c in sorted(self.parts):
            parts = self.parts[c]
            verdict = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
            body = "; ".join(f"{p} {'ok' if ok else 'FAIL'} ({d})" for p, ok, d in parts)
            out.append(f"{verdict} criterion {c}: {body}")
        return out


_LOG = AcceptanceLog()


@pytest.fixture(scope="session")
def acceptance():
    return _LOG


def pytest_terminal_summary(terminalreporter):
    lines = _LOG.lines()
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)
