"""Simple undirected graphs on qubits with bit-row adjacency.

Vertices are 0-based in the Python API.  Text formats (edge lists, DOT) are
1-based.  ``adj[u]`` is an ``int`` whose bit ``v`` is set iff ``(u, v)`` is an
edge, so bulk toggles are single XORs per row.

Every mutation bumps :attr:`Graph.toggles` by the number of edges flipped; the
cost tests read this counter.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .algebra import PauliOperator

MAX_ORBIT_QUBITS = 12


class GuardError(ValueError):
    """An enumeration was asked for a size beyond its guard."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("n", "adj", "toggles")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("negative vertex count")
        self.n = n
        self.adj = [0] * n
        self.toggles = 0
        for u, v in edges:
            self.toggle_edge(u, v)
        self.toggles = 0

    # -- basic access -----------------------------------------------------

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g.adj = list(self.adj)
        g.toggles = 0
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def key(self) -> tuple[int, ...]:
        return tuple(self.adj)

    def __repr__(self):
        return f"Graph({self.n}, {self.edges()})"

    def check(self) -> None:
        for u in range(self.n):
            row = self.adj[u]
            if row >> self.n:
                raise AssertionError(f"row {u} has bits beyond n")
            if (row >> u) & 1:
                raise AssertionError(f"loop at {u}")
            for v in iter_bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise AssertionError(f"asymmetric edge {u}-{v}")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- mutation ---------------------------------------------------------

    def toggle_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("loops are not allowed")
        self.adj[u] ^= 1 << v
        self.adj[v] ^= 1 << u
        self.toggles += 1

    def toggle_star(self, center: int, mask: int) -> None:
        """Toggle edges ``(center, q)`` for ``q`` in ``mask`` (center excluded)."""
        mask &= ~(1 << center)
        if not mask:
            return
        self.adj[center] ^= mask
        bit = 1 << center
        for q in iter_bits(mask):
            self.adj[q] ^= bit
        self.toggles += mask.bit_count()

    def toggle_clique(self, mask: int) -> None:
        """Toggle every edge inside the vertex set ``mask``."""
        k = 0
        for u in iter_bits(mask):
            self.adj[u] ^= mask & ~(1 << u)
            k += 1
        self.toggles += k * (k - 1) // 2

    def local_complement(self, v: int) -> None:
        self._check_vertex(v)
        self.toggle_clique(self.adj[v])

    def toggle_biclique(self, a: int, b: int) -> int:
        """Edge part of ``prod_{p in A, q in B} CZ_{p,q}`` over ordered pairs.

        Pair ``{p, q}`` flips iff exactly one of ``p in A and q in B`` or
        ``q in A and p in B`` holds.  Returns the mask ``A & B`` of vertices
        that receive a ``Z`` from the diagonal terms.
        """
        both = a & b
        flipped = 0
        for p in iter_bits(a | b):
            bit = 1 << p
            if both & bit:
                row = a ^ b
            elif a & bit:
                row = b
            else:
                row = a
            row &= ~bit
            if row:
                self.adj[p] ^= row
                flipped += row.bit_count()
        self.toggles += flipped // 2
        return both


# -- functional wrappers mirroring the operation list -------------------------


def toggle_edge(g: Graph, u: int, v: int) -> Graph:
    out = g.copy()
    out.toggle_edge(u, v)
    return out


def local_complement(g: Graph, v: int) -> Graph:
    out = g.copy()
    out.local_complement(v)
    return out


def apply_cz_product(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[Graph, PauliOperator]:
    """``prod_{p in A, q in B} CZ_{p,q} |G>`` as (new graph, diagonal Pauli)."""
    out = g.copy()
    zmask = out.toggle_biclique(mask_of(a), mask_of(b))
    return out, PauliOperator(g.n, 0, zmask, 0)


def apply_cs_square_product(g: Graph, a: Iterable[int]) -> tuple[Graph, list[int]]:
    """``prod_{p, q in A} CS_{p,q} |G>`` over ordered pairs.

    Off-diagonal pairs compose to ``CZ`` (edge toggles inside ``A``); each
    diagonal term is an ``S`` on that vertex, returned for the caller to
    absorb into its local Cliffords.
    """
    out = g.copy()
    m = mask_of(a)
    out.toggle_clique(m)
    return out, sorted(iter_bits(m))


def lc_orbit(g: Graph) -> set[Graph]:
    """All graphs reachable from ``g`` by local complementations."""
    if g.n > MAX_ORBIT_QUBITS:
        raise GuardError(f"orbit enumeration is limited to n <= {MAX_ORBIT_QUBITS}")
    seen = {g.key(): g.copy()}
    queue = deque([g.copy()])
    while queue:
        cur = queue.popleft()
        for v in range(cur.n):
            if cur.degree(v) < 2:
                continue
            nxt = local_complement(cur, v)
            k = nxt.key()
            if k not in seen:
                seen[k] = nxt
                queue.append(nxt)
    return set(seen.values())


# -- named graphs ---------------------------------------------------------------


def _partition(n: int, a: Iterable[int], b: Iterable[int]) -> tuple[list[int], list[int]]:
    a, b = sorted(set(a)), sorted(set(b))
    if set(a) & set(b) or sorted(a + b) != list(range(n)):
        raise ValueError("A and B must partition the vertex set")
    return a, b


def w_graph(n: int, a: Iterable[int], b: Iterable[int], i: int, j: int) -> Graph:
    """``W_{i,j}``: ``i ~ j``, ``i`` joined to ``A - {i}``, ``j`` joined to ``B - {j}``."""
    a, b = _partition(n, a, b)
    if i not in a or j not in b:
        raise ValueError("need i in A and j in B")
    g = Graph(n, [(i, j)])
    g.toggle_star(i, mask_of(a))
    g.toggle_star(j, mask_of(b))
    g.toggles = 0
    return g


def complete_bipartite(n: int, a: Iterable[int], b: Iterable[int]) -> Graph:
    """``K``: every vertex of ``A`` joined to every vertex of ``B``."""
    a, b = _partition(n, a, b)
    return Graph(n, [(p, q) for p in a for q in b])


def k_a(n: int, a: Iterable[int], b: Iterable[int]) -> Graph:
    """``K_a``: ``K`` plus all edges inside ``A``."""
    a, b = _partition(n, a, b)
    g = complete_bipartite(n, a, b)
    g.toggle_clique(mask_of(a))
    g.toggles = 0
    return g


def k_b(n: int, a: Iterable[int], b: Iterable[int]) -> Graph:
    a, b = _partition(n, a, b)
    return k_a(n, b, a)


def k_a_i(n: int, a: Iterable[int], b: Iterable[int], i: int) -> Graph:
    """``K_{a,i}``: clique on ``A`` and vertex ``i`` joined to everything."""
    a, b = _partition(n, a, b)
    g = Graph(n)
    g.toggle_clique(mask_of(a))
    g.toggle_star(i, ((1 << n) - 1) & ~g.adj[i])
    g.toggles = 0
    return g


def k_b_i(n: int, a: Iterable[int], b: Iterable[int], i: int) -> Graph:
    a, b = _partition(n, a, b)
    return k_a_i(n, b, a, i)


def star_graph(n: int, center: int) -> Graph:
    return Graph(n, [(center, q) for q in range(n) if q != center])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(p, q) for p in range(n) for q in range(p + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def build_named_graph(name: str, n: int, a=None, b=None, i=None, j=None) -> Graph:
    """Dispatch on the family name: W, K, K_a, K_b, K_a_i, K_b_i, star, complete, empty."""
    builders = {
        "W": lambda: w_graph(n, a, b, i, j),
        "K": lambda: complete_bipartite(n, a, b),
        "K_a": lambda: k_a(n, a, b),
        "K_b": lambda: k_b(n, a, b),
        "K_a_i": lambda: k_a_i(n, a, b, i),
        "K_b_i": lambda: k_b_i(n, a, b, i),
        "star": lambda: star_graph(n, i),
        "complete": lambda: complete_graph(n),
        "empty": lambda: empty_graph(n),
    }
    if name not in builders:
        raise ValueError(f"unknown graph family {name!r}")
    return builders[name]()


# -- text formats -----------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, n: int | None = None) -> Graph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "n" and n is None:
                n = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]) - 1, int(parts[1]) - 1
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: vertices are 1-based")
        edges.append((u, v))
    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    g = Graph(n)
    for u, v in edges:
        g.toggle_edge(u, v)
    g.toggles = 0
    return g


def to_dot(g: Graph, labels: dict[int, str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lab = f"{v + 1}"
        if labels and labels.get(v):
            lab += f"\\n{labels[v]}"
        lines.append(f'  {v + 1} [label="{lab}"];')
    for u, v in g.edges():
        lines.append(f"  {u + 1} -- {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
