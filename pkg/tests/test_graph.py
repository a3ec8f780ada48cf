import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given

from conftest import graphs
from graphstab import oracle
from graphstab.graph import (
    Graph,
    GuardError,
    apply_cs_square_product,
    apply_cz_product,
    build_named_graph,
    from_edge_list,
    lc_orbit,
    local_complement,
    mask_of,
    to_dot,
    to_edge_list,
    toggle_edge,
    w_graph,
)

subsets = st.lists(st.integers(0, 6), unique=True)


@given(graphs())
def test_rows_symmetric_without_loops(g):
    g.check()
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        for u in g.neighbors(v):
            assert g.has_edge(u, v)


@given(graphs(min_n=2), st.data())
def test_toggle_edge_involution(g, data):
    u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    h = toggle_edge(g, u, v)
    assert h.has_edge(u, v) != g.has_edge(u, v)
    assert toggle_edge(h, u, v) == g


def test_toggle_edge_rejects_loops_and_range():
    g = Graph(3)
    with pytest.raises(ValueError):
        g.toggle_edge(1, 1)
    with pytest.raises(ValueError):
        g.toggle_edge(0, 3)


@given(graphs(), st.data())
def test_local_complement_is_involution(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    h = local_complement(g, v)
    assert local_complement(h, v) == g
    assert h.neighbors(v) == g.neighbors(v)


@given(graphs(), st.data())
def test_local_complement_is_local_clifford(g, data):
    # |L_v G> = sqrt(-iX_v) prod_{N(v)} sqrt(iZ) |G>, up to a global phase
    v = data.draw(st.integers(0, g.n - 1))
    n = g.n
    h = local_complement(g, v)
    vec = oracle.graph_state(n, g.edges())
    sx = np.array([[1, -1j], [-1j, 1]]) / np.sqrt(2)
    vec = oracle.apply_1q(vec, n, v, sx)
    for q in g.neighbors(v):
        vec = oracle.apply_1q(vec, n, q, oracle.SDG)
    assert oracle.parallel(vec, oracle.graph_state(n, h.edges()))


@given(graphs(max_n=6), subsets, subsets)
def test_cz_product_matches_dense(g, a, b):
    a = [x for x in a if x < g.n]
    b = [x for x in b if x < g.n]
    h, z = apply_cz_product(g, a, b)
    want = oracle.cz_product_dense(g.n, a, b) * oracle.graph_state(g.n, g.edges())
    got = oracle.pauli_matrix_apply(oracle.graph_state(g.n, h.edges()), g.n, z)
    assert oracle.close(got, want)


@given(graphs(max_n=6), subsets)
def test_cs_square_product_matches_dense(g, a):
    a = [x for x in a if x < g.n]
    h, s_on = apply_cs_square_product(g, a)
    want = oracle.cs_product_dense(g.n, a) * oracle.graph_state(g.n, g.edges())
    got = oracle.graph_state(g.n, h.edges())
    for q in s_on:
        got = oracle.apply_1q(got, g.n, q, oracle.S)
    assert oracle.close(got, want)


@given(graphs())
def test_edge_list_round_trip(g):
    text = to_edge_list(g)
    assert text.startswith(f"# n {g.n}")
    assert from_edge_list(text) == g


def test_edge_list_errors():
    with pytest.raises(ValueError):
        from_edge_list("# n 2\n1 3\n")
    with pytest.raises(ValueError):
        from_edge_list("# n 2\n1 1\n")


def test_dot_lists_edges_one_based():
    out = to_dot(Graph(3, [(0, 2)]), {0: "H"})
    assert "1 -- 3;" in out
    assert '1 [label="1\\nH"];' in out


@given(graphs(max_n=6))
def test_orbit_closed_under_local_complement(g):
    orbit = lc_orbit(g)
    assert g in orbit
    keys = {h.key() for h in orbit}
    for h in orbit:
        for v in range(h.n):
            assert local_complement(h, v).key() in keys


def test_orbit_guard():
    with pytest.raises(GuardError):
        lc_orbit(Graph(13))


def test_w_graph_shape():
    g = w_graph(5, [0, 1], [2, 3, 4], 0, 2)
    assert sorted(g.edges()) == [(0, 1), (0, 2), (2, 3), (2, 4)]
    assert mask_of([0, 2]) == 0b101


def test_named_graph_dispatch():
    assert build_named_graph("complete", 4).num_edges() == 6
    assert build_named_graph("star", 4, i=1).degree(1) == 3
    assert build_named_graph("K", 4, a=[0, 1], b=[2, 3]).num_edges() == 4
    with pytest.raises(ValueError):
        build_named_graph("nope", 3)
