import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphisol.graphs import (
    Graph,
    Graph6Error,
    GraphError,
    bits,
    closed_neighborhood,
    components,
    delete_vertices,
    encode_graph6,
    format_edge_list,
    from_edges,
    mask_of,
    parse_edge_list,
    parse_graph6,
)
from conftest import random_mask_graph

import random


C4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K4 = from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(min_value=0, max_value=max_n))
    nbits = n * (n - 1) // 2
    tri = draw(st.integers(min_value=0, max_value=(1 << nbits) - 1)) if nbits else 0
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if tri >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def test_from_edges_basic():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edge_count() == 4
    assert g.degrees() == (2, 2, 2, 2)
    assert from_edges(1, []).n == 1
    # duplicates collapse
    assert from_edges(3, [(0, 1), (1, 0), (0, 1)]).edge_count() == 1


def test_from_edges_errors():
    with pytest.raises(GraphError):
        from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        from_edges(3, [(0, 5)])
    with pytest.raises(GraphError):
        from_edges(70, [])
    with pytest.raises(GraphError):
        from_edges(-1, [])


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10,))  # missing row
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(GraphError):
        Graph(1, (0b10,))  # out-of-range bit


def test_closed_neighborhood():
    assert closed_neighborhood(C4, 1 << 0) == mask_of([0, 1, 3])
    assert closed_neighborhood(C4, 0) == 0
    assert closed_neighborhood(K4, 1 << 2) == 0b1111


def test_closed_neighborhood_fixed_points(rng):
    # N[S] >= S always; equality exactly for unions of whole components
    for _ in range(200):
        g = random_mask_graph(rng, rng.randint(1, 9), 0.3)
        comps = [m for m, _ in components(g)]
        for _ in range(5):
            s = rng.getrandbits(g.n)
            ns = closed_neighborhood(g, s)
            assert ns & s == s
            is_union = all((m & s == m) or (m & s == 0) for m in comps)
            assert (ns == s) == is_union


def test_delete_vertices():
    sub, old = delete_vertices(C4, 1 << 2)
    assert sub.n == 3 and sub.edge_count() == 2  # a 3-path
    assert old == (0, 1, 3)
    same, ident = delete_vertices(C4, 0)
    assert same == C4 and ident == (0, 1, 2, 3)
    empty, _ = delete_vertices(K4, 0b1111)
    assert empty.n == 0


def test_delete_preserves_edges(rng):
    for _ in range(100):
        g = random_mask_graph(rng, 8, 0.4)
        x = rng.getrandbits(8)
        sub, old = delete_vertices(g, x)
        assert sub.n == 8 - bin(x).count("1")
        for u in range(sub.n):
            for v in range(u + 1, sub.n):
                assert sub.has_edge(u, v) == g.has_edge(old[u], old[v])


def test_components():
    assert len(components(C4)) == 1
    k3k2 = from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    comps = components(k3k2)
    assert [c[1].n for c in comps] == [3, 2]
    assert components(Graph(0, ())) == []


def test_components_partition(rng):
    for _ in range(100):
        g = random_mask_graph(rng, 10, 0.15)
        comps = components(g)
        union = 0
        for mask, sub in comps:
            assert union & mask == 0
            union |= mask
            assert sub.is_connected()
        assert union == g.full_mask
        # no edges across components
        for mask, _ in comps:
            assert closed_neighborhood(g, mask) == mask


# --- graph6 ---------------------------------------------------------------

def test_graph6_known_vectors():
    assert parse_graph6("C~") == K4
    cl = parse_graph6("Cl")
    assert sorted(cl.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert parse_graph6("?").n == 0
    assert encode_graph6(K4) == "C~"
    assert encode_graph6(parse_graph6("Cl")) == "Cl"


def test_graph6_rejects():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("C~~~")  # trailing garbage
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # truncated
    with pytest.raises(Graph6Error):
        parse_graph6(" C~")  # space outside [63, 126]
    with pytest.raises(Graph6Error, match="multi-byte"):
        parse_graph6("~??")
    with pytest.raises(Graph6Error, match="padding"):
        parse_graph6("B" + chr(63 + 0b000001))  # n=3 needs 3 bits; pad must be 0


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_graph6_roundtrip(g):
    assert parse_graph6(encode_graph6(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    nx = pytest.importorskip("networkx")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert encode_graph6(g) == theirs
    back = nx.from_graph6_bytes(encode_graph6(g).encode())
    assert sorted(map(tuple, map(sorted, back.edges()))) == sorted(g.edges())


def test_graph6_capacity():
    big = Graph(63, (0,) * 63)
    with pytest.raises(Graph6Error):
        encode_graph6(big)
    ok = Graph(62, (0,) * 62)
    assert parse_graph6(encode_graph6(ok)) == ok


def test_graph6_roundtrip_large(rng):
    for n in (30, 45, 62):
        for _ in range(20):
            g = random_mask_graph(rng, n, rng.random())
            assert parse_graph6(encode_graph6(g)) == g


# --- edge-list text format --------------------------------------------------

def test_edge_list_roundtrip():
    g = from_edges(5, [(0, 1), (2, 3), (3, 4)])
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("3\n0 1\n1 2\n").edge_count() == 2
    assert parse_edge_list("2\n").edge_count() == 0


def test_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("")
    with pytest.raises(GraphError):
        parse_edge_list("x\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("3\n0 1 2\n")
    with pytest.raises(GraphError):
        parse_edge_list("3\n0 q\n")
