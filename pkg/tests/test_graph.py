import itertools

import pytest
from hypothesis import given, strategies as st

from dyncore.graph import (
    AlreadyPresent, Digraph, GapVerdict, Graph, InvalidParameters, NotPresent,
    SelfLoop, UnknownVertex, format_edge_list, gap_decide, k_core,
    k_core_membership, k_truss, kl_core, oracle_core_decomposition,
    oracle_truss_decomposition, parse_edge_list, peeling_order,
    static_core_decomposition, static_truss_decomposition,
)
from helpers import random_graph


def complete(n):
    return Graph(itertools.combinations(range(n), 2))


def test_insert_and_duplicates():
    g = Graph()
    g.insert_edge(1, 2)
    assert g.m == 1
    with pytest.raises(AlreadyPresent):
        g.insert_edge(1, 2)
    with pytest.raises(AlreadyPresent):
        g.insert_edge(2, 1)
    assert g.m == 1
    with pytest.raises(SelfLoop):
        g.insert_edge(1, 1)


def test_delete_unordered():
    g = Graph([(1, 2)])
    g.delete_edge(2, 1)
    assert g.m == 0
    with pytest.raises(NotPresent):
        Graph().delete_edge(1, 2)


def test_core_small_cases():
    assert set(static_core_decomposition(complete(4)).values()) == {3}
    path = Graph([(i, i + 1) for i in range(4)])
    assert set(static_core_decomposition(path).values()) == {1}
    two_tri = Graph([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert set(oracle_core_decomposition(two_tri).values()) == {2}
    assert static_core_decomposition(Graph()) == {}
    assert static_core_decomposition(Graph(vertices=[7])) == {7: 0}


def test_core_matches_oracle_random(rng):
    for _ in range(100):
        n = rng.randint(1, 50)
        g = random_graph(rng, n, rng.randint(0, 4 * n))
        assert static_core_decomposition(g) == oracle_core_decomposition(g)


@given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=60))
def test_core_oracle_property(pairs):
    g = Graph()
    for u, v in pairs:
        if u != v and not g.has_edge(u, v):
            g.insert_edge(u, v)
    core = static_core_decomposition(g)
    assert core == oracle_core_decomposition(g)
    kmax = max(core.values(), default=0)
    for k in range(kmax + 2):
        assert k_core(g, k) == {v for v, c in core.items() if c >= k}
        if k:
            assert k_core(g, k + 1) <= k_core(g, k)


def test_core_monotone_under_insertion(rng):
    g = Graph(vertices=range(30))
    prev = static_core_decomposition(g)
    for _ in range(150):
        u, v = rng.randrange(30), rng.randrange(30)
        if u == v or g.has_edge(u, v):
            continue
        g.insert_edge(u, v)
        cur = static_core_decomposition(g)
        assert all(cur[x] >= prev[x] for x in prev)
        prev = cur


def test_membership():
    k4 = complete(4)
    assert all(k_core_membership(k4, 3, u) for u in range(4))
    assert not any(k_core_membership(k4, 4, u) for u in range(4))
    lolli = Graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    oracle = oracle_core_decomposition(lolli)
    assert k_core_membership(lolli, 2, 3) == (oracle[3] >= 2) == False
    with pytest.raises(UnknownVertex):
        k_core_membership(k4, 1, 99)


def test_truss_small():
    assert set(static_truss_decomposition(complete(4)).values()) == {4}
    assert set(static_truss_decomposition(complete(3)).values()) == {3}
    assert static_truss_decomposition(Graph([(0, 1)])) == {(0, 1): 2}


def test_truss_matches_oracle(rng):
    for _ in range(60):
        n = rng.randint(2, 40)
        g = random_graph(rng, n, rng.randint(0, 150))
        t = static_truss_decomposition(g)
        assert t == oracle_truss_decomposition(g)
        for k in range(2, max(t.values(), default=2) + 2):
            assert k_truss(g, k) == {e for e, v in t.items() if v >= k}


def test_truss_inside_core(rng):
    for _ in range(30):
        g = random_graph(rng, 25, rng.randint(20, 120))
        t = static_truss_decomposition(g)
        core = static_core_decomposition(g)
        for (u, v), k in t.items():
            assert core[u] >= k - 1 and core[v] >= k - 1


def test_kl_core_examples():
    cyc = Digraph([(0, 1), (1, 2), (2, 0)])
    assert kl_core(cyc, 1, 1) == {0, 1, 2}
    assert kl_core(cyc, 2, 0) == set()
    assert kl_core(Digraph.bidirected(complete(4)), 3, 3) == {0, 1, 2, 3}
    with pytest.raises(InvalidParameters):
        kl_core(cyc, -1, 0)


def test_kl_core_bidirected_matches_kcore(rng):
    for _ in range(40):
        g = random_graph(rng, 20, rng.randint(0, 80))
        d = Digraph.bidirected(g)
        for k in range(5):
            assert kl_core(d, k, k) == k_core(g, k)


def test_gap_decide_examples():
    assert gap_decide(3, 1.2, 4, 6) is GapVerdict.AT_MOST_X
    assert gap_decide(5, 1.2, 4, 6) is GapVerdict.AT_LEAST_Y
    with pytest.raises(InvalidParameters):
        gap_decide(5, 1.6, 4, 6)


def test_gap_decide_enumeration():
    # every admissible s for every promised c must be classified correctly
    X, Y, alpha = 4, 6, 1.2
    for c in list(range(0, X + 1)) + list(range(Y, 21)):
        for tenth in range(c * 10, int(alpha * c * 10) + 1):
            s = tenth / 10
            verdict = gap_decide(s, alpha, X, Y)
            assert (verdict is GapVerdict.AT_MOST_X) == (c <= X)


def test_peeling_order_tiebreak():
    # star: leaves 1, 2 go first; then 0 and 3 both have degree 1 and 0 wins
    g = Graph([(0, 1), (0, 2), (0, 3)])
    assert peeling_order(g) == [1, 2, 0, 3]


def test_edge_list_roundtrip(rng):
    g = random_graph(rng, 30, 50)
    g.add_vertex(100)
    h = parse_edge_list(format_edge_list(g).splitlines())
    assert set(h.edges()) == set(g.edges())
    assert set(h.vertices()) == set(g.vertices())
    with pytest.raises(ValueError, match="line 2"):
        parse_edge_list(["1 2", "x y"])
    d = parse_edge_list(["# arcs", "1 2", "2 1", "3 1"], directed=True)
    assert sorted(d.arcs()) == [(1, 2), (2, 1), (3, 1)]
