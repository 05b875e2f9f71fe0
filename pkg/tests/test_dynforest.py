import random
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from dyncore.dynforest import (
    EulerTourForest, HdtConnectivity, LinkCutForest, NotATreeEdge, SameTree,
    check_tour,
)
from dyncore.graph import AlreadyPresent, NotPresent
from helpers import bfs_connected


def components(adj, vertices):
    comp = {}
    for s in vertices:
        if s in comp:
            continue
        comp[s] = s
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in adj.get(x, ()):
                if y not in comp:
                    comp[y] = s
                    dq.append(y)
    return comp


def same_partition(c1, c2):
    a = {}
    for v in c1:
        a.setdefault((c1[v], c2[v]), True)
    return len({k[0] for k in a}) == len(a) == len({k[1] for k in a})


def random_forest_trace(rng, n, steps):
    """Yields ('link'|'cut', u, v) keeping a forest."""
    adj = {v: set() for v in range(n)}
    edges = []
    for _ in range(steps):
        if edges and rng.random() < 0.4:
            u, v = edges.pop(rng.randrange(len(edges)))
            adj[u].discard(v)
            adj[v].discard(u)
            yield "cut", u, v, adj
        else:
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or bfs_connected(adj, u, v):
                continue
            adj[u].add(v)
            adj[v].add(u)
            edges.append((u, v))
            yield "link", u, v, adj


# -- Euler tour forest ----------------------------------------------------

def test_ett_link_two_singletons():
    f = EulerTourForest()
    f.link(0, 1)
    t = f.tour(0)
    assert len(t) == 4  # two loops plus two arcs
    assert check_tour(t)
    with pytest.raises(SameTree):
        f.link(1, 0)


def test_ett_cut_path():
    f = EulerTourForest()
    for i in range(4):
        f.link(i, i + 1)
    assert check_tour(f.tour(2))
    f.cut(1, 2)
    assert sorted([f.tree_size(0), f.tree_size(4)]) == [2, 3]
    assert not f.connected(0, 4)
    with pytest.raises(NotATreeEdge):
        f.cut(0, 4)
    f.cut(0, 1)
    assert f.tour(0) == [(0, 0)]


def test_ett_reroot():
    f = EulerTourForest()
    f.reroot(7)
    assert f.tour(7) == [(7, 7)]
    f.link(0, 1)
    f.link(1, 2)
    f.reroot(2)
    t = f.tour(0)
    assert t[0] == (2, 2) and t[-1][1] == 2
    assert check_tour(t)


def test_ett_random_trace_matches_components(rng):
    n = 40
    f = EulerTourForest()
    for v in range(n):
        f.node(v)
    for op, u, v, adj in random_forest_trace(rng, n, 600):
        if op == "link":
            f.link(u, v)
        else:
            f.cut(u, v)
        if rng.random() < 0.3:
            f.reroot(rng.randrange(n))
        comp = components(adj, range(n))
        for _ in range(10):
            a, b = rng.randrange(n), rng.randrange(n)
            assert f.connected(a, b) == (comp[a] == comp[b])
    for t in f.tours():
        assert check_tour(t)


def test_ett_marks_and_first_last(rng):
    f = EulerTourForest()
    assert f.first_marked(0) is None
    f.set_mark(3, 1)
    assert f.first_marked(3) == f.last_marked(3) == 3
    f.set_mark(3, 1)
    assert f.flagged_count(3) == 1
    f.set_mark(3, 4)
    assert f.mark(3) == 4 and f.flagged_count(3) == 1
    f.set_mark(3, 0)
    assert f.flagged_count(3) == 0

    # random tree, random marks, against a scan of the materialized tour
    g = EulerTourForest()
    n = 50
    for v in range(1, n):
        g.link(v, rng.randrange(v))
    for _ in range(200):
        g.set_mark(rng.randrange(n), rng.choice([0, 0, 1, 2]))
        r = rng.randrange(n)
        g.reroot(r)
        tour = g.tour(r)
        marked = [a for a, b in tour if a == b and g.mark(a) > 0]
        assert g.first_marked(r) == (marked[0] if marked else None)
        assert g.last_marked(r) == (marked[-1] if marked else None)
        assert g.flagged_count(r) == len(marked)


def test_ett_many_reroots_keep_tour_valid(rng):
    f = EulerTourForest()
    for v in range(1, 100):
        f.link(v, rng.randrange(v))
    for _ in range(100):
        f.reroot(rng.randrange(100))
        t = f.tour(0)
        assert check_tour(t)
        assert {a for a, b in t if a == b} == set(range(100))


# -- link-cut forest -------------------------------------------------------

def test_lct_basic():
    t = LinkCutForest()
    t.link(0, 1)
    t.evert(1)
    t.evert(1)
    assert t.nca(0, 0) == 0
    assert t.find_root(0) == 1
    t.cut(0, 1)
    assert not t.connected(0, 1)
    with pytest.raises(NotATreeEdge):
        t.cut(0, 1)


def test_lct_path_nca():
    t = LinkCutForest()
    t.link(0, 1)
    t.link(1, 2)
    t.evert(1)
    assert t.nca(0, 2) == 1
    assert t.nca(0, 5) is None


def naive_lca(adj, root, a, b):
    parent = {root: None}
    dq = deque([root])
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                dq.append(y)
    anc = set()
    while a is not None:
        anc.add(a)
        a = parent[a]
    while b not in anc:
        b = parent[b]
    return b


def test_lct_nca_random(rng):
    n = 60
    t = LinkCutForest()
    adj = {v: set() for v in range(n)}
    for v in range(1, n):
        p = rng.randrange(v)
        t.link(v, p)
        adj[v].add(p)
        adj[p].add(v)
    for _ in range(10):
        root = rng.randrange(n)
        t.evert(root)
        for _ in range(100):
            a, b = rng.randrange(n), rng.randrange(n)
            assert t.nca(a, b) == naive_lca(adj, root, a, b)


def test_lct_matches_ett(rng):
    n = 30
    t = LinkCutForest()
    f = EulerTourForest()
    for op, u, v, adj in random_forest_trace(rng, n, 400):
        getattr(t, op)(u, v)
        getattr(f, op)(u, v)
        if rng.random() < 0.5:
            t.evert(rng.randrange(n))
        for _ in range(5):
            a, b = rng.randrange(n), rng.randrange(n)
            assert t.connected(a, b) == f.connected(a, b)


# -- HDT -------------------------------------------------------------------

def test_hdt_small():
    h = HdtConnectivity(4)
    assert h.connected(2, 2)
    assert not h.connected(0, 1)
    assert h.insert_edge(0, 1).kind == "added"
    assert h.insert_edge(1, 2).kind == "added"
    ch = h.insert_edge(0, 2)
    assert ch.kind == "none"
    with pytest.raises(AlreadyPresent):
        h.insert_edge(2, 0)
    tree = [e for e in [(0, 1), (1, 2)]]
    ch = h.delete_edge(*tree[0])
    assert ch.kind == "removed" and ch.replacement == (0, 2)
    assert h.connected(0, 1)
    ch = h.delete_edge(1, 2)
    assert ch.kind == "removed"
    assert ch.replacement is None
    assert not h.connected(1, 2)
    with pytest.raises(NotPresent):
        h.delete_edge(1, 2)


def test_hdt_path_split():
    h = HdtConnectivity(3)
    h.insert_edge(0, 1)
    ch = h.delete_edge(0, 1)
    assert ch.kind == "removed" and ch.replacement is None
    assert not h.connected(0, 1)


def run_hdt_trace(rng, n, steps, check_every=1):
    h = HdtConnectivity(n)
    adj = {v: set() for v in range(n)}
    edges = []
    for step in range(steps):
        if edges and rng.random() < 0.45:
            k = rng.randrange(len(edges))
            u, v = edges[k]
            edges[k] = edges[-1]
            edges.pop()
            adj[u].discard(v)
            adj[v].discard(u)
            h.delete_edge(u, v)
        else:
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or v in adj[u]:
                continue
            adj[u].add(v)
            adj[v].add(u)
            edges.append((u, v))
            h.insert_edge(u, v)
        if step % check_every == 0:
            comp = components(adj, range(n))
            for _ in range(5):
                a, b = rng.randrange(n), rng.randrange(n)
                assert h.connected(a, b) == (comp[a] == comp[b])
    return h, adj


def test_hdt_random_small(rng):
    for _ in range(5):
        h, adj = run_hdt_trace(rng, 25, 500)
        h.check_invariants()
        # spanning: forest edges form a spanning forest of the graph
        forest = h.tree_edges()
        comp = components(adj, range(25))
        assert len(forest) == 25 - len(set(comp.values()))


@pytest.mark.slow
def test_hdt_long_trace():
    rng = random.Random(7)
    h, adj = run_hdt_trace(rng, 500, 10_000, check_every=50)
    h.check_invariants()


@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=80))
@settings(max_examples=60)
def test_hdt_toggle_property(pairs):
    # each pair toggles the edge; connectivity must match BFS throughout
    h = HdtConnectivity(10)
    adj = {v: set() for v in range(10)}
    for u, v in pairs:
        if u == v:
            continue
        if v in adj[u]:
            adj[u].discard(v)
            adj[v].discard(u)
            h.delete_edge(u, v)
        else:
            adj[u].add(v)
            adj[v].add(u)
            h.insert_edge(u, v)
        for a in range(10):
            assert h.connected(u, a) == bfs_connected(adj, u, a)
    h.check_invariants()
