"""Shared random generators and naive oracles for the test suite."""
from collections import deque

from dyncore.graph import Graph


def random_graph(rng, n, m):
    g = Graph(vertices=range(n))
    m = min(m, n * (n - 1) // 2)
    while g.m < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and not g.has_edge(u, v):
            g.insert_edge(u, v)
    return g


def bfs_connected(adj, u, v):
    if u == v:
        return True
    seen = {u}
    dq = deque([u])
    while dq:
        x = dq.popleft()
        for y in adj.get(x, ()):
            if y == v:
                return True
            if y not in seen:
                seen.add(y)
                dq.append(y)
    return False
