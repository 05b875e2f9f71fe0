"""Simple mutable (di)graphs and static core/truss decompositions.

Every fast algorithm here has a deliberately naive twin (``oracle_*``) that
follows the textbook definition directly; tests cross-check the two.
"""
from __future__ import annotations

import enum
from collections import deque
from typing import Dict, Iterable, Iterator, List, Set, Tuple

Vertex = int
Edge = Tuple[int, int]


class GraphError(Exception):
    pass


class SelfLoop(GraphError, ValueError):
    pass


class AlreadyPresent(GraphError, KeyError):
    pass


class NotPresent(GraphError, KeyError):
    pass


class UnknownVertex(GraphError, KeyError):
    pass


class InvalidParameters(GraphError, ValueError):
    pass


def edge_key(u: Vertex, v: Vertex) -> Edge:
    """Canonical (sorted) form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


class Graph:
    """Undirected simple graph. Vertices are created on first mention."""

    def __init__(self, edges: Iterable[Edge] = (), vertices: Iterable[Vertex] = ()):
        self.adj: Dict[Vertex, Set[Vertex]] = {}
        self._m = 0
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.insert_edge(u, v)

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return self._m

    def add_vertex(self, v: Vertex) -> None:
        self.adj.setdefault(v, set())

    def vertices(self) -> Iterable[Vertex]:
        return self.adj.keys()

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in self.adj.items():
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def has_vertex(self, v: Vertex) -> bool:
        return v in self.adj

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        nb = self.adj.get(u)
        return nb is not None and v in nb

    def neighbors(self, v: Vertex) -> Set[Vertex]:
        try:
            return self.adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def insert_edge(self, u: Vertex, v: Vertex) -> None:
        if u == v:
            raise SelfLoop(u)
        au = self.adj.setdefault(u, set())
        if v in au:
            raise AlreadyPresent((u, v))
        au.add(v)
        self.adj.setdefault(v, set()).add(u)
        self._m += 1

    def delete_edge(self, u: Vertex, v: Vertex) -> None:
        au = self.adj.get(u)
        if au is None or v not in au:
            raise NotPresent((u, v))
        au.discard(v)
        self.adj[v].discard(u)
        self._m -= 1

    def copy(self) -> "Graph":
        g = Graph()
        g.adj = {v: set(nb) for v, nb in self.adj.items()}
        g._m = self._m
        return g

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adj.values()), default=0)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Directed simple graph (no self-loops, no parallel arcs)."""

    def __init__(self, arcs: Iterable[Edge] = (), vertices: Iterable[Vertex] = ()):
        self.out_adj: Dict[Vertex, Set[Vertex]] = {}
        self.in_adj: Dict[Vertex, Set[Vertex]] = {}
        self._m = 0
        for v in vertices:
            self.add_vertex(v)
        for u, v in arcs:
            self.insert_arc(u, v)

    @property
    def n(self) -> int:
        return len(self.out_adj)

    @property
    def m(self) -> int:
        return self._m

    def add_vertex(self, v: Vertex) -> None:
        self.out_adj.setdefault(v, set())
        self.in_adj.setdefault(v, set())

    def vertices(self) -> Iterable[Vertex]:
        return self.out_adj.keys()

    def arcs(self) -> Iterator[Edge]:
        for u, nbrs in self.out_adj.items():
            for v in nbrs:
                yield (u, v)

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        nb = self.out_adj.get(u)
        return nb is not None and v in nb

    def insert_arc(self, u: Vertex, v: Vertex) -> None:
        if u == v:
            raise SelfLoop(u)
        self.add_vertex(u)
        self.add_vertex(v)
        if v in self.out_adj[u]:
            raise AlreadyPresent((u, v))
        self.out_adj[u].add(v)
        self.in_adj[v].add(u)
        self._m += 1

    def delete_arc(self, u: Vertex, v: Vertex) -> None:
        nb = self.out_adj.get(u)
        if nb is None or v not in nb:
            raise NotPresent((u, v))
        nb.discard(v)
        self.in_adj[v].discard(u)
        self._m -= 1

    # uniform names so reduction artifacts can drive either kind of target
    insert_edge = insert_arc
    delete_edge = delete_arc
    has_edge = has_arc
    edges = arcs

    @classmethod
    def bidirected(cls, g: Graph) -> "Digraph":
        d = cls(vertices=g.vertices())
        for u, v in g.edges():
            d.insert_arc(u, v)
            d.insert_arc(v, u)
        return d

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# core decomposition

def static_core_decomposition(g: Graph) -> Dict[Vertex, int]:
    """Core values by bucket peeling (Batagelj-Zaversnik), O(n + m)."""
    deg = {v: len(nb) for v, nb in g.adj.items()}
    if not deg:
        return {}
    md = max(deg.values())
    bins = [0] * (md + 1)
    for d in deg.values():
        bins[d] += 1
    start = 0
    for d in range(md + 1):
        bins[d], start = start, start + bins[d]
    order: List[Vertex] = [0] * len(deg)
    pos: Dict[Vertex, int] = {}
    for v, d in deg.items():
        pos[v] = bins[d]
        order[bins[d]] = v
        bins[d] += 1
    for d in range(md, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0
    adj = g.adj
    for i in range(len(order)):
        v = order[i]
        dv = deg[v]
        for u in adj[v]:
            du = deg[u]
            if du > dv:
                # swap u with the first vertex of its bin, then shrink the bin
                pu = pos[u]
                pw = bins[du]
                w = order[pw]
                if u != w:
                    order[pu], order[pw] = w, u
                    pos[u], pos[w] = pw, pu
                bins[du] += 1
                deg[u] = du - 1
    return deg


def oracle_core_decomposition(g: Graph) -> Dict[Vertex, int]:
    # straight from the definition: k-core = fixpoint of deleting degree < k
    core = {v: 0 for v in g.adj}
    alive = set(g.adj)
    k = 1
    while alive:
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if sum(1 for u in g.adj[v] if u in alive) < k:
                    alive.discard(v)
                    changed = True
        for v in alive:
            core[v] = k
        k += 1
    return core


def k_core(g: Graph, k: int) -> Set[Vertex]:
    """Vertex set of the k-core, by queue peeling at a fixed threshold."""
    deg = {v: len(nb) for v, nb in g.adj.items()}
    alive = set(g.adj)
    queue = [v for v, d in deg.items() if d < k]
    adj = g.adj
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in adj[v]:
            if u in alive:
                deg[u] -= 1
                if deg[u] == k - 1:
                    queue.append(u)
    return alive


def k_core_membership(g: Graph, k: int, u: Vertex) -> bool:
    if u not in g.adj:
        raise UnknownVertex(u)
    return static_core_decomposition(g)[u] >= k


def peeling_order(g: Graph) -> List[Vertex]:
    """Repeatedly remove a minimum-degree vertex, lowest id first on ties."""
    import heapq

    deg = {v: len(nb) for v, nb in g.adj.items()}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed: Set[Vertex] = set()
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if v in removed or d != deg[v]:
            continue
        removed.add(v)
        order.append(v)
        for u in g.adj[v]:
            if u not in removed:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order


# ---------------------------------------------------------------------------
# truss decomposition

def _supports(g: Graph) -> Dict[Edge, int]:
    adj = g.adj
    sup = {}
    for u, v in g.edges():
        a, b = adj[u], adj[v]
        if len(a) > len(b):
            a, b = b, a
        sup[(u, v)] = len(a & b)
    return sup


def static_truss_decomposition(g: Graph) -> Dict[Edge, int]:
    """Truss value per edge (key is the sorted pair); triangle-free edges get 2.

    Support peeling in increasing support order with lazy bucket queues.
    """
    sup = _supports(g)
    if not sup:
        return {}
    adj = {v: set(nb) for v, nb in g.adj.items()}
    maxs = max(sup.values())
    buckets: List[List[Edge]] = [[] for _ in range(maxs + 1)]
    for e, s in sup.items():
        buckets[s].append(e)
    truss: Dict[Edge, int] = {}
    k = 2
    s = 0
    remaining = len(sup)
    while remaining:
        # smallest non-empty support bucket
        while s <= maxs and not buckets[s]:
            s += 1
        e = buckets[s].pop()
        if e in truss or sup[e] != s:
            continue
        k = max(k, s + 2)
        truss[e] = k
        remaining -= 1
        u, v = e
        au, av = adj[u], adj[v]
        if len(au) > len(av):
            au, av = av, au
        for w in au & av:
            for f in (edge_key(u, w), edge_key(v, w)):
                sf = sup[f]
                if sf > 0:
                    sup[f] = sf - 1
                    buckets[sf - 1].append(f)
                    if sf - 1 < s:
                        s = sf - 1
        adj[u].discard(v)
        adj[v].discard(u)
    return truss


def k_truss(g: Graph, k: int) -> Set[Edge]:
    """Edge set (sorted pairs) of the k-truss, peeling at a fixed threshold."""
    need = k - 2
    adj = {v: set(nb) for v, nb in g.adj.items()}
    sup = _supports(g)
    queue = [e for e, s in sup.items() if s < need]
    dead: Set[Edge] = set()
    while queue:
        e = queue.pop()
        if e in dead:
            continue
        dead.add(e)
        u, v = e
        for w in adj[u] & adj[v]:
            for f in (edge_key(u, w), edge_key(v, w)):
                if f not in dead:
                    sup[f] -= 1
                    if sup[f] == need - 1:
                        queue.append(f)
        adj[u].discard(v)
        adj[v].discard(u)
    return set(sup) - dead


def oracle_truss_decomposition(g: Graph) -> Dict[Edge, int]:
    # definitional: for k = 3, 4, ... delete edges in < k-2 triangles until fixpoint
    alive = set(edge_key(u, v) for u, v in g.edges())
    truss = {e: 2 for e in alive}
    k = 3
    while alive:
        changed = True
        while changed:
            changed = False
            nb: Dict[Vertex, Set[Vertex]] = {}
            for u, v in alive:
                nb.setdefault(u, set()).add(v)
                nb.setdefault(v, set()).add(u)
            for e in list(alive):
                u, v = e
                if len(nb[u] & nb[v]) < k - 2:
                    alive.discard(e)
                    nb[u].discard(v)
                    nb[v].discard(u)
                    changed = True
        for e in alive:
            truss[e] = k
        k += 1
    return truss


# ---------------------------------------------------------------------------
# directed (k, l)-core

def kl_core(g: Digraph, k: int, l: int) -> Set[Vertex]:
    """Maximal vertex set with induced in-degree >= k and out-degree >= l."""
    if k < 0 or l < 0:
        raise InvalidParameters((k, l))
    indeg = {v: len(nb) for v, nb in g.in_adj.items()}
    outdeg = {v: len(nb) for v, nb in g.out_adj.items()}
    alive = set(g.out_adj)
    queue = [v for v in alive if indeg[v] < k or outdeg[v] < l]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.out_adj[v]:
            if u in alive:
                indeg[u] -= 1
                if indeg[u] == k - 1:
                    queue.append(u)
        for u in g.in_adj[v]:
            if u in alive:
                outdeg[u] -= 1
                if outdeg[u] == l - 1:
                    queue.append(u)
    return alive


# ---------------------------------------------------------------------------
# gap reduction

class GapVerdict(enum.Enum):
    AT_MOST_X = "AtMostX"
    AT_LEAST_Y = "AtLeastY"


def gap_decide(s: float, alpha: float, X: float, Y: float) -> GapVerdict:
    """Decide c <= X versus c >= Y from an alpha-approximation s of c.

    The approximation satisfies c <= s <= alpha*c, so c <= X forces
    s <= alpha*X while c >= Y forces s >= Y > alpha*X.
    """
    if not (0 <= X < Y) or alpha < 1:
        raise InvalidParameters((alpha, X, Y))
    if X > 0 and alpha >= Y / X:
        raise InvalidParameters((alpha, X, Y))
    return GapVerdict.AT_LEAST_Y if s > alpha * X else GapVerdict.AT_MOST_X


# ---------------------------------------------------------------------------
# plain-text edge lists

def parse_edge_list(lines: Iterable[str], directed: bool = False):
    g = Digraph() if directed else Graph()
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integer vertex ids, got {raw.strip()!r}") from None
        if len(ids) == 1:
            g.add_vertex(ids[0])
        elif len(ids) == 2:
            try:
                g.insert_edge(ids[0], ids[1])
            except GraphError as exc:
                raise ValueError(f"line {lineno}: {type(exc).__name__} {ids}") from None
        else:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
    return g


def format_edge_list(g) -> str:
    out = []
    touched = set()
    for u, v in sorted(g.edges()):
        out.append(f"{u} {v}")
        touched.add(u)
        touched.add(v)
    # isolated vertices as single-id lines so the vertex set round-trips
    for v in sorted(set(g.vertices()) - touched):
        out.append(f"{v}")
    return "\n".join(out) + ("\n" if out else "")


def read_edge_list(path, directed: bool = False):
    with open(path) as fh:
        return parse_edge_list(fh, directed)


def write_edge_list(g, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))


def bfs_components(g: Graph) -> Dict[Vertex, int]:
    comp: Dict[Vertex, int] = {}
    c = 0
    for s in g.adj:
        if s in comp:
            continue
        comp[s] = c
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in g.adj[x]:
                if y not in comp:
                    comp[y] = c
                    dq.append(y)
        c += 1
    return comp
