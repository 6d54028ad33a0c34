"""Simple undirected graphs and exact vertex-connectivity primitives.

Node ids are arbitrary non-negative integers and are never renumbered.
Most algorithms here work on a plain adjacency mapping (``node -> set of
neighbours``) so that the brick decomposition can reuse them on graphs that
carry virtual edges.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import AbstractSet, Iterable, Iterator, Mapping

from .errors import InputError

Adjacency = Mapping[int, AbstractSet[int]]
NodeSet = tuple[int, ...]


def node_set(nodes: Iterable[int]) -> NodeSet:
    """Canonical NodeSet: a strictly increasing tuple of ids."""
    return tuple(sorted(set(nodes)))


class Graph:
    """Immutable simple undirected graph.

    >>> g = Graph([1, 2, 3], [(1, 2), (2, 3)])
    >>> g.neighbors(2)
    (1, 3)
    """

    __slots__ = ("_adj", "_nodes", "_edge_count", "_sorted_adj")

    def __init__(self, nodes: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in nodes:
            if not isinstance(v, int) or v < 0:
                raise InputError(f"node ids must be non-negative integers, got {v!r}")
            adj.setdefault(v, set())
        count = 0
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at node {u}")
            for w in (u, v):
                if not isinstance(w, int) or w < 0:
                    raise InputError(f"node ids must be non-negative integers, got {w!r}")
                adj.setdefault(w, set())
            if v in adj[u]:
                raise InputError(f"parallel edge {min(u, v)}-{max(u, v)}")
            adj[u].add(v)
            adj[v].add(u)
            count += 1
        self._nodes: NodeSet = tuple(sorted(adj))
        self._adj: dict[int, frozenset[int]] = {v: frozenset(adj[v]) for v in self._nodes}
        self._edge_count = count
        self._sorted_adj: dict[int, NodeSet] = {}

    @classmethod
    def from_adjacency(cls, adj: Adjacency) -> "Graph":
        edges = [(u, v) for u in adj for v in adj[u] if u < v]
        return cls(adj.keys(), edges)

    # -- basic queries -------------------------------------------------
    @property
    def nodes(self) -> NodeSet:
        return self._nodes

    @property
    def adj(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, v: int) -> NodeSet:
        try:
            return self._sorted_adj[v]
        except KeyError:
            pass
        if v not in self._adj:
            raise InputError(f"unknown node {v}")
        out = self._sorted_adj[v] = tuple(sorted(self._adj[v]))
        return out

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in self._nodes:
            for v in self.neighbors(u):
                if u < v:
                    yield (u, v)

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._nodes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nodes == other._nodes and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._nodes, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self._edge_count})"


# -- constructors for common graphs -----------------------------------------

def complete_graph(n: int, start: int = 1) -> Graph:
    nodes = range(start, start + n)
    return Graph(nodes, combinations(nodes, 2))


def cycle_graph(n: int, start: int = 1) -> Graph:
    nodes = list(range(start, start + n))
    return Graph(nodes, [(nodes[i], nodes[(i + 1) % n]) for i in range(n)])


def complete_bipartite(a: int, b: int, start: int = 1) -> Graph:
    left = range(start, start + a)
    right = range(start + a, start + a + b)
    return Graph(list(left) + list(right), [(u, v) for u in left for v in right])


def wheel_graph(rim: int, start: int = 1) -> Graph:
    """Hub ``start`` joined to every node of a rim cycle on the next ``rim`` ids."""
    hub = start
    rim_nodes = list(range(start + 1, start + 1 + rim))
    edges = [(hub, v) for v in rim_nodes]
    edges += [(rim_nodes[i], rim_nodes[(i + 1) % rim]) for i in range(rim)]
    return Graph([hub] + rim_nodes, edges)


def petersen_graph() -> Graph:
    """Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes i -- i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(range(10), outer + inner + spokes)


# -- subgraphs ---------------------------------------------------------------

def _check_members(g: Graph, c: Iterable[int]) -> frozenset[int]:
    cs = frozenset(c)
    missing = [v for v in cs if v not in g]
    if missing:
        raise InputError(f"unknown node id {min(missing)}")
    return cs


def induced_subgraph(g: Graph, c: Iterable[int]) -> Graph:
    """G[c]."""
    cs = _check_members(g, c)
    adj = {v: g.adj[v] & cs for v in cs}
    return Graph.from_adjacency(adj)


def neighbors_in(g: Graph, v: int, c: Iterable[int]) -> NodeSet:
    """N_g(v) intersected with ``c``."""
    if v not in g:
        raise InputError(f"unknown node {v}")
    return tuple(sorted(g.adj[v].intersection(c)))


# -- connectivity on raw adjacency -----------------------------------------

def components(adj: Adjacency, removed: AbstractSet[int] = frozenset()) -> list[list[int]]:
    """Connected components of ``adj`` minus ``removed``, each sorted, ordered by min id."""
    seen = set(removed)
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        comps.append(comp)
    return comps


def _connected_without(adj: Adjacency, removed: AbstractSet[int]) -> bool:
    start = next((v for v in adj if v not in removed), None)
    if start is None:
        return False
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj) - sum(1 for v in removed if v in adj)


def articulation_points(adj: Adjacency, removed: AbstractSet[int] = frozenset()) -> set[int]:
    """Cut vertices of ``adj`` minus ``removed`` (iterative Hopcroft-Tarjan lowpoint)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cut: set[int] = set()
    t = 0
    for root in adj:
        if root in removed or root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y in removed or y == parent:
                    continue
                if y in disc:
                    if disc[y] < low[x]:
                        low[x] = disc[y]
                else:
                    disc[y] = low[y] = t
                    t += 1
                    stack.append((y, x, iter(adj[y])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                if low[x] < low[parent]:
                    low[parent] = low[x]
                if parent == root:
                    root_children += 1
                elif low[x] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return cut


def is_biconnected_adj(adj: Adjacency, removed: AbstractSet[int] = frozenset()) -> bool:
    n = len(adj) - sum(1 for v in removed if v in adj)
    if n < 3:
        return False
    return _connected_without(adj, removed) and not articulation_points(adj, removed)


def max_disjoint_paths(adj: Adjacency, s: int, t: int, limit: int | None = None) -> int:
    """Number of internally disjoint s-t paths; a direct edge st counts as one path.

    Unit-capacity max flow on the node-split digraph, augmenting along BFS
    shortest paths. Stops early once ``limit`` paths are found.
    """
    if s == t:
        raise InputError("endpoints must differ")
    direct = 1 if t in adj[s] else 0
    if limit is not None and direct >= limit:
        return direct
    # dense relabel: w_in = 2i, w_out = 2i + 1
    index = {v: i for i, v in enumerate(adj)}
    cap: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    big = len(adj) + 1
    for v, i in index.items():
        arc(2 * i, 2 * i + 1, big if v in (s, t) else 1)
        for w in adj[v]:
            if {v, w} == {s, t}:
                continue
            arc(2 * i + 1, 2 * index[w], 1)
    source = 2 * index[s] + 1
    sink = 2 * index[t]
    flow = 0
    target = None if limit is None else limit - direct
    while target is None or flow < target:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return flow + direct


# -- public connectivity API -----------------------------------------------

def is_connected(g: Graph) -> bool:
    """True iff ``g`` has exactly one component; the empty graph is not connected."""
    if len(g) == 0:
        return False
    return _connected_without(g.adj, frozenset())


def local_connectivity(g: Graph, u: int, v: int) -> int:
    """p_g(u, v): maximum number of internally disjoint u-v paths."""
    if u == v:
        raise InputError("local connectivity needs two distinct nodes")
    for w in (u, v):
        if w not in g:
            raise InputError(f"unknown node {w}")
    return max_disjoint_paths(g.adj, u, v)


def is_k_connected_adj(adj: Adjacency, k: int) -> bool:
    n = len(adj)
    if k < 1:
        raise InputError("k must be at least 1")
    if n < k + 1:
        return False
    if k == 1:
        return _connected_without(adj, frozenset())
    if k == 2:
        return is_biconnected_adj(adj)
    if all(len(a) == n - 1 for a in adj.values()):
        return True
    if min(len(a) for a in adj.values()) < k:
        return False
    if k == 3:
        if not is_biconnected_adj(adj):
            return False
        return all(is_biconnected_adj(adj, {u}) for u in adj)
    nodes = sorted(adj)
    for u, v in combinations(nodes, 2):
        if v not in adj[u] and max_disjoint_paths(adj, u, v, limit=k) < k:
            return False
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` has at least k+1 nodes and no set of k-1 nodes disconnects it."""
    return is_k_connected_adj(g.adj, k)


def is_cycle_adj(adj: Adjacency) -> bool:
    return len(adj) >= 3 and all(len(a) == 2 for a in adj.values()) and _connected_without(adj, frozenset())


def is_cycle(g: Graph) -> bool:
    return is_cycle_adj(g.adj)


def cycle_order(adj: Adjacency) -> NodeSet:
    """Cyclic node order of a cycle, starting at the smallest id toward its smaller neighbour."""
    start = min(adj)
    order = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        order.append(cur)
        nxt = next(w for w in adj[cur] if w != prev)
        prev, cur = cur, nxt
    return tuple(order)
