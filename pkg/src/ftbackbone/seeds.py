"""Seed builders for 2-connected m-fold dominating sets.

The default builder runs three stages, each only adding nodes:

1. greedy set multicover to get an m-fold dominating set,
2. shortest connector paths until the induced subgraph is connected,
3. detour paths around cut vertices until it is 2-connected.

Builders are looked up by name in ``SEED_BUILDERS``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import InputError, InternalError
from .graph import Graph, NodeSet, articulation_points, components, is_k_connected, node_set
from .oracle import brute_min_kmcds, verify_kmcds


@dataclass(frozen=True)
class BaseCdsResult:
    c0: NodeSet
    method_name: str
    claimed_alpha: Optional[Fraction] = None


def greedy_m_fold_ds(g: Graph, m: int) -> NodeSet:
    """Greedy set multicover: every node outside D ends with >= m neighbours in D.

    The gain of a node w is its own deficiency (removed once w joins D) plus
    one for each deficient neighbour outside D. Ties go to the smallest id.
    Nodes of degree below m can only be covered by joining D themselves.
    """
    if m < 1:
        raise InputError("m must be at least 1")
    adj = g.adj
    covered = {v: 0 for v in g.nodes}
    chosen: set[int] = set()
    deficient = set(g.nodes)
    while deficient:
        best, best_gain = None, 0
        for w in g.nodes:
            if w in chosen:
                continue
            gain = (m - covered[w]) if w in deficient else 0
            gain += sum(1 for v in adj[w] if v in deficient)
            if gain > best_gain:
                best, best_gain = w, gain
        if best is None:
            raise InternalError("greedy multicover stalled")
        chosen.add(best)
        deficient.discard(best)
        for v in adj[best]:
            covered[v] += 1
            if covered[v] >= m:
                deficient.discard(v)
    return node_set(chosen)


def _bfs_connector(g: Graph, sources: set[int], targets: set[int], blocked: set[int]) -> list[int]:
    """Internal nodes of a shortest path from ``sources`` to ``targets``.

    Internal nodes avoid ``blocked`` and ``targets``; neighbours are scanned
    in increasing id order so the path is deterministic.
    """
    parent: dict[int, int] = {}
    queue = deque(sorted(sources))
    seen = set(sources)
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y in seen:
                continue
            if y in targets:
                path = []
                z = x
                while z not in sources:
                    path.append(z)
                    z = parent[z]
                return path
            if y in blocked:
                continue
            seen.add(y)
            parent[y] = x
            queue.append(y)
    return []


def connect_to_cds(g: Graph, d: Iterable[int], m: int) -> NodeSet:
    """Add connector paths until G[d] is connected.

    The component holding the smallest id is joined to the nearest other
    component by a shortest path through outside nodes.
    """
    c = set(d)
    if not c:
        raise InputError("empty dominating set")
    while True:
        adj = {v: g.adj[v] & c for v in c}
        comps = components(adj)
        if len(comps) == 1:
            return node_set(c)
        first = set(comps[0])
        path = _bfs_connector(g, first, c - first, c - first)
        if not path:
            raise InputError("graph is disconnected; no connector path exists")
        c.update(path)


def biconnect(g: Graph, c: Iterable[int], m: int) -> NodeSet:
    """Add detour paths until G[c] is 2-connected.

    While G[c] has a cut vertex w (smallest first), the component of
    G[c] - w holding the smallest id is joined to another component by a
    shortest path in G - w. Every such path merges at least two blocks.
    """
    cs = set(c)
    while len(cs) < 3:
        common = [v for v in g.nodes if v not in cs and cs <= g.adj[v]]
        if not common:
            raise InputError("cannot extend a set of fewer than 3 nodes to a 2-connected one")
        cs.add(common[0])
    while True:
        adj = {v: g.adj[v] & cs for v in cs}
        if len(components(adj)) != 1:
            raise InputError("G[c] must be connected")
        cut = articulation_points(adj)
        if not cut:
            return node_set(cs)
        w = min(cut)
        comps = components(adj, {w})
        first = set(comps[0])
        rest = cs - first - {w}
        path = _bfs_connector(g, first, rest, rest | {w})
        if not path:
            raise InputError(f"no path around cut vertex {w}; graph is not 2-connected")
        cs.update(path)


def compute_2m_cds(g: Graph, m: int) -> BaseCdsResult:
    """(2, m)-CDS seed from the three greedy stages, verified before return."""
    if m < 2:
        raise InputError("m must be at least 2")
    d = greedy_m_fold_ds(g, m)
    d = connect_to_cds(g, d, m)
    c0 = biconnect(g, d, m)
    report = verify_kmcds(g, c0, 2, m)
    if not report.is_valid:
        raise InternalError(f"seed builder produced an invalid (2,{m})-CDS: {report}")
    return BaseCdsResult(c0, "greedy-stages", None)


def oracle_2m_cds(g: Graph, m: int) -> BaseCdsResult:
    """Exact minimum (2, m)-CDS by exhaustive search; small graphs only."""
    c0 = brute_min_kmcds(g, 2, m)
    if c0 is None:
        raise InputError(f"graph has no (2,{m})-CDS")
    return BaseCdsResult(c0, "oracle", Fraction(1))


SeedBuilder = Callable[[Graph, int], BaseCdsResult]

SEED_BUILDERS: dict[str, SeedBuilder] = {
    "greedy-stages": compute_2m_cds,
    "oracle": oracle_2m_cds,
}


def check_seed(g: Graph, m: int, seed: BaseCdsResult) -> None:
    if not verify_kmcds(g, seed.c0, 2, m).is_valid:
        raise InputError(f"seed from {seed.method_name!r} is not a (2,{m})-CDS")
    if not is_k_connected(g, 3):
        raise InputError("input graph is not 3-connected")
