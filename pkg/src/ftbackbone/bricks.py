"""Brick decomposition of 2-connected graphs and the potential function.

A 2-connected graph is split at good 2-separators (pairs {u, v} that
disconnect it and are joined by at least three internally disjoint paths)
until every piece is either 3-connected (a T-brick) or a cycle (an
R-brick). Pieces carry virtual edges between the separator pair so each
stays 2-connected. The potential of the graph is

    f = #T-bricks + sum over R-bricks of (2 * |R| - 5)

which equals 1 exactly when the graph is 3-connected or a triangle.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import AbstractSet, Iterable, Literal, Mapping, Optional

from .errors import InternalError, PreconditionError
from .graph import (
    Adjacency,
    Graph,
    NodeSet,
    articulation_points,
    components,
    cycle_order,
    induced_subgraph,
    is_biconnected_adj,
    is_cycle_adj,
    is_k_connected_adj,
    max_disjoint_paths,
    node_set,
)

Pair = tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MarkedGraph:
    """A graph plus virtual edges; connectivity is always judged on the union."""

    base: Graph
    virtual_edges: frozenset[Pair] = frozenset()

    def __post_init__(self) -> None:
        norm = frozenset(_pair(u, v) for u, v in self.virtual_edges)
        object.__setattr__(self, "virtual_edges", norm)
        for u, v in norm:
            if u == v or u not in self.base or v not in self.base:
                raise PreconditionError(f"bad virtual edge {u}-{v}")
            if self.base.has_edge(u, v):
                raise PreconditionError(f"virtual edge {u}-{v} duplicates a real edge")

    @property
    def nodes(self) -> NodeSet:
        return self.base.nodes

    def union_adj(self) -> dict[int, set[int]]:
        adj = {v: set(self.base.adj[v]) for v in self.base.nodes}
        for u, v in self.virtual_edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def union(self) -> Graph:
        return Graph.from_adjacency(self.union_adj())


@dataclass(frozen=True)
class Brick:
    nodes: NodeSet
    kind: Literal["T", "R"]
    witness: Optional[NodeSet] = None  # cyclic order for R-bricks
    virtual_edges: frozenset[Pair] = frozenset()


@dataclass(frozen=True)
class SplitRecord:
    separator: Pair
    parent_size: int
    piece_sizes: tuple[int, ...]


@dataclass(frozen=True)
class BrickDecomposition:
    bricks: tuple[Brick, ...]
    separators: tuple[Pair, ...]
    tree_edges: tuple[tuple[int, int], ...]  # (brick index, separator index)
    potential: int
    splits: tuple[SplitRecord, ...] = ()
    pieces: tuple[MarkedGraph, ...] = field(default=(), repr=False)

    @property
    def t_bricks(self) -> list[Brick]:
        return [b for b in self.bricks if b.kind == "T"]

    @property
    def r_bricks(self) -> list[Brick]:
        return [b for b in self.bricks if b.kind == "R"]

    def signature(self) -> list[tuple[str, int]]:
        """Sorted multiset of (kind, size); independent of separator order."""
        return sorted((b.kind, len(b.nodes)) for b in self.bricks)

    def tree_is_tree(self) -> bool:
        """Brick-tree (bricks + separators as vertices) is connected and acyclic."""
        nb, ns = len(self.bricks), len(self.separators)
        total = nb + ns
        if len(self.tree_edges) != total - 1:
            return False
        adj: dict[int, set[int]] = {i: set() for i in range(total)}
        for b, s in self.tree_edges:
            adj[b].add(nb + s)
            adj[nb + s].add(b)
        return len(components(adj)) == 1

    def to_json(self) -> str:
        return json.dumps(
            {
                "bricks": [{"kind": b.kind, "nodes": list(b.nodes)} for b in self.bricks],
                "separators": [list(s) for s in self.separators],
                "tree_edges": [list(e) for e in self.tree_edges],
                "f": self.potential,
            },
            sort_keys=True,
        )


# -- separator search -------------------------------------------------------

def all_two_separators(adj: Adjacency) -> set[Pair]:
    """Every pair whose removal disconnects a 2-connected ``adj``."""
    out: set[Pair] = set()
    for u in adj:
        for v in articulation_points(adj, {u}):
            out.add(_pair(u, v))
    return out


def _is_good(adj: Adjacency, u: int, v: int) -> bool:
    # caller guarantees {u, v} separates adj; each side then carries a u-v path
    n_comps = len(components(adj, {u, v}))
    if n_comps >= 3 or v in adj[u]:
        return True
    return max_disjoint_paths(adj, u, v, limit=3) >= 3


def _good_separators(
    adj: Adjacency, hint: AbstractSet[Pair] | None, first_only: bool
) -> list[Pair]:
    """Good 2-separators of ``adj`` in lexicographic order.

    ``hint`` is a superset of the 2-separators of ``adj`` (pairs outside the
    node set are ignored); without it every pair is a candidate.
    """
    partners: dict[int, list[int]] = {}
    if hint is None:
        for u in adj:
            partners[u] = [v for v in adj if v > u]
    else:
        for u, v in hint:
            if u in adj and v in adj:
                partners.setdefault(u, []).append(v)
    found = []
    for u in sorted(partners):
        cut = articulation_points(adj, {u})
        if not cut:
            continue
        for v in sorted(partners[u]):
            if v in cut and _is_good(adj, u, v):
                found.append((u, v))
                if first_only:
                    return found
    return found


def find_good_two_separator(h: MarkedGraph) -> Optional[Pair]:
    """Lexicographically smallest good 2-separator of the union graph, or None."""
    adj = h.union_adj()
    if not is_biconnected_adj(adj):
        raise PreconditionError("graph is not 2-connected")
    found = _good_separators(adj, None, first_only=True)
    return found[0] if found else None


def _split(
    adj: Adjacency, virtual: AbstractSet[Pair], s: Pair
) -> list[tuple[dict[int, set[int]], frozenset[Pair]]]:
    u, v = s
    comps = components(adj, {u, v})
    if len(comps) < 2:
        raise PreconditionError(f"{u}-{v} is not a 2-separator")
    pieces = []
    for comp in comps:
        nodes = set(comp)
        nodes.add(u)
        nodes.add(v)
        padj = {x: set(adj[x] & nodes) for x in nodes}
        pvirt = {e for e in virtual if e[0] in nodes and e[1] in nodes}
        if v not in padj[u]:
            padj[u].add(v)
            padj[v].add(u)
            pvirt.add(s)
        pieces.append((padj, frozenset(pvirt)))
    return pieces


def marked_s_components(h: MarkedGraph, s: Pair) -> list[MarkedGraph]:
    """One marked component per connected component of h - s, ordered by smallest id."""
    s = _pair(*s)
    adj = h.union_adj()
    if s[0] not in adj or s[1] not in adj:
        raise PreconditionError(f"separator {s} not in graph")
    out = []
    for padj, pvirt in _split(adj, h.virtual_edges, s):
        real = {x: padj[x] - {y for e in pvirt if x in e for y in e} for x in padj}
        out.append(MarkedGraph(Graph.from_adjacency(real), pvirt))
    return out


# -- decomposition -----------------------------------------------------------

def _classify(adj: Adjacency, virtual: frozenset[Pair]) -> Brick:
    nodes = node_set(adj)
    if is_cycle_adj(adj):
        return Brick(nodes, "R", cycle_order(adj), virtual)
    if is_k_connected_adj(adj, 3):
        return Brick(nodes, "T", None, virtual)
    raise InternalError(f"piece on {list(nodes)} has no good separator but is neither a cycle nor 3-connected")


def brick_potential(bricks: Iterable[Brick]) -> int:
    return sum(1 if b.kind == "T" else 2 * len(b.nodes) - 5 for b in bricks)


def decompose_adj(
    adj: Adjacency,
    *,
    separator_hint: AbstractSet[Pair] | None = None,
    rng: random.Random | None = None,
    record_pieces: bool = False,
) -> BrickDecomposition:
    """Decompose a 2-connected adjacency; no precondition checks.

    ``separator_hint`` must contain every 2-separator of ``adj`` (it is
    computed when omitted). Separators of a marked component are always
    separators of the graph it was cut from, so one hint serves the whole
    recursion. With ``rng`` the separator used at each step is drawn at
    random among the good ones instead of taking the smallest.
    """
    hint = all_two_separators(adj) if separator_hint is None else separator_hint
    stack: list[tuple[dict[int, set[int]], frozenset[Pair]]] = [
        ({x: set(adj[x]) for x in adj}, frozenset())
    ]
    bricks: list[Brick] = []
    seps: list[Pair] = []
    splits: list[SplitRecord] = []
    pieces: list[MarkedGraph] = []
    while stack:
        padj, pvirt = stack.pop()
        if record_pieces:
            real = {x: padj[x] - {y for e in pvirt if x in e for y in e} for x in padj}
            pieces.append(MarkedGraph(Graph.from_adjacency(real), pvirt))
        if rng is None:
            good = _good_separators(padj, hint, first_only=True)
            s = good[0] if good else None
        else:
            good = _good_separators(padj, hint, first_only=False)
            s = rng.choice(good) if good else None
        if s is None:
            bricks.append(_classify(padj, pvirt))
            continue
        parts = _split(padj, pvirt, s)
        seps.append(s)
        splits.append(SplitRecord(s, len(padj), tuple(len(p[0]) for p in parts)))
        stack.extend(reversed(parts))
    tree = tuple(
        (bi, si)
        for bi, b in enumerate(bricks)
        for si, (u, v) in enumerate(seps)
        if u in b.nodes and v in b.nodes
    )
    return BrickDecomposition(
        bricks=tuple(bricks),
        separators=tuple(seps),
        tree_edges=tree,
        potential=brick_potential(bricks),
        splits=tuple(splits),
        pieces=tuple(pieces),
    )


def decompose(
    h: Graph, *, rng: random.Random | None = None, record_pieces: bool = False
) -> BrickDecomposition:
    """Brick decomposition of a 2-connected graph."""
    if not is_biconnected_adj(h.adj):
        raise PreconditionError("graph is not 2-connected")
    return decompose_adj(h.adj, rng=rng, record_pieces=record_pieces)


def potential(d: BrickDecomposition) -> int:
    return brick_potential(d.bricks)


def f_value(g: Graph, c: Iterable[int]) -> int:
    """Potential of G[c]."""
    return decompose(induced_subgraph(g, c)).potential


def delta_f(g: Graph, c: Iterable[int], x: Iterable[int]) -> int:
    """f(G[c + x]) - f(G[c]), both by full decomposition."""
    cs, xs = set(c), set(x)
    if cs & xs:
        raise PreconditionError("x must be disjoint from c")
    if not xs:
        return 0
    return f_value(g, cs | xs) - f_value(g, cs)


def induced_adj(g: Graph, c: AbstractSet[int]) -> dict[int, frozenset[int]]:
    return {v: g.adj[v] & c for v in c}


def is_triangle_adj(adj: Mapping[int, AbstractSet[int]]) -> bool:
    return len(adj) == 3 and all(len(a) == 2 for a in adj.values())
