"""Greedy growth of a (2, m)-CDS into a (3, m)-CDS.

Starting from a 2-connected m-fold dominating seed C, repeatedly add the
interior X (one node, or two adjacent nodes) of a brick-bridge of G[C]
that maximises the potential drop per added node, -(f(C + X) - f(C)) / |X|,
until f(C) = 1. A brick-bridge is a path whose interior lies outside C and
whose two ends are in C, nonadjacent there, and not inside a common T-brick.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from .bricks import (
    BrickDecomposition,
    Pair,
    all_two_separators,
    decompose_adj,
    induced_adj,
    is_triangle_adj,
)
from .errors import InputError, InternalError, PreconditionError
from .graph import Graph, NodeSet, is_biconnected_adj, is_k_connected, node_set
from .oracle import verify_kmcds
from .seeds import BaseCdsResult, check_seed, compute_2m_cds


@dataclass(frozen=True)
class Candidate:
    x: NodeSet
    witness_ends: Pair  # (a, b): a next to x[0], b next to x[-1]
    delta_f: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(-self.delta_f, len(self.x))

    def sort_key(self) -> tuple:
        return (-self.ratio, len(self.x), self.x)


@dataclass(frozen=True)
class IterationRecord:
    chosen_x: NodeSet
    delta_f: int
    f_after: int
    num_candidates: int

    def to_dict(self) -> dict:
        return {
            "chosen_x": list(self.chosen_x),
            "delta_f": self.delta_f,
            "f_after": self.f_after,
            "num_candidates": self.num_candidates,
        }


@dataclass
class RunTrace:
    c0: NodeSet
    f0: int
    c0_size: int
    final_size: int = 0
    iterations: list[IterationRecord] = field(default_factory=list)
    triangle_branch: bool = False
    ratio_report: dict = field(default_factory=dict)

    def sets(self) -> list[NodeSet]:
        """C_0, C_1, ... reconstructed from the chosen interiors."""
        out = [self.c0]
        cur = set(self.c0)
        for rec in self.iterations:
            cur.update(rec.chosen_x)
            out.append(node_set(cur))
        return out

    def to_jsonl(self, **extra) -> str:
        lines = []
        for rec in self.iterations:
            row = dict(extra)
            row.update(rec.to_dict())
            lines.append(json.dumps(row, sort_keys=True))
        return "".join(line + "\n" for line in lines)


def gamma_bound(alpha: Union[float, Fraction]) -> float:
    """Worst-case ratio of the greedy given a seed with ratio alpha."""
    if alpha < 1:
        raise InputError("alpha must be at least 1")
    a = float(alpha)
    if a < 4:
        return 3 * a + 2 * math.log(2)
    return a + 8 + 2 * math.log(2 * a - 6)


# -- candidate enumeration ------------------------------------------------

def _t_membership(dec: BrickDecomposition) -> dict[int, set[int]]:
    tmap: dict[int, set[int]] = {}
    for i, b in enumerate(dec.bricks):
        if b.kind == "T":
            for v in b.nodes:
                tmap.setdefault(v, set()).add(i)
    return tmap


def bridge_interiors(
    g: Graph, c: frozenset[int], dec: BrickDecomposition
) -> list[tuple[NodeSet, Pair]]:
    """Every X with |X| <= 2 that is the interior of a brick-bridge of G[c].

    Singles come first, then adjacent pairs, each in increasing order; the
    recorded witness is the first valid pair of ends in that scan order.
    """
    tmap = _t_membership(dec)
    empty: set[int] = set()

    def valid(a: int, b: int) -> bool:
        return a != b and b not in g.adj[a] and not (tmap.get(a, empty) & tmap.get(b, empty))

    out: list[tuple[NodeSet, Pair]] = []
    outside = [v for v in g.nodes if v not in c]
    ends = {v: sorted(g.adj[v] & c) for v in outside}
    for v in outside:
        nv = ends[v]
        w = next(((a, b) for i, a in enumerate(nv) for b in nv[i + 1:] if valid(a, b)), None)
        if w is not None:
            out.append(((v,), w))
    for v1 in outside:
        for v2 in g.neighbors(v1):
            if v2 <= v1 or v2 in c:
                continue
            w = next(((a, b) for a in ends[v1] for b in ends[v2] if valid(a, b)), None)
            if w is not None:
                out.append(((v1, v2), w))
    return out


class _Evaluator:
    """f(C + X) for a fixed C, sharing C's separator set across candidates."""

    def __init__(self, g: Graph, c: frozenset[int]):
        self.g = g
        self.c = c
        adj = induced_adj(g, c)
        self.hint = all_two_separators(adj)
        self.base = decompose_adj(adj, separator_hint=self.hint)
        self.cache: dict[NodeSet, BrickDecomposition] = {}

    def decomposition(self, x: NodeSet) -> BrickDecomposition:
        if x not in self.cache:
            cx = self.c.union(x)
            adj = induced_adj(self.g, cx)
            # each new node with 3+ neighbours in C cannot sit in a 2-separator,
            # and every 2-separator of G[C + X] then already separates G[C]
            safe = all(len(self.g.adj[v] & self.c) >= 3 for v in x)
            if not safe and not is_biconnected_adj(adj):
                raise PreconditionError(f"G[C + {list(x)}] is not 2-connected")
            self.cache[x] = decompose_adj(adj, separator_hint=self.hint if safe else None)
        return self.cache[x]

    def delta(self, x: NodeSet) -> int:
        return self.decomposition(x).potential - self.base.potential


def enumerate_candidates(g: Graph, c: Iterable[int]) -> list[Candidate]:
    """All brick-bridge interiors of size <= 2 with their potential change."""
    cs = frozenset(c)
    if not cs <= set(g.nodes):
        raise InputError("c contains unknown nodes")
    if not is_biconnected_adj(induced_adj(g, cs)):
        raise PreconditionError("G[c] is not 2-connected")
    ev = _Evaluator(g, cs)
    if ev.base.potential <= 1:
        raise PreconditionError("f(G[c]) is already 1")
    cands = [Candidate(x, w, ev.delta(x)) for x, w in bridge_interiors(g, cs, ev.base)]
    if not cands:
        raise InternalError("no brick-bridge with at most two interior nodes")
    return cands


# -- Algorithm -------------------------------------------------------------

def solve_3m_cds(
    g: Graph,
    m: int,
    seed: Optional[BaseCdsResult] = None,
    *,
    exhaustive: bool = False,
) -> tuple[NodeSet, RunTrace]:
    """Grow a (2, m)-CDS seed into a (3, m)-CDS of a 3-connected graph.

    Among candidates the largest ratio wins, then the smaller |X|, then the
    lexicographically smaller X. Pair candidates are skipped when the best
    single already reaches (f(C) - 1) / 2, the most any pair can achieve;
    ``exhaustive=True`` evaluates them anyway (same outcome, slower).
    """
    if m < 3:
        raise InputError("m must be at least 3")
    if not is_k_connected(g, 3):
        raise InputError("input graph is not 3-connected")
    if seed is None:
        seed = compute_2m_cds(g, m)
    check_seed(g, m, seed)

    c = set(seed.c0)
    c0_adj = induced_adj(g, frozenset(c))
    if is_triangle_adj(c0_adj):
        v = min(x for x in g.nodes if x not in c)
        trace = RunTrace(seed.c0, 1, len(c), triangle_branch=True)
        c.add(v)
        result = node_set(c)
    else:
        ev = _Evaluator(g, frozenset(c))
        trace = RunTrace(seed.c0, ev.base.potential, len(c))
        while ev.base.potential > 1:
            f_now = ev.base.potential
            interiors = bridge_interiors(g, ev.c, ev.base)
            singles = [Candidate(x, w, ev.delta(x)) for x, w in interiors if len(x) == 1]
            best_single = max((cd.ratio for cd in singles), default=Fraction(0))
            pool = singles
            if exhaustive or best_single < Fraction(f_now - 1, 2):
                pool = singles + [Candidate(x, w, ev.delta(x)) for x, w in interiors if len(x) == 2]
            if not pool:
                raise InternalError(f"no brick-bridge candidate while f = {f_now}")
            best = min(pool, key=Candidate.sort_key)
            if best.delta_f > -1:
                raise InternalError(f"best candidate {best.x} does not decrease f (delta {best.delta_f})")
            nxt = ev.decomposition(best.x)
            ev = _Evaluator(g, ev.c.union(best.x))
            if ev.base.potential != nxt.potential:
                raise InternalError("decomposition is not reproducible")
            trace.iterations.append(
                IterationRecord(best.x, best.delta_f, ev.base.potential, len(interiors))
            )
        result = node_set(ev.c)

    trace.final_size = len(result)
    report = verify_kmcds(g, result, 3, m)
    if not report.is_valid:
        raise InternalError(f"output fails the (3,{m})-CDS check: {report}")
    return result, trace
