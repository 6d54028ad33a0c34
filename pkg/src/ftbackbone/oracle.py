"""Validity checks and exhaustive minimum (k, m)-CDS search for small graphs."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .errors import InputError, OracleSizeError
from .graph import Graph, NodeSet, is_k_connected_adj, node_set

ORACLE_NODE_CAP = 22


def oracle_node_cap() -> int:
    """Node cap for exhaustive search; ``BACKBONE_ORACLE_CAP`` may only lower it."""
    raw = os.environ.get("BACKBONE_ORACLE_CAP")
    if not raw:
        return ORACLE_NODE_CAP
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"BACKBONE_ORACLE_CAP must be an integer, got {raw!r}") from None
    return max(0, min(value, ORACLE_NODE_CAP))


@dataclass(frozen=True)
class ValidityReport:
    is_valid: bool
    failed_domination: list[tuple[int, int, int]] = field(default_factory=list)  # (node, have, need)
    connectivity_ok: bool = True
    k: int = 1
    m: int = 1

    def to_dict(self) -> dict:
        return {
            "is_valid": self.is_valid,
            "failed_domination": [list(t) for t in self.failed_domination],
            "connectivity_ok": self.connectivity_ok,
            "k": self.k,
            "m": self.m,
        }


def _induced_k_connected(g: Graph, cs: frozenset[int], k: int) -> bool:
    adj = {v: g.adj[v] & cs for v in cs}
    if k == 1:
        # a lone dominator counts as a connected backbone
        return bool(adj) and (len(adj) == 1 or is_k_connected_adj(adj, 1))
    return is_k_connected_adj(adj, k)


def verify_kmcds(g: Graph, c: Iterable[int], k: int, m: int) -> ValidityReport:
    """Check that every node outside c has >= m neighbours in c and G[c] is k-connected."""
    if k < 1 or m < 1:
        raise InputError("k and m must be at least 1")
    cs = frozenset(c)
    unknown = sorted(v for v in cs if v not in g)
    if unknown:
        raise InputError(f"unknown node id {unknown[0]}")
    failed = []
    for v in g.nodes:
        if v in cs:
            continue
        have = len(g.adj[v] & cs)
        if have < m:
            failed.append((v, have, m))
    conn = _induced_k_connected(g, cs, k) if cs else False
    return ValidityReport(not failed and conn, failed, conn, k, m)


def brute_min_kmcds(
    g: Graph, k: int, m: int, size_cap: Optional[int] = None
) -> Optional[NodeSet]:
    """Smallest valid (k, m)-CDS by enumeration in (size, lexicographic) order.

    Subsets whose induced minimum degree is below k are skipped before the
    connectivity test. Returns None when nothing of size <= ``size_cap``
    qualifies.
    """
    n = len(g)
    cap = oracle_node_cap()
    if n > cap:
        raise OracleSizeError(f"graph has {n} nodes; exhaustive search is capped at {cap}")
    if size_cap is None:
        size_cap = n
    if size_cap > n:
        raise InputError("size_cap exceeds the number of nodes")
    nodes = g.nodes
    index = {v: i for i, v in enumerate(nodes)}
    nbr = [sum(1 << index[w] for w in g.adj[v]) for v in nodes]
    full = (1 << n) - 1
    for size in range(1, size_cap + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            outside = full & ~mask
            ok = True
            while outside:
                low = outside & -outside
                i = low.bit_length() - 1
                if (nbr[i] & mask).bit_count() < m:
                    ok = False
                    break
                outside ^= low
            if not ok:
                continue
            if size > 1 and any((nbr[i] & mask).bit_count() < k for i in combo):
                continue
            cs = frozenset(nodes[i] for i in combo)
            if _induced_k_connected(g, cs, k):
                return node_set(cs)
    return None


class RatioReport(NamedTuple):
    opt: int
    ratio: Fraction


def empirical_ratio(g: Graph, alg_size: int, k: int, m: int) -> RatioReport:
    """alg_size / optimum, the optimum coming from exhaustive search."""
    best = brute_min_kmcds(g, k, m)
    if best is None:
        raise InputError(f"graph has no ({k},{m})-CDS")
    return RatioReport(len(best), Fraction(alg_size, len(best)))

