"""Instance generators and text formats.

Graph files are DIMACS-like::

    c optional comment
    p <n> <m>
    e <u> <v>

with nodes 1..n. Unit disk point files are::

    u <n> <side> <radius>
    v <x> <y>

one ``v`` line per node (node i is the i-th ``v`` line); the graph is
always re-derived from the points. Randomness comes from numpy's PCG64 bit
generator seeded with the integer seed, so instances reproduce across
platforms. Coordinates are rounded to 6 decimals before any distance test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .errors import GenerationError, GraphParseError, InputError, InternalError
from .graph import Graph, complete_graph, is_k_connected

MAX_ATTEMPTS = 1000


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class UdgInstance:
    points: tuple[tuple[float, float], ...]
    side: float
    radius: float
    graph: Graph
    seed: Optional[int] = None
    attempts: int = 1


def udg_from_points(points, radius: float) -> Graph:
    """Edge uv iff the stored points are within ``radius`` of each other."""
    pts = [tuple(p) for p in points]
    n = len(pts)
    edges = [
        (i + 1, j + 1)
        for i, j in combinations(range(n), 2)
        if math.dist(pts[i], pts[j]) <= radius
    ]
    return Graph(range(1, n + 1), edges)


def gen_udg(
    n: int, side: float, radius: float, seed: int, require_3conn: bool = False
) -> UdgInstance:
    """Uniform random points in a ``side`` x ``side`` square.

    With ``require_3conn`` the seeds seed, seed+1, ... are tried until the
    unit disk graph is 3-connected.
    """
    if n < 4:
        raise InputError("n must be at least 4")
    if side <= 0 or radius < 0:
        raise InputError("side must be positive and radius non-negative")
    for attempt in range(MAX_ATTEMPTS):
        s = seed + attempt
        raw = make_rng(s).random((n, 2)) * side
        points = tuple((round(float(x), 6), round(float(y), 6)) for x, y in raw)
        graph = udg_from_points(points, radius)
        if not require_3conn or is_k_connected(graph, 3):
            return UdgInstance(points, side, radius, graph, s, attempt + 1)
    raise GenerationError(
        f"no 3-connected unit disk graph after {MAX_ATTEMPTS} attempts "
        f"(n={n}, side={side}, radius={radius}); use more nodes, a smaller side or a larger radius"
    )


def gen_random_3connected(n: int, extra_edge_prob: float, seed: int) -> Graph:
    """K4 on 1..4, then each new node joined to 3 random earlier nodes, then
    every remaining pair added independently with probability ``extra_edge_prob``."""
    if n < 4:
        raise InputError("n must be at least 4")
    if not 0.0 <= extra_edge_prob <= 1.0:
        raise InputError("extra_edge_prob must lie in [0, 1]")
    rng = make_rng(seed)
    edges = set(complete_graph(4).edges())
    for i in range(5, n + 1):
        for j in rng.choice(i - 1, size=3, replace=False):
            edges.add((int(j) + 1, i))
    for u, v in combinations(range(1, n + 1), 2):
        if (u, v) not in edges and rng.random() < extra_edge_prob:
            edges.add((u, v))
    g = Graph(range(1, n + 1), sorted(edges))
    if not is_k_connected(g, 3):
        raise InternalError("generated graph is not 3-connected")
    return g


# -- graph text format ---------------------------------------------------------

def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    n = expected_m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate 'p' header", lineno)
            args = toks[1:]
            if len(args) == 3 and not args[0].lstrip("-").isdigit():
                args = args[1:]  # "p edge n m"
            if len(args) != 2:
                raise GraphParseError("header must be 'p <n> <m>'", lineno)
            n, expected_m = _int(args[0], lineno), _int(args[1], lineno)
            if n < 0 or expected_m < 0:
                raise GraphParseError("negative size in header", lineno)
        elif toks[0] == "e":
            if n is None:
                raise GraphParseError("edge before 'p' header", lineno)
            if len(toks) != 3:
                raise GraphParseError("edge line must be 'e <u> <v>'", lineno)
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            if u == v:
                raise GraphParseError(f"self-loop at node {u}", lineno)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise GraphParseError(f"node {w} outside 1..{n}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphParseError(f"duplicate edge {key[0]}-{key[1]}", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise GraphParseError(f"unknown line type {toks[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p' header")
    if len(edges) != expected_m:
        raise GraphParseError(f"header announces {expected_m} edges, found {len(edges)}")
    return Graph(range(1, n + 1), edges)


def write_graph(g: Graph) -> str:
    n = len(g)
    if g.nodes != tuple(range(1, n + 1)):
        raise InputError("graph files need node ids 1..n")
    lines = [f"p {n} {g.edge_count}"] + [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- point text format --------------------------------------------------------

def _float(tok: str, lineno: int) -> float:
    try:
        value = float(tok)
    except ValueError:
        raise GraphParseError(f"expected a number, got {tok!r}", lineno) from None
    if not math.isfinite(value):
        raise GraphParseError(f"non-finite number {tok!r}", lineno)
    return value


def parse_points(text: str) -> UdgInstance:
    header = None
    points: list[tuple[float, float]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "u":
            if header is not None or len(toks) != 4:
                raise GraphParseError("header must appear once as 'u <n> <side> <radius>'", lineno)
            header = (_int(toks[1], lineno), _float(toks[2], lineno), _float(toks[3], lineno))
        elif toks[0] == "v":
            if header is None:
                raise GraphParseError("point before 'u' header", lineno)
            if len(toks) != 3:
                raise GraphParseError("point line must be 'v <x> <y>'", lineno)
            points.append((round(_float(toks[1], lineno), 6), round(_float(toks[2], lineno), 6)))
        else:
            raise GraphParseError(f"unknown line type {toks[0]!r}", lineno)
    if header is None:
        raise GraphParseError("missing 'u' header")
    n, side, radius = header
    if len(points) != n:
        raise GraphParseError(f"header announces {n} points, found {len(points)}")
    return UdgInstance(tuple(points), side, radius, udg_from_points(points, radius))


def write_points(inst: UdgInstance) -> str:
    lines = [f"u {len(inst.points)} {inst.side!r} {inst.radius!r}"]
    lines += [f"v {x:.6f} {y:.6f}" for x, y in inst.points]
    return "\n".join(lines) + "\n"


def read_instance(path: Union[str, Path]) -> tuple[Graph, Optional[UdgInstance]]:
    """Load a graph file or a point file, telling them apart by the header letter."""
    text = Path(path).read_text(encoding="ascii")
    for line in text.splitlines():
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "u":
            inst = parse_points(text)
            return inst.graph, inst
        break
    return parse_graph(text), None
