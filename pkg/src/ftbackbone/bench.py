"""Benchmark suites: solve a list of instances and tabulate the results.

A suite file has one instance per line, ``<kind> key=value ...``::

    # comments and blank lines are ignored
    udg   n=20 seed=7 side=4.0 radius=1.0 m=3
    rand3 n=12 seed=3 p=0.1 m=4
    file  path=graphs/k5.txt m=3 id=k5

Relative ``path`` values are resolved against the suite file's directory.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import InputError
from .graph import Graph
from .greedy import RunTrace, gamma_bound, solve_3m_cds
from .instances import gen_random_3connected, gen_udg, read_instance
from .oracle import brute_min_kmcds, oracle_node_cap
from .seeds import SEED_BUILDERS


@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    params: dict
    m: int
    instance_id: str

    def build(self) -> Graph:
        p = self.params
        if self.kind == "udg":
            return gen_udg(
                int(p["n"]), float(p.get("side", 1.0)), float(p.get("radius", 1.0)),
                int(p.get("seed", 0)), require_3conn=True,
            ).graph
        if self.kind == "rand3":
            return gen_random_3connected(int(p["n"]), float(p.get("p", 0.0)), int(p.get("seed", 0)))
        if self.kind == "file":
            return read_instance(p["path"])[0]
        raise InputError(f"unknown instance kind {self.kind!r}")


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    n: int
    edges: int
    m: int
    c0_size: int
    final_size: int
    f0: int
    iterations: int
    opt3: Optional[int] = None
    opt2: Optional[int] = None
    empirical_alpha: Optional[float] = None
    empirical_ratio: Optional[float] = None
    gamma_bound: Optional[float] = None
    wall_ms: Optional[float] = None


CSV_COLUMNS = [f.name for f in fields(BenchRecord)]


def parse_suite(text: str, base_dir: Path | None = None) -> list[InstanceSpec]:
    specs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *rest = line.split()
        params = {}
        for tok in rest:
            if "=" not in tok:
                raise InputError(f"suite line {lineno}: expected key=value, got {tok!r}")
            key, value = tok.split("=", 1)
            params[key] = value
        if kind not in ("udg", "rand3", "file"):
            raise InputError(f"suite line {lineno}: unknown kind {kind!r}")
        if kind == "file":
            if "path" not in params:
                raise InputError(f"suite line {lineno}: file instances need path=")
            if base_dir is not None and not Path(params["path"]).is_absolute():
                params["path"] = str(base_dir / params["path"])
        elif "n" not in params:
            raise InputError(f"suite line {lineno}: generated instances need n=")
        m = int(params.pop("m", 3))
        iid = params.pop("id", None)
        if iid is None:
            if kind == "file":
                iid = Path(params["path"]).stem + f"-m{m}"
            else:
                iid = f"{kind}-n{params['n']}-s{params.get('seed', 0)}-m{m}"
        specs.append(InstanceSpec(kind, params, m, iid))
    return specs


def run_instance(
    spec: InstanceSpec, with_oracle: bool = False, seed_builder: str = "greedy-stages"
) -> tuple[BenchRecord, RunTrace]:
    g = spec.build()
    start = time.perf_counter()
    seed = SEED_BUILDERS[seed_builder](g, spec.m)
    result, trace = solve_3m_cds(g, spec.m, seed)
    wall_ms = (time.perf_counter() - start) * 1000.0
    opt3 = opt2 = alpha = ratio = gamma = None
    if with_oracle and len(g) <= oracle_node_cap():
        best3 = brute_min_kmcds(g, 3, spec.m)
        best2 = brute_min_kmcds(g, 2, spec.m)
        if best3 is not None and best2 is not None:
            opt3, opt2 = len(best3), len(best2)
            alpha_q = Fraction(trace.c0_size, opt2)
            alpha = float(alpha_q)
            ratio = float(Fraction(len(result), opt3))
            gamma = gamma_bound(alpha_q)
            trace.ratio_report.update(
                opt3=opt3, opt2=opt2, empirical_alpha=alpha, empirical_ratio=ratio, gamma_bound=gamma
            )
    record = BenchRecord(
        spec.instance_id, len(g), g.edge_count, spec.m, trace.c0_size, len(result),
        trace.f0, len(trace.iterations), opt3, opt2, alpha, ratio, gamma, wall_ms,
    )
    return record, trace


def _run_one(args: tuple) -> tuple[BenchRecord, RunTrace]:
    return run_instance(*args)


def run_suite(
    specs: list[InstanceSpec],
    with_oracle: bool = False,
    seed_builder: str = "greedy-stages",
    jobs: int = 1,
) -> list[tuple[BenchRecord, RunTrace]]:
    """Results in suite order whatever the completion order."""
    work = [(s, with_oracle, seed_builder) for s in specs]
    if jobs <= 1:
        return [_run_one(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, work))


def _fmt(value, timing: bool, name: str) -> str:
    if value is None or (name == "wall_ms" and not timing):
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def records_to_csv(records: list[BenchRecord], timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([_fmt(v, timing, name) for name, v in zip(CSV_COLUMNS, astuple(rec))])
    return buf.getvalue()


def summary_line(records: list[BenchRecord]) -> str:
    ratios = [r.empirical_ratio for r in records if r.empirical_ratio is not None]
    if not ratios:
        return f"instances={len(records)} max_ratio=NA mean_ratio=NA"
    return (
        f"instances={len(records)} max_ratio={max(ratios):.6f} "
        f"mean_ratio={sum(ratios) / len(ratios):.6f}"
    )
