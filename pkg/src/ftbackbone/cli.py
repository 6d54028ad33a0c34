"""Command-line front end.

Exit codes: 0 success, 1 internal failure, 2 bad input, 3 set is not a
valid (k, m)-CDS (``verify`` only).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import parse_suite, records_to_csv, run_suite, summary_line
from .errors import GenerationError, InputError, InternalError
from .graph import is_k_connected
from .greedy import solve_3m_cds
from .instances import (
    gen_random_3connected,
    gen_udg,
    read_instance,
    write_graph,
    write_points,
)
from .oracle import brute_min_kmcds, verify_kmcds
from .seeds import SEED_BUILDERS

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_INVALID = 0, 1, 2, 3


def _load(path: str):
    try:
        return read_instance(path)[0]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path} is not an ASCII text file") from None


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load(args.input)
    if args.m < 3:
        raise InputError("m must be at least 3")
    builder = SEED_BUILDERS.get(args.seed_builder)
    if builder is None:
        raise InputError(f"unknown seed builder {args.seed_builder!r}; choose from {sorted(SEED_BUILDERS)}")
    if not is_k_connected(g, 3):
        raise InputError("input graph is not 3-connected")
    seed = builder(g, args.m)
    result, trace = solve_3m_cds(g, args.m, seed)
    if args.trace:
        Path(args.trace).write_text(trace.to_jsonl(), encoding="ascii")
    summary = {
        "nodes": list(result),
        "size": len(result),
        "c0": list(trace.c0),
        "c0_size": trace.c0_size,
        "f0": trace.f0,
        "iterations": len(trace.iterations),
        "seed_builder": seed.method_name,
        "triangle_branch": trace.triangle_branch,
    }
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(" ".join(map(str, result)))
        print(
            f"size={len(result)} c0_size={trace.c0_size} f0={trace.f0} "
            f"iterations={len(trace.iterations)} seed_builder={seed.method_name}"
        )
    return EXIT_OK


def _read_set(path: str) -> list[int]:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    ids = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            ids.append(int(line))
        except ValueError:
            raise InputError(f"{path} line {lineno}: not a node id: {line!r}") from None
    return ids


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load(args.input)
    report = verify_kmcds(g, _read_set(args.set), args.k, args.m)
    print(json.dumps(report.to_dict(), sort_keys=True))
    return EXIT_OK if report.is_valid else EXIT_INVALID


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load(args.input)
    best = brute_min_kmcds(g, args.k, args.m)
    if args.json:
        print(json.dumps({"size": None if best is None else len(best),
                          "nodes": None if best is None else list(best)}))
    elif best is None:
        print("no valid set")
    else:
        print(f"size {len(best)}")
        print(" ".join(map(str, best)))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "udg":
        inst = gen_udg(args.n, args.side, args.radius, args.seed, args.require_3conn)
        text = write_points(inst)
        info = {"kind": "udg", "n": args.n, "edges": inst.graph.edge_count,
                "seed_used": inst.seed, "attempts": inst.attempts}
    else:
        g = gen_random_3connected(args.n, args.p, args.seed)
        text = write_graph(g)
        info = {"kind": "rand3", "n": args.n, "edges": g.edge_count, "seed_used": args.seed}
    Path(args.out).write_text(text, encoding="ascii")
    if args.json:
        print(json.dumps(info, sort_keys=True))
    else:
        print(" ".join(f"{k}={v}" for k, v in info.items()))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    suite_path = Path(args.suite)
    try:
        text = suite_path.read_text(encoding="ascii")
    except OSError as exc:
        raise InputError(f"cannot read {args.suite}: {exc.strerror or exc}") from None
    if args.seed_builder not in SEED_BUILDERS:
        raise InputError(f"unknown seed builder {args.seed_builder!r}")
    specs = parse_suite(text, suite_path.parent)
    results = run_suite(specs, args.with_oracle, args.seed_builder, args.jobs)
    records = [r for r, _ in results]
    Path(args.out).write_text(records_to_csv(records, timing=not args.no_timing), encoding="ascii")
    if args.trace:
        lines = "".join(t.to_jsonl(instance_id=r.instance_id) for r, t in results)
        Path(args.trace).write_text(lines, encoding="ascii")
    line = summary_line(records)
    if args.json:
        print(json.dumps(dict(kv.split("=") for kv in line.split())))
    else:
        print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ftbackbone", description="3-connected m-fold dominating sets (fault-tolerant backbones)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a (3,m)-CDS")
    p.add_argument("--input", required=True, help="graph file or UDG point file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed-builder", default="greedy-stages", help=f"one of {sorted(SEED_BUILDERS)}")
    p.add_argument("--trace", help="write per-iteration JSON lines here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a node set against the (k,m)-CDS definition")
    p.add_argument("--input", required=True)
    p.add_argument("--set", required=True, help="file with one node id per line")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive minimum (k,m)-CDS")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("--kind", choices=["udg", "rand3"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--side", type=float, default=1.0)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--require-3conn", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a suite and write one CSV row per instance")
    p.add_argument("--suite", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--trace", help="write per-iteration JSON lines for every instance here")
    p.add_argument("--seed-builder", default="greedy-stages")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="leave wall_ms empty for byte-stable output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
