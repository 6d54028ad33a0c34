"""
Instance files and the benchmark harness
========================================

Generated instances round-trip through the text formats, and a suite of
instance specs runs to CSV rows with a summary line.
"""

from pathlib import Path

from ftbackbone import gen_random_3connected, gen_udg, parse_graph, parse_points, write_graph, write_points
from ftbackbone.bench import parse_suite, records_to_csv, run_suite, summary_line

g = gen_random_3connected(6, 0.2, seed=1)
text = write_graph(g)
print(text, end="")
print("graph round trip:", parse_graph(text) == g)

inst = gen_udg(8, 1.2, 1.0, seed=0, require_3conn=True)
print(write_points(inst), end="")
print("point round trip:", parse_points(write_points(inst)).graph == inst.graph)

suite = Path(__file__).resolve().parents[1] / "benchmarks" / "suite.txt"
specs = parse_suite(suite.read_text(), suite.parent)[:6]
results = run_suite(specs, with_oracle=True)
print(records_to_csv([r for r, _ in results], timing=False), end="")
print(summary_line([r for r, _ in results]))
