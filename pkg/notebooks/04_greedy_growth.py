"""
Greedy growth to a 3-connected backbone
=======================================

Starting from the seed, each step adds the one or two outside nodes whose
brick-bridge gives the largest potential drop per node, until the potential
reaches 1.
"""

import numpy as np

from ftbackbone import (
    BaseCdsResult,
    enumerate_candidates,
    gen_random_3connected,
    solve_3m_cds,
    wheel_graph,
)

# The hub of a wheel closes the rim cycle in one step.
w = wheel_graph(6)
rim = BaseCdsResult(tuple(range(2, 8)), "manual", None)
for cand in enumerate_candidates(w, rim.c0):
    print("wheel candidate", cand.x, "ends", cand.witness_ends, "delta f", cand.delta_f)
print("wheel result:", solve_3m_cds(w, 3, rim)[0])

# A larger random instance with its per-step trace.
g = gen_random_3connected(40, 0.05, seed=12)
result, trace = solve_3m_cds(g, 4)
print(f"n={len(g)} seed size={trace.c0_size} f0={trace.f0} final size={trace.final_size}")
for step in trace.iterations:
    print("  add", step.chosen_x, "delta", step.delta_f, "-> f", step.f_after, f"({step.num_candidates} candidates)")

drops = np.array([-s.delta_f / len(s.chosen_x) for s in trace.iterations])
if drops.size:
    print("drop per node: min %.2f  mean %.2f" % (drops.min(), drops.mean()))
print(trace.to_jsonl(instance="rand3-40"), end="")
