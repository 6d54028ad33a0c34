"""
Building a 2-connected m-fold dominating seed
=============================================

The seed builder runs three stages: greedy multicover, connection by
shortest paths, then biconnection around cut nodes.
"""

from ftbackbone import (
    biconnect,
    compute_2m_cds,
    connect_to_cds,
    gen_udg,
    greedy_m_fold_ds,
    verify_kmcds,
)

inst = gen_udg(30, 2.6, 1.0, seed=4000, require_3conn=True)
g = inst.graph
print(f"UDG: n={len(g)} edges={g.edge_count} (seed used {inst.seed}, {inst.attempts} attempt(s))")

m = 3
dominating = greedy_m_fold_ds(g, m)
connected = connect_to_cds(g, dominating, m)
seed_set = biconnect(g, connected, m)
print("stage sizes:", len(dominating), len(connected), len(seed_set))

print("k=1:", verify_kmcds(g, connected, 1, m).is_valid, " k=2:", verify_kmcds(g, seed_set, 2, m).is_valid)
print("compute_2m_cds agrees:", compute_2m_cds(g, m).c0 == seed_set)
