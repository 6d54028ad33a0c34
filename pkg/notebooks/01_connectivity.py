"""
Connectivity primitives
=======================

Local vertex connectivity, k-connectivity checks and induced subgraphs on a
few small named graphs.
"""

from itertools import combinations

from ftbackbone import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    is_k_connected,
    local_connectivity,
    petersen_graph,
)

# Every pair in K4 is joined by three internally disjoint paths (one is the edge itself).
k4 = complete_graph(4)
print("K4 pair connectivities:", {(u, v): local_connectivity(k4, u, v) for u, v in combinations(k4.nodes, 2)})

# A cycle is 2-connected but not 3-connected.
c5 = cycle_graph(5)
print("C5 2-connected:", is_k_connected(c5, 2), " 3-connected:", is_k_connected(c5, 3))

# K_{3,3} and the Petersen graph are both 3-connected.
for name, g in [("K3,3", complete_bipartite(3, 3)), ("Petersen", petersen_graph())]:
    print(f"{name}: n={len(g)} edges={g.edge_count} 3-connected={is_k_connected(g, 3)}")

# The outer ring of the Petersen graph induces a 5-cycle.
outer = induced_subgraph(petersen_graph(), range(5))
print("outer ring edges:", list(outer.edges()))
