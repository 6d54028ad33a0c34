"""
Brick decomposition and the potential function
==============================================

A 2-connected graph splits at its good 2-separators into bricks: cycles
(R-bricks) and 3-connected pieces (T-bricks). The potential counts one per
T-brick and 2|R| - 5 per R-brick, and drops to 1 exactly when the graph is
3-connected or a triangle.
"""

from ftbackbone import Graph, complete_bipartite, complete_graph, cycle_graph, decompose

# Cycles are single R-bricks, so the potential grows as 2n - 5.
for n in range(3, 9):
    print(f"C{n}: f = {decompose(cycle_graph(n)).potential}")

# K_{2,3}: the two hubs form a good separator that leaves three triangles.
d = decompose(complete_bipartite(2, 3))
print("K2,3 bricks:", d.signature(), "separators:", d.separators, "f =", d.potential)

# A 3-connected graph is one T-brick.
print("K5:", decompose(complete_graph(5)).signature())

# A K_{3,3} and a K4 glued by two paths through the pair {8, 9}.
edges = [(a, b) for a in (1, 3, 5) for b in (2, 4, 6)]
edges += [(5, 8), (6, 9), (7, 8), (7, 9), (8, 10), (9, 11), (8, 11), (9, 10), (10, 11)]
theta = Graph(range(1, 12), edges)
d = decompose(theta)
for brick in d.bricks:
    print(f"  {brick.kind}-brick {brick.nodes} virtual={sorted(brick.virtual_edges)}")
print("tree edges (brick, separator):", d.tree_edges, " f =", d.potential)
print(d.to_json())
