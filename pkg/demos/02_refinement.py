"""
Color refinement and individualization
======================================

Refinement repeatedly splits vertex (or pair) classes by the multiset of
colors each member sees, until nothing splits. The resulting stable coloring
is an upper bound on the orbit partition: every true orbit lies inside one
stable class. Individualizing a vertex (giving it a fresh color) before
refining models "what if this vertex were distinguishable".
"""

from autorbits import (
    RefinementConfig,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    refine,
    refine_with_fixes,
)

k1 = RefinementConfig(k=1)
k2 = RefinementConfig(k=2)

# Degree information alone separates the middle of a path from its ends.
print("P3, k=1 classes:", refine(path_graph(3), k1).vertex_partition.classes)

# A complete graph gives refinement nothing to work with...
print("K4, k=1 classes:", refine(complete_graph(4), k1).vertex_partition.classes)

# ...until somebody gets individualized.
print("K4 with vertex 0 fixed:", refine_with_fixes(complete_graph(4), [0], k1).vertex_partition.classes)
print("K4 with 0 and 1 fixed: ", refine_with_fixes(complete_graph(4), [0, 1], k1).vertex_partition.classes)

# Fixing one vertex of C5 reveals the orbit structure of its stabilizer:
# the two neighbors are interchangeable, and so are the two far vertices.
print("C5 with v0 fixed:      ", refine_with_fixes(cycle_graph(5), [0], k1).vertex_partition.classes)

# Walking V^2 instead of V sees strictly more. A triangle next to a square
# looks homogeneous to k=1 (everything has degree 2), but pair refinement
# notices that triangle edges close into triangles.
mixed = disjoint_union(cycle_graph(3), cycle_graph(4))
print("\nC3+C4, k=1 classes:", refine(mixed, k1).vertex_partition.classes)
print("C3+C4, k=2 classes:", refine(mixed, k2).vertex_partition.classes)

# On C5 the stable pair coloring has exactly three classes:
# loops, cycle edges, and non-edges.
coloring = refine(cycle_graph(5), k2)
print("\nC5 stable pair coloring:")
print(coloring.pair_coloring)
