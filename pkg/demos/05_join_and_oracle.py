"""
The partition-join law and the brute-force oracle
=================================================

Joining the orbit partitions of two permutation groups (merge classes that
overlap, transitively) gives exactly the orbit partition of the group the
two generate together. The engine leans on this to accumulate orbit
knowledge across runs; here the law is checked directly against group
closure on random generator sets.
"""

import numpy as np

from autorbits import (
    Permutation,
    brute_aut,
    brute_orbits,
    closure_orbits,
    cycle_graph,
    partition_join,
    path_graph,
)

# Orbits of <(0 1)(2 3)> and <(1 2)> on five points: the join chains
# 0~1, 2~3 together through 1~2.
a = closure_orbits(5, [Permutation([1, 0, 3, 2, 4])])
b = closure_orbits(5, [Permutation([0, 2, 1, 3, 4])])
joined = partition_join(a, b)
both = closure_orbits(5, [Permutation([1, 0, 3, 2, 4]), Permutation([0, 2, 1, 3, 4])])
print("orbits of A:", a.classes)
print("orbits of B:", b.classes)
print("join:       ", joined.classes)
print("orbits of <A,B>:", both.classes)
print("join equals closure:", joined.same_blocks(both))

# The same law on random generator sets.
rng = np.random.default_rng(9)
trials = 200
agree = 0
for _ in range(trials):
    n = int(rng.integers(4, 9))
    s1 = [Permutation(rng.permutation(n)) for _ in range(int(rng.integers(1, 4)))]
    s2 = [Permutation(rng.permutation(n)) for _ in range(int(rng.integers(1, 4)))]
    lhs = partition_join(closure_orbits(n, s1), closure_orbits(n, s2))
    agree += lhs.same_blocks(closure_orbits(n, s1 + s2))
print(f"\nrandom generator sets: {agree}/{trials} joins equal the closure orbits")

# The oracle itself: filter all n! permutations, read orbits off the group.
print("\n|Aut(C5)| =", len(brute_aut(cycle_graph(5))))
print("orbits of P3:", brute_orbits(path_graph(3)).classes)
