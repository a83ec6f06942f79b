import numpy as np
import pytest

from autorbits import (
    OrderedPartition,
    RefinementConfig,
    apply_permutation,
    brute_orbits,
    complete_graph,
    cycle_graph,
    individualize,
    individualize_sequence,
    path_graph,
    refine,
    refine_with_fixes,
)
from util import random_permutation, random_simple_graph, rigid6

K1 = RefinementConfig(k=1)
K2 = RefinementConfig(k=2)
K3 = RefinementConfig(k=3)


def relabel_partition(p, perm):
    inv = perm.inverse()
    return OrderedPartition([int(p.class_of[inv(v)]) for v in range(p.n)])


def test_k4_single_class():
    assert refine(complete_graph(4), K1).vertex_partition.classes == ((0, 1, 2, 3),)


def test_path_degree_split():
    part = refine(path_graph(3), K1).vertex_partition
    assert part.same_blocks(OrderedPartition.from_classes([[1], [0, 2]]))


def test_c5_k2_pair_classes():
    coloring = refine(cycle_graph(5), K2)
    assert coloring.vertex_partition.classes == ((0, 1, 2, 3, 4),)
    pair = coloring.pair_coloring
    assert len(np.unique(pair)) == 3
    # the three pair classes are: diagonal, adjacent, non-adjacent
    g = cycle_graph(5)
    diag = pair[0, 0]
    adj = pair[0, 1]
    non = pair[0, 2]
    for u in range(5):
        for v in range(5):
            if u == v:
                assert pair[u, v] == diag
            elif g.colors[u, v] == g.colors[0, 1]:
                assert pair[u, v] == adj
            else:
                assert pair[u, v] == non


def test_stability_one_more_round_is_no_op():
    rng = np.random.default_rng(20)
    for cfg in (K1, K2):
        for _ in range(10):
            g = random_simple_graph(rng, int(rng.integers(3, 8)), 0.5)
            first = refine(g, cfg)
            again = refine(g, cfg)
            assert first.vertex_partition == again.vertex_partition
            assert first.rounds_used == again.rounds_used


def test_individualize_makes_fresh_singleton():
    g = complete_graph(4)
    part = refine(individualize(g, 0), K1).vertex_partition
    assert part.same_blocks(OrderedPartition.from_classes([[0], [1, 2, 3]]))


def test_individualize_out_of_range():
    with pytest.raises(ValueError):
        individualize(complete_graph(3), 3)


def test_individualize_already_unique_color_is_recoloring_only():
    once = individualize(path_graph(3), 1)  # vertex 1 now has a unique diagonal color
    twice = individualize(once, 1)
    # same partition structure of the matrix: entries equal iff equal before
    flat_a = once.colors.flatten()
    flat_b = twice.colors.flatten()
    for i in range(flat_a.size):
        for j in range(flat_a.size):
            assert (flat_a[i] == flat_a[j]) == (flat_b[i] == flat_b[j])


def test_c5_individualized_stabilizer_orbits():
    part = refine_with_fixes(cycle_graph(5), [0], K1).vertex_partition
    assert part.same_blocks(OrderedPartition.from_classes([[0], [1, 4], [2, 3]]))


def test_refine_with_fixes_examples():
    g = complete_graph(4)
    assert refine_with_fixes(g, [], K1).vertex_partition == refine(g, K1).vertex_partition
    p2 = refine_with_fixes(g, [0, 1], K1).vertex_partition
    assert p2.same_blocks(OrderedPartition.from_classes([[0], [1], [2, 3]]))
    assert refine_with_fixes(g, [0, 1, 2], K1).vertex_partition.is_discrete()


def test_refine_with_fixes_rejects_duplicates():
    with pytest.raises(ValueError):
        refine_with_fixes(complete_graph(4), [0, 0], K1)
    with pytest.raises(ValueError):
        individualize_sequence(complete_graph(4), [5])


def test_fix_order_within_singleton_classes_is_partition_neutral():
    g = path_graph(4)  # refinement splits ends from middles; fix one of each
    a = refine_with_fixes(g, [0, 1], K1).vertex_partition
    b = refine_with_fixes(g, [1, 0], K1).vertex_partition
    assert a.same_blocks(b)


@pytest.mark.parametrize("cfg", [K1, K2, K3])
def test_equivariance(cfg):
    rng = np.random.default_rng(21)
    hi = 7 if cfg.k < 3 else 6
    for _ in range(200):
        n = int(rng.integers(3, hi + 1))
        g = random_simple_graph(rng, n, float(rng.choice([0.3, 0.5, 0.7])))
        perm = random_permutation(rng, n)
        left = refine(apply_permutation(g, perm), cfg)
        right = refine(g, cfg)
        assert left.trace == right.trace
        assert left.vertex_partition == relabel_partition(right.vertex_partition, perm)


def test_monotonicity_in_k():
    rng = np.random.default_rng(22)
    for _ in range(40):
        n = int(rng.integers(3, 7))
        g = random_simple_graph(rng, n, 0.5)
        p1 = refine(g, K1).vertex_partition
        p2 = refine(g, K2).vertex_partition
        p3 = refine(g, K3).vertex_partition
        assert p2.is_finer_or_equal(p1)
        assert p3.is_finer_or_equal(p2)


def test_orbit_coarseness():
    # every true orbit lies inside one stable class
    rng = np.random.default_rng(23)
    for _ in range(40):
        n = int(rng.integers(3, 8))
        g = random_simple_graph(rng, n, float(rng.choice([0.2, 0.5, 0.8])))
        orbits = brute_orbits(g)
        for cfg in (K1, K2):
            stable = refine(g, cfg).vertex_partition
            assert orbits.is_finer_or_equal(stable)


def test_discreteness_implies_trivial_group():
    rng = np.random.default_rng(24)
    checked = 0
    for _ in range(60):
        n = int(rng.integers(6, 9))
        g = random_simple_graph(rng, n, 0.5)
        if refine(g, K2).is_discrete():
            assert brute_orbits(g).is_discrete()
            checked += 1
    assert checked > 10


def test_individualization_strictly_refines():
    rng = np.random.default_rng(25)
    for _ in range(30):
        n = int(rng.integers(4, 8))
        g = random_simple_graph(rng, n, 0.5)
        base = refine(g, K2).vertex_partition
        for v in range(n):
            finer = refine_with_fixes(g, [v], K2).vertex_partition
            assert finer.is_finer_or_equal(base)
            assert len(finer.classes[int(finer.class_of[v])]) == 1


def test_rigid_graph_discrete_under_k2():
    coloring = refine(rigid6(), K2)
    assert coloring.is_discrete()


def test_never_coarser_than_diagonal():
    rng = np.random.default_rng(26)
    for _ in range(20):
        n = int(rng.integers(3, 7))
        g = random_simple_graph(rng, n, 0.5)
        g2 = individualize(g, 0)
        part = refine(g2, K1).vertex_partition
        diag = g2.colors.diagonal()
        for members in part.classes:
            assert len({int(diag[v]) for v in members}) == 1


def test_round_cap_exceeded_raises():
    from autorbits import RefinementRoundError

    with pytest.raises(RefinementRoundError):
        refine(path_graph(5), RefinementConfig(k=1, max_rounds=1))


def test_config_validation():
    with pytest.raises(ValueError):
        RefinementConfig(k=4)
    with pytest.raises(ValueError):
        RefinementConfig(k=1, max_rounds=0)
