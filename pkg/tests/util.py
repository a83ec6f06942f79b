"""Shared helpers for randomized tests. Everything is seeded and deterministic."""


from autorbits import EdgeColoredGraph, Permutation, from_undirected_edges

# Verified asymmetric graph on 6 vertices (brute force finds only the identity).
RIGID6_EDGES = [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (2, 3)]


def rigid6():
    return from_undirected_edges(6, RIGID6_EDGES)


def random_simple_graph(rng, n, p=0.5):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_undirected_edges(n, edges)


def random_colored_digraph(rng, n, colors=4):
    return EdgeColoredGraph(rng.integers(0, colors, size=(n, n)))


def random_permutation(rng, n):
    return Permutation(rng.permutation(n))


def graph_from_bitmask(n, mask):
    """Undirected graph on n vertices from an edge bitmask over i<j pairs."""
    edges = []
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            if mask >> bit & 1:
                edges.append((i, j))
            bit += 1
    return from_undirected_edges(n, edges)


def rook_graph_4x4():
    edges = [
        (i, j)
        for i in range(16)
        for j in range(i + 1, 16)
        if i // 4 == j // 4 or i % 4 == j % 4
    ]
    return from_undirected_edges(16, edges)


def shrikhande_graph():
    offsets = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}
    edges = []
    for a in range(16):
        for b in range(a + 1, 16):
            d = ((a // 4 - b // 4) % 4, (a % 4 - b % 4) % 4)
            if d in offsets:
                edges.append((a, b))
    return from_undirected_edges(16, edges)


def all_set_partitions(items):
    """Every set partition of items, as lists of lists."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for sub in all_set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[head] + sub[i]] + sub[i + 1:]
        yield [[head]] + sub
