"""Edge-colored digraph model: a graph is a total color assignment on V x V.

The matrix entry ``colors[u, v]`` is the color of the ordered pair (u, v);
diagonal entries act as vertex colors. Color ids are kept dense: every id in
``[0, color_count)`` occurs at least once, and constructors renumber ids
order-preservingly whenever gaps appear. Order-preserving compaction keeps
color ids comparable across graphs related by a vertex relabeling.
"""

from __future__ import annotations

import numpy as np

from .errors import SizeMismatchError


class EdgeColoredGraph:
    """Immutable dense color matrix over ordered vertex pairs."""

    __slots__ = ("colors", "n", "color_count")

    def __init__(self, colors):
        mat = np.asarray(colors, dtype=np.int64)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("color matrix must be square")
        n = int(mat.shape[0])
        if n == 0:
            raise ValueError("graph needs at least one vertex")
        if mat.min() < 0:
            raise ValueError("color ids must be non-negative")
        used, dense = np.unique(mat, return_inverse=True)
        mat = dense.reshape(n, n).astype(np.int64)
        mat.setflags(write=False)
        self.colors = mat
        self.n = n
        self.color_count = int(used.size)

    def diagonal(self):
        return self.colors.diagonal()

    def __eq__(self, other):
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.colors, other.colors)

    def __hash__(self):
        return hash((self.n, self.colors.tobytes()))

    def __repr__(self):
        return f"EdgeColoredGraph(n={self.n}, colors={self.color_count})"


class Permutation:
    """A bijection on vertex indices, stored as an image array."""

    __slots__ = ("image",)

    def __init__(self, image):
        img = np.asarray(image, dtype=np.int64)
        if img.ndim != 1:
            raise ValueError("permutation image must be one-dimensional")
        n = img.size
        if n == 0 or not np.array_equal(np.sort(img), np.arange(n)):
            raise ValueError("image is not a bijection on [0, n)")
        img = img.copy()
        img.setflags(write=False)
        self.image = img

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n))

    @property
    def n(self):
        return int(self.image.size)

    def __call__(self, v):
        return int(self.image[v])

    def compose(self, other):
        """self after other: (self.compose(other))(v) == self(other(v))."""
        if self.n != other.n:
            raise SizeMismatchError("permutation sizes differ")
        return Permutation(self.image[other.image])

    def inverse(self):
        inv = np.empty(self.n, dtype=np.int64)
        inv[self.image] = np.arange(self.n)
        return Permutation(inv)

    def is_identity(self):
        return bool(np.array_equal(self.image, np.arange(self.n)))

    def as_list(self):
        return [int(x) for x in self.image]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self.image, other.image)

    def __hash__(self):
        return hash(self.image.tobytes())

    def __repr__(self):
        return f"Permutation({self.as_list()})"


def apply_permutation(g, perm):
    """Relabel g by perm: result[perm(u), perm(v)] == g[u, v]."""
    if perm.n != g.n:
        raise SizeMismatchError("permutation size does not match graph order")
    inv = perm.inverse().image
    return EdgeColoredGraph(g.colors[np.ix_(inv, inv)])


def is_automorphism(g, perm):
    """True iff perm preserves every pair color of g."""
    if perm.n != g.n:
        raise SizeMismatchError("permutation size does not match graph order")
    p = perm.image
    return bool(np.array_equal(g.colors[np.ix_(p, p)], g.colors))


def from_undirected_edges(n, edges):
    """Simple undirected graph as a 3-color matrix (loop / edge / non-edge).

    Unused colors are compacted away, so e.g. the complete graph ends up
    with two colors.
    """
    mat = np.full((n, n), 2, dtype=np.int64)
    np.fill_diagonal(mat, 0)
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        mat[u, v] = 1
        mat[v, u] = 1
    return EdgeColoredGraph(mat)


def complete_graph(n):
    return from_undirected_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n):
    return from_undirected_edges(n, [])


def cycle_graph(n):
    return from_undirected_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return from_undirected_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_undirected_edges(10, outer + inner + spokes)


def disjoint_union(g1, g2):
    """Side-by-side union; all cross-side pairs get one fresh tag color.

    The fresh tag makes "same side" a color-definable relation, so every
    automorphism of the union either preserves the two sides or swaps them
    wholesale.
    """
    n1, n2 = g1.n, g2.n
    tag = max(g1.color_count, g2.color_count)
    mat = np.full((n1 + n2, n1 + n2), tag, dtype=np.int64)
    mat[:n1, :n1] = g1.colors
    mat[n1:, n1:] = g2.colors
    return EdgeColoredGraph(mat)
