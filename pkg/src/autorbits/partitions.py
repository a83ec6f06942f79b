"""Ordered vertex partitions and the lattice join used to accumulate orbits."""

from __future__ import annotations

import numpy as np

from .errors import InvalidPartitionError, SizeMismatchError


class OrderedPartition:
    """A partition of [0, n) whose classes carry explicit, meaningful ids.

    Class ids must be dense in [0, class_count). The id order is whatever the
    producer chose: refinement emits signature-sorted ids, joins emit
    min-element order, and normalize_colors recanonicalizes arbitrary input.
    """

    __slots__ = ("n", "class_of", "classes")

    def __init__(self, class_of):
        arr = np.asarray(class_of, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidPartitionError("class map must be a non-empty vector")
        k = int(arr.max()) + 1
        if arr.min() < 0 or not np.array_equal(np.unique(arr), np.arange(k)):
            raise InvalidPartitionError("class ids must be dense in [0, class_count)")
        arr = arr.copy()
        arr.setflags(write=False)
        self.n = int(arr.size)
        self.class_of = arr
        members = [[] for _ in range(k)]
        for v, c in enumerate(arr):
            members[c].append(v)
        self.classes = tuple(tuple(m) for m in members)

    @classmethod
    def from_classes(cls, classes, n=None):
        flat = [v for c in classes for v in c]
        if n is None:
            n = len(flat)
        class_of = np.full(n, -1, dtype=np.int64)
        for cid, members in enumerate(classes):
            if not members:
                raise InvalidPartitionError("empty class")
            for v in members:
                if not (0 <= v < n) or class_of[v] != -1:
                    raise InvalidPartitionError("classes must disjointly cover [0, n)")
                class_of[v] = cid
        if (class_of == -1).any():
            raise InvalidPartitionError("classes must cover every vertex")
        return cls(class_of)

    @classmethod
    def singletons(cls, n):
        return cls(np.arange(n))

    @classmethod
    def single_class(cls, n):
        return cls(np.zeros(n, dtype=np.int64))

    @property
    def class_count(self):
        return len(self.classes)

    def is_discrete(self):
        return len(self.classes) == self.n

    def is_finer_or_equal(self, other):
        """True iff every class of self lies inside one class of other."""
        if self.n != other.n:
            raise SizeMismatchError("partition sizes differ")
        for members in self.classes:
            target = other.class_of[members[0]]
            if any(other.class_of[v] != target for v in members[1:]):
                return False
        return True

    def same_blocks(self, other):
        """Equality as unordered set partitions, ignoring class-id order."""
        if self.n != other.n:
            raise SizeMismatchError("partition sizes differ")
        return sorted(self.classes) == sorted(other.classes)

    def sorted_by_min(self):
        """The same blocks with class ids reassigned by smallest member."""
        order = sorted(range(len(self.classes)), key=lambda c: self.classes[c][0])
        rank = {cid: i for i, cid in enumerate(order)}
        return OrderedPartition([rank[int(c)] for c in self.class_of])

    def __eq__(self, other):
        if not isinstance(other, OrderedPartition):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.class_of, other.class_of)

    def __hash__(self):
        return hash(self.class_of.tobytes())

    def __repr__(self):
        body = " | ".join(",".join(map(str, c)) for c in self.classes)
        return f"OrderedPartition({body})"


def partition_join(p, q):
    """Finest partition coarser than both p and q (the lattice join).

    Two vertices end up together iff they are linked by a chain of
    overlapping p- and q-classes; a disjoint-set union over class overlaps
    realizes exactly that chain closure. Output class ids follow smallest
    members.
    """
    if p.n != q.n:
        raise SizeMismatchError("partition sizes differ")
    parent = list(range(p.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for part in (p, q):
        for members in part.classes:
            for v in members[1:]:
                union(members[0], v)

    roots = {}
    class_of = np.empty(p.n, dtype=np.int64)
    for v in range(p.n):
        r = find(v)
        if r not in roots:
            roots[r] = len(roots)
        class_of[v] = roots[r]
    return OrderedPartition(class_of)


def normalize_colors(g, p):
    """Reassign class ids of p canonically with respect to g.

    Each class gets an iteratively refined signature built only from raw pair
    colors, class sizes, and previously established signature ranks, so the
    id assignment commutes with vertex relabeling whenever the signatures
    separate the classes (always true for stable refinement output, where
    equal signatures would have been merged). Residual ties fall back to
    smallest-vertex order.
    """
    if p.n != g.n:
        raise SizeMismatchError("partition does not match graph order")
    colors = g.colors
    k = p.class_count
    sigs = [
        (len(members), tuple(sorted(int(colors[v, v]) for v in members)))
        for members in p.classes
    ]
    ranks = _rank(sigs)
    for _ in range(k):
        class_rank = [ranks[int(c)] for c in p.class_of]
        new_sigs = []
        for cid, members in enumerate(p.classes):
            profile = tuple(
                sorted(
                    tuple(
                        sorted(
                            (int(colors[v, w]), int(colors[w, v]), class_rank[w])
                            for w in range(g.n)
                        )
                    )
                    for v in members
                )
            )
            new_sigs.append((ranks[cid], profile))
        new_ranks = _rank(new_sigs)
        if new_ranks == ranks:
            break
        ranks, sigs = new_ranks, new_sigs
    order = sorted(range(k), key=lambda c: (sigs[c], p.classes[c][0]))
    relabel = {cid: i for i, cid in enumerate(order)}
    return OrderedPartition([relabel[int(c)] for c in p.class_of])


def _rank(sigs):
    """Dense ranks of signatures; equal signatures share a rank."""
    ordered = sorted(set(sigs))
    pos = {s: i for i, s in enumerate(ordered)}
    return [pos[s] for s in sigs]
