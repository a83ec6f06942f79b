"""Brute-force ground truth for small graphs.

Everything here trades speed for obviousness: automorphisms come from
filtering all n! permutations, isomorphisms from the first lexicographic
match, orbits from closing generator images. The permutation scan is
vectorized in chunks so n = 8 stays in milliseconds and an explicit
override can still reach n = 10.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import SizeLimitError, SizeMismatchError
from .graphs import Permutation
from .partitions import OrderedPartition

_CHUNK = 40320


@dataclass(frozen=True)
class OracleLimit:
    """Cap on brute-force enumeration size (n! permutations)."""

    max_n: int = 8


_DEFAULT_LIMIT = OracleLimit()


def _check_size(n, limit, force):
    limit = limit or _DEFAULT_LIMIT
    if n > limit.max_n:
        if not force:
            raise SizeLimitError(
                f"brute force over {n}! permutations exceeds max_n={limit.max_n}; "
                "pass force=True (CLI: --max-n) to override"
            )
        warnings.warn(
            f"brute-force enumeration of {n}! permutations; this may be slow",
            RuntimeWarning,
            stacklevel=3,
        )


@lru_cache(maxsize=6)
def _small_pool(n):
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def _perm_chunks(n):
    """All n! permutations in lexicographic order, as (m, n) arrays."""
    if n <= 8:
        yield _small_pool(n)
        return
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, _CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def brute_aut(g, limit=None, force=False):
    """All automorphisms of g, lexicographic by image sequence."""
    _check_size(g.n, limit, force)
    colors = g.colors
    found = []
    for pool in _perm_chunks(g.n):
        mapped = colors[pool[:, :, None], pool[:, None, :]]
        ok = (mapped == colors).all(axis=(1, 2))
        found.extend(Permutation(img) for img in pool[ok])
    return found


def brute_orbits(g, limit=None, force=False):
    """Orbit partition of Aut(g), via closure of the enumerated group."""
    return closure_orbits(g.n, brute_aut(g, limit=limit, force=force))


def brute_iso(g1, g2, limit=None, force=False):
    """First lexicographic permutation mapping g1's matrix onto g2's, or None."""
    if g1.n != g2.n:
        raise SizeMismatchError("graphs have different orders")
    _check_size(g1.n, limit, force)
    for pool in _perm_chunks(g1.n):
        mapped = g2.colors[pool[:, :, None], pool[:, None, :]]
        ok = (mapped == g1.colors).all(axis=(1, 2))
        hits = np.flatnonzero(ok)
        if hits.size:
            return Permutation(pool[hits[0]])
    return None


def closure_orbits(n, gens):
    """Orbit partition of the group generated by gens.

    Computed by transitively closing generator images on vertices; the group
    itself is never enumerated. Class ids follow smallest members.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        if p.n != n:
            raise SizeMismatchError("generator size does not match n")
        for v in range(n):
            a, b = find(v), find(int(p.image[v]))
            if a != b:
                parent[max(a, b)] = min(a, b)

    roots = {}
    class_of = np.empty(n, dtype=np.int64)
    for v in range(n):
        r = find(v)
        if r not in roots:
            roots[r] = len(roots)
        class_of[v] = roots[r]
    return OrderedPartition(class_of)
