"""Orbit engine: individualization to a regular stage, isomorphism-grouping
of the resulting discrete colorings, join-based accumulation, and a
class-merge verification procedure.

The engine only ever *claims* what it can witness: every merge of two
vertices into one orbit class is backed by an explicitly verified
automorphism, so the reported partition is always finer-or-equal to the true
orbit partition. Exactness is certified by a sandwich argument: the
accumulated partition is a lower bound, the stable coloring an upper bound,
and when the two coincide the middle is pinned.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

from .errors import (
    InternalInvariantError,
    NoCandidateError,
    NotDiscreteError,
)
from .graphs import Permutation, apply_permutation, disjoint_union, is_automorphism
from .oracle import closure_orbits
from .partitions import OrderedPartition, partition_join
from .refine import RefinementConfig, individualize_sequence, refine

STRATEGIES = ("least_fixed", "min_class", "first")

CERTIFIED = "certified"
LOWER_BOUND = "lower_bound"

ISOMORPHIC = "isomorphic"
NON_ISOMORPHIC = "non_isomorphic"
INCONCLUSIVE = "inconclusive"


@dataclass
class RunStats:
    """Instrumentation counters for one engine run."""

    refine_calls: int = 0
    canonical_form_calls: int = 0
    verify_tree_nodes: int = 0
    verify_tree_depth_max: int = 0
    depth_budget_hits: int = 0

    def as_dict(self):
        return {
            "refine_calls": self.refine_calls,
            "canonical_form_calls": self.canonical_form_calls,
            "verify_tree_nodes": self.verify_tree_nodes,
            "verify_tree_depth_max": self.verify_tree_depth_max,
        }


@dataclass(frozen=True)
class StageGraph:
    """A base graph with an ordered fix sequence and its stable coloring."""

    base: object
    fixes: tuple
    graph: object
    coloring: object


@dataclass
class OrbitSystem:
    """Accumulated orbit partition, its witnesses, and the run outcome."""

    partition: OrderedPartition
    generators: tuple
    status: str
    stats: RunStats


@dataclass
class IsoResult:
    verdict: str
    witness: Permutation | None
    orbit_system: OrbitSystem | None
    stats: RunStats


class _Run:
    """Mutable per-run state: config, strategy, stats, fixation history."""

    def __init__(self, g, cfg=None, strategy="least_fixed", stats=None):
        if strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        self.g = g
        self.cfg = cfg or RefinementConfig()
        self.strategy = strategy
        self.stats = stats if stats is not None else RunStats()
        self.history = np.zeros(g.n, dtype=np.int64)
        self._base_stage = None

    def stage(self, fixes):
        fixes = tuple(int(v) for v in fixes)
        if not fixes and self._base_stage is not None:
            return self._base_stage
        graph = individualize_sequence(self.g, fixes)
        self.stats.refine_calls += 1
        coloring = refine(graph, self.cfg)
        out = StageGraph(base=self.g, fixes=fixes, graph=graph, coloring=coloring)
        if not fixes:
            self._base_stage = out
        return out

    def form(self, stage):
        self.stats.canonical_form_calls += 1
        return canonical_form_discrete(stage)


def _candidate_order(coloring, history, strategy, exclude=()):
    """Vertices in non-singleton classes, ordered by the fixing strategy."""
    items = []
    for cid, members in enumerate(coloring.vertex_partition.classes):
        if len(members) < 2:
            continue
        for v in members:
            if v in exclude:
                continue
            if strategy == "least_fixed":
                key = (int(history[v]), len(members), cid, v)
            elif strategy == "min_class":
                key = (len(members), cid, v)
            else:
                key = (v,)
            items.append((key, v))
    items.sort()
    return [v for _, v in items]


def pick_fix_vertex(stage, history=None, strategy="least_fixed"):
    """Next vertex to individualize, per strategy; error if none exists."""
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    if history is None:
        history = np.zeros(stage.base.n, dtype=np.int64)
    order = _candidate_order(stage.coloring, history, strategy)
    if not order:
        raise NoCandidateError("coloring is discrete; nothing left to fix")
    return order[0]


def canonical_form_discrete(stage):
    """Deterministic byte form of a discrete stage.

    The base graph's matrix is rewritten in canonical class order and
    prefixed with the refinement trace digest (which pins the per-class
    signature sequence). Two stages of one graph get equal forms exactly
    when the class-order bijection between them is a verified automorphism
    waiting to be extracted.
    """
    part = stage.coloring.vertex_partition
    if not part.is_discrete():
        raise NotDiscreteError("canonical form requires a discrete coloring")
    order = np.fromiter((c[0] for c in part.classes), dtype=np.int64, count=part.n)
    head = struct.pack(">qq", stage.base.n, stage.graph.color_count)
    body = stage.base.colors[np.ix_(order, order)].tobytes()
    return head + stage.coloring.trace_digest + b"".join(stage.coloring.signatures) + body


def _class_order(stage):
    part = stage.coloring.vertex_partition
    return np.fromiter((c[0] for c in part.classes), dtype=np.int64, count=part.n)


def extract_isomorphism(s1, s2):
    """Class-order bijection between two discrete stages, fully verified.

    Returns None unless the bijection maps s1's individualized matrix onto
    s2's entrywise (and, for a shared base graph, is an automorphism of that
    base). Never returns an unverified map.
    """
    if not s1.coloring.is_discrete() or not s2.coloring.is_discrete():
        raise NotDiscreteError("isomorphism extraction requires discrete stages")
    if s1.base.n != s2.base.n or s1.coloring.trace != s2.coloring.trace:
        return None
    o1 = _class_order(s1)
    o2 = _class_order(s2)
    image = np.empty(s1.base.n, dtype=np.int64)
    image[o1] = o2
    perm = Permutation(image)
    if apply_permutation(s1.graph, perm) != s2.graph:
        return None
    if s1.base == s2.base and not is_automorphism(s1.base, perm):
        return None
    return perm


def find_regular_stage(g, cfg=None, strategy="least_fixed", *, first_seed=None, _run=None):
    """Extend a fix sequence until the coloring is non-discrete but any one
    further individualization makes it discrete.

    If the initial refinement is already discrete the empty-fix stage is
    returned immediately. Termination is guaranteed: fixing everything is
    discrete.
    """
    run = _run or _Run(g, cfg, strategy)
    stage = run.stage(())
    if stage.coloring.is_discrete():
        return stage
    fixes = []
    seed = first_seed
    while True:
        candidates = _candidate_order(stage.coloring, run.history, run.strategy)
        if seed is not None:
            candidates = [seed] + [c for c in candidates if c != seed]
            seed = None
        extension = None
        for y in candidates:
            trial = run.stage(tuple(fixes) + (y,))
            if not trial.coloring.is_discrete():
                extension = (y, trial)
                break
        if extension is None:
            return stage
        fixes.append(extension[0])
        run.history[extension[0]] += 1
        stage = extension[1]


def stage_orbits(g, stage, cfg=None, strategy="least_fixed", *, _run=None):
    """Orbits of the subgroup found by grouping one-vertex extensions.

    Every vertex of every non-singleton stage class is individualized and
    refined; extensions with equal canonical forms yield verified
    automorphisms. Returns the orbit partition of the witnessed subgroup
    together with the witnesses.
    """
    run = _run or _Run(g, cfg, strategy)
    generators = []
    groups = {}
    for members in stage.coloring.vertex_partition.classes:
        if len(members) < 2:
            continue
        for y in members:
            extension = run.stage(stage.fixes + (y,))
            if not extension.coloring.is_discrete():
                # Regular stages never produce this; tolerate it soundly by
                # leaving y unmerged.
                continue
            form = run.form(extension)
            anchor = groups.get(form)
            if anchor is None:
                groups[form] = extension
                continue
            witness = extract_isomorphism(anchor, extension)
            if witness is None:
                raise InternalInvariantError(
                    "equal canonical forms failed isomorphism extraction"
                )
            generators.append(witness)
    return closure_orbits(g.n, generators), generators


def _default_depth_budget(n):
    return max(1, math.ceil(math.log2(max(2, n)))) + 1


def verify_merge(
    g,
    q_partition,
    class_a,
    class_b,
    cfg=None,
    depth_budget=None,
    strategy="least_fixed",
    node_budget=None,
    *,
    _run=None,
):
    """Search for an automorphism of g joining two classes of q_partition.

    Grows a fix sequence that keeps the two class representatives in a
    common color class for as long as possible, then co-individualizes the
    representatives and descends the resulting pair of colorings in lock
    step, one co-fixed vertex pair per level. Returns a verified witness or
    None; None is *not* a proof that the classes are separate.
    """
    run = _run or _Run(g, cfg, strategy)
    if class_a == class_b:
        raise ValueError("classes to merge must be distinct")
    o1 = q_partition.classes[class_a][0]
    o2 = q_partition.classes[class_b][0]
    if depth_budget is None:
        depth_budget = _default_depth_budget(g.n)
    if depth_budget < 1:
        raise ValueError("depth_budget must be at least 1")
    # A successful search examines few graphs; a search past the node budget
    # is already failing, so give up on the witness rather than enumerate.
    if node_budget is None:
        node_budget = max(64, 8 * g.n)
    remaining_nodes = [node_budget]

    fixes = []
    coloring = run.stage(()).coloring
    while True:
        if coloring.vertex_partition.class_of[o1] != coloring.vertex_partition.class_of[o2]:
            return None
        keeper = None
        for y in _candidate_order(coloring, run.history, run.strategy, exclude={o1, o2}):
            trial = run.stage(tuple(fixes) + (y,))
            tp = trial.coloring.vertex_partition
            if tp.class_of[o1] == tp.class_of[o2]:
                keeper = (y, trial.coloring)
                break
        if keeper is None:
            break
        fixes.append(keeper[0])
        run.history[keeper[0]] += 1
        coloring = keeper[1]

    t1 = run.stage(tuple(fixes) + (o1,))
    t2 = run.stage(tuple(fixes) + (o2,))
    witness = _descend(run, t1, t2, 1, depth_budget, remaining_nodes)
    if witness is None:
        return None
    if witness(o1) != o2 or not is_automorphism(g, witness):
        raise InternalInvariantError("merge witness failed verification")
    return witness


def _descend(run, s1, s2, level, depth_budget, node_budget):
    """Lock-step descent over co-individualized stage pairs."""
    if node_budget[0] <= 0:
        return None
    node_budget[0] -= 2
    run.stats.verify_tree_nodes += 2
    if level > run.stats.verify_tree_depth_max:
        run.stats.verify_tree_depth_max = level
    if s1.coloring.trace != s2.coloring.trace:
        return None
    if s1.coloring.is_discrete():
        if run.form(s1) != run.form(s2):
            return None
        return extract_isomorphism(s1, s2)
    if level >= depth_budget:
        run.stats.depth_budget_hits += 1
        return None
    classes1 = s1.coloring.vertex_partition.classes
    classes2 = s2.coloring.vertex_partition.classes
    target = next(i for i, c in enumerate(classes1) if len(c) > 1)
    a = classes1[target][0]
    extended1 = run.stage(s1.fixes + (a,))
    for b in classes2[target]:
        witness = _descend(
            run,
            extended1,
            run.stage(s2.fixes + (b,)),
            level + 1,
            depth_budget,
            node_budget,
        )
        if witness is not None:
            return witness
        if node_budget[0] <= 0:
            return None
    return None


def _merge_candidates(q, stable, attempted):
    """Unordered pairs of q-classes sharing a stable class, not yet tried."""
    by_stable = {}
    for members in q.classes:
        by_stable.setdefault(int(stable.class_of[members[0]]), []).append(members)
    pairs = []
    for _, group in sorted(by_stable.items()):
        group.sort(key=lambda m: m[0])
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                key = (group[i][0], group[j][0])
                if key not in attempted:
                    pairs.append(key)
    return pairs


def compute_orbits(
    g,
    cfg=None,
    strategy="least_fixed",
    budget=None,
    *,
    stats=None,
    verify_depth=None,
    verify_nodes=None,
):
    """Accumulate an automorphic partition until it meets the stable coloring.

    Each iteration seeds a fresh fix sequence from the next class of the
    current partition, finds a regular stage, joins in the stage's orbit
    partition, then sweeps still-separated class pairs with verify_merge.
    Status is certified when the partition reaches the stable coloring
    (sandwich certificate), lower_bound when the iteration budget is spent
    with no progress and every candidate pair refused to merge.
    """
    run = _Run(g, cfg, strategy, stats=stats)
    base = run.stage(())
    stable = base.coloring.vertex_partition
    q = OrderedPartition.singletons(g.n)
    generators = []
    depth_budget = verify_depth if verify_depth is not None else _default_depth_budget(g.n)
    attempted = set()
    max_iters = budget if budget is not None else max(1, g.n - 1)
    seed_ptr = 0
    no_change = 0

    for _ in range(max_iters):
        if q.same_blocks(stable):
            break
        before = q
        seed = q.classes[seed_ptr % q.class_count][0]
        seed_ptr += 1
        stage = find_regular_stage(g, strategy=strategy, first_seed=seed, _run=run)
        part, new_gens = stage_orbits(g, stage, strategy=strategy, _run=run)
        generators.extend(new_gens)
        q = partition_join(q, part)
        q, generators = _verify_sweep(
            run, q, stable, generators, attempted, depth_budget, verify_nodes
        )
        if q.same_blocks(before):
            no_change += 1
            if no_change >= max(1, q.class_count - 1):
                break
        else:
            no_change = 0

    for w in generators:
        if not is_automorphism(g, w):
            raise InternalInvariantError("emitted generator is not an automorphism")
    status = CERTIFIED if q.same_blocks(stable) else LOWER_BOUND
    return OrbitSystem(q.sorted_by_min(), tuple(generators), status, run.stats)


def _verify_sweep(run, q, stable, generators, attempted, depth_budget, node_budget):
    """Try verify_merge on candidate class pairs until none succeeds."""
    while not q.same_blocks(stable):
        progress = False
        for key in _merge_candidates(q, stable, attempted):
            attempted.add(key)
            ca = int(q.class_of[key[0]])
            cb = int(q.class_of[key[1]])
            witness = verify_merge(
                run.g,
                q,
                ca,
                cb,
                depth_budget=depth_budget,
                node_budget=node_budget,
                _run=run,
            )
            if witness is not None:
                generators.append(witness)
                q = partition_join(q, closure_orbits(run.g.n, [witness]))
                progress = True
                break
        if not progress:
            break
    return q, generators


def _side_crossing_start(partition, n_left):
    for members in partition.classes:
        left = [v for v in members if v < n_left]
        right = [v for v in members if v >= n_left]
        if left and right:
            return left[0]
    return None


def _orbit_witness_to_right(generators, n_left, start):
    """BFS over generator images from start until a right-side vertex, with
    the composed permutation as witness."""
    n = 2 * n_left
    witness = {start: Permutation.identity(n)}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            wv = witness[v]
            for gen in generators:
                t = gen(v)
                if t in witness:
                    continue
                witness[t] = gen.compose(wv)
                if t >= n_left:
                    return witness[t]
                nxt.append(t)
        frontier = nxt
    return None


def iso_test(g1, g2, cfg=None, budget=None, strategy="least_fixed"):
    """Isomorphism test by orbit computation on the tagged disjoint union.

    A verified witness is returned when some accumulated orbit (hence some
    product of verified generators) crosses the two sides. Non-isomorphism
    is declared only on sound invariant separations: differing refinement
    traces, differing one-vertex individualization profiles, certified
    non-crossing orbits, or a stable union class with unequal side counts.
    Anything else is inconclusive. False positives are impossible: every
    witness is checked entrywise.
    """
    stats = RunStats()
    cfg = cfg or RefinementConfig()
    if g1.n != g2.n or g1.color_count != g2.color_count:
        return IsoResult(NON_ISOMORPHIC, None, None, stats)
    n = g1.n

    run1 = _Run(g1, cfg, strategy, stats=stats)
    run2 = _Run(g2, cfg, strategy, stats=stats)
    if run1.stage(()).coloring.trace != run2.stage(()).coloring.trace:
        return IsoResult(NON_ISOMORPHIC, None, None, stats)

    profile1 = sorted(run1.stage((v,)).coloring.trace_digest for v in range(n))
    profile2 = sorted(run2.stage((v,)).coloring.trace_digest for v in range(n))
    if profile1 != profile2:
        return IsoResult(NON_ISOMORPHIC, None, None, stats)

    union = disjoint_union(g1, g2)
    # Cross-side merges get no help from fix-sequence growth (any fix breaks
    # the side symmetry), so the union run needs room for one descent level
    # per independent symmetry pocket.
    system = compute_orbits(
        union,
        cfg,
        strategy,
        budget,
        stats=stats,
        verify_depth=union.n,
        verify_nodes=32 * union.n,
    )
    start = _side_crossing_start(system.partition, n)
    if start is not None:
        crossing = _orbit_witness_to_right(system.generators, n, start)
        if crossing is None:
            raise InternalInvariantError("crossing orbit without a generator path")
        image = crossing.image[:n] - n
        witness = Permutation(image)
        if apply_permutation(g1, witness) != g2:
            raise InternalInvariantError("crossing witness failed verification")
        return IsoResult(ISOMORPHIC, witness, system, stats)

    if system.status == CERTIFIED:
        return IsoResult(NON_ISOMORPHIC, None, system, stats)

    union_run = _Run(union, cfg, strategy, stats=stats)
    for members in union_run.stage(()).coloring.vertex_partition.classes:
        left = sum(1 for v in members if v < n)
        if left * 2 != len(members):
            return IsoResult(NON_ISOMORPHIC, None, system, stats)

    return IsoResult(INCONCLUSIVE, None, system, stats)
