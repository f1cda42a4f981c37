"""Exact bin packing, reduction gadgets, and instance generators.

The packing variant solved here is the exact one: split the items into k
bins so that every bin sums to precisely the capacity B (so the item total
must be k*B). Two gadget families turn such an instance into an equitable
tree-coloring question on a graph whose answer matches the packing's, with
witness mappings in both directions:

* split gadget - per item j, a clique on 2k-1 vertices fully joined to an
  independent set of a_j + 1 vertices.
* interval gadget - per item j, a chain of 2*a_j cliques on 2k-1 vertices
  linked by a_j hub vertices, realized by concrete closed intervals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .coloring import Coloring, ConsistencyError, verify_equitable_tree_coloring
from .graph import Graph, IntervalRep, derive_graph

SPLIT = "split"
INTERVAL = "interval"


@dataclass(frozen=True)
class BinPackingInstance:
    """Items to pack into exactly filled bins; sum(items) must be bins*capacity."""

    items: tuple[int, ...]
    bins: int
    capacity: int

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(int(a) for a in self.items))
        if self.bins < 1:
            raise ValueError("bins must be >= 1")
        if self.capacity < 1:
            raise ValueError("capacity must be >= 1")
        for j, a in enumerate(self.items):
            if a < 1:
                raise ValueError(f"item {j} has non-positive size {a}")
        total = sum(self.items)
        if total != self.bins * self.capacity:
            raise ValueError(
                f"items sum to {total}, expected bins*capacity = "
                f"{self.bins * self.capacity}"
            )

    @property
    def n(self) -> int:
        return len(self.items)


def solve_bin_packing(inst: BinPackingInstance) -> list[list[int]] | None:
    """Exact packing as a list of bins_count item-index lists, each summing to
    the capacity, or None.

    Backtracking over items in descending size order; bins whose current load
    equals one already tried for the item are skipped (they are
    interchangeable), so the first solution found is deterministic.
    """
    order = sorted(range(inst.n), key=lambda j: (-inst.items[j], j))
    loads = [0] * inst.bins
    bins: list[list[int]] = [[] for _ in range(inst.bins)]

    def place(t: int) -> bool:
        if t == inst.n:
            return True
        j = order[t]
        size = inst.items[j]
        tried = set()
        for i in range(inst.bins):
            load = loads[i]
            if load in tried or load + size > inst.capacity:
                continue
            tried.add(load)
            loads[i] = load + size
            bins[i].append(j)
            if place(t + 1):
                return True
            loads[i] = load
            bins[i].pop()
        return False

    if place(0):
        return [sorted(b) for b in bins]
    return None


@dataclass(frozen=True)
class SplitPart:
    """Component built for one item: a clique fully joined to an independent
    set, with one designated clique vertex (the star center in witness
    colorings)."""

    clique: tuple[int, ...]
    center: int
    independent: tuple[int, ...]


@dataclass(frozen=True)
class ChainPart:
    """Chain component built for one item of size a: cliques[0..2a-1] plus
    hubs[0..a-1], where hub t is adjacent to every vertex of cliques 2t,
    2t+1 and 2t+2 (the last one when it exists) and to nothing else."""

    cliques: tuple[tuple[int, ...], ...]
    hubs: tuple[int, ...]


@dataclass(frozen=True)
class GadgetLayout:
    """A built gadget graph with its labeled parts, one part per item."""

    kind: str
    instance: BinPackingInstance
    graph: Graph
    parts: tuple
    rep: IntervalRep | None = None


def build_split_gadget(inst: BinPackingInstance) -> GadgetLayout:
    """Disjoint union of one split component per item.

    Item j contributes a clique on 2k-1 vertices joined completely to an
    independent set of a_j + 1 vertices; the component's lowest vertex id is
    the designated center. Total vertex count is k(2n + B).
    """
    k = inst.bins
    width = 2 * k - 1
    parts = []
    edges: list[tuple[int, int]] = []
    next_id = 0
    for a in inst.items:
        clique = tuple(range(next_id, next_id + width))
        next_id += width
        independent = tuple(range(next_id, next_id + a + 1))
        next_id += a + 1
        part = SplitPart(clique=clique, center=clique[0], independent=independent)
        edges.extend(_split_part_edges(part))
        parts.append(part)
    graph = Graph.from_edges(next_id, edges)
    return GadgetLayout(SPLIT, inst, graph, tuple(parts))


def _split_part_edges(part: SplitPart) -> Iterator[tuple[int, int]]:
    clique = part.clique
    for i, u in enumerate(clique):
        for v in clique[i + 1 :]:
            yield (u, v)
    for u in clique:
        for w in part.independent:
            yield (u, w)


def build_interval_gadget(inst: BinPackingInstance) -> GadgetLayout:
    """Disjoint union of one chain component per item, with an interval
    realization.

    Per component, step i (1-based) places its first clique on
    [60i-50, 60i-40], its second on [60i-30, 60i-20], and hub i on
    [60i-45, 60i+12] so it reaches into the next step's first clique; the
    last hub is truncated to [60i-45, 60i-25] since there is no next step.
    Components are offset by 60*a_j + 60 so they cannot interact. The
    adjacency derived from the intervals is checked against the intended
    edge set and a mismatch raises ConsistencyError. Total vertex count is
    k(4k - 1)B.
    """
    k = inst.bins
    width = 2 * k - 1
    parts = []
    edges: list[tuple[int, int]] = []
    spans: list[tuple[int, int, int]] = []
    next_id = 0
    base = 0
    for a in inst.items:
        cliques: list[tuple[int, ...]] = []
        hubs: list[int] = []
        for i in range(1, a + 1):
            first = tuple(range(next_id, next_id + width))
            next_id += width
            second = tuple(range(next_id, next_id + width))
            next_id += width
            hub = next_id
            next_id += 1
            cliques.extend((first, second))
            hubs.append(hub)
            for u in first:
                spans.append((u, base + 60 * i - 50, base + 60 * i - 40))
            for u in second:
                spans.append((u, base + 60 * i - 30, base + 60 * i - 20))
            if i < a:
                spans.append((hub, base + 60 * i - 45, base + 60 * i + 12))
            else:
                spans.append((hub, base + 60 * i - 45, base + 60 * i - 25))
        part = ChainPart(tuple(cliques), tuple(hubs))
        edges.extend(_chain_part_edges(part))
        parts.append(part)
        base += 60 * a + 60
    graph = Graph.from_edges(next_id, edges)
    rep = IntervalRep(tuple(spans))
    if derive_graph(rep).adj != graph.adj:
        raise ConsistencyError(
            "interval-derived adjacency differs from the intended edge set"
        )
    return GadgetLayout(INTERVAL, inst, graph, tuple(parts), rep)


def _chain_part_edges(part: ChainPart) -> Iterator[tuple[int, int]]:
    for clique in part.cliques:
        for i, u in enumerate(clique):
            for v in clique[i + 1 :]:
                yield (u, v)
    for t, hub in enumerate(part.hubs):
        for ci in (2 * t, 2 * t + 1, 2 * t + 2):
            if ci < len(part.cliques):
                for u in part.cliques[ci]:
                    yield (hub, u)


def chain_clique_sequence(part: ChainPart) -> list[frozenset[int]]:
    """The component's maximal cliques, listed so that every vertex occupies
    a consecutive run: hub t extends cliques 2t, 2t+1 and 2t+2."""
    sequence = []
    for t, hub in enumerate(part.hubs):
        for ci in (2 * t, 2 * t + 1, 2 * t + 2):
            if ci < len(part.cliques):
                sequence.append(frozenset(part.cliques[ci]) | {hub})
    return sequence


def verify_maximal_clique_order(layout: GadgetLayout) -> bool:
    """Check, per chain component with a hubs, that the listed cliques are
    maximal cliques of the graph, that there are 3a - 1 of them, and that
    every vertex appears in a consecutive run of the list."""
    if layout.kind != INTERVAL:
        raise ValueError("maximal-clique ordering applies to interval layouts only")
    g = layout.graph
    for part in layout.parts:
        sequence = chain_clique_sequence(part)
        if len(sequence) != 3 * len(part.hubs) - 1:
            return False
        first: dict[int, int] = {}
        last: dict[int, int] = {}
        hits: dict[int, int] = {}
        for idx, clique in enumerate(sequence):
            if not _is_maximal_clique(g, clique):
                return False
            for v in clique:
                first.setdefault(v, idx)
                last[v] = idx
                hits[v] = hits.get(v, 0) + 1
        for v, count in hits.items():
            if count != last[v] - first[v] + 1:
                return False
    return True


def _is_maximal_clique(g: Graph, vertices: frozenset[int]) -> bool:
    members = list(vertices)
    for i, u in enumerate(members):
        nbrs = g.neighbor_sets[u]
        for v in members[i + 1 :]:
            if v not in nbrs:
                return False
    for w in range(g.n):
        if w not in vertices and all(w in g.neighbor_sets[u] for u in members):
            return False
    return True


def validate_layout(layout: GadgetLayout) -> None:
    """Structural checks for a built gadget; raises ConsistencyError.

    Covers the vertex-count identity (k(2n+B) split, k(4k-1)B interval), the
    parts partitioning the vertex set, the label-implied edges matching the
    graph, and for interval layouts the rep-derived adjacency, the maximal
    clique ordering, and the hub degrees 3(2k-1) (2(2k-1) for the last hub).
    """
    inst = layout.instance
    k = inst.bins
    if layout.kind == SPLIT:
        expected_n = k * (2 * inst.n + inst.capacity)
    elif layout.kind == INTERVAL:
        expected_n = k * (4 * k - 1) * inst.capacity
    else:
        raise ValueError(f"unknown layout kind {layout.kind!r}")
    if layout.graph.n != expected_n:
        raise ConsistencyError(
            f"{layout.kind} gadget has {layout.graph.n} vertices, identity gives {expected_n}"
        )

    labeled: list[int] = []
    implied: set[tuple[int, int]] = set()
    for part in layout.parts:
        if layout.kind == SPLIT:
            labeled.extend(part.clique)
            labeled.extend(part.independent)
            if part.center not in part.clique:
                raise ConsistencyError("designated center is not a clique vertex")
            part_edges = _split_part_edges(part)
        else:
            for clique in part.cliques:
                labeled.extend(clique)
            labeled.extend(part.hubs)
            part_edges = _chain_part_edges(part)
        implied.update(tuple(sorted(e)) for e in part_edges)
    if sorted(labeled) != list(range(layout.graph.n)):
        raise ConsistencyError("part labels do not partition the vertex set")
    if implied != set(layout.graph.edges()):
        raise ConsistencyError("label-implied edges differ from the graph")

    if layout.kind == INTERVAL:
        if layout.rep is None:
            raise ConsistencyError("interval layout is missing its representation")
        if derive_graph(layout.rep).adj != layout.graph.adj:
            raise ConsistencyError("rep-derived adjacency differs from the graph")
        if not verify_maximal_clique_order(layout):
            raise ConsistencyError("maximal-clique ordering check failed")
        for part in layout.parts:
            for t, hub in enumerate(part.hubs):
                expected = (3 if t < len(part.hubs) - 1 else 2) * (2 * k - 1)
                if layout.graph.degree(hub) != expected:
                    raise ConsistencyError(
                        f"hub {hub} has degree {layout.graph.degree(hub)}, expected {expected}"
                    )


def coloring_from_packing(
    layout: GadgetLayout, partition: Sequence[Sequence[int]]
) -> Coloring:
    """Translate an exact packing into an equitable tree-coloring of the
    gadget, bin index i becoming color i.

    For an item placed in bin i, the forced vertices (the independent set
    plus the center for split parts; the hubs plus the first vertex of every
    clique for chain parts) take color i and the remaining clique vertices
    take the other k-1 colors, each exactly twice per clique. Class sizes
    come out as B + 2n (split) or (4k - 1)B (interval).
    """
    inst = layout.instance
    _check_partition(inst, partition)
    k = inst.bins
    colors = [-1] * layout.graph.n
    for bin_index, bin_items in enumerate(partition):
        others = [c for c in range(k) if c != bin_index]
        for j in bin_items:
            part = layout.parts[j]
            if layout.kind == SPLIT:
                colors[part.center] = bin_index
                for w in part.independent:
                    colors[w] = bin_index
                for t, u in enumerate(part.clique[1:]):
                    colors[u] = others[t // 2]
            else:
                for hub in part.hubs:
                    colors[hub] = bin_index
                for clique in part.cliques:
                    colors[clique[0]] = bin_index
                    for t, u in enumerate(clique[1:]):
                        colors[u] = others[t // 2]
    return Coloring(tuple(colors), k)


def _check_partition(
    inst: BinPackingInstance, partition: Sequence[Sequence[int]]
) -> None:
    if len(partition) != inst.bins:
        raise ValueError(f"partition has {len(partition)} bins, expected {inst.bins}")
    placed = sorted(j for bin_items in partition for j in bin_items)
    if placed != list(range(inst.n)):
        raise ValueError("partition must place every item index exactly once")
    for i, bin_items in enumerate(partition):
        load = sum(inst.items[j] for j in bin_items)
        if load != inst.capacity:
            raise ValueError(f"bin {i} sums to {load}, expected {inst.capacity}")


def packing_from_coloring(layout: GadgetLayout, c: Coloring) -> list[list[int]]:
    """Read an exact packing back out of a verified coloring: every item goes
    to the bin named by the common color of its forced vertex set.

    A valid equitable tree-coloring of the gadget cannot color those sets
    with more than one color or produce bin loads other than the capacity,
    so either condition failing raises ConsistencyError.
    """
    inst = layout.instance
    if c.k != inst.bins or len(c) != layout.graph.n:
        raise ValueError("coloring does not match the gadget's size or color count")
    verdict = verify_equitable_tree_coloring(layout.graph, c)
    if not verdict.ok:
        raise ValueError(
            f"coloring is not a valid equitable tree-coloring ({verdict.failure_kind})"
        )
    partition: list[list[int]] = [[] for _ in range(inst.bins)]
    for j, part in enumerate(layout.parts):
        forced = part.independent if layout.kind == SPLIT else part.hubs
        bin_colors = {c[w] for w in forced}
        if len(bin_colors) != 1:
            raise ConsistencyError(f"forced vertex set of item {j} is not monochromatic")
        partition[bin_colors.pop()].append(j)
    for i, bin_items in enumerate(partition):
        load = sum(inst.items[j] for j in bin_items)
        if load != inst.capacity:
            raise ConsistencyError(
                f"extracted bin {i} sums to {load}, expected {inst.capacity}"
            )
    return partition


def gen_random_interval(
    n: int, max_coord: int, seed: int, proper: bool = False
) -> IntervalRep:
    """Deterministic pseudo-random representation on coordinates 0..max_coord.

    With proper=True, 2n distinct coordinates are drawn and paired so that
    both endpoint sequences increase together, which rules out containment;
    that needs 2n <= max_coord + 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_coord < 1:
        raise ValueError("max_coord must be >= 1")
    rng = random.Random(seed)
    if not proper:
        entries = []
        for v in range(n):
            a = rng.randint(0, max_coord)
            b = rng.randint(0, max_coord)
            entries.append((v, min(a, b), max(a, b)))
        return IntervalRep(tuple(entries))
    if 2 * n > max_coord + 1:
        raise ValueError(
            f"cannot place {n} intervals with distinct endpoints in 0..{max_coord}"
        )
    coords = sorted(rng.sample(range(max_coord + 1), 2 * n))
    lefts: list[int] = []
    rights: list[int] = []
    for x in coords:
        if len(lefts) == n:
            rights.append(x)
        elif len(rights) == len(lefts):
            lefts.append(x)
        elif rng.random() < 0.5:
            lefts.append(x)
        else:
            rights.append(x)
    return IntervalRep(tuple((v, lefts[v], rights[v]) for v in range(n)))
