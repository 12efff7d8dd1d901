"""Hedge adjacency structure and greedy relabeling.

Two hedges are adjacent when their vertex sets intersect.  The hedge
adjacency graph has one vertex per label and an edge per adjacent pair;
a relabeling is a proper coloring of that graph, so hedges sharing a
vertex always end up with distinct new labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import GraphError, HedgeGraph, LabelRef, _vertex_label_sets, hedge_view


@dataclass(frozen=True, slots=True)
class HedgeAdjacencyGraph:
    """Simple graph over label ids; ``neighbors[i]`` is the set adjacent to hedge i."""

    labels: tuple[str, ...]
    neighbors: tuple[frozenset[int], ...]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((r, t) for r in range(len(self.labels))
                     for t in sorted(self.neighbors[r]) if r < t)

    def degree(self, label_id: int) -> int:
        return len(self.neighbors[label_id])


@dataclass(frozen=True, slots=True)
class Relabeling:
    """Proper coloring of the hedge adjacency graph; colors are new label ids."""

    colors: tuple[int, ...]
    num_colors: int


def hedges_adjacent(g: HedgeGraph, r: LabelRef, t: LabelRef) -> bool:
    """True iff the two hedges share at least one vertex."""
    rid, tid = g.label_id(r), g.label_id(t)
    if rid == tid:
        raise GraphError("adjacency is defined between two distinct hedges")
    return bool(hedge_view(g, rid).vertex_set & hedge_view(g, tid).vertex_set)


def component_adjacency_matrix(g: HedgeGraph, r: LabelRef, t: LabelRef) -> list[list[bool]]:
    """Component-wise intersection matrix of two hedges.

    The matrix is square of order S = the maximum span over all hedges
    of the graph; entry (i, j) says whether the i-th component of the
    first hedge meets the j-th component of the second (components in
    ascending minimum-vertex order, missing indices padded with False).
    """
    rid, tid = g.label_id(r), g.label_id(t)
    if rid == tid:
        raise GraphError("adjacency is defined between two distinct hedges")
    size = max(hedge_view(g, lab).span for lab in range(g.num_labels))
    rows = hedge_view(g, rid).components
    cols = hedge_view(g, tid).components
    return [[i < len(rows) and j < len(cols) and bool(rows[i] & cols[j])
             for j in range(size)] for i in range(size)]


def adjacency_graph(g: HedgeGraph) -> HedgeAdjacencyGraph:
    """Build the hedge adjacency graph from per-vertex incident label sets."""
    neighbors: list[set[int]] = [set() for _ in range(g.num_labels)]
    for incident in _vertex_label_sets(g):
        for r in incident:
            neighbors[r] |= incident
    for r, ns in enumerate(neighbors):
        ns.discard(r)
    return HedgeAdjacencyGraph(g.labels, tuple(frozenset(ns) for ns in neighbors))


def adjacency_degree(g: HedgeGraph, label: LabelRef) -> int:
    """Number of other hedges sharing a vertex with this one."""
    return adjacency_graph(g).degree(g.label_id(label))


def max_adjacency_degree(g: HedgeGraph) -> int:
    adj = adjacency_graph(g)
    return max((adj.degree(i) for i in range(g.num_labels)), default=0)


def greedy_relabel(g: HedgeGraph, order: Sequence[int] | None = None) -> Relabeling:
    """Proper coloring of the hedge adjacency graph by greedy assignment.

    Hedges are processed in decreasing adjacency degree (ties by
    ascending label id) unless an explicit ``order`` permutation of
    label ids is given; each takes the smallest color unused among its
    already-colored neighbors.  Uses at most max adjacency degree + 1
    colors.
    """
    adj = adjacency_graph(g)
    ids = list(range(g.num_labels))
    if order is None:
        order = sorted(ids, key=lambda i: (-adj.degree(i), i))
    elif sorted(order) != ids:
        raise GraphError("order must be a permutation of the label ids")
    colors: dict[int, int] = {}
    for i in order:
        taken = {colors[j] for j in adj.neighbors[i] if j in colors}
        c = 0
        while c in taken:
            c += 1
        colors[i] = c
    palette = tuple(colors[i] for i in ids)
    return Relabeling(palette, max(palette, default=-1) + 1)
