"""Labeled multigraph core: hedge views, label degrees, hedge removal.

A hedge graph is an undirected graph whose edges carry exactly one label
each; the edges sharing a label form a *hedge* and fail together (the
networking analogue is a shared-risk link group).  Freshly built graphs
must be simple; graphs produced by operations (contraction, removal) may
contain loops and parallel edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Edge = tuple[int, int, int]  # (u, v, label id)
LabelRef = Union[int, str]


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain."""


class DisjointSets:
    """Union-find over 0..n-1 with path compression and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def _valid_label_name(name: str) -> bool:
    return bool(name) and not any(ch.isspace() for ch in name)


@dataclass(frozen=True, slots=True)
class HedgeGraph:
    """Immutable hedge graph value.

    Vertices are dense ids ``0..n-1`` and labels are dense ids
    ``0..len(labels)-1`` (``labels[i]`` is the original label string).
    ``origin_map[v]`` is the set of original vertex ids the current vertex
    ``v`` stands for; it is the identity on freshly built graphs and its
    blocks always partition the original vertex set.
    """

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...]
    origin_map: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("vertex count must be at least 1")
        used = set()
        for u, v, lab in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge endpoint out of range: ({u}, {v})")
            if not (0 <= lab < len(self.labels)):
                raise GraphError(f"edge label id out of range: {lab}")
            used.add(lab)
        if used != set(range(len(self.labels))):
            raise GraphError("every label must appear on at least one edge")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("label names must be unique")
        for name in self.labels:
            if not _valid_label_name(name):
                raise GraphError(f"label name {name!r} must be a nonempty whitespace-free token")
        if len(self.origin_map) != self.n:
            raise GraphError("origin_map must have one block per vertex")
        seen: set[int] = set()
        for block in self.origin_map:
            if not block:
                raise GraphError("origin_map blocks must be nonempty")
            if seen & block:
                raise GraphError("origin_map blocks must be disjoint")
            seen |= block

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_labels(self) -> int:
        return len(self.labels)

    def label_id(self, label: LabelRef) -> int:
        """Resolve a label given as dense id or original string."""
        if isinstance(label, str):
            try:
                return self.labels.index(label)
            except ValueError:
                raise GraphError(f"unknown label {label!r}") from None
        if not (0 <= label < len(self.labels)):
            raise GraphError(f"unknown label id {label}")
        return label

    def label_name(self, label_id: int) -> str:
        return self.labels[self.label_id(label_id)]


@dataclass(frozen=True, slots=True)
class HedgeView:
    """One hedge: its edges, vertex set and connected components.

    Components are maximal under the hedge's own edges (loops connect
    nothing) and are ordered by ascending minimum vertex id.
    """

    label: int
    name: str
    edges: tuple[Edge, ...]
    vertex_set: frozenset[int]
    components: tuple[frozenset[int], ...]

    @property
    def span(self) -> int:
        return len(self.components)

    @property
    def rank(self) -> int:
        return len(self.vertex_set) - self.span

    @property
    def nullity(self) -> int:
        return len(self.edges) - self.rank


def identity_origin(n: int) -> tuple[frozenset[int], ...]:
    return tuple(frozenset((v,)) for v in range(n))


def with_identity_origin(g: HedgeGraph) -> HedgeGraph:
    """Re-root ``g`` so its own vertices count as the original ones."""
    return HedgeGraph(g.n, g.edges, g.labels, identity_origin(g.n))


def build_graph(n: int, edge_list: Sequence[tuple[int, int, str]]) -> HedgeGraph:
    """Build and validate a simple hedge graph from (u, v, label) triples.

    Labels are interned to dense ids in first-appearance order.  Input must
    be simple: no loops and no repeated unordered vertex pair (regardless of
    label).  Disconnected input is accepted.
    """
    if n < 1:
        raise GraphError("vertex count must be at least 1")
    if not edge_list and n >= 2:
        raise GraphError("empty edge list for a graph with 2 or more vertices")
    interned: dict[str, int] = {}
    names: list[str] = []
    edges: list[Edge] = []
    seen_pairs: set[tuple[int, int]] = set()
    for u, v, name in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise GraphError(f"loop at vertex {u} not allowed in input")
        pair = (u, v) if u < v else (v, u)
        if pair in seen_pairs:
            raise GraphError(f"duplicate edge between {pair[0]} and {pair[1]} in input")
        seen_pairs.add(pair)
        if not isinstance(name, str) or not _valid_label_name(name):
            raise GraphError(f"label {name!r} must be a nonempty whitespace-free string")
        if name not in interned:
            interned[name] = len(names)
            names.append(name)
        edges.append((u, v, interned[name]))
    return HedgeGraph(n, tuple(edges), tuple(names), identity_origin(n))


def _components_of(n: int, vertices: Iterable[int], pairs: Iterable[tuple[int, int]]) -> tuple[frozenset[int], ...]:
    """Connected components of the given vertex subset under the given edges."""
    dsu = DisjointSets(n)
    for u, v in pairs:
        dsu.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in vertices:
        groups.setdefault(dsu.find(v), []).append(v)
    comps = [frozenset(members) for members in groups.values()]
    comps.sort(key=min)
    return tuple(comps)


def hedge_view(g: HedgeGraph, label: LabelRef) -> HedgeView:
    """The hedge of ``label``: edge subsequence, vertex set, components."""
    lab = g.label_id(label)
    edges = tuple(e for e in g.edges if e[2] == lab)
    vertex_set = frozenset(x for u, v, _ in edges for x in (u, v))
    comps = _components_of(g.n, vertex_set, ((u, v) for u, v, _ in edges if u != v))
    return HedgeView(lab, g.labels[lab], edges, vertex_set, comps)


def graph_rank_nullity(g: HedgeGraph) -> tuple[int, int]:
    """(rank, nullity) of the whole graph, labels ignored.

    rank = n - span and nullity = m - rank, where span counts connected
    components over all n vertices (isolated ones included).
    """
    comps = _components_of(g.n, range(g.n), ((u, v) for u, v, _ in g.edges if u != v))
    rank = g.n - len(comps)
    return rank, g.m - rank


def _vertex_label_sets(g: HedgeGraph) -> list[set[int]]:
    sets: list[set[int]] = [set() for _ in range(g.n)]
    for u, v, lab in g.edges:
        sets[u].add(lab)
        sets[v].add(lab)  # a loop adds its label to one vertex, once
    return sets


def label_degree(g: HedgeGraph, v: int) -> int:
    """Number of distinct labels on edges incident to ``v`` (a loop counts once)."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    labels = set()
    for a, b, lab in g.edges:
        if a == v or b == v:
            labels.add(lab)
    return len(labels)


def degree_summary(g: HedgeGraph) -> tuple[int, int, int]:
    """(min, max, total) of the label degree over all vertices."""
    degs = [len(s) for s in _vertex_label_sets(g)]
    return min(degs), max(degs), sum(degs)


def hedge_degree_summary(g: HedgeGraph, label: LabelRef) -> tuple[int, int, int]:
    """(min, max, total) of full-graph label degrees over the hedge's vertices."""
    view = hedge_view(g, label)
    sets = _vertex_label_sets(g)
    degs = [len(sets[v]) for v in sorted(view.vertex_set)]
    return min(degs), max(degs), sum(degs)


def _drop_labels(edges: Sequence[Edge], labels: tuple[str, ...], dropped: set[int]) -> tuple[tuple[Edge, ...], tuple[str, ...]]:
    """Re-densify label ids after removing every edge of the dropped labels."""
    keep = [i for i in range(len(labels)) if i not in dropped]
    remap = {old: new for new, old in enumerate(keep)}
    new_edges = tuple((u, v, remap[lab]) for u, v, lab in edges)
    return new_edges, tuple(labels[i] for i in keep)


def remove_hedges(g: HedgeGraph, labels: Iterable[LabelRef]) -> HedgeGraph:
    """Delete every edge of the given hedges; vertices are retained."""
    drop = {g.label_id(lab) for lab in labels}
    if not drop:
        return g
    kept = [e for e in g.edges if e[2] not in drop]
    new_edges, new_labels = _drop_labels(kept, g.labels, drop)
    return HedgeGraph(g.n, new_edges, new_labels, g.origin_map)


def is_connected(g: HedgeGraph) -> bool:
    """True iff the graph has a single connected component (loops ignored)."""
    dsu = DisjointSets(g.n)
    parts = g.n
    for u, v, _ in g.edges:
        if u != v and dsu.union(u, v):
            parts -= 1
            if parts == 1:
                return True
    return parts == 1
