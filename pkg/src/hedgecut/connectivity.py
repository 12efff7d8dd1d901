"""Global hedge connectivity: exact search, fast paths, Monte Carlo.

The connectivity of a connected hedge graph is the minimum number of
hedges whose joint removal disconnects it.  Exact answers come from
subset enumeration (sound because the hedges incident to a minimum
label-degree vertex always form a cut, capping the search depth) or,
when every label has exactly one edge, from a deterministic global
min-cut.  Larger label sets fall back to seeded randomized hedge
contraction, which yields an upper bound with a valid certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .contraction import contract_hedge
from .graph import (
    GraphError,
    HedgeGraph,
    _components_of,
    _vertex_label_sets,
    hedge_view,
    is_connected,
    remove_hedges,
    with_identity_origin,
)
from .rng import Rng, mix


@dataclass(frozen=True, slots=True)
class CutCertificate:
    """A disconnection witness: remove ``labels`` and no edge joins the sides.

    ``side_a`` and ``side_b`` partition the vertex set (side_a holds
    vertex 0); either side may itself be disconnected.  ``exact`` marks
    results proven minimum, not just valid.
    """

    labels: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]
    method: str  # one of "brute", "randomized", "fastpath"
    exact: bool

    @property
    def size(self) -> int:
        return len(self.labels)


def validate_certificate(g: HedgeGraph, cert: CutCertificate) -> bool:
    """Re-check a certificate against the graph it claims to cut."""
    if not cert.side_a or not cert.side_b or (cert.side_a & cert.side_b):
        return False
    if cert.side_a | cert.side_b != frozenset(range(g.n)):
        return False
    if not all(0 <= lab < g.num_labels for lab in cert.labels):
        return False
    h = remove_hedges(g, cert.labels)
    if is_connected(h):
        return False
    return not any((u in cert.side_a) != (v in cert.side_a) for u, v, _ in h.edges)


def _bipartition_after_removal(g: HedgeGraph, labels: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Split the leftover components into (component of vertex 0, the rest)."""
    h = remove_hedges(g, labels)
    comps = _components_of(h.n, range(h.n), ((u, v) for u, v, _ in h.edges if u != v))
    return comps[0], frozenset().union(*comps[1:])


def _disconnected_certificate(g: HedgeGraph, method: str) -> CutCertificate:
    side_a, side_b = _bipartition_after_removal(g, frozenset())
    return CutCertificate(frozenset(), side_a, side_b, method, True)


def min_label_degree_bound(g: HedgeGraph) -> int:
    """Minimum label degree; always an upper bound on the connectivity."""
    if g.n < 2:
        raise GraphError("connectivity is undefined for a single vertex")
    if not is_connected(g):
        raise GraphError("degree bound requires a connected graph")
    return min(len(s) for s in _vertex_label_sets(g))


def _degree_bound_certificate(g: HedgeGraph) -> CutCertificate:
    # removing every label at a minimum-degree vertex isolates it
    degrees = [len(s) for s in _vertex_label_sets(g)]
    v = degrees.index(min(degrees))
    labels = frozenset(_vertex_label_sets(g)[v])
    side_a, side_b = _bipartition_after_removal(g, labels)
    return CutCertificate(labels, side_a, side_b, "fastpath", False)


def brute_force_connectivity(g: HedgeGraph, cap: int = 20) -> CutCertificate:
    """Exact connectivity by subset enumeration, smallest label sets first.

    Within one cardinality, subsets are tried in lexicographic order of
    their sorted label ids, so the reported minimum cut is the
    lexicographically least one.  Enumeration never needs subsets larger
    than the minimum label degree.
    """
    if g.n < 2:
        raise GraphError("connectivity is undefined for a single vertex")
    if not is_connected(g):
        return _disconnected_certificate(g, "brute")
    if g.num_labels > cap:
        raise GraphError(f"label count {g.num_labels} exceeds the enumeration cap {cap}")
    bound = min_label_degree_bound(g)
    for k in range(1, bound + 1):
        for combo in itertools.combinations(range(g.num_labels), k):
            labels = frozenset(combo)
            if not is_connected(remove_hedges(g, labels)):
                side_a, side_b = _bipartition_after_removal(g, labels)
                return CutCertificate(labels, side_a, side_b, "brute", True)
    raise AssertionError("no cut found within the degree bound")


def ordinary_edge_min_cut(g: HedgeGraph) -> CutCertificate:
    """Global min cut when every label has exactly one edge.

    With singleton hedges the problem is plain edge connectivity, solved
    by the deterministic minimum-cut-phase scheme (merge the last two
    vertices of a maximum-adjacency sweep, keep the best phase cut).
    Ties in the sweep go to the smallest vertex id.
    """
    if g.n < 2:
        raise GraphError("connectivity is undefined for a single vertex")
    if g.num_labels != g.m:
        raise GraphError("requires every label to appear on exactly one edge")
    if not is_connected(g):
        return _disconnected_certificate(g, "fastpath")

    weight = [[0] * g.n for _ in range(g.n)]
    for u, v, _ in g.edges:
        if u != v:
            weight[u][v] += 1
            weight[v][u] += 1
    active = list(range(g.n))
    merged: list[set[int]] = [{v} for v in range(g.n)]
    best_value: int | None = None
    best_side: frozenset[int] = frozenset()
    while len(active) > 1:
        start = active[0]
        w = {v: weight[start][v] for v in active if v != start}
        order = [start]
        while w:
            top = max(w.values())
            nxt = min(v for v, wt in w.items() if wt == top)
            order.append(nxt)
            del w[nxt]
            for v in w:
                w[v] += weight[nxt][v]
        s, t = order[-2], order[-1]
        phase_value = sum(weight[t][v] for v in active if v != t)
        if best_value is None or phase_value < best_value:
            best_value = phase_value
            best_side = frozenset(merged[t])
        # merge t into s
        merged[s] |= merged[t]
        active.remove(t)
        for v in active:
            weight[s][v] += weight[t][v]
            weight[v][s] += weight[v][t]
    side = best_side if 0 in best_side else frozenset(range(g.n)) - best_side
    labels = frozenset(lab for u, v, lab in g.edges if (u in side) != (v in side))
    return CutCertificate(labels, side, frozenset(range(g.n)) - side, "fastpath", True)


def randomized_contraction_cut(g: HedgeGraph, seed: int) -> CutCertificate:
    """One seeded contraction trial; returns a valid but unproven cut.

    Repeatedly contracts a uniformly random safe hedge (one leaving at
    least 2 vertices) until two vertices remain or every surviving hedge
    would collapse the graph to a point.  The labels still crossing the
    final vertex groups form the candidate cut.
    """
    if g.n < 2:
        raise GraphError("connectivity is undefined for a single vertex")
    if not is_connected(g):
        raise GraphError("contraction trials require a connected graph")
    rng = Rng(seed)
    current = with_identity_origin(g)
    while current.n > 2:
        safe = [lab for lab in range(current.num_labels)
                if current.n - hedge_view(current, lab).rank >= 2]
        if not safe:
            break
        current = contract_hedge(current, safe[rng.below(len(safe))])
    crossing = sorted({lab for u, v, lab in current.edges if u != v})
    labels = frozenset(g.label_id(current.labels[lab]) for lab in crossing)
    side_a = current.origin_map[0]
    side_b = frozenset().union(*current.origin_map[1:])
    return CutCertificate(labels, side_a, side_b, "randomized", False)


def default_trial_count(num_labels: int) -> int:
    """Trial budget |L|^2 * (floor(log2 |L|) + 1)."""
    return num_labels * num_labels * (num_labels.bit_length())


def randomized_connectivity(g: HedgeGraph, trials: int | None = None,
                            base_seed: int = 0) -> CutCertificate:
    """Best certificate over independent seeded contraction trials.

    Trial t draws its seed from the documented mixer as mix(base_seed, t),
    so the result depends only on (trials, base_seed).  Ties keep the
    earliest trial.  With zero trials the minimum-degree-vertex cut is
    returned as a fallback.
    """
    if g.n < 2:
        raise GraphError("connectivity is undefined for a single vertex")
    if not is_connected(g):
        raise GraphError("contraction trials require a connected graph")
    if trials is None:
        trials = default_trial_count(g.num_labels)
    if trials < 0:
        raise GraphError("trial count must be nonnegative")
    best: CutCertificate | None = None
    for t in range(trials):
        cert = randomized_contraction_cut(g, mix(base_seed, t))
        if best is None or cert.size < best.size:
            best = cert
            if best.size == 1:
                break  # connected graphs need at least one hedge removed
    if best is None:
        return _degree_bound_certificate(g)
    return best


def hedge_connectivity(g: HedgeGraph, method: str = "auto", cap: int = 20,
                       trials: int | None = None, base_seed: int = 0) -> CutCertificate:
    """Connectivity certificate via the cheapest applicable strategy.

    Auto dispatch: disconnected graphs are 0-connected; a single label or
    a vertex of label degree 1 forces connectivity exactly 1; singleton
    hedges go to the deterministic min cut; at most ``cap`` labels go to
    brute force; anything else gets randomized trials (not exact).
    """
    if g.n < 2:
        raise GraphError("connectivity is undefined for a single vertex")
    if method == "brute":
        return brute_force_connectivity(g, cap)
    if method == "random":
        if not is_connected(g):
            return _disconnected_certificate(g, "fastpath")
        return randomized_connectivity(g, trials, base_seed)
    if method != "auto":
        raise GraphError(f"unknown method {method!r}")
    if not is_connected(g):
        return _disconnected_certificate(g, "fastpath")
    if g.num_labels == 1:
        side_a, side_b = _bipartition_after_removal(g, frozenset({0}))
        return CutCertificate(frozenset({0}), side_a, side_b, "fastpath", True)
    degrees = [len(s) for s in _vertex_label_sets(g)]
    if min(degrees) == 1:
        # all edges at such a vertex carry one label; removing it isolates the vertex
        v = degrees.index(1)
        labels = frozenset(_vertex_label_sets(g)[v])
        side_a, side_b = _bipartition_after_removal(g, labels)
        return CutCertificate(labels, side_a, side_b, "fastpath", True)
    if g.num_labels == g.m:
        return ordinary_edge_min_cut(g)
    if g.num_labels <= cap:
        return brute_force_connectivity(g, cap)
    return randomized_connectivity(g, trials, base_seed)
