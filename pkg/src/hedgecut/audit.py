"""Executable adjudication of the structural claims about hedge graphs.

Each claim gets an identifier and an auditor that computes both sides of
the stated relation on a concrete instance, returning verdicts that
carry the full instance serialization and a digest, so any verdict can
be re-checked from scratch.  A seeded generator and counterexample
search adjudicate claims that are expected to fail; the set of claims
that provably hold on every connected instance is exported so callers
can treat their violation as an internal error rather than a finding.

Degree conventions are explicit: by default a loop contributes its
label to its vertex once, and hedge degree totals use degrees measured
in the whole graph.  Both alternative readings (loops ignored, degrees
induced by the hedge's vertex set) are available as keyword modes and
are recorded in verdict witnesses so re-checks replay them.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from enum import Enum
from heapq import heapify, heappop, heappush
from typing import Any, Sequence

from .adjacency import adjacency_graph, greedy_relabel
from .connectivity import brute_force_connectivity
from .contraction import contract_edge, contract_hedge, contraction_sequence
from .graph import GraphError, HedgeGraph, build_graph, graph_rank_nullity, hedge_view, is_connected
from .hgformat import ParseError, emit, parse
from .rng import Rng, mix


class TheoremId(str, Enum):
    T1_MIN_DEG_BOUND = "T1_MIN_DEG_BOUND"
    T2_RELABEL_GE_MAXDEG = "T2_RELABEL_GE_MAXDEG"
    T3_DA_LE_TOTAL = "T3_DA_LE_TOTAL"
    T4_MAXDA_GE_MAXDEG = "T4_MAXDA_GE_MAXDEG"
    T5_RELABEL_GE_MAXDA = "T5_RELABEL_GE_MAXDA"
    VIZING_BAND = "VIZING_BAND"
    COROLLARY_CHAIN = "COROLLARY_CHAIN"
    RANKSUM_STATIC = "RANKSUM_STATIC"
    RANKSUM_SEQ = "RANKSUM_SEQ"
    NULLSUM_STATIC = "NULLSUM_STATIC"
    NULLSUM_SEQ = "NULLSUM_SEQ"
    VD_EQUALITY = "VD_EQUALITY"
    SPANSUM_UPPER = "SPANSUM_UPPER"
    SPANSUM_BAND = "SPANSUM_BAND"
    CONTRACTV_BAND = "CONTRACTV_BAND"
    CONTRACT_MIN = "CONTRACT_MIN"
    CONTRACT_H = "CONTRACT_H"
    CONTRACT_SUM = "CONTRACT_SUM"
    CONTRACT_ADJ = "CONTRACT_ADJ"


# Claims that hold on every connected instance under the default degree
# conventions; a violation of one of these means the implementation is
# broken, not that a claim was refuted.
UNIVERSAL_IDS = frozenset({
    TheoremId.T1_MIN_DEG_BOUND,
    TheoremId.T2_RELABEL_GE_MAXDEG,
    TheoremId.T3_DA_LE_TOTAL,
    TheoremId.VD_EQUALITY,
    TheoremId.SPANSUM_UPPER,
    TheoremId.RANKSUM_SEQ,
    TheoremId.NULLSUM_SEQ,
    TheoremId.CONTRACT_MIN,
    TheoremId.CONTRACT_SUM,
})


@dataclass(frozen=True, slots=True)
class AuditVerdict:
    """One adjudicated claim on one instance, re-checkable from its text."""

    theorem: TheoremId
    instance_text: str
    digest: str
    holds: bool
    lhs: Any
    rhs: Any
    witness: dict[str, Any] | None


@dataclass(frozen=True, slots=True)
class GeneratorParams:
    """Ranges (inclusive) for the seeded random instance generator."""

    n_range: tuple[int, int] = (2, 8)
    extra_range: tuple[int, int] = (0, 3)
    label_range: tuple[int, int] = (1, 5)
    seed: int = 0


@dataclass(frozen=True, slots=True)
class SearchResult:
    found: AuditVerdict | None
    trials_run: int
    verdicts_checked: int


def instance_digest(text: str) -> str:
    return hashlib.sha256(text.encode("ascii")).hexdigest()


def _incident_labels(g: HedgeGraph, count_loops: bool,
                     within: frozenset[int] | None = None) -> list[set[int]]:
    """Incident label sets per vertex under the selected degree convention."""
    sets: list[set[int]] = [set() for _ in range(g.n)]
    for u, v, lab in g.edges:
        if u == v and not count_loops:
            continue
        if within is not None and (u not in within or v not in within):
            continue
        sets[u].add(lab)
        sets[v].add(lab)
    return sets


def _chromatic_number(neighbors: Sequence[frozenset[int]]) -> int:
    """Exact chromatic number by backtracking; intended for tiny graphs."""
    count = len(neighbors)
    if count == 0:
        return 0
    order = sorted(range(count), key=lambda v: (-len(neighbors[v]), v))
    for q in range(1, count + 1):
        colors: dict[int, int] = {}

        def assign(idx: int) -> bool:
            if idx == count:
                return True
            v = order[idx]
            taken = {colors[u] for u in neighbors[v] if u in colors}
            # trying more than one brand-new color only permutes names
            ceiling = min(q, max(colors.values(), default=-1) + 2)
            for c in range(ceiling):
                if c not in taken:
                    colors[v] = c
                    if assign(idx + 1):
                        return True
                    del colors[v]
            return False

        if assign(0):
            return q
    return count


def _sample_orders(g: HedgeGraph, digest: str, count: int = 5) -> list[list[str]]:
    """Deterministic sample of label permutations, seeded by the instance."""
    rng = Rng(int(digest[:16], 16))
    orders: list[list[str]] = []
    for _ in range(count):
        names = list(g.labels)
        rng.shuffle(names)
        if names not in orders:
            orders.append(names)
    return orders


def audit_theorem(theorem: TheoremId, g: HedgeGraph, *, count_loops: bool = True,
                  induced_degrees: bool = False) -> list[AuditVerdict]:
    """Adjudicate one claim on one connected instance.

    Per-hedge, per-edge, per-pair and per-order claims yield one verdict
    each, in ascending id / index / sample order.  Non-default degree
    modes are recorded in every witness so verification can replay them.
    """
    if g.n < 2 or not is_connected(g):
        raise GraphError("audit requires a connected instance with at least 2 vertices")
    theorem = TheoremId(theorem)
    text = emit(g)
    digest = instance_digest(text)
    modes: dict[str, Any] = {}
    if not count_loops:
        modes["count_loops"] = False
    if induced_degrees:
        modes["induced_degrees"] = True

    def verdict(holds: bool, lhs: Any, rhs: Any, extra: dict[str, Any] | None = None) -> AuditVerdict:
        witness = dict(modes)
        if extra:
            witness.update(extra)
        return AuditVerdict(theorem, text, digest, holds, lhs, rhs, witness or None)

    def degrees_of(h: HedgeGraph, within: frozenset[int] | None = None) -> list[int]:
        return [len(s) for s in _incident_labels(h, count_loops, within)]

    degrees = degrees_of(g)
    delta, big_delta = min(degrees), max(degrees)
    views = [hedge_view(g, lab) for lab in range(g.num_labels)]
    adj = adjacency_graph(g)
    max_da = max((adj.degree(i) for i in range(g.num_labels)), default=0)

    def q_used() -> tuple[int, int, int | None]:
        greedy_q = greedy_relabel(g).num_colors
        optimal_q = _chromatic_number(adj.neighbors) if g.num_labels <= 8 else None
        return (optimal_q if optimal_q is not None else greedy_q), greedy_q, optimal_q

    def lambda_h() -> int:
        return brute_force_connectivity(g, cap=g.num_labels).size

    if theorem is TheoremId.T1_MIN_DEG_BOUND:
        lam = lambda_h()
        return [verdict(lam <= delta, lam, delta)]

    if theorem is TheoremId.T2_RELABEL_GE_MAXDEG:
        q, greedy_q, optimal_q = q_used()
        return [verdict(q >= big_delta, q, big_delta,
                        {"greedy_q": greedy_q, "optimal_q": optimal_q})]

    if theorem is TheoremId.T3_DA_LE_TOTAL:
        out = []
        for i, view in enumerate(views):
            inner = degrees_of(g, view.vertex_set) if induced_degrees else degrees
            total = sum(inner[v] for v in view.vertex_set)
            out.append(verdict(adj.degree(i) <= total, adj.degree(i), total,
                               {"hedge": g.labels[i]}))
        return out

    if theorem is TheoremId.T4_MAXDA_GE_MAXDEG:
        return [verdict(max_da >= big_delta, max_da, big_delta)]

    if theorem is TheoremId.T5_RELABEL_GE_MAXDA:
        q, greedy_q, optimal_q = q_used()
        return [verdict(q >= max_da, q, max_da,
                        {"greedy_q": greedy_q, "optimal_q": optimal_q})]

    if theorem is TheoremId.VIZING_BAND:
        q, greedy_q, optimal_q = q_used()
        return [verdict(max_da <= q <= max_da + 1, q, [max_da, max_da + 1],
                        {"greedy_q": greedy_q, "optimal_q": optimal_q})]

    if theorem is TheoremId.COROLLARY_CHAIN:
        q, greedy_q, optimal_q = q_used()
        chain = [lambda_h(), delta, big_delta, max_da, q]
        holds = all(a <= b for a, b in zip(chain, chain[1:]))
        return [verdict(holds, chain, None,
                        {"greedy_q": greedy_q, "optimal_q": optimal_q})]

    if theorem in (TheoremId.RANKSUM_STATIC, TheoremId.NULLSUM_STATIC):
        rank, nullity = graph_rank_nullity(g)
        if theorem is TheoremId.RANKSUM_STATIC:
            lhs, rhs = rank, sum(v.rank for v in views)
        else:
            lhs, rhs = nullity, sum(v.nullity for v in views)
        return [verdict(lhs == rhs, lhs, rhs)]

    if theorem in (TheoremId.RANKSUM_SEQ, TheoremId.NULLSUM_SEQ):
        rank, nullity = graph_rank_nullity(g)
        out = []
        for order in _sample_orders(g, digest):
            trace = contraction_sequence(g, order, apply_cleanup=False)
            if theorem is TheoremId.RANKSUM_SEQ:
                lhs, rhs = rank, trace.total_rank_consumed
            else:
                lhs, rhs = nullity, trace.total_nullity_consumed
            out.append(verdict(lhs == rhs, lhs, rhs, {"order": order}))
        return out

    if theorem is TheoremId.VD_EQUALITY:
        lhs = sum(len(v.vertex_set) for v in views)
        rhs = sum(degrees)
        return [verdict(lhs == rhs, lhs, rhs)]

    if theorem is TheoremId.SPANSUM_UPPER:
        lhs = sum(v.span for v in views)
        rhs = 2 * g.m - g.n + 1
        return [verdict(lhs <= rhs, lhs, rhs)]

    if theorem is TheoremId.SPANSUM_BAND:
        lhs = sum(v.span for v in views)
        band = [g.n * delta - g.n + 1, g.n * big_delta - g.n + 1]
        return [verdict(band[0] <= lhs <= band[1], lhs, band)]

    if theorem is TheoremId.CONTRACTV_BAND:
        out = []
        for idx, (u, v, _) in enumerate(g.edges):
            if u == v:
                continue
            contracted, w = contract_edge(g, idx)
            dw = degrees_of(contracted)[w]
            band = [max(degrees[u], degrees[v]) - 1, degrees[u] + degrees[v] - 2]
            out.append(verdict(band[0] <= dw <= band[1], dw, band, {"edge": idx}))
        return out

    if theorem is TheoremId.CONTRACT_MIN:
        out = []
        for i in range(g.num_labels):
            after = degrees_of(contract_hedge(g, i))
            lhs = min(after)
            out.append(verdict(lhs >= delta - 1, lhs, delta - 1, {"hedge": g.labels[i]}))
        return out

    if theorem is TheoremId.CONTRACT_H:
        out = []
        for i, view in enumerate(views):
            lhs = sum(degrees_of(contract_hedge(g, i)))
            rhs = sum(degrees) - 2 * view.rank
            out.append(verdict(lhs <= rhs, lhs, rhs, {"hedge": g.labels[i]}))
        return out

    if theorem is TheoremId.CONTRACT_SUM:
        out = []
        for i, view in enumerate(views):
            inner = degrees_of(g, view.vertex_set) if induced_degrees else degrees
            hedge_total = sum(inner[v] for v in view.vertex_set)
            after_total = sum(degrees_of(contract_hedge(g, i)))
            lhs = sum(degrees)
            rhs = after_total + hedge_total - view.span * (delta - 1)
            out.append(verdict(lhs <= rhs, lhs, rhs, {"hedge": g.labels[i]}))
        return out

    if theorem is TheoremId.CONTRACT_ADJ:
        q = greedy_relabel(g).num_colors
        out = []
        for i in range(g.num_labels):
            contracted = contract_hedge(g, i)
            adj_after = adjacency_graph(contracted)
            for j in range(g.num_labels):
                if j == i:
                    continue
                actual = adj_after.degree(contracted.label_id(g.labels[j]))
                if j in adj.neighbors[i]:
                    predicted = adj.degree(j) + adj.degree(i) - q + 1
                else:
                    predicted = adj.degree(j)
                out.append(verdict(actual == predicted, actual, predicted,
                                   {"contracted": g.labels[i], "hedge": g.labels[j], "q": q}))
        return out

    raise GraphError(f"unhandled theorem id {theorem!r}")


def _json(value: Any) -> str:
    return json.dumps(value, separators=(",", ":"), sort_keys=True)


def format_verdict(v: AuditVerdict) -> str:
    """Frozen line-oriented record: one header line plus the instance block."""
    header = (f"verdict theorem={v.theorem.value} holds={'true' if v.holds else 'false'} "
              f"lhs={_json(v.lhs)} rhs={_json(v.rhs)} witness={_json(v.witness)} "
              f"digest={v.digest}")
    return f"{header}\ninstance-begin\n{v.instance_text}instance-end\n"


def parse_verdict(text: str) -> AuditVerdict:
    """Inverse of format_verdict; raises ParseError on malformed records."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("verdict "):
        raise ParseError(1, "expected a 'verdict ...' header line")
    fields: dict[str, str] = {}
    for token in lines[0].split()[1:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise ParseError(1, f"malformed field {token!r}")
        fields[key] = value
    missing = {"theorem", "holds", "lhs", "rhs", "witness", "digest"} - set(fields)
    if missing:
        raise ParseError(1, f"missing fields: {', '.join(sorted(missing))}")
    try:
        theorem = TheoremId(fields["theorem"])
    except ValueError:
        raise ParseError(1, f"unknown theorem id {fields['theorem']!r}") from None
    if fields["holds"] not in ("true", "false"):
        raise ParseError(1, "holds must be true or false")
    try:
        lhs = json.loads(fields["lhs"])
        rhs = json.loads(fields["rhs"])
        witness = json.loads(fields["witness"])
    except json.JSONDecodeError:
        raise ParseError(1, "lhs/rhs/witness must be valid JSON") from None
    if len(lines) < 2 or lines[1] != "instance-begin":
        raise ParseError(2, "expected 'instance-begin'")
    try:
        end = lines.index("instance-end", 2)
    except ValueError:
        raise ParseError(len(lines), "missing 'instance-end'") from None
    instance_text = "\n".join(lines[2:end]) + "\n"
    return AuditVerdict(theorem, instance_text, fields["digest"], fields["holds"] == "true",
                        lhs, rhs, witness)


def verify_certificate(v: AuditVerdict) -> bool:
    """Recompute a verdict from its serialized instance and confirm it.

    Returns False when the digest does not match the instance text or
    when no freshly computed verdict agrees on (holds, lhs, rhs,
    witness).  Malformed instance text raises ParseError.
    """
    if instance_digest(v.instance_text) != v.digest:
        return False
    g = parse(v.instance_text)
    witness = v.witness if isinstance(v.witness, dict) else {}
    modes = {}
    if witness.get("count_loops") is False:
        modes["count_loops"] = False
    if witness.get("induced_degrees") is True:
        modes["induced_degrees"] = True
    try:
        fresh = audit_theorem(v.theorem, g, **modes)
    except GraphError:
        return False
    return any(f.holds == v.holds and f.lhs == v.lhs and f.rhs == v.rhs
               and f.witness == v.witness for f in fresh)


def _prufer_tree(n: int, seq: Sequence[int]) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence into tree edges (endpoints ordered)."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges: list[tuple[int, int]] = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    u = heappop(leaves)
    v = heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def _repair_labels(labels: list[int], num_labels: int) -> None:
    """Reassign surplus edges of frequent labels so every label occurs."""
    counts = [0] * num_labels
    for lab in labels:
        counts[lab] += 1
    for missing in [lab for lab in range(num_labels) if counts[lab] == 0]:
        top = max(counts)
        donor = counts.index(top)  # most frequent, ties to the smallest id
        for idx in range(len(labels) - 1, -1, -1):
            if labels[idx] == donor:
                labels[idx] = missing
                break
        counts[donor] -= 1
        counts[missing] += 1


def _random_instance(rng: Rng, params: GeneratorParams) -> HedgeGraph:
    n_lo, n_hi = params.n_range
    extra_lo, extra_hi = params.extra_range
    lab_lo, lab_hi = params.label_range
    if not (2 <= n_lo <= n_hi):
        raise GraphError("vertex count range must satisfy 2 <= lo <= hi")
    if not (0 <= extra_lo <= extra_hi):
        raise GraphError("extra edge range must satisfy 0 <= lo <= hi")
    if not (1 <= lab_lo <= lab_hi):
        raise GraphError("label count range must satisfy 1 <= lo <= hi")
    n = n_lo + rng.below(n_hi - n_lo + 1)
    extra = extra_lo + rng.below(extra_hi - extra_lo + 1)
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    m = n - 1 + extra
    if lab_lo > m:
        raise GraphError(f"infeasible params: {lab_lo} labels need at least {lab_lo} edges, have {m}")
    num_labels = lab_lo + rng.below(min(lab_hi, m) - lab_lo + 1)

    seq = [rng.below(n) for _ in range(n - 2)]
    pairs = _prufer_tree(n, seq)
    in_tree = set(pairs)
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in in_tree]
    for k in range(extra):
        j = k + rng.below(len(candidates) - k)
        candidates[k], candidates[j] = candidates[j], candidates[k]
        pairs.append(candidates[k])

    labels = [rng.below(num_labels) for _ in pairs]
    _repair_labels(labels, num_labels)
    return build_graph(n, [(u, v, f"l{lab}") for (u, v), lab in zip(pairs, labels)])


def random_instance(params: GeneratorParams) -> HedgeGraph:
    """Seeded random connected simple instance with every label in use.

    A uniform labeled tree (random Prüfer sequence) plus distinct extra
    non-tree edges; labels drawn uniformly then repaired so each occurs.
    Deterministic given params.
    """
    return _random_instance(Rng(params.seed), params)


def search_counterexample(theorem: TheoremId, params: GeneratorParams,
                          trials: int, *, count_loops: bool = True,
                          induced_degrees: bool = False) -> SearchResult:
    """Scan seeded random instances for a violation of one claim.

    Trials are scheduled smallest vertex count first (equal blocks per
    size); trial t generates its instance from mix(params.seed, t), so
    the verdict stream is reproducible.  Stops at the first violation.
    """
    if trials < 1:
        raise GraphError("at least one trial is required")
    n_lo, n_hi = params.n_range
    sizes = list(range(n_lo, n_hi + 1))
    per_size = -(-trials // len(sizes))
    checked = 0
    for t in range(trials):
        n = sizes[min(t // per_size, len(sizes) - 1)]
        g = _random_instance(Rng(mix(params.seed, t)), replace(params, n_range=(n, n)))
        for v in audit_theorem(theorem, g, count_loops=count_loops,
                               induced_degrees=induced_degrees):
            checked += 1
            if not v.holds:
                return SearchResult(v, t + 1, checked)
    return SearchResult(None, trials, checked)
