"""End-to-end acceptance checks; each prints one pass/fail line."""

import itertools
import os
import subprocess
import sys
import time

import pytest

from conftest import FIXTURES, fixture_text
from hedgecut import (
    GeneratorParams,
    Rng,
    TheoremId,
    audit_theorem,
    brute_force_connectivity,
    build_graph,
    contract_hedge,
    degree_summary,
    emit,
    greedy_relabel,
    hedge_connectivity,
    hedge_view,
    is_connected,
    max_adjacency_degree,
    min_label_degree_bound,
    mix,
    parse,
    random_instance,
    randomized_connectivity,
    remove_hedges,
    validate_certificate,
    verify_certificate,
)

FIXTURE_FILES = ("c4alt.hg", "p3.hg", "pendants.hg", "spider.hg", "triangle3.hg", "twoi.hg")


def _report(capfd, num, name, ok, detail=""):
    with capfd.disabled():
        print(f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'}", flush=True)
    assert ok, f"criterion {num} ({name}) failed" + (f": {detail}" if detail else "")


def _suite(count, n_hi, extra_hi, label_hi, tag):
    return [random_instance(GeneratorParams((2, n_hi), (0, extra_hi), (1, label_hi),
                                            seed=mix(tag, s)))
            for s in range(count)]


@pytest.fixture(scope="module")
def small_suite():
    return _suite(1000, 7, 3, 5, tag=101)


@pytest.fixture(scope="module")
def big_suite():
    return _suite(10000, 10, 4, 8, tag=202)


@pytest.fixture(scope="module")
def oracle_results(small_suite):
    """Exact certificates plus independent minimality re-checks, timed."""
    start = time.perf_counter()
    results = []
    for g in small_suite:
        cert = brute_force_connectivity(g)
        valid = cert.exact and validate_certificate(g, cert)
        minimal = all(is_connected(remove_hedges(g, frozenset(combo)))
                      for k in range(1, cert.size)
                      for combo in itertools.combinations(range(g.num_labels), k))
        results.append((g, cert, valid, minimal))
    elapsed = time.perf_counter() - start
    return results, elapsed


def test_criterion_1_oracle_soundness(oracle_results, capfd):
    results, elapsed = oracle_results
    bad = [i for i, (_, _, valid, minimal) in enumerate(results) if not (valid and minimal)]
    ok = not bad and elapsed < 30.0
    _report(capfd, 1, "oracle soundness", ok,
            f"bad instances {bad[:5]}, elapsed {elapsed:.1f}s")


def test_criterion_2_min_degree_bound(oracle_results, capfd):
    results, _ = oracle_results
    bad = [i for i, (g, cert, _, _) in enumerate(results)
           if cert.size > min_label_degree_bound(g)]
    _report(capfd, 2, "connectivity bounded by min label degree", not bad,
            f"violations at {bad[:5]}")


def test_criterion_3_strictness_witness(capfd):
    g = parse(fixture_text("c4alt.hg"))
    lam = brute_force_connectivity(g).size
    bound = min_label_degree_bound(g)
    _report(capfd, 3, "alternating cycle shows a strict gap",
            lam == 1 and bound == 2 and lam < bound, f"lambda={lam} bound={bound}")


def test_criterion_4_identity_invariants_at_scale(big_suite, capfd):
    identities = (TheoremId.VD_EQUALITY, TheoremId.T3_DA_LE_TOTAL, TheoremId.SPANSUM_UPPER,
                  TheoremId.RANKSUM_SEQ, TheoremId.NULLSUM_SEQ, TheoremId.CONTRACT_MIN)
    start = time.perf_counter()
    violations = []
    for idx, g in enumerate(big_suite):
        for theorem in identities:
            for v in audit_theorem(theorem, g):
                if not v.holds:
                    violations.append((idx, theorem.value))
        q = greedy_relabel(g).num_colors
        if not (degree_summary(g)[1] <= q <= max_adjacency_degree(g) + 1):
            violations.append((idx, "relabel bounds"))
    elapsed = time.perf_counter() - start
    ok = not violations and elapsed < 300.0
    _report(capfd, 4, "identity invariants over 10000 instances", ok,
            f"violations {violations[:5]}, elapsed {elapsed:.1f}s")


def test_criterion_5_refutation_regressions(capfd):
    expected = (
        ("c4alt.hg", TheoremId.RANKSUM_STATIC),
        ("c4alt.hg", TheoremId.NULLSUM_STATIC),
        ("p3.hg", TheoremId.T4_MAXDA_GE_MAXDEG),
        ("spider.hg", TheoremId.T5_RELABEL_GE_MAXDA),
        ("spider.hg", TheoremId.VIZING_BAND),
        ("triangle3.hg", TheoremId.SPANSUM_BAND),
        ("c4alt.hg", TheoremId.CONTRACT_ADJ),
        ("twoi.hg", TheoremId.CONTRACTV_BAND),
        ("pendants.hg", TheoremId.CONTRACT_H),
    )
    problems = []
    for filename, theorem in expected:
        g = parse(fixture_text(filename))
        verdicts = audit_theorem(theorem, g)
        if not any(not v.holds for v in verdicts):
            problems.append((filename, theorem.value, "not refuted"))
        if not all(verify_certificate(v) for v in verdicts):
            problems.append((filename, theorem.value, "verification failed"))

    # the spider refutation rests on an exhaustive optimal coloring
    spider = parse(fixture_text("spider.hg"))
    t5 = audit_theorem(TheoremId.T5_RELABEL_GE_MAXDA, spider)[0]
    if not (t5.witness["optimal_q"] == 2 and t5.rhs == 3):
        problems.append(("spider.hg", "T5", "unexpected coloring numbers"))

    # the two-i-edge instance beats the additive band's upper end
    twoi = parse(fixture_text("twoi.hg"))
    band = audit_theorem(TheoremId.CONTRACTV_BAND, twoi)
    if not any(not v.holds and v.lhs > v.rhs[1] for v in band):
        problems.append(("twoi.hg", "CONTRACTV_BAND", "upper end not exceeded"))

    _report(capfd, 5, "shipped instances refute the false claims", not problems, str(problems))


def test_criterion_6_randomized_matches_exact(oracle_results, capfd):
    results, _ = oracle_results
    below, agree = [], 0
    first_pass = []
    for idx, (g, cert, _, _) in enumerate(results):
        rc = randomized_connectivity(g, trials=None, base_seed=42)
        if idx < 50:
            first_pass.append(rc)
        if rc.size < cert.size:
            below.append(idx)
        elif rc.size == cert.size:
            agree += 1
    repeat = [randomized_connectivity(g, trials=None, base_seed=42)
              for g, _, _, _ in results[:50]]
    rate = agree / len(results)
    ok = not below and rate >= 0.99 and repeat == first_pass
    _report(capfd, 6, "randomized trials agree with exact search", ok,
            f"below={below[:5]} agreement={rate:.4f} repeatable={repeat == first_pass}")


def _cycle_with_chords(k):
    rng = Rng(mix(303, k))
    n = 4 + rng.below(5)
    pairs = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in set(pairs)]
    for c in range(rng.below(3)):
        j = c + rng.below(len(candidates) - c)
        candidates[c], candidates[j] = candidates[j], candidates[c]
        pairs.append(candidates[c])
    return build_graph(n, [(u, v, f"e{i}") for i, (u, v) in enumerate(pairs)])


def _with_pendant(k):
    base = random_instance(GeneratorParams((2, 6), (0, 2), (1, 4), seed=mix(404, k)))
    edges = [(u, v, base.labels[lab]) for u, v, lab in base.edges]
    edges.append((k % base.n, base.n, "pend"))
    return build_graph(base.n + 1, edges)


def test_criterion_7_fast_path_consistency(capfd):
    problems = []
    for k in range(200):
        g = _cycle_with_chords(k)
        assert g.num_labels == g.m and min_label_degree_bound(g) >= 2
        cert = hedge_connectivity(g)
        if not (cert.method == "fastpath" and cert.exact
                and cert.size == brute_force_connectivity(g).size
                and validate_certificate(g, cert)):
            problems.append(("cycle", k))
    for k in range(200):
        g = _with_pendant(k)
        cert = hedge_connectivity(g)
        if not (cert.method == "fastpath" and cert.exact and cert.size == 1
                and brute_force_connectivity(g).size == 1
                and validate_certificate(g, cert)):
            problems.append(("pendant", k))
    _report(capfd, 7, "fast paths agree with enumeration", not problems, str(problems[:5]))


def test_criterion_8_contraction_accounting(big_suite, capfd):
    problems = []
    for idx, g in enumerate(big_suite):
        for lab in range(g.num_labels):
            view = hedge_view(g, lab)
            result = contract_hedge(g, lab)
            if result.n != g.n - view.rank or result.m != g.m - len(view.edges):
                problems.append((idx, lab, "counts"))
            elif g.labels[lab] in result.labels:
                problems.append((idx, lab, "label survived"))
    _report(capfd, 8, "contraction consumes exactly rank and hedge size", not problems,
            str(problems[:5]))


def _run_cli(*args):
    env = {k: v for k, v in os.environ.items() if k != "HEDGECUT_SEED"}
    return subprocess.run([sys.executable, "-m", "hedgecut", *args],
                          capture_output=True, text=True, env=env)


def test_criterion_9_cli_determinism(capfd):
    problems = []
    invocations = [("generate", "--seed", "17"),
                   ("generate", "--params", "n=3..6,extra=0..2,L=1..3", "--seed", "8")]
    for filename in FIXTURE_FILES:
        path = str(FIXTURES / filename)
        first_label = parse(fixture_text(filename)).labels[0]
        invocations += [
            ("stats", path),
            ("connectivity", path),
            ("relabel", path),
            ("contract", path, "--hedge", first_label),
            ("audit", path, "--theorem", "all"),
        ]
    for args in invocations:
        first, second = _run_cli(*args), _run_cli(*args)
        if not (first.returncode == second.returncode == 0 and first.stdout == second.stdout):
            problems.append(args)

    for filename in FIXTURE_FILES:
        text = fixture_text(filename)
        if emit(parse(text)) != text:
            problems.append(("round-trip", filename))

    _report(capfd, 9, "command output is byte-deterministic", not problems, str(problems[:5]))
