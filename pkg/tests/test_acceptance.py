"""Acceptance criteria, one test (or parameter set) per criterion.

Run ``pytest tests/test_acceptance.py -v`` (or execute this file); the
terminal summary lists PASS/FAIL per criterion.
"""

import random
import sys
import time
from collections import defaultdict

import pytest

from atgrs.field import make_field
from atgrs.search import run_search
from atgrs.specio import load_search_config
from atgrs.structmat import (
    WSeq,
    bordered_vandermonde_ratio,
    gaussian_inverse,
    identity,
    mat_mul,
    poly_from_roots,
    rank,
    toeplitz_inverse_reversed,
    toeplitz_inverse_unit,
    toeplitz_lower,
    transpose,
    vandermonde,
    vandermonde_inverse_explicit,
    vandermonde_inverse_factored,
    wseq_direct,
)
from atgrs.tgrs import (
    CONDITION_I,
    CONDITION_II,
    KNOWN,
    CodeSpec,
    classify_novelty,
    g_entry_companion,
    g_entry_wsum,
    inverse_twist_generator,
    is_mds,
    known_template,
    minimum_distance,
    parity_check_inverse_twist,
    special_case_mds,
    subset_context,
)
from conftest import TABLE_ALPHA, TWIST_TABLE, random_spec

GF11 = make_field(11)


def coeffs_desc(gf, alpha):
    return list(reversed(poly_from_roots(gf, alpha)))


def report(criterion, ok, detail):
    print(f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}")
    return ok


# 1 -----------------------------------------------------------------------------------------

@pytest.mark.parametrize("k", sorted(TWIST_TABLE))
def test_criterion_1_table_entry(k):
    spec = CodeSpec(GF11, 8, k, TABLE_ALPHA, TWIST_TABLE[k])
    verdicts, times = {}, {}
    for method in ("criterion", "brute-force"):
        start = time.perf_counter()
        verdicts[method] = is_mds(spec, method, full_report=True)
        times[method] = time.perf_counter() - start
    dist = minimum_distance(spec) if k <= 5 else None
    ok = (
        all(r.is_mds for r in verdicts.values())
        and all(t < 1.0 for t in times.values())
        and (dist is None or dist == 9 - k)
    )
    detail = (
        f"k={k} criterion={verdicts['criterion'].is_mds} brute={verdicts['brute-force'].is_mds} "
        f"failing={verdicts['criterion'].failing_subsets} "
        f"times={[round(t, 3) for t in times.values()]} d_min={dist} (want {9 - k})"
    )
    assert report(1, ok, detail), detail


# support pattern of each table entry, 0-based (row, col)
def _support(eta):
    return [[i, j] for i, row in enumerate(eta) for j, x in enumerate(row) if x]


@pytest.mark.parametrize("k", sorted(TWIST_TABLE))
def test_criterion_1_search_rediscovers_entry(k):
    cfg = load_search_config({
        "field": {"p": 11}, "n": 8, "k": k, "alpha": list(TABLE_ALPHA), "support": _support(TWIST_TABLE[k]),
    })
    doc = run_search(cfg)
    found = [list(r) for r in TWIST_TABLE[k]] in [r["eta"] for r in doc["results"]]
    detail = f"k={k} candidates={doc['candidates_evaluated']} mds_matches={len(doc['results'])} table_entry_found={found}"
    assert report("1/search", found, detail), detail


# 2 -----------------------------------------------------------------------------------------

def test_criterion_2_criterion_equals_brute_force(fields):
    rng = random.Random(2)
    start = time.perf_counter()
    disagreements, n_mds = 0, 0
    qs = [7, 11, 13, 16]
    for i in range(520):
        spec = random_spec(rng, fields[qs[i % 4]], nmax=10)
        a = is_mds(spec, "criterion", full_report=True)
        b = is_mds(spec, "brute-force", full_report=True)
        disagreements += a.is_mds != b.is_mds or a.failing_subsets != b.failing_subsets
        n_mds += a.is_mds
    elapsed = time.perf_counter() - start
    ok = disagreements == 0 and elapsed < 120
    assert report(2, ok, f"520 specs, {n_mds} MDS, {disagreements} disagreements, {elapsed:.1f}s")


# 3 -----------------------------------------------------------------------------------------

def test_criterion_3_vandermonde(fields):
    rng = random.Random(3)
    bad = 0
    qs = [11, 13, 17, 16]
    for i in range(120):
        gf = fields[qs[i % 4]]
        alpha = rng.sample(range(1, gf.q), rng.randint(1, min(12, gf.q - 1)))
        v = vandermonde(gf, alpha, len(alpha))
        inv = vandermonde_inverse_explicit(gf, alpha)
        ok = mat_mul(gf, inv, v) == identity(len(alpha))
        ok = ok and inv == vandermonde_inverse_factored(gf, alpha) == gaussian_inverse(gf, v)
        bad += not ok
    assert report(3, bad == 0, f"120 cases, {bad} failures")


# 4 -----------------------------------------------------------------------------------------

def test_criterion_4_wseq(fields):
    rng = random.Random(4)
    bad = []
    cases = 0
    qs = [7, 11, 13, 16, 17]
    while cases < 120:
        gf = fields[qs[cases % 5]]
        n = rng.randint(1, min(8, gf.q - 1))
        alpha = rng.sample(range(gf.q), n)
        w = WSeq(gf, alpha, 0, 3 * n)
        checks = [
            all(w[t] == 0 for t in range(n - 1)) and w[n - 1] == 1,
            all(w[t] == wseq_direct(gf, alpha, t) for t in range(3 * n + 1)),
            all(bordered_vandermonde_ratio(gf, alpha, t) == w[t] for t in range(2 * n + 1)),
        ]
        if 0 in alpha:
            rest = [a for a in alpha if a]
            if rest:
                shifted = WSeq(gf, rest, 0, 3 * n - 1)
                checks.append(all(shifted[t] == w[t + 1] for t in range(3 * n)))
        else:
            c = coeffs_desc(gf, alpha)
            checks.append(WSeq(gf, alpha, -1, 0)[-1] == gf.neg(gf.inv(c[n])))
        if not all(checks):
            bad.append((gf.q, alpha))
        cases += 1
    assert report(4, not bad, f"{cases} cases, failures={bad[:3]}")


# 5 -----------------------------------------------------------------------------------------

def test_criterion_5_toeplitz(fields):
    rng = random.Random(5)
    bad = 0
    cases = 0
    for q in (7, 11, 13, 16, 17):
        gf = fields[q]
        for _ in range(20):
            n = rng.randint(1, min(7, q - 1))
            alpha = rng.sample(range(1, q), n)
            c = coeffs_desc(gf, alpha)
            for size in (1, n, 2 * n):
                t = toeplitz_lower(c, size)
                inv = toeplitz_inverse_unit(gf, c, size, alpha)
                bad += not (mat_mul(gf, t, inv) == identity(size) and inv == gaussian_inverse(gf, t))
            col = [c[n - i] for i in range(n)]
            t = toeplitz_lower(col, n)
            inv = toeplitz_inverse_reversed(gf, col, alpha)
            w = WSeq(gf, alpha, -n, -1)
            expect = toeplitz_lower([gf.neg(w[-i]) for i in range(1, n + 1)], n)
            bad += not (mat_mul(gf, t, inv) == identity(n) and inv == expect == gaussian_inverse(gf, t))
            cases += 1
    assert report(5, bad == 0, f"{cases} point sets at sizes 1, n, 2n plus reversed, {bad} failures")


# 6 -----------------------------------------------------------------------------------------

def _single(k, n, h, t, value):
    eta = [[0] * (n - k) for _ in range(k)]
    eta[h][t] = value
    return eta


def test_criterion_6_single_twist(fields):
    rng = random.Random(6)
    instances = mismatches = 0
    qs = [7, 11, 13, 16]
    verdicts = defaultdict(int)
    for i in range(32):
        gf = fields[qs[i % 4]]
        base = random_spec(rng, gf, nmax=9)
        n, k = base.n, base.k
        positions = [(0, 0), (k - 1, 0)] + [(rng.randrange(k), rng.randrange(n - k)) for _ in range(5)]
        for h, t in positions:
            spec = base.with_eta(_single(k, n, h, t, rng.randrange(1, gf.q)))
            fast = special_case_mds(spec, h, t)
            general = is_mds(spec).is_mds
            verdicts[fast] += 1
            mismatches += fast != general
            instances += 1
    flagged = 0
    for i in range(20):
        gf = fields[qs[i % 4]]
        n = rng.randint(5, min(9, gf.q - 1))
        k = rng.randint(3, n - 1)
        alpha = rng.sample(range(1, gf.q), n)
        subset = tuple(sorted(rng.sample(range(n), k)))
        ck = coeffs_desc(gf, [alpha[j] for j in subset])[k]
        spec = CodeSpec(gf, n, k, alpha, _single(k, n, 0, 0, gf.inv(ck)))
        rep = is_mds(spec, full_report=True)
        flagged += (not rep.is_mds) and subset in rep.failing_subsets and not special_case_mds(spec, 0, 0)
    ok = instances >= 200 and mismatches == 0 and flagged == 20
    assert report(6, ok, f"{instances} instances ({dict(verdicts)}), {mismatches} mismatches, "
                         f"{flagged}/20 counterexamples flagged")


# 7 -----------------------------------------------------------------------------------------

def test_criterion_7_proof_paths(fields):
    rng = random.Random(7)
    tuples = mismatches = ch_fail = 0
    qs = [7, 11, 13, 16]
    while tuples < 600:
        gf = fields[qs[tuples % 4]]
        spec = random_spec(rng, gf, nmax=10)
        sc = subset_context(spec, sorted(rng.sample(range(spec.n), spec.k)))
        k = spec.k
        acc = [[0] * k for _ in range(k)]
        for coef in sc.c:
            acc = mat_mul(gf, acc, sc.companion)
            for i in range(k):
                acc[i][i] = gf.add(acc[i][i], coef)
        ch_fail += acc != [[0] * k for _ in range(k)]
        for _ in range(4):
            m, t = rng.randrange(k), rng.randint(1, k)
            mismatches += g_entry_companion(sc, spec.eta, m, t) != g_entry_wsum(sc, spec.eta, m, t)
            tuples += 1
    ok = mismatches == 0 and ch_fail == 0
    assert report(7, ok, f"{tuples} tuples, {mismatches} mismatches, {ch_fail} Cayley-Hamilton failures")


# 8 -----------------------------------------------------------------------------------------

def test_criterion_8_parity_check(fields):
    rng = random.Random(8)
    located = defaultdict(set)
    problems = []
    qs = [11, 13, 16, 17]
    for i in range(40):
        gf = fields[qs[i % 4]]
        # a few repeated (n, k) so stability is actually exercised
        n, k = [(6, 3), (7, 4), (8, 5), (9, 3)][i % 4] if i < 24 else (rng.randint(5, 10), None)
        if k is None:
            k = rng.randint(3, n - 1)
        alpha = rng.sample(range(1, gf.q), n)
        v = [rng.randrange(1, gf.q) for _ in range(n)]
        eta = rng.randrange(1, gf.q)
        g = inverse_twist_generator(gf, n, k, eta, alpha, v)
        good = []
        for l in range(k):
            h = parity_check_inverse_twist(gf, n, k, l, eta, alpha, v)
            if mat_mul(gf, h, transpose(g)) == [[0] * k for _ in range(n - k)] and rank(gf, h) == n - k:
                good.append(l)
        if not good:
            problems.append((gf.q, n, k))
        located[(n, k)].add(tuple(good))
    stable = all(len(ls) == 1 for ls in located.values())
    always_last = all(ls == {(k - 1,)} for (n, k), ls in located.items())
    ok = not problems and stable and always_last
    summary = {f"{n},{k}": sorted(ls) for (n, k), ls in sorted(located.items())}
    assert report(8, ok, f"40 instances, l located per (n,k) = {summary}, no-l cases={problems}")


# 9 -----------------------------------------------------------------------------------------

def test_criterion_9_novelty():
    classes = {k: classify_novelty(eta) for k, eta in TWIST_TABLE.items()}
    table_ok = all(c in (CONDITION_I, CONDITION_II) for c in classes.values())
    table_ok = table_ok and all(known_template(eta) is None for eta in TWIST_TABLE.values())

    def build(support, k=6, cols=4):
        return [[3 if (i, j) in support else 0 for j in range(cols)] for i in range(k)]

    templates = [
        set(),
        {(0, 0)},
        {(5, 3)},
        {(2, 0), (2, 1), (2, 3)},
        {(5, 0), (5, 1), (5, 2), (5, 3)},
        {(4, 0), (4, 1), (5, 0), (5, 1)},
        {(3, 0), (4, 1), (5, 2)},
        {(0, 2), (1, 0), (3, 3), (4, 1)},
    ]
    tmpl_ok = all(classify_novelty(build(s)) == KNOWN for s in templates)
    assert report(9, table_ok and tmpl_ok, f"table classes {classes}, templates known={tmpl_ok}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
