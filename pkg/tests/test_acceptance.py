"""Acceptance criteria, one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report lines
and timings.  The packaged connected-graph catalogs (1..9 vertices) back
the exhaustive checks.
"""

import random
import time
from itertools import combinations

import pytest

from graphisol.catalogs import KNOWN_CONNECTED, iter_graph6_lines, packaged_catalog_path
from graphisol.constructive import isolate_c4, p3_or_k3_witness
from graphisol.extremal import verify_extremal
from graphisol.graphs import encode_graph6, from_edges, induced_subgraph, mask_of, parse_graph6
from graphisol.isolation import iota_exact, is_isolating
from graphisol.isomorphism import isomorphic
from graphisol.patterns import (
    AllCycles,
    C4_FAMILY,
    CYCLE4,
    DIAMOND,
    K3,
    K4,
    NINE_VERTEX_EXCEPTIONS,
    P3,
    PatternList,
    SingleCycle,
    classify_exceptional,
)
from graphisol.sweep import SweepFilter, sweep_catalog

from conftest import disjoint_union, random_connected, random_mask_graph


def report(num: int, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {num} {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_six_graph_rediscovery():
    filt = SweepFilter(require_connected=True, min_degree=2, max_degree=4)
    t0 = time.time()
    rep = sweep_catalog(packaged_catalog_path(9), "c4", filt, bound_rule="1")
    t_single = time.time() - t0
    t0 = time.time()
    rep8 = sweep_catalog(packaged_catalog_path(9), "c4", filt, bound_rule="1", workers=8)
    t_eight = time.time() - t0

    found = [parse_graph6(v.graph6) for v in rep.violations]
    matched = set()
    for g in found:
        hits = [i for i, ref in enumerate(NINE_VERTEX_EXCEPTIONS, 1) if isomorphic(g, ref)]
        assert len(hits) == 1
        matched.add(hits[0])
    ok = (len(found) == 6 and matched == {1, 2, 3, 4, 5, 6}
          and rep8 == rep and t_single < 60.0)
    report(1, ok, f"6 violators == {{G1..G6}} "
                  f"({t_single:.1f}s single worker, {t_eight:.1f}s with 8)")


def test_criterion_2_exceptional_values():
    ones = [iota_exact(g, C4_FAMILY).size for g in (CYCLE4, DIAMOND, K4)]
    twos = [iota_exact(g, C4_FAMILY).size for g in NINE_VERTEX_EXCEPTIONS]
    ok = ones == [1, 1, 1] and twos == [2] * 6
    report(2, ok, f"iota: 4-vertex {ones}, 9-vertex {twos}")


def test_criterion_3_extremality_1_to_25():
    t0 = time.time()
    results = [verify_extremal(n) for n in range(1, 26)]
    elapsed = time.time() - t0
    ok = all(results) and elapsed < 60.0
    report(3, ok, f"iota(B(n)) == floor(n/5) for n=1..25 ({elapsed:.1f}s)")


def test_criterion_4_main_bound_desk_scale():
    t0 = time.time()
    total = 0
    exceptional = 0
    for n in range(1, 10):
        for _, line in iter_graph6_lines(packaged_catalog_path(n)):
            g = parse_graph6(line)
            if classify_exceptional(g) is not None:
                exceptional += 1
                continue
            res = isolate_c4(g)
            assert res.certificate.verified and res.certificate.size <= 1, line
            total += 1
    elapsed = time.time() - t0
    ok = total == sum(KNOWN_CONNECTED.values()) - 9 and exceptional == 9
    report(4, ok, f"{total} connected non-exceptional graphs n<=9, "
                  f"all verified at size <= 1 ({elapsed:.0f}s)")


def test_criterion_5_subcubic():
    t0 = time.time()
    violators = 0
    for n in range(5, 10):
        rep = sweep_catalog(
            packaged_catalog_path(n), "c4",
            SweepFilter(require_connected=True, max_degree=3), bound_rule="floor5")
        violators += len(rep.violations)
    rng = random.Random(0x5C3)
    checked = 0
    for _ in range(1000):
        g = random_connected(rng, rng.randint(10, 40), 0.08, max_degree=3)
        res = isolate_c4(g)
        assert res.certificate.verified and res.certificate.size <= g.n // 5
        checked += 1
    elapsed = time.time() - t0
    ok = violators == 0 and checked == 1000
    report(5, ok, f"0 subcubic catalog violators (n=5..9); "
                  f"1000 random subcubic n=10..40 verified ({elapsed:.0f}s)")


def brute_force_min(g, f):
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if is_isolating(g, f, mask_of(combo)):
                return len(combo)
    raise AssertionError


def test_criterion_6a_bruteforce_oracle():
    t0 = time.time()
    checked = 0
    for n in range(1, 9):
        for _, line in iter_graph6_lines(packaged_catalog_path(n)):
            g = parse_graph6(line)
            assert iota_exact(g, C4_FAMILY).size == brute_force_min(g, C4_FAMILY), line
            checked += 1
    elapsed = time.time() - t0
    ok = checked >= 10_000
    report(6, ok, f"(a) reduction-free brute force agrees on {checked} graphs "
                  f"n<=8 ({elapsed:.0f}s)")


def test_criterion_6b_component_additivity():
    rng = random.Random(0x6B)
    for _ in range(1000):
        a = random_mask_graph(rng, rng.randint(1, 7), rng.random() * 0.7)
        b = random_mask_graph(rng, rng.randint(1, 7), rng.random() * 0.7)
        u = disjoint_union(a, b)
        assert iota_exact(u, C4_FAMILY).size == \
            iota_exact(a, C4_FAMILY).size + iota_exact(b, C4_FAMILY).size
    report(6, True, "(b) component additivity on 1000 random disjoint unions")


def test_criterion_6c_leaf_invariance():
    rng = random.Random(0x6C)
    fams = [C4_FAMILY] * 500 + [AllCycles()] * 250 + [SingleCycle(5)] * 250
    for f in fams:
        g = random_mask_graph(rng, rng.randint(1, 9), rng.random() * 0.5)
        v = rng.randrange(g.n)
        bigger = from_edges(g.n + 1, list(g.edges()) + [(v, g.n)])
        assert iota_exact(bigger, f).size == iota_exact(g, f).size
    report(6, True, "(c) leaf-attachment invariance on 1000 random instances")


def test_criterion_6d_roundtrip_every_record():
    t0 = time.time()
    total = 0
    for n in range(1, 10):
        for idx, line in iter_graph6_lines(packaged_catalog_path(n)):
            if encode_graph6(parse_graph6(line)) != line:
                report(6, False, f"(d) record {idx} of catalog {n} fails round-trip")
            total += 1
    elapsed = time.time() - t0
    report(6, True, f"(d) byte-exact round-trip on {total} catalog records ({elapsed:.0f}s)")


def test_criterion_7_observation_suite():
    # (b) degree profile
    for i, g in enumerate(NINE_VERTEX_EXCEPTIONS, 1):
        assert g.min_degree() >= 3 and g.max_degree() == 4
        if i <= 4:
            assert all(d == 4 for d in g.degrees()), f"graph {i} must be 4-regular"
    # (c) no two degree-3 vertices adjacent in the last two
    for g in NINE_VERTEX_EXCEPTIONS[4:]:
        deg3 = [v for v in range(9) if g.degree(v) == 3]
        assert all(not g.has_edge(u, w) for u in deg3 for w in deg3 if u < w)
    # (d) all 54 witness pairs, independently re-verified
    pairs = 0
    for g in NINE_VERTEX_EXCEPTIONS:
        for v in range(9):
            vp = p3_or_k3_witness(g, v)
            rem = g.full_mask & ~(1 << v) & ~(g.adj[vp] | 1 << vp)
            sub, _ = induced_subgraph(g, rem)
            assert isomorphic(sub, P3) or isomorphic(sub, K3)
            pairs += 1
    report(7, pairs == 54, f"degree profiles, degree-3 independence, {pairs}/54 witnesses")


def test_criterion_8_diamond_sweep():
    t0 = time.time()
    rep = sweep_catalog(
        packaged_catalog_path(9), PatternList((DIAMOND,)),
        SweepFilter(require_connected=True, max_degree=4), bound_rule="1")
    elapsed = time.time() - t0
    for v in rep.violations:
        g = parse_graph6(v.graph6)
        assert iota_exact(g, PatternList((DIAMOND,))).size == v.iota_size > 1
    all_g1 = all(isomorphic(parse_graph6(v.graph6), NINE_VERTEX_EXCEPTIONS[0])
                 for v in rep.violations)
    if not (all_g1 and len(rep.violations) == 1):
        # informational flag: the value is derived, not tabulated
        print(f"\nACCEPTANCE 8 FLAGGED - diamond sweep found "
              f"{[v.graph6 for v in rep.violations]} (expected a single G1 isomorph)")
    report(8, all_g1, f"diamond-family violators all isomorphic to G1 "
                      f"({len(rep.violations)} found, {elapsed:.0f}s)")
