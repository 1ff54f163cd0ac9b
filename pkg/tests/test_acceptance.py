"""Acceptance suite: every exit criterion, one test each, printed pass lines.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion. Tolerances are pinned here exactly as agreed; nothing is
calibrated at runtime.
"""

from __future__ import annotations

import json
import math
import random
import time
from collections import deque
from fractions import Fraction

import numba
import numpy as np
import pytest

from proxrem import (
    basic_generator,
    bfs_distances,
    build_family,
    chain,
    check_epp_lemma,
    complete_report,
    emit_graph6,
    find_c4,
    find_triangle,
    from_edge_list,
    invariant_report,
    is_connected,
    layered_extremal,
    layered_extremal_padded,
    make_field,
    min_degree,
    oracle_apsp,
    parse_graph6,
    polarity_graph,
    puncture,
    set_default_threads,
)
from proxrem.bounds import all_check_ids
from proxrem.cli import EXIT_OK, cli
from proxrem.search import canonical_form, enumerate_connected, scan

from conftest import make_petersen

LAYERED_GRID = [(delta, k) for delta in (3, 4, 5) for k in (2, 4)]
POLARITY_ORDERS = (3, 4, 5, 7, 8, 9)
CHAIN_GRID = [(q, k) for q in (4, 5) for k in (2, 4)]


def ok(criterion: int, message: str) -> None:
    print(f"[criterion {criterion:02d}] PASS: {message}")


@pytest.fixture(scope="module")
def layered_reports():
    return {
        (delta, k): complete_report(layered_extremal(delta, k)) for delta, k in LAYERED_GRID
    }


@pytest.fixture(scope="module")
def polarity_family():
    graphs = {}
    for q in POLARITY_ORDERS:
        f = make_field(q)
        graphs[("H", q)] = polarity_graph(f)
        graphs[("H'", q)] = puncture(f).graph
    for q, k in CHAIN_GRID:
        graphs[("chain", q, k)] = chain(make_field(q), k)
    return graphs


def test_criterion_01_soundness_sweep():
    """Zero violations over every connected graph of order 2..8, full catalog."""
    set_default_threads(1)
    try:
        started = time.perf_counter()
        scanned = {}
        for n in range(2, 9):
            summary = scan(
                enumerate_connected(n),
                ids=list(all_check_ids()),
                description=f"connected graphs, order {n}",
            )
            assert summary.total_violations == 0, f"violations at order {n}"
            assert summary.skipped_disconnected == 0
            scanned[n] = summary.scanned
        elapsed = time.perf_counter() - started
    finally:
        set_default_threads(None)
    assert scanned[8] == 11117
    assert sum(scanned.values()) == 12112
    assert elapsed < 300, f"sweep took {elapsed:.1f}s, budget 300s"
    ok(1, f"{sum(scanned.values())} graphs, 0 violations across {len(all_check_ids())} checks, {elapsed:.1f}s")


@pytest.mark.parametrize("n", [5, 6, 7])
def test_criterion_02_path_is_unique_diameter_tight_case(n):
    summary = scan(enumerate_connected(n), ids=["AH-diam-pi"])
    tight = summary.per_bound["AH-diam-pi"].tight_cases
    path_form = canonical_form(basic_generator("path", n))
    assert len(tight) == 1
    assert canonical_form(parse_graph6(tight[0])) == path_form
    ok(2, f"order {n}: AH-diam-pi tight set is exactly the path")


def _components_without(g, x):
    seen = {x}
    comps = []
    for start in range(g.order):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def _induced_path_hanging_at(g, comp, x):
    """Does comp + {x} induce a path with x as an endpoint?"""
    vertices = set(comp) | {x}
    degree = {
        v: sum(1 for w in g.neighbors(v) if w in vertices) for v in vertices
    }
    edges = sum(degree.values()) // 2
    if edges != len(vertices) - 1 or degree[x] != 1:
        return False
    ones = [v for v, d in degree.items() if d == 1]
    return len(ones) == 2 and all(d <= 2 for d in degree.values())


def _has_pendant_path(g, t):
    for x in range(g.order):
        comps = _components_without(g, x)
        if len(comps) < 2:
            continue  # x must be a cut vertex
        for comp in comps:
            if len(comp) == t - 1 and _induced_path_hanging_at(g, comp, x):
                return True
    return False


@pytest.mark.parametrize("n", [5, 7])
def test_criterion_03_remoteness_tight_cases_have_pendant_path(n):
    summary = scan(enumerate_connected(n), ids=["AH-rho-pi"])
    tight = summary.per_bound["AH-rho-pi"].tight_cases
    assert tight, "the equality class is nonempty"
    t = math.ceil(n / 2)
    for line in tight:
        g = parse_graph6(line)
        assert _has_pendant_path(g, t), f"{line} lacks a pendant {t}-vertex path"
    ok(3, f"order {n}: all {len(tight)} AH-rho-pi tight cases hang a {t}-vertex path off a cut vertex")


def test_criterion_04_layered_family_invariants(layered_reports):
    for (delta, k), report in layered_reports.items():
        g = layered_extremal(delta, k)
        assert g.order == 2 * k * delta + 2
        assert min_degree(g) == delta
        assert find_triangle(g) is None
        assert report.diameter == 4 * k - 1
        assert report.radius == 2 * k
    ok(4, f"order/degree/triangle-free/diameter/radius exact on {len(layered_reports)} grid points")


def test_criterion_05_sharpness_gap_below_31_6(layered_reports):
    for (delta, k), report in layered_reports.items():
        gap = report.remoteness - report.proximity
        rhs = Fraction(report.order + 1, 2 * delta) + 4
        slack = rhs - gap
        assert slack > 0, (delta, k)
        assert slack < Fraction(31, 6), (delta, k, slack)
    ok(5, "bound minus measured remoteness-proximity gap is in (0, 31/6) on the whole grid")


def test_criterion_06_closed_form_reconciliation(layered_reports):
    for (delta, k), report in layered_reports.items():
        measured_median = min(report.total_distance)
        measured_margin = max(report.total_distance)
        median_form = 2 * delta * k * k + 4 * k - 3
        margin_form = Fraction((2 * delta * k + 2) * (4 * k - 1), 2)
        assert abs(measured_median - median_form) <= 1, (delta, k)
        assert abs(Fraction(measured_margin) - margin_form) <= 1, (delta, k)
    # the discrepancy is recorded in the generated report notes
    _, notes = build_family("layered", delta=3, k=2)
    assert any("discrepancy" in note for note in notes)
    ok(6, "median/margin total distances within 1 of the closed forms; discrepancy recorded")


def test_criterion_07_polarity_family_invariants(polarity_family):
    for q in POLARITY_ORDERS:
        f = make_field(q)
        hq = polarity_family[("H", q)]
        assert hq.order == q * q + q + 1
        degs = sorted(hq.degrees())
        assert degs[: q + 1] == [q] * (q + 1)
        assert degs[q + 1 :] == [q + 1] * (q * q)
        assert find_c4(hq) is None
        hq_p = polarity_family[("H'", q)]
        assert hq_p.order == q * q + q
        assert min_degree(hq_p) == q - 1
        assert invariant_report(hq_p).diameter == 4
    for q, k in CHAIN_GRID:
        g = polarity_family[("chain", q, k)]
        report = invariant_report(g)
        assert g.order == k * (q * q + q)
        assert report.diameter == 5 * k - 1
        assert report.radius == Fraction(5, 2) * k
        assert find_c4(g) is None
    ok(7, f"polarity family exact for q in {POLARITY_ORDERS} and chains {CHAIN_GRID}")


def test_criterion_08_ball_lemma_on_families(polarity_family):
    for key, g in polarity_family.items():
        report = check_epp_lemma(g)
        assert report.holds, key
    petersen = make_petersen()
    report = check_epp_lemma(petersen)
    assert report.min_ball == 10 and report.bound == 8 and report.holds
    ok(8, f"ball lemma holds on {len(polarity_family)} family graphs and the Petersen graph (10 vs 8)")


def test_criterion_09_asymptotic_spot_check():
    k = 8
    g = chain(make_field(4), k)
    report = invariant_report(g)
    pi_over_k = report.proximity / k
    rho_over_k = report.remoteness / k
    assert Fraction(1) <= pi_over_k <= Fraction(3, 2), pi_over_k
    assert Fraction(11, 5) <= rho_over_k <= Fraction(14, 5), rho_over_k
    ok(9, f"proximity/k = {float(pi_over_k):.3f} in [1.0, 1.5], remoteness/k = {float(rho_over_k):.3f} in [2.2, 2.8]")


def _random_connected(rng: random.Random):
    n = rng.randint(2, 64)
    p = rng.uniform(0.06, 0.5)
    while True:
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = from_edge_list(n, edges)
        if is_connected(g):
            return g


def test_criterion_10_oracle_equivalence():
    rng = random.Random(102040)
    corpus = [_random_connected(rng) for _ in range(100)]
    for delta, k in LAYERED_GRID:
        corpus.append(layered_extremal(delta, k))
    corpus.append(layered_extremal_padded(3, 2, 20))
    for q in (2, 3, 4, 5, 7):
        corpus.append(polarity_graph(make_field(q)))
    for q in (3, 4, 5, 7):
        corpus.append(puncture(make_field(q)).graph)
    for q in (3, 4, 5):
        corpus.append(chain(make_field(q), 2))
    corpus.append(make_petersen())
    checked = 0
    for g in corpus:
        if g.order > 64:
            continue
        stacked = np.array([bfs_distances(g, v) for v in range(g.order)])
        assert (oracle_apsp(g) == stacked).all()
        report = invariant_report(g)
        assert report.total_distance == tuple(int(s) for s in stacked.sum(axis=1))
        assert report.eccentricity == tuple(int(e) for e in stacked.max(axis=1))
        checked += 1
    assert checked >= 100
    ok(10, f"BFS rows match Floyd-Warshall entrywise on {checked} graphs (random + constructed)")


def test_criterion_11_performance_single_thread(capsys):
    # warm the compiled kernels so the timing covers the sweep, not the JIT
    invariant_report(layered_extremal(3, 2), threads=1)
    started = time.perf_counter()
    rc = cli(
        ["measure", "--family", "layered", "--delta", "5", "--k", "2000", "--threads", "1", "--json"]
    )
    elapsed = time.perf_counter() - started
    assert rc == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["invariants"]["order"] == 20002
    assert payload["invariants"]["diameter"] == 7999
    assert payload["invariants"]["radius"] == 4000
    assert elapsed < 60, f"single-threaded measure took {elapsed:.1f}s, budget 60s"
    with capsys.disabled():
        ok(11, f"n=20002 full report via CLI in {elapsed:.1f}s single-threaded (< 60s)")


@pytest.mark.skipif(
    numba.config.NUMBA_NUM_THREADS < 8, reason="needs 8 hardware threads"
)
def test_criterion_11_performance_parallel(capsys):
    invariant_report(layered_extremal(3, 2))
    started = time.perf_counter()
    rc = cli(
        ["measure", "--family", "layered", "--delta", "5", "--k", "2000", "--threads", "8", "--json"]
    )
    elapsed = time.perf_counter() - started
    assert rc == EXIT_OK
    assert elapsed < 15, f"8-thread measure took {elapsed:.1f}s, budget 15s"
    with capsys.disabled():
        ok(11, f"n=20002 full report via CLI in {elapsed:.1f}s on 8 threads (< 15s)")


def test_criterion_12_graph6_fidelity(connected_upto_6, connected_7):
    assert emit_graph6(from_edge_list(2, [(0, 1)])) == "A_"
    assert parse_graph6("A_") == from_edge_list(2, [(0, 1)])
    assert emit_graph6(basic_generator("complete", 3)) == "Bw"
    assert parse_graph6("Bw") == basic_generator("complete", 3)
    assert emit_graph6(basic_generator("path", 3)) == "Bg"
    assert parse_graph6("Bg") == basic_generator("path", 3)
    count = 0
    for level in list(connected_upto_6.values()) + [connected_7]:
        for g in level:
            line = emit_graph6(g)
            assert parse_graph6(line) == g
            assert emit_graph6(parse_graph6(line)) == line
            count += 1
    ok(12, f"worked byte examples exact; round-trip identity over {count} graphs up to order 7")
