"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line through the ``acceptance_line`` fixture;
the lines are repeated in a summary section at the end of the pytest run.
Timings are wall-clock on whatever machine runs the suite.
"""
import random
import time

import pytest

from seidelnull.analysis import invariant_violations, phi, pm_one_from_regular, prefilter_singularity
from seidelnull.analysis import regular_switch_witness
from seidelnull.families import (
    expected_phi_G,
    expected_phi_H,
    family_cycle_leaves,
    family_G,
    family_H,
    family_p4_union,
)
from seidelnull.graph import VertexSet, complement, cycle, degrees, is_regular, path, switch
from seidelnull.graph6 import parse_graph6
from seidelnull.linalg import kernel_primitive, rank_exact, seidel_matrix
from seidelnull.search import StageConfig, all_graphs, enumerate_trees, random_regular, relabel_first_even, scan

ROUND_TRIP_COUNT = 50


@pytest.fixture(scope="module")
def order17():
    start = time.perf_counter()
    rep = scan(enumerate_trees(17), StageConfig())
    return rep, time.perf_counter() - start


def round_trip_cases():
    rng = random.Random(2024)
    for k in (1, 2, 3):
        n = 4 * k + 1
        for i in range(ROUND_TRIP_COUNT):
            h = random_regular(2 * k, n, seed=1000 * k + i)
            yield k, h, VertexSet(n, rng.getrandbits(n))


def bound_graphs():
    out = []
    for k in range(1, 7):
        g = family_p4_union(k)
        out += [(k, "p4", g), (k, "p4-complement", complement(g))]
    for k in range(3, 7):
        out.append((k, "cycle-leaves", family_cycle_leaves(k)))
    return out


def test_criterion_01_c5(acceptance_line):
    phi(cycle(5))  # warm caches
    start = time.perf_counter()
    g = cycle(5)
    r = rank_exact(seidel_matrix(g))
    p = phi(g)
    elapsed = time.perf_counter() - start
    ok = r == 4 and p.entries == (1, 1, 1, 1, 1) and elapsed < 1e-3
    acceptance_line(1, "phi(C5) = j and rank 4", ok, elapsed)
    assert ok


def test_criterion_02_family_g(acceptance_line):
    start = time.perf_counter()
    ok = True
    for k in range(1, 8):
        g = family_G(k)
        s = seidel_matrix(g)
        v = kernel_primitive(s).entries
        ok &= g.n == 4 * k + 1 and rank_exact(s) == 4 * k
        ok &= v == expected_phi_G(k)
        ok &= max(map(abs, v)) == 5 ** (k - 1) and sum(v) == 5 ** k and v[0] > 0
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    acceptance_line(2, "family G, k = 1..7, closed form = kernel", ok, elapsed)
    assert ok


def test_criterion_03_family_h(acceptance_line):
    start = time.perf_counter()
    ok = True
    for k in range(0, 6):
        g = family_H(k)
        p = phi(g)
        ok &= g.n == 8 * k + 5 and p.entries == expected_phi_H(k)
        ok &= p.min_abs == 3 ** k and p.entry_sum == 5 * 7 ** k
    elapsed = time.perf_counter() - start
    ok &= elapsed < 2.0
    acceptance_line(3, "family H, k = 0..5, min|phi| = 3^k", ok, elapsed)
    assert ok


def test_criterion_04_trees_order9(acceptance_line):
    start = time.perf_counter()
    rep = scan(enumerate_trees(9), StageConfig(workers=1))
    elapsed = time.perf_counter() - start
    ok = rep.total == 47 and rep.singular == [] and elapsed < 0.1
    acceptance_line(4, "order 9 trees: 47, none singular", ok, elapsed)
    assert ok


def test_criterion_05_trees_order17(acceptance_line, order17):
    rep, elapsed = order17
    ok = rep.total == 48629 and len(rep.singular) == 15 and len(rep.pm_one) == 2
    for g6, _ in rep.pm_one:
        g = relabel_first_even(parse_graph6(g6))
        ok &= phi(g).entries == tuple((-1) ** d for d in degrees(g))
    ok &= elapsed < 60.0
    acceptance_line(5, "order 17 trees: 48629, 15 singular, 2 with +-1", ok, elapsed)
    assert ok


def test_criterion_06_path17(acceptance_line):
    start = time.perf_counter()
    g = path(17)
    v = prefilter_singularity(g)
    r = rank_exact(seidel_matrix(g))
    elapsed = time.perf_counter() - start
    ok = not v.possibly_singular and r == 17 and elapsed < 0.01
    acceptance_line(6, "P17 rejected by prefilter and full rank", ok, elapsed)
    assert ok


def test_criterion_07_order5(acceptance_line):
    start = time.perf_counter()
    sing = [p for p in map(phi, all_graphs(5)) if p is not None]
    elapsed = time.perf_counter() - start
    ok = bool(sing) and all(p.all_pm_one for p in sing) and elapsed < 1.0
    acceptance_line(7, "every singular order-5 graph has +-1 phi", ok, elapsed)
    assert ok


def test_criterion_08_regular_round_trip(acceptance_line):
    start = time.perf_counter()
    ok = True
    for k, h, a in round_trip_cases():
        g, p = pm_one_from_regular(h, a)
        ok &= p.all_pm_one
        ok &= is_regular(switch(g, regular_switch_witness(p))) == 2 * k
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    acceptance_line(8, "switched 2k-regular graphs round trip, k = 1..3", ok, elapsed)
    assert ok


def test_criterion_09_bounds(acceptance_line):
    start = time.perf_counter()
    ok = True
    for k, kind, g in bound_graphs():
        p = phi(g)
        ok &= p is not None and p.all_pm_one
        ok &= g.size() == (8 * k * k - k if kind == "p4-complement" else 3 * k)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    acceptance_line(9, "edge bounds 3k and 8k^2-k attained", ok, elapsed)
    assert ok


def test_criterion_10_invariants(acceptance_line, order17):
    graphs = [cycle(5)]
    graphs += [family_G(k) for k in range(1, 8)]
    graphs += [family_H(k) for k in range(0, 6)]
    graphs += [parse_graph6(g6) for g6, _ in order17[0].singular]
    graphs += [g for g in all_graphs(5) if phi(g) is not None]
    graphs += [pm_one_from_regular(h, a)[0] for _, h, a in round_trip_cases()]
    graphs += [g for *_, g in bound_graphs()]
    rng = random.Random(7)
    start = time.perf_counter()
    bad = []
    for g in graphs:
        p = phi(g)
        sets = [VertexSet(g.n, rng.getrandbits(g.n)) for _ in range(3)]
        for name in invariant_violations(p, sets):
            bad.append((g, name))
    elapsed = time.perf_counter() - start
    ok = not bad
    acceptance_line(10, f"invariants on {len(graphs)} singular instances, {len(bad)} violations",
                    ok, elapsed)
    assert ok, bad[:5]
