"""Desk-scale computational check of the kernel-vector theorems.

``run_suite(order)`` returns ``(name, passed, detail)`` triples; it is what
``seidelnull verify-theorems`` prints.
"""
from __future__ import annotations

import random
from typing import List, Tuple

from . import analysis as an
from .families import (
    expected_phi_G,
    expected_phi_H,
    family_cycle_leaves,
    family_G,
    family_H,
    family_p4_union,
)
from .graph import Graph, VertexSet, complement, is_regular, switch
from .graph6 import encode_graph6
from .linalg import rank_exact, rank_lower_bound_mod_p, seidel_matrix
from .search import StageConfig, all_labeled_graphs, enumerate_trees, random_regular, scan

Result = Tuple[str, bool, str]


def random_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


def random_vertex_set(n: int, rng: random.Random) -> VertexSet:
    return VertexSet(n, rng.getrandbits(n))


def _graph_checks(graphs, prime: int, rng: random.Random) -> Tuple[int, int, List[str]]:
    """Returns (graphs seen, singular found, list of failures)."""
    seen = singular = 0
    fails = []
    for g in graphs:
        seen += 1
        s = seidel_matrix(g)
        r = rank_exact(s)
        if r < g.n - 1:
            fails.append(f"rank {r} < n-1 for {sorted(g.edges())}")
        if g.n % 2 == 0 and r != g.n:
            fails.append(f"even order {g.n} singular")
        if rank_lower_bound_mod_p(s, prime) > r:
            fails.append("modular rank exceeds rational rank")
        verdict = an.prefilter_singularity(g)
        if r == g.n - 1:
            singular += 1
            if not verdict.possibly_singular:
                fails.append(f"prefilter rejected singular graph {sorted(g.edges())}")
            p = an.phi(g)
            bad = an.invariant_violations(p, [random_vertex_set(g.n, rng)])
            if bad:
                fails.append(f"{bad} on {sorted(g.edges())}")
    return seen, singular, fails


def _result(name: str, fails: List[str], detail: str) -> Result:
    return (name, not fails, detail if not fails else f"{detail}; first failure: {fails[0]}")


def run_suite(order: int = 9, seed: int = 0, stages: StageConfig = None) -> List[Result]:
    if order < 1:
        raise ValueError("order must be >= 1")
    rng = random.Random(seed)
    stages = stages or StageConfig(workers=1)
    prime = stages.prime
    results: List[Result] = []

    small = min(order, 5)
    seen = sing = 0
    fails: List[str] = []
    for n in range(1, small + 1):
        a, b, f = _graph_checks(all_labeled_graphs(n), prime, rng)
        seen, sing, fails = seen + a, sing + b, fails + f
    results.append(_result("labeled graphs exhaustive", fails,
                           f"n<={small}: {seen} graphs, {sing} singular"))

    seen = sing = 0
    fails = []
    for n in range(1, order + 1):
        a, b, f = _graph_checks((random_graph(n, rng) for _ in range(40)), prime, rng)
        seen, sing, fails = seen + a, sing + b, fails + f
    results.append(_result("random graphs", fails, f"n<={order}: {seen} graphs, {sing} singular"))

    # exact rank on every tree: kept to n <= 13 so the suite stays interactive
    fails = []
    seen = sing = 0
    for n in range(1, min(order, 13) + 1):
        trees = list(enumerate_trees(n))
        rep = scan(trees, stages)
        seen += rep.total
        sing += len(rep.singular)
        for g in trees:
            if an.prefilter_singularity(g).possibly_singular:
                continue
            if an.phi(g) is not None:
                fails.append(f"prefilter rejected singular tree of order {n}")
        found = {g6 for g6, _ in rep.singular}
        for g in trees:
            p = an.phi(g) if an.prefilter_singularity(g).possibly_singular else None
            if p is not None:
                if encode_graph6(g).decode() not in found:
                    fails.append(f"scan missed a singular tree of order {n}")
                bad = an.invariant_violations(p)
                if bad:
                    fails.append(f"{bad} on tree of order {n}")
                if p.all_pm_one and not an.check_tree_residues(g, p):
                    fails.append(f"+-1 tree residues {an.tree_residues(g)}")
    results.append(_result("trees", fails, f"n<={min(order, 13)}: {seen} trees, {sing} singular"))

    fails = []
    kmax = max(2, (order - 1) // 4)
    for k in range(1, kmax + 1):
        p = an.phi(family_G(k))
        if p is None or p.entries != expected_phi_G(k) or an.invariant_violations(p):
            fails.append(f"family G k={k}")
    for k in range(0, max(1, (order - 5) // 8) + 1):
        p = an.phi(family_H(k))
        if p is None or p.entries != expected_phi_H(k) or an.invariant_violations(p):
            fails.append(f"family H k={k}")
    results.append(_result("families G/H closed form", fails, f"G k<={kmax}"))

    fails = []
    for k in range(1, kmax + 1):
        for _ in range(10):
            h = random_regular(2 * k, 4 * k + 1, rng.randrange(2 ** 32))
            g, p = an.pm_one_from_regular(h, random_vertex_set(h.n, rng))
            w = an.regular_switch_witness(p)
            if is_regular(switch(g, w)) != 2 * k:
                fails.append(f"round trip k={k}")
    results.append(_result("+-1 iff switching class of 2k-regular", fails, f"k<={kmax}"))

    fails = []
    for k in range(1, kmax + 1):
        for g in [family_p4_union(k)] + ([family_cycle_leaves(k)] if k >= 3 else []):
            p = an.phi(g)
            if p is None or not p.all_pm_one or g.size() != 3 * k or not an.check_edge_bounds(g, p):
                fails.append(f"lower bound k={k}")
            gc = complement(g)
            if gc.size() != 8 * k * k - k or an.phi(gc).vec != p.vec:
                fails.append(f"upper bound k={k}")
    results.append(_result("edge bounds tight", fails, f"k<={kmax}"))
    return results
