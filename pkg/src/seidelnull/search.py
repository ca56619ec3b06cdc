"""Free-tree enumeration and a staged singularity scan.

Trees are generated as canonical level sequences rooted at a centre,
stepping through rooted trees in decreasing lexicographic order and
keeping only those whose root is the (canonically chosen) centre.

``scan`` pushes each graph through the congruence pre-filter, the
modular rank filter and finally exact elimination.  The filters only
ever discard graphs that are provably nonsingular, so switching stages
off changes the running time but never the result.
"""
from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .analysis import phi, prefilter_singularity
from .errors import Graph6Error, OrderError
from .graph import Graph, degrees, is_regular
from .graph6 import encode_graph6, parse_graph6
from .linalg import DEFAULT_PRIME, _check_prime, rank_mod_p_batch

MAX_TREE_ORDER = 20


# -- free trees -------------------------------------------------------------

def _successor(seq: List[int], p: int) -> Optional[List[int]]:
    """Next rooted level sequence changing position ``p`` (Beyer-Hedetniemi)."""
    if p <= 0:
        return None
    target = seq[p] - 1
    q = p - 1
    while seq[q] != target:
        q -= 1
    out = seq[:p]
    for i in range(p, len(seq)):
        out.append(out[i - p + q])
    return out


def _next_rooted(seq: List[int]) -> Optional[List[int]]:
    p = len(seq) - 1
    while p > 0 and seq[p] == 1:
        p -= 1
    return _successor(seq, p)


def _split(seq: List[int]) -> Tuple[List[int], List[int]]:
    """First principal subtree (re-rooted at level 0) and the remainder."""
    m = 2
    while m < len(seq) and seq[m] != 1:
        m += 1
    left = [x - 1 for x in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _levels_to_graph(seq: Sequence[int]) -> Graph:
    n = len(seq)
    edges = []
    stack: List[int] = []
    for v, level in enumerate(seq):
        del stack[level:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph.from_edges(n, edges)


def tree_level_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    """Canonical centre-rooted level sequences of all free trees on ``n`` vertices."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise OrderError(f"tree order {n} outside supported range 1..{MAX_TREE_ORDER}")
    if n <= 2:
        yield tuple(range(n))
        return
    # path rooted at its centre: the lexicographically largest candidate
    seq: Optional[List[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        left, rest = _split(seq)
        lh, rh = max(left), max(rest)
        if rh < lh:
            # rest height can only shrink until the left subtree changes
            seq = _successor(seq, len(left))
            continue
        if rh > lh or (len(left), left) <= (len(rest), rest):
            yield tuple(seq)
        seq = _next_rooted(seq)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of free trees on ``n`` vertices."""
    for seq in tree_level_sequences(n):
        yield _levels_to_graph(seq)


# -- small exhaustive graph lists ------------------------------------------

def _pairs(n: int) -> List[Tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[b] for b in range(len(pairs)) if mask >> b & 1))


def _pair_permutations(n: int) -> List[List[int]]:
    """For each vertex permutation, where each pair index is sent."""
    pairs = _pairs(n)
    index = {pr: b for b, pr in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        tables.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    return tables


def all_graphs(n: int) -> List[Graph]:
    """Isomorphism class representatives by brute force; intended for ``n <= 6``."""
    if not 1 <= n <= 6:
        raise OrderError(f"naive isomorphism dedup only supported for n <= 6, got {n}")
    pairs = _pairs(n)
    tables = _pair_permutations(n)
    seen = set()
    reps = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        bits = [b for b in range(len(pairs)) if mask >> b & 1]
        for t in tables:
            seen.add(sum(1 << t[b] for b in bits))
        reps.append(Graph.from_edges(n, (pairs[b] for b in bits)))
    return reps


# -- random regular graphs --------------------------------------------------

def circulant(n: int, connection: Iterable[int]) -> Graph:
    conn = set(connection)
    return Graph.from_edges(n, {(min(i, (i + s) % n), max(i, (i + s) % n))
                                for i in range(n) for s in conn})


def random_regular(degree: int, order: int, seed: int, swaps: Optional[int] = None) -> Graph:
    """A ``degree``-regular graph of order ``4k+1`` from seeded double edge swaps.

    Starts from the circulant with connection set ``{1..k}``; ``swaps``
    defaults to ten times the number of edges.
    """
    if order % 4 != 1 or 2 * degree != order - 1:
        raise ValueError(f"need order = 4k+1 and degree = 2k, got degree {degree}, order {order}")
    k = degree // 2
    g = circulant(order, range(1, k + 1)) if k else Graph(order, (0,) * order)
    rng = random.Random(seed)
    adj = list(g.adj)
    edges = sorted(g.edges())
    if swaps is None:
        swaps = 10 * len(edges)
    for _ in range(swaps if len(edges) >= 2 else 0):
        i, j = rng.sample(range(len(edges)), 2)
        (a, b), (c, d) = edges[i], edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        # replace ab, cd by ad, cb
        if len({a, b, c, d}) < 4 or adj[a] >> d & 1 or adj[c] >> b & 1:
            continue
        adj[a] ^= (1 << b) | (1 << d)
        adj[b] ^= (1 << a) | (1 << c)
        adj[c] ^= (1 << d) | (1 << b)
        adj[d] ^= (1 << c) | (1 << a)
        edges[i] = (min(a, d), max(a, d))
        edges[j] = (min(c, b), max(c, b))
    out = Graph(order, tuple(adj))
    assert is_regular(out) == degree
    return out


# -- staged scan ------------------------------------------------------------

@dataclass(frozen=True)
class StageConfig:
    prefilter: bool = True
    modp: bool = True
    prime: int = DEFAULT_PRIME
    workers: Optional[int] = None
    chunk_size: int = 4096

    def __post_init__(self):
        _check_prime(self.prime)
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be >= 1")


@dataclass
class ScanReport:
    order: Optional[int] = None
    total: int = 0
    prefilter_rejected: int = 0
    modp_rejected: int = 0
    exact_checked: int = 0
    malformed: int = 0
    singular: List[Tuple[str, Tuple[int, ...]]] = field(default_factory=list)
    pm_one: List[Tuple[str, Tuple[int, ...]]] = field(default_factory=list)
    wall_time: float = 0.0

    def merge(self, other: "ScanReport") -> None:
        if self.order is None:
            self.order = other.order
        elif other.order is not None and other.order != self.order:
            self.order = -1  # mixed orders
        self.total += other.total
        self.prefilter_rejected += other.prefilter_rejected
        self.modp_rejected += other.modp_rejected
        self.exact_checked += other.exact_checked
        self.malformed += other.malformed
        self.singular.extend(other.singular)
        self.pm_one.extend(other.pm_one)

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "order": self.order,
            "total": self.total,
            "prefilter_rejected": self.prefilter_rejected,
            "modp_rejected": self.modp_rejected,
            "exact_checked": self.exact_checked,
            "malformed": self.malformed,
            "singular": len(self.singular),
            "pm_one": len(self.pm_one),
            "witnesses": [
                {"graph6": g6, "phi": [str(x) for x in vec],
                 "pm_one": all(abs(x) == 1 for x in vec)}
                for g6, vec in self.singular
            ],
        }
        if include_timing:
            d["wall_time"] = round(self.wall_time, 6)
        return d


def _scan_chunk(graphs: List[Graph], stages: StageConfig) -> ScanReport:
    rep = ScanReport(total=len(graphs))
    if graphs:
        orders = {g.n for g in graphs}
        rep.order = orders.pop() if len(orders) == 1 else -1

    survivors = graphs
    if stages.prefilter:
        survivors = [g for g in graphs if prefilter_singularity(g).possibly_singular]
        rep.prefilter_rejected = len(graphs) - len(survivors)

    if stages.modp and survivors:
        by_order: Dict[int, List[int]] = {}
        for idx, g in enumerate(survivors):
            by_order.setdefault(g.n, []).append(idx)
        keep = [False] * len(survivors)
        for n, idxs in by_order.items():
            mats = np.empty((len(idxs), n, n), dtype=np.int64)
            for b, idx in enumerate(idxs):
                mats[b] = _seidel_array(survivors[idx])
            ranks = rank_mod_p_batch(mats, stages.prime)
            for idx, r in zip(idxs, ranks):
                keep[idx] = r < n
        before = len(survivors)
        survivors = [g for g, k in zip(survivors, keep) if k]
        rep.modp_rejected = before - len(survivors)

    rep.exact_checked = len(survivors)
    for g in survivors:
        p = phi(g)
        if p is None:
            continue
        entry = (encode_graph6(g).decode("ascii"), p.entries)
        rep.singular.append(entry)
        if p.all_pm_one:
            rep.pm_one.append(entry)
    return rep


def _seidel_array(g: Graph) -> np.ndarray:
    n = g.n
    bits = np.array([[row >> j & 1 for j in range(n)] for row in g.adj], dtype=np.int64)
    s = 1 - 2 * bits
    np.fill_diagonal(s, 0)
    return s


def _chunks(source, size: int, rep: ScanReport) -> Iterator[List[Graph]]:
    chunk: List[Graph] = []
    for item in source:
        if not isinstance(item, Graph):
            try:
                item = parse_graph6(item)
            except Graph6Error:
                rep.malformed += 1
                continue
        chunk.append(item)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def scan(source: Iterable[Union[Graph, str, bytes]], stages: StageConfig = StageConfig()) -> ScanReport:
    """Run every graph through the singularity pipeline.

    ``source`` may mix Graph objects and graph6 lines; malformed lines are
    counted in ``malformed`` and skipped.  Chunks are processed by a pool
    of ``stages.workers`` processes (default: all CPUs) and merged in input
    order, so the report does not depend on scheduling.
    """
    start = time.perf_counter()
    report = ScanReport()
    workers = stages.workers or os.cpu_count() or 1
    chunks = _chunks(source, stages.chunk_size, report)
    if workers == 1:
        parts = (_scan_chunk(c, stages) for c in chunks)
        for part in parts:
            report.merge(part)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_chunk, chunks, itertools.repeat(stages)):
                report.merge(part)
    report.wall_time = time.perf_counter() - start
    return report


def relabel_first_even(g: Graph) -> Graph:
    """Relabel so vertex 0 has even degree (swap it with the first even vertex)."""
    d = degrees(g)
    if d[0] % 2 == 0:
        return g
    e = next(i for i, x in enumerate(d) if x % 2 == 0)
    perm = list(range(g.n))
    perm[0], perm[e] = e, 0
    return g.relabel(perm)
