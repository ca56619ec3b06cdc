"""Independent reference computations used only by the tests.

None of these share code paths with the package: rank is plain rational
Gauss-Jordan, kernels come from sympy, and trees are grown leaf by leaf
and deduplicated by AHU centre encodings.
"""
from fractions import Fraction
from itertools import combinations

import sympy

from seidelnull.graph import Graph


def rational_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    m = len(a[0]) if n else 0
    rank = 0
    for c in range(m):
        piv = next((i for i in range(rank, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(n):
            if i != rank and a[i][c] != 0:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def sympy_kernel(rows):
    """Primitive, sign-normalised kernel basis vector, or None if nullity != 1."""
    ns = sympy.Matrix(rows).nullspace()
    if len(ns) != 1:
        return None
    v = ns[0]
    den = 1
    for x in v:
        den = sympy.ilcm(den, sympy.fraction(x)[1])
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = sympy.igcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    return tuple(x if first > 0 else -x for x in ints)


def seidel_rows(g: Graph):
    return [[0 if i == j else (-1 if g.has_edge(i, j) else 1) for j in range(g.n)]
            for i in range(g.n)]


def _ahu(adj, v, parent):
    return "(" + "".join(sorted(_ahu(adj, w, v) for w in adj[v] if w != parent)) + ")"


def _centres(adj):
    n = len(adj)
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_canonical(edges, n):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if n == 1:
        return "()"
    return min(_ahu(adj, c, -1) for c in _centres(adj))


def brute_force_trees(n):
    """Canonical strings of all free trees on n vertices, by leaf addition."""
    level = {tree_canonical([], 1): []}
    for size in range(2, n + 1):
        nxt = {}
        for edges in level.values():
            for v in range(size - 1):
                new = edges + [(v, size - 1)]
                nxt.setdefault(tree_canonical(new, size), new)
        level = nxt
    return set(level)


def same_switching_class(g: Graph, h: Graph) -> bool:
    """Brute force over all 2^n switching sets."""
    from seidelnull.graph import VertexSet, switch

    if g.n != h.n:
        return False
    return any(switch(g, VertexSet(g.n, mask)) == h for mask in range(1 << g.n))


def all_edge_subsets(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])
