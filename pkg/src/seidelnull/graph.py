"""Bitset graphs and switching-class operations.

Vertices are labelled ``0..n-1``; row ``adj[i]`` is an int whose bit ``j``
is set iff ``i ~ j``.  Orders are capped at 64 so every row fits in a
machine word.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import OrderError

MAX_ORDER = 64


def _check_order(n: int, low: int = 1) -> None:
    if not low <= n <= MAX_ORDER:
        raise OrderError(f"order {n} outside supported range {low}..{MAX_ORDER}")


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0..n-1}`` stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        _check_order(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} not in 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) ^ self.mask)

    def members(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.members())


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for i, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in range(i + 1, self.n):
                if (row >> j & 1) != (self.adj[j] >> i & 1):
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        row = self.adj[v]
        return tuple(j for j in range(self.n) if row >> j & 1)

    def edges(self):
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    def size(self) -> int:
        return sum(bin(r).count("1") for r in self.adj) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``i`` becomes ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def is_tree(self) -> bool:
        return self.size() == self.n - 1 and self.is_connected()

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _check_order(n, low=3)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union with ``g2``'s labels shifted by ``g1.n``."""
    n = g1.n + g2.n
    _check_order(n)
    return Graph(n, g1.adj + tuple(row << g1.n for row in g2.adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.adj)))


def switch(g: Graph, a: VertexSet) -> Graph:
    """Toggle every pair with exactly one endpoint in ``a``."""
    if a.n != g.n:
        raise ValueError(f"vertex set bound to order {a.n}, graph has order {g.n}")
    inside = a.mask
    outside = ((1 << g.n) - 1) ^ inside
    rows = tuple(
        row ^ (outside if inside >> i & 1 else inside) for i, row in enumerate(g.adj)
    )
    return Graph(g.n, rows)


def degrees(g: Graph) -> Tuple[int, ...]:
    return tuple(bin(row).count("1") for row in g.adj)


def odd_vertices(g: Graph) -> VertexSet:
    return VertexSet.of(g.n, (i for i, d in enumerate(degrees(g)) if d % 2))


def is_even_graph(g: Graph) -> bool:
    return all(d % 2 == 0 for d in degrees(g))


def is_regular(g: Graph) -> Optional[int]:
    """The common degree if ``g`` is regular, else ``None``."""
    ds = set(degrees(g))
    return ds.pop() if len(ds) == 1 else None


def even_representative(g: Graph) -> Graph:
    """The unique even graph in the switching class of an odd-order graph."""
    if g.n % 2 == 0:
        raise OrderError(f"even representative is only unique for odd order, got {g.n}")
    return switch(g, odd_vertices(g))


def leaves(g: Graph) -> VertexSet:
    return VertexSet.of(g.n, (i for i, d in enumerate(degrees(g)) if d == 1))
