"""Recursive graph families with singular Seidel matrices.

``family_G(k)`` has phi with maximum entry ``5**(k-1)``; ``family_H(k)``
has phi whose smallest absolute entry is ``3**k``.  Both grow a five-cycle
by appending a fixed block of new vertices.  ``family_p4_union`` and
``family_cycle_leaves`` have +-1 kernel vectors and the least possible size.

Each constructor has a matching ``expected_phi_*`` closed form that is
computed from the recursion alone, without any linear algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .errors import OrderError
from .graph import MAX_ORDER, Graph, VertexSet, cycle, disjoint_union, empty, path

# new-vertex adjacency for one G step: old vertices see the two path ends
_G_OLD_NEIGHBOURS = (0, 3)
_G_BLOCK_EDGES = ((0, 1), (1, 2), (2, 3))

# new-vertex adjacency for one H step (0-based within the 8 appended vertices)
_H_OLD_NEIGHBOURS = (3, 4)
_H_BLOCK_EDGES = ((0, 5), (0, 6), (0, 7), (1, 6), (1, 7), (2, 7))
_H_TAIL = (5, -1, -3, 1, 1, -3, -1, 5)


def _append_block(edges: List[Tuple[int, int]], n_old: int, size: int,
                  old_neighbours, block_edges) -> int:
    for v in range(n_old):
        for t in old_neighbours:
            edges.append((v, n_old + t))
    for s, t in block_edges:
        edges.append((n_old + s, n_old + t))
    return n_old + size


def family_G(k: int) -> Graph:
    """Order ``4k+1``; phi is ``phi(G_{k-1})`` followed by four copies of its sum."""
    if k < 1 or 4 * k + 1 > MAX_ORDER:
        raise OrderError(f"family G needs 1 <= k <= {(MAX_ORDER - 1) // 4}, got {k}")
    edges = list(cycle(5).edges())
    n = 5
    for _ in range(k - 1):
        n = _append_block(edges, n, 4, _G_OLD_NEIGHBOURS, _G_BLOCK_EDGES)
    return Graph.from_edges(n, edges)


def expected_phi_G(k: int) -> Tuple[int, ...]:
    if k < 1:
        raise OrderError(f"family G needs k >= 1, got {k}")
    vec = [1] * 5
    for _ in range(k - 1):
        c = sum(vec)
        vec += [c] * 4
    return tuple(vec)


def family_H(k: int) -> Graph:
    """Order ``8k+5``; min |phi| is ``3**k`` and the entries sum to ``5 * 7**k``."""
    if k < 0 or 8 * k + 5 > MAX_ORDER:
        raise OrderError(f"family H needs 0 <= k <= {(MAX_ORDER - 5) // 8}, got {k}")
    edges = list(cycle(5).edges())
    n = 5
    for _ in range(k):
        n = _append_block(edges, n, 8, _H_OLD_NEIGHBOURS, _H_BLOCK_EDGES)
    return Graph.from_edges(n, edges)


def expected_phi_H(k: int) -> Tuple[int, ...]:
    if k < 0:
        raise OrderError(f"family H needs k >= 0, got {k}")
    vec = [1] * 5
    for _ in range(k):
        c = sum(vec)
        vec = [3 * x for x in vec] + [t * c for t in _H_TAIL]
    return tuple(vec)


def family_p4_union(k: int) -> Graph:
    """``k`` disjoint copies of P4 plus one isolated vertex."""
    if k < 1 or 4 * k + 1 > MAX_ORDER:
        raise OrderError(f"P4 union needs 1 <= k <= {(MAX_ORDER - 1) // 4}, got {k}")
    g = path(4)
    for _ in range(k - 1):
        g = disjoint_union(g, path(4))
    return disjoint_union(g, empty(1))


def p4_union_leaves(k: int) -> VertexSet:
    return VertexSet.of(4 * k + 1, (4 * i + e for i in range(k) for e in (0, 3)))


def family_cycle_leaves(k: int) -> Graph:
    """A ``C_k`` whose vertices each carry two leaves, plus ``k+1`` isolated vertices.

    Vertices ``0..k-1`` form the cycle, ``k..3k-1`` are the leaves (two per
    cycle vertex, in order) and the rest are isolated.
    """
    if k < 3 or 4 * k + 1 > MAX_ORDER:
        raise OrderError(f"cycle-with-leaves needs 3 <= k <= {(MAX_ORDER - 1) // 4}, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    for i in range(k):
        edges += [(i, k + 2 * i), (i, k + 2 * i + 1)]
    return Graph.from_edges(4 * k + 1, edges)


def cycle_leaves_leaves(k: int) -> VertexSet:
    return VertexSet.of(4 * k + 1, range(k, 3 * k))


FAMILIES = {
    "G": (family_G, 1),
    "H": (family_H, 0),
    "P4Union": (family_p4_union, 1),
    "CycleLeaves": (family_cycle_leaves, 3),
}

_ALIASES = {"g": "G", "h": "H", "p4": "P4Union", "p4union": "P4Union",
            "cycle-leaves": "CycleLeaves", "cycleleaves": "CycleLeaves"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    k: int

    def __post_init__(self):
        name = _ALIASES.get(self.family.lower(), self.family)
        if name not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        object.__setattr__(self, "family", name)
        low = FAMILIES[name][1]
        if self.k < low:
            raise OrderError(f"family {name} needs k >= {low}, got {self.k}")

    @property
    def order(self) -> int:
        return 8 * self.k + 5 if self.family == "H" else 4 * self.k + 1

    def build(self) -> Graph:
        return FAMILIES[self.family][0](self.k)

    def expected_phi(self) -> Tuple[int, ...]:
        """Closed-form phi; for the +-1 families it is read off the leaf switching."""
        if self.family == "G":
            return expected_phi_G(self.k)
        if self.family == "H":
            return expected_phi_H(self.k)
        leaf_set = (p4_union_leaves(self.k) if self.family == "P4Union"
                    else cycle_leaves_leaves(self.k))
        vec = [-1 if i in leaf_set else 1 for i in range(self.order)]
        return tuple(vec) if vec[0] > 0 else tuple(-x for x in vec)
