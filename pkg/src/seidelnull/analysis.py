"""Kernel vectors of Seidel matrices and the arithmetic they must satisfy.

When ``rank S = n - 1`` the kernel is spanned by a unique primitive
integer vector ``phi`` with positive first non-zero entry.  Its entries
are all odd, differences of entries track vertex degrees modulo 4 (and
modulo 8 on even graphs), and the order and size of the graph obey
congruences that give fast necessary conditions for singularity.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import NoWitness, NotApplicable
from .graph import (
    Graph,
    VertexSet,
    complement,
    degrees,
    even_representative,
    is_even_graph,
    is_regular,
    leaves,
    odd_vertices,
    switch,
)
from .linalg import PrimitiveVector, kernel_primitive, seidel_matrix


@dataclass(frozen=True)
class PhiVector:
    """The primitive kernel vector of a graph's Seidel matrix.

    Construction validates length, primitivity and oddness of entries.
    The kernel property itself is guaranteed by :func:`phi` and can be
    re-checked independently with :func:`check_kernel_balance`.
    """

    graph: Graph
    vec: PrimitiveVector
    all_pm_one: bool = field(init=False)
    max_abs: int = field(init=False)
    min_abs: int = field(init=False)
    entry_sum: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.vec, PrimitiveVector):
            object.__setattr__(self, "vec", PrimitiveVector(tuple(self.vec)))
        if len(self.vec) != self.graph.n:
            raise ValueError(f"vector length {len(self.vec)} != graph order {self.graph.n}")
        if any(x % 2 == 0 for x in self.vec):
            raise ValueError(f"kernel vector entries must be odd, got {self.vec.entries}")
        absv = [abs(x) for x in self.vec]
        object.__setattr__(self, "all_pm_one", all(a == 1 for a in absv))
        object.__setattr__(self, "max_abs", max(absv))
        object.__setattr__(self, "min_abs", min(absv))
        object.__setattr__(self, "entry_sum", sum(self.vec))

    @property
    def entries(self) -> Tuple[int, ...]:
        return self.vec.entries


def phi(g: Graph) -> Optional[PhiVector]:
    """``phi(G)``, or ``None`` when the Seidel matrix is nonsingular."""
    v = kernel_primitive(seidel_matrix(g))
    if v is None:
        return None
    return PhiVector(g, v)


def check_kernel_balance(p: PhiVector) -> bool:
    """At every vertex, the phi-sum over neighbours equals the sum over non-neighbours."""
    g, x = p.graph, p.entries
    total = sum(x)
    for i in range(g.n):
        nb = sum(x[j] for j in g.neighbors(i))
        if nb != total - x[i] - nb:
            return False
    return True


def check_odd_entries(p: PhiVector) -> bool:
    return all(x % 2 for x in p.entries)


@dataclass(frozen=True)
class CongruenceReport:
    """Residues of ``(phi_i - phi_j) - 2(d_i - d_j)`` over all pairs ``i < j``.

    ``mod8`` is only filled in for even graphs.
    """

    mod4: Tuple[Tuple[int, int, int], ...]
    mod8: Optional[Tuple[Tuple[int, int, int], ...]]
    passed: bool

    def violations(self):
        bad = [(i, j, 4, r) for i, j, r in self.mod4 if r]
        if self.mod8 is not None:
            bad += [(i, j, 8, r) for i, j, r in self.mod8 if r]
        return bad


def check_pair_congruences(p: PhiVector) -> CongruenceReport:
    g, x = p.graph, p.entries
    d = degrees(g)
    even = is_even_graph(g)
    mod4, mod8 = [], [] if even else None
    for i in range(g.n):
        for j in range(i + 1, g.n):
            diff = (x[i] - x[j]) - 2 * (d[i] - d[j])
            mod4.append((i, j, diff % 4))
            if even:
                mod8.append((i, j, diff % 8))
    passed = all(r == 0 for *_, r in mod4) and (mod8 is None or all(r == 0 for *_, r in mod8))
    return CongruenceReport(tuple(mod4), None if mod8 is None else tuple(mod8), passed)


class Verdict(enum.Enum):
    CERTAINLY_NONSINGULAR = "CertainlyNonsingular"
    POSSIBLY_SINGULAR = "PossiblySingular"


@dataclass(frozen=True)
class FilterVerdict:
    """Outcome of the necessary conditions for a singular Seidel matrix.

    ``odd_size_ok`` is ``None`` when the order test already failed (the
    size congruence is only defined for ``n = 1 mod 4``); ``even_size_ok``
    is ``None`` unless the graph is even.
    """

    order_ok: bool
    odd_size_ok: Optional[bool]
    even_size_ok: Optional[bool]
    verdict: Verdict

    @property
    def possibly_singular(self) -> bool:
        return self.verdict is Verdict.POSSIBLY_SINGULAR


def size_congruence(n: int, m: int, n_odd: int) -> Tuple[bool, Optional[bool]]:
    """``(order_ok, odd_size_ok)`` from order, size and number of odd vertices."""
    if n % 4 != 1:
        return False, None
    return True, (m + n_odd - (n - 1) // 4) % 4 == 0


def prefilter_singularity(g: Graph) -> FilterVerdict:
    n, m = g.n, g.size()
    n_odd = len(odd_vertices(g))
    order_ok, odd_size_ok = size_congruence(n, m, n_odd)
    even_size_ok = None
    if order_ok and n_odd == 0:
        even_size_ok = (m - (n - 1) // 4) % 4 == 0
    if odd_size_ok:
        # size parity follows from the congruence above
        assert (m - (n - 1) // 4) % 2 == 0
    ok = order_ok and odd_size_ok and even_size_ok is not False
    return FilterVerdict(
        order_ok, odd_size_ok, even_size_ok,
        Verdict.POSSIBLY_SINGULAR if ok else Verdict.CERTAINLY_NONSINGULAR,
    )


def regular_switch_witness(p: PhiVector) -> VertexSet:
    """The vertices where phi is -1; switching there gives a 2k-regular graph."""
    if not p.all_pm_one:
        raise NoWitness(f"phi has an entry of absolute value {p.max_abs}, no regular switching")
    g = p.graph
    witness = VertexSet.of(g.n, (i for i, x in enumerate(p.entries) if x == -1))
    deg = is_regular(switch(g, witness))
    assert deg is not None and 2 * deg == g.n - 1, "switched graph is not (n-1)/2-regular"
    return witness


def pm_one_from_regular(h: Graph, a: VertexSet) -> Tuple[Graph, PhiVector]:
    """Switch a 2k-regular graph of order 4k+1 at ``a``; phi is -1 on ``a`` up to sign."""
    deg = is_regular(h)
    if deg is None or h.n % 4 != 1 or 2 * deg != h.n - 1:
        raise ValueError(f"expected a {(h.n - 1) // 2}-regular graph of order 4k+1")
    g = switch(h, a)
    expected = PrimitiveVector.normalize([-1 if i in a else 1 for i in range(h.n)])
    p = phi(g)
    assert p is not None and p.vec == expected
    return g, p


def check_leaf_odd_count(g: Graph, p: PhiVector) -> bool:
    """A +-1 graph of order 4k+1 with a leaf has 2k or 2k+2 odd vertices."""
    if not p.all_pm_one:
        raise NotApplicable("phi is not a +-1 vector")
    if not len(leaves(g)):
        raise NotApplicable("graph has no leaf")
    k = (g.n - 1) // 4
    return len(odd_vertices(g)) in (2 * k, 2 * k + 2)


def tree_residues(g: Graph) -> Tuple[int, int]:
    """``(n mod 16, n_odd - 8 * (n div 16))``."""
    return g.n % 16, len(odd_vertices(g)) - 8 * (g.n // 16)


def check_tree_residues(g: Graph, p: Optional[PhiVector] = None) -> bool:
    """Whether a singular tree has residues ``(1, 0)`` or ``(9, 6)``.

    A ``False`` result is a finding to report, not an internal error.
    """
    if not g.is_tree():
        raise NotApplicable("graph is not a tree")
    if p is None:
        p = phi(g)
    if p is None:
        raise NotApplicable("Seidel matrix is nonsingular")
    return tree_residues(g) in ((1, 0), (9, 6))


def check_edge_bounds(g: Graph, p: PhiVector) -> bool:
    """``3k <= |E| <= 8k^2 - k`` for a +-1 graph of order 4k+1."""
    if not p.all_pm_one or g.n % 4 != 1:
        raise NotApplicable("requires a +-1 phi on order 4k+1")
    k = (g.n - 1) // 4
    return 3 * k <= g.size() <= 8 * k * k - k


def switched_phi(p: PhiVector, a: VertexSet) -> PrimitiveVector:
    """Predicted phi after switching at ``a``: entries on ``a`` negated, renormalized."""
    return PrimitiveVector.normalize([-x if i in a else x for i, x in enumerate(p.entries)])


def invariant_violations(p: PhiVector, switch_sets=()) -> list:
    """Names of every kernel-vector property that fails for ``p``.

    Checks the balance equations, odd entries, the pair congruences (mod 8
    on the even representative when the order is odd), the size
    congruence, ``phi(complement) == phi`` and switching covariance for
    each set in ``switch_sets`` (singletons are always included).
    """
    g = p.graph
    bad = []
    if not check_kernel_balance(p):
        bad.append("balance")
    if not check_odd_entries(p):
        bad.append("odd_entries")
    if not check_pair_congruences(p).passed:
        bad.append("pair_congruence")
    if g.n % 2:
        ev = even_representative(g)
        pe = phi(ev)
        if pe is None or pe.vec != switched_phi(p, odd_vertices(g)):
            bad.append("even_representative_phi")
        elif not is_even_graph(ev) or not check_pair_congruences(pe).passed:
            bad.append("pair_congruence_mod8")
    if not prefilter_singularity(g).possibly_singular:
        bad.append("size_congruence")
    pc = phi(complement(g))
    if pc is None or pc.vec != p.vec:
        bad.append("complement_phi")
    sets = [VertexSet.of(g.n, [i]) for i in range(g.n)] + list(switch_sets)
    for a in sets:
        ps = phi(switch(g, a))
        if ps is None or ps.vec != switched_phi(p, a):
            bad.append(f"switching_covariance{a.members()}")
            break
    return bad
