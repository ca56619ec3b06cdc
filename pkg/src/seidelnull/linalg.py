"""Exact integer linear algebra for Seidel matrices.

Ranks are computed over the rationals with fraction-free (Bareiss)
elimination, so every intermediate is an integer minor of the input and
no precision is ever lost.  A modular rank is provided as a cheap lower
bound for screening.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from .errors import NullityError
from .graph import Graph

DEFAULT_PRIME = 1_000_003


@dataclass(frozen=True)
class IntMatrix:
    """Dense square matrix of Python ints."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("IntMatrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def dot(self, vec: Sequence[int]) -> Tuple[int, ...]:
        if len(vec) != self.n:
            raise ValueError(f"vector length {len(vec)} != matrix order {self.n}")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.rows)

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(i))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=object).reshape(self.n, self.n)


@dataclass(frozen=True)
class PrimitiveVector:
    """Integer vector with gcd 1 and a positive first non-zero entry."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("empty vector")
        if math.gcd(*self.entries) != 1:
            raise ValueError(f"entries {self.entries} are not coprime")
        first = next(x for x in self.entries if x)
        if first < 0:
            raise ValueError("first non-zero entry must be positive")

    @classmethod
    def normalize(cls, vec: Sequence[int]) -> "PrimitiveVector":
        """Divide out the gcd and fix the sign of ``vec``."""
        vec = [int(x) for x in vec]
        g = math.gcd(*vec)
        if g == 0:
            raise ValueError("cannot normalize the zero vector")
        first = next(x for x in vec if x)
        if first < 0:
            g = -g
        return cls(tuple(x // g for x in vec))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def seidel_matrix(g: Graph) -> IntMatrix:
    """``J - I - 2A``: 0 on the diagonal, -1 for edges, +1 for non-edges."""
    n = g.n
    rows = []
    for i in range(n):
        row = g.adj[i]
        rows.append(tuple(0 if j == i else (-1 if row >> j & 1 else 1) for j in range(n)))
    return IntMatrix(tuple(rows))


class _InexactDivision(Exception):
    pass


def _bareiss(rows: List[List[int]]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form in place; returns (rows, pivot columns).

    Pivot: largest absolute value in the column, smallest row index on ties.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        best, bestval = -1, 0
        for i in range(r, m):
            v = abs(rows[i][c])
            if v > bestval:
                best, bestval = i, v
        if best < 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        p = prow[c]
        tail = prow[c + 1:]
        for i in range(r + 1, m):
            row = rows[i]
            f = row[c]
            qr = [divmod(p * x - f * y, prev) for x, y in zip(row[c + 1:], tail)]
            if any(rem for _, rem in qr):
                raise _InexactDivision
            row[c] = 0
            row[c + 1:] = [q for q, _ in qr]
        prev = p
        pivots.append(c)
        r += 1
    return rows, pivots


def _rational_echelon(rows: List[List[int]]) -> Tuple[List[List[Fraction]], List[int]]:
    a = [[Fraction(x) for x in row] for row in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        best, bestval = -1, 0
        for i in range(r, m):
            if abs(a[i][c]) > bestval:
                best, bestval = i, abs(a[i][c])
        if best < 0:
            continue
        a[r], a[best] = a[best], a[r]
        for i in range(r + 1, m):
            f = a[i][c] / a[r][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def _echelon(m: IntMatrix):
    rows = [list(r) for r in m.rows]
    try:
        return _bareiss(rows)
    except _InexactDivision:  # pragma: no cover - Bareiss divisions are exact in theory
        return _rational_echelon([list(r) for r in m.rows])


def rank_exact(m: IntMatrix) -> int:
    """Rank over the rationals."""
    if m.n == 0:
        return 0
    return len(_echelon(m)[1])


def _check_prime(p: int) -> None:
    if p == 2:
        raise ValueError("p = 2 is rejected: every off-diagonal Seidel entry is 1 mod 2")
    if not (2 < p < 2 ** 63) or not isprime(p):
        raise ValueError(f"{p} is not an odd prime below 2**63")


def rank_lower_bound_mod_p(m: IntMatrix, p: int = DEFAULT_PRIME) -> int:
    """Rank of ``m`` over GF(p), a lower bound for the rational rank."""
    _check_prime(p)
    a = [[x % p for x in row] for row in m.rows]
    n = m.n
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        prow = [x * inv % p for x in a[r]]
        a[r] = prow
        for i in range(r + 1, n):
            f = a[i][c]
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], prow)]
        r += 1
    return r


def _powmod(x: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.ones_like(x)
    base = x % p
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rank_mod_p_batch(mats: np.ndarray, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Ranks over GF(p) of a stack of square integer matrices, shape (B, n, n).

    Vectorised over the batch; ``p`` must be below 2**31 so products stay
    inside int64.
    """
    _check_prime(p)
    if p >= 2 ** 31:
        raise ValueError("batched modular rank needs p < 2**31")
    a = np.mod(np.asarray(mats, dtype=np.int64), p)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError("expected an array of shape (B, n, n)")
    nb, n, _ = a.shape
    rank = np.zeros(nb, dtype=np.int64)
    idx = np.arange(n)
    for c in range(n):
        cand = (a[:, :, c] != 0) & (idx[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        r = rank[b]
        pv = np.argmax(cand[b], axis=1)
        pivot_rows = a[b, pv].copy()
        a[b, pv] = a[b, r]
        inv = _powmod(pivot_rows[:, c], p - 2, p)
        pivot_rows = pivot_rows * inv[:, None] % p
        a[b, r] = pivot_rows
        sub = a[b]
        f = sub[:, :, c] * (idx[None, :] > r[:, None])
        a[b] = (sub - f[:, :, None] * pivot_rows[:, None, :]) % p
        rank[b] += 1
    return rank


def kernel_primitive(m: IntMatrix) -> Optional[PrimitiveVector]:
    """The primitive kernel vector when the nullity is exactly one.

    Returns ``None`` for a nonsingular matrix and raises ``NullityError``
    when the kernel has dimension two or more.
    """
    n = m.n
    rows, pivots = _echelon(m)
    rank = len(pivots)
    if rank == n:
        return None
    if rank < n - 1:
        raise NullityError(f"nullity {n - rank} > 1, no canonical kernel vector")
    free = next(c for c in range(n) if c not in set(pivots))
    x: List[Fraction] = [Fraction(0)] * n
    x[free] = Fraction(1)
    for r in range(rank - 1, -1, -1):
        c = pivots[r]
        row = rows[r]
        s = sum((Fraction(row[j]) * x[j] for j in range(c + 1, n) if row[j]), Fraction(0))
        x[c] = -s / row[c]
    scale = math.lcm(*(q.denominator for q in x))
    return PrimitiveVector.normalize([int(q * scale) for q in x])
