"""Exact integer matrix algebra.

Dense arbitrary-precision integer matrices with the operations needed for
lattice work: fraction-free determinants, adjugates, gcds of minors, Smith
normal form with recorded unimodular transforms, and membership tests for
column lattices. Everything is exact; there are no floats anywhere.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple


class IntMatrix:
    """Immutable dense matrix over the integers."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries: Iterable[Sequence[int]]):
        data = tuple(tuple(int(v) for v in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("rows have unequal lengths")
        self.rows = len(data)
        self.cols = width
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self.data[i][j]
        return self.data[index]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.data))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            cols = other.transpose().data
            return IntMatrix(
                [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.data]
            )
        vec = tuple(int(x) for x in other)
        if len(vec) != self.cols:
            raise ValueError("shape mismatch in matrix-vector product")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-v for v in row] for row in self.data])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        body = ", ".join(str(list(row)) for row in self.data)
        return f"IntMatrix([{body}])"

    def to_rows(self) -> list:
        return [list(row) for row in self.data]


def determinant(m: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    a = [list(row) for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss: this division is always exact.
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _deleted(m: IntMatrix, drop_row: int, drop_col: int) -> IntMatrix:
    return IntMatrix(
        [
            [v for j, v in enumerate(row) if j != drop_col]
            for i, row in enumerate(m.data)
            if i != drop_row
        ]
    )


def adjugate(m: IntMatrix) -> IntMatrix:
    """Adjugate: entry (i, j) is (-1)^(i+j) times the minor omitting row j, column i."""
    if m.rows != m.cols:
        raise ValueError("adjugate needs a square matrix")
    n = m.rows
    if n < 2:
        raise ValueError("adjugate needs size at least 2")
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = determinant(_deleted(m, j, i))
            out[i][j] = minor if (i + j) % 2 == 0 else -minor
    return IntMatrix(out)


def minors_gcd(m: IntMatrix, t: int) -> int:
    """Gcd of all t-by-t minors; 1 for t <= 0, 0 when t exceeds both dimensions."""
    if t <= 0:
        return 1
    if t > min(m.rows, m.cols):
        return 0
    g = 0
    for rows in itertools.combinations(range(m.rows), t):
        for cols in itertools.combinations(range(m.cols), t):
            sub = IntMatrix([[m.data[i][j] for j in cols] for i in rows])
            g = math.gcd(g, determinant(sub))
            if g == 1:
                return 1
    return g


def bezout(x: int, y: int) -> Tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with g == s*x + t*y and g >= 0."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class SnfResult:
    """P @ M @ Q == D with P, Q unimodular and D diagonal with a divisibility chain."""

    P: IntMatrix
    D: IntMatrix
    Q: IntMatrix
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Smith normal form over the integers.

    The pivot at each stage is the smallest-magnitude nonzero entry of the
    working submatrix, ties broken by lowest (row, col). Elementary row and
    column operations are mirrored into P and Q. Diagonalization alone does
    not force d_i | d_{i+1}, so a gcd-absorption pass runs at the end, and
    negative diagonal entries are cleared by negating the matching row of P.
    """
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.data]
    p = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    q = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        p[dst] = [x + c * y for x, y in zip(p[dst], p[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in q:
            row[dst] += c * row[src]

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        best = None
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        dirty = False
        pv = a[t][t]
        for i in range(t + 1, nrows):
            if a[i][t]:
                c = a[i][t] // pv
                if c:
                    add_row(i, t, -c)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, ncols):
            if a[t][j]:
                c = a[t][j] // pv
                if c:
                    add_col(j, t, -c)
                if a[t][j]:
                    dirty = True
        if dirty:
            # leftover remainders are smaller than the pivot; rescan
            continue
        t += 1
    rank = t

    for i in range(rank):
        if a[i][i] < 0:
            a[i] = [-v for v in a[i]]
            p[i] = [-v for v in p[i]]

    def row_combo(i, j, m11, m12, m21, m22):
        for target in (a, p):
            ri, rj = target[i], target[j]
            target[i] = [m11 * x + m12 * y for x, y in zip(ri, rj)]
            target[j] = [m21 * x + m22 * y for x, y in zip(ri, rj)]

    def col_combo(i, j, m11, m21, m12, m22):
        # columns (ci, cj) <- (m11*ci + m21*cj, m12*ci + m22*cj)
        for target in (a, q):
            for row in target:
                ci, cj = row[i], row[j]
                row[i] = m11 * ci + m21 * cj
                row[j] = m12 * ci + m22 * cj

    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if y % x:
                g, s, u = bezout(x, y)
                # diag(x, y) -> diag(g, x*y/g) under a unimodular 2x2 pair
                row_combo(i, i + 1, s, u, -(y // g), x // g)
                col_combo(i, i + 1, 1, 1, -(u * y // g), s * x // g)
                changed = True

    factors = tuple(a[i][i] for i in range(rank))
    return SnfResult(
        P=IntMatrix(p), D=IntMatrix(a), Q=IntMatrix(q), invariant_factors=factors
    )


def lattice_contains(m: IntMatrix, v: Sequence[int]) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Decide membership of v in the lattice spanned by the columns of m.

    Returns (True, c) with m @ c == v, or (False, None). Solving D y = P v
    reduces membership to divisibility by the invariant factors plus
    vanishing of the coordinates past the rank.
    """
    vec = tuple(int(x) for x in v)
    if len(vec) != m.rows:
        raise ValueError("vector length must match the number of rows")
    snf = smith_normal_form(m)
    w = snf.P @ vec
    r = snf.rank
    y = [0] * m.cols
    for i in range(m.rows):
        if i < r:
            d = snf.invariant_factors[i]
            if w[i] % d:
                return False, None
            y[i] = w[i] // d
        elif w[i]:
            return False, None
    cert = snf.Q @ y
    if (m @ cert) != vec:
        raise AssertionError("certificate failed to reproduce the target vector")
    return True, tuple(cert)
