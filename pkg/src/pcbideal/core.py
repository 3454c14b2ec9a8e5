"""Positive critical binomial (PCB) matrices and their combinatorial invariants.

An n-by-n integer matrix L is PCB when every off-diagonal entry is strictly
negative, every diagonal entry is strictly positive and every row sums to
zero. Column j encodes the binomial

    f_j = x_j^{a_jj} - prod_{i != j} x_i^{a_ij}

where a_ij is the magnitude of the entry at (i, j). This module computes the
associated positive grading, the syzygies that tie the generators together,
the normalized Smith decomposition and the witness binomial that separates
the mixed case from the unmixed one. No polynomial arithmetic happens here;
identity checks expand monomials termwise over the integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .intmat import (
    IntMatrix,
    SnfResult,
    adjugate,
    bezout,
    minors_gcd,
    smith_normal_form,
)


class PcbValidationError(ValueError):
    """Input fails the PCB shape contract; the message names the location."""


class NonSquare(PcbValidationError):
    def __init__(self, nrows: int, ncols: int):
        self.shape = (nrows, ncols)
        super().__init__(f"NonSquare({nrows}x{ncols})")


class TooSmall(PcbValidationError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"TooSmall(n={n})")


class DiagonalSignError(PcbValidationError):
    def __init__(self, i: int):
        self.row = i
        super().__init__(f"DiagonalSignError({i})")


class NonPositiveOffDiagonal(PcbValidationError):
    def __init__(self, i: int, j: int):
        self.position = (i, j)
        super().__init__(f"NonPositiveOffDiagonal({i},{j})")


class RowSumNonzero(PcbValidationError):
    def __init__(self, i: int):
        self.row = i
        super().__init__(f"RowSumNonzero({i})")


class DimensionTooSmall(ValueError):
    """Raised by operations that only make sense from dimension four up."""


class NegativeEntry(RuntimeError):
    """A syzygy exponent came out negative, which the row sums rule out."""


@dataclass(frozen=True)
class PcbMatrix:
    """Entry magnitudes of a validated PCB matrix; a[i][i] is the diagonal."""

    a: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def signed(self) -> IntMatrix:
        return IntMatrix(
            [
                [v if i == j else -v for j, v in enumerate(row)]
                for i, row in enumerate(self.a)
            ]
        )


def validate(rows: Sequence[Sequence[int]]) -> PcbMatrix:
    """Check the PCB shape contract and return the magnitude form.

    Positions in error messages are 1-based.
    """
    data = [list(row) for row in rows]
    n = len(data)
    if any(len(row) != n for row in data):
        raise NonSquare(n, max(len(row) for row in data))
    if n < 2:
        raise TooSmall(n)
    for i, row in enumerate(data):
        if row[i] <= 0:
            raise DiagonalSignError(i + 1)
        for j, v in enumerate(row):
            if j != i and v >= 0:
                raise NonPositiveOffDiagonal(i + 1, j + 1)
        if sum(row) != 0:
            raise RowSumNonzero(i + 1)
    return PcbMatrix(tuple(tuple(abs(v) for v in row) for row in data))


@dataclass(frozen=True)
class Binomial:
    """Difference of two monomials, kept as exponent vectors: x^plus - x^minus."""

    plus: Tuple[int, ...]
    minus: Tuple[int, ...]


def generators(P: PcbMatrix) -> Tuple[Binomial, ...]:
    """The column binomials f_1, ..., f_n."""
    n = P.n
    out = []
    for j in range(n):
        plus = tuple(P.a[j][j] if i == j else 0 for i in range(n))
        minus = tuple(0 if i == j else P.a[i][j] for i in range(n))
        out.append(Binomial(plus, minus))
    return tuple(out)


def associated_vector(P: PcbMatrix) -> Tuple[Tuple[int, ...], int, Tuple[int, ...]]:
    """Returns (m, d, nu): the common adjugate row, its gcd and the primitive part.

    Every row of adj(L) coincides for a PCB matrix and is strictly positive;
    a non-positive entry here means a bug, not bad input, so it aborts.
    """
    adj = adjugate(P.signed)
    m = adj.row(P.n - 1)
    if any(v <= 0 for v in m):
        raise AssertionError(f"adjugate row of a PCB matrix must be positive, got {m}")
    d = math.gcd(*m)
    nu = tuple(v // d for v in m)
    return m, d, nu


def grading_degree(nu: Sequence[int], exponents: Sequence[int]) -> int:
    """Weighted degree of a monomial under the grading nu."""
    if len(nu) != len(exponents):
        raise ValueError("weight vector and exponent vector differ in length")
    return sum(w * e for w, e in zip(nu, exponents))


def _cyclic_walk(start: int, end: int, n: int):
    """Indices start, start+1, ..., end taken cyclically, inclusive."""
    i = start
    while True:
        yield i
        if i == end:
            return
        i = (i + 1) % n


def syzygy_vectors(P: PcbMatrix) -> Tuple[Tuple[int, ...], ...]:
    """Exponent vectors b(1), ..., b(n) with sum_i x^{b(i)} f_i = 0.

    b(i) vanishes at positions i and i+1 (cyclically); at any other position
    j it equals a_jj minus the partial row sum of a_j* walked cyclically from
    j+1 up to i. The row sum property makes every entry nonnegative.
    """
    n = P.n
    a = P.a
    out = []
    for i in range(n):
        follower = (i + 1) % n
        vec = []
        for j in range(n):
            if j == i or j == follower:
                vec.append(0)
                continue
            value = a[j][j]
            for u in _cyclic_walk((j + 1) % n, i, n):
                value -= a[j][u]
            if value < 0:
                raise NegativeEntry(f"syzygy exponent b({i + 1})_{j + 1} = {value}")
            vec.append(value)
        out.append(tuple(vec))
    return tuple(out)


def mixedness_witness(P: PcbMatrix) -> Binomial:
    """A binomial g with x_1 g = x_n^{a_nn - a_n1} f_1 + x_2^{a_21} ... x_{n-1}^{a_{n-1,1}} f_n.

    The identity puts g into the colon ideal by x_1 while g stays outside the
    ideal itself, so g certifies an embedded component. Needs n >= 4.
    """
    n = P.n
    if n < 4:
        raise DimensionTooSmall(f"witness needs n >= 4, got n = {n}")
    a = P.a
    plus = [0] * n
    plus[0] = a[0][0] - 1
    plus[n - 1] = a[n - 1][n - 1] - a[n - 1][0]
    minus = [0] * n
    minus[0] = a[0][n - 1] - 1
    for i in range(1, n - 1):
        minus[i] = a[i][0] + a[i][n - 1]
    return Binomial(tuple(plus), tuple(minus))


def _add_exponents(u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x + y for x, y in zip(u, v))


def _accumulate(acc: Dict[Tuple[int, ...], int], exps: Tuple[int, ...], coeff: int) -> None:
    new = acc.get(exps, 0) + coeff
    if new:
        acc[exps] = new
    else:
        acc.pop(exps, None)


def syzygy_identity_residual(P: PcbMatrix) -> Dict[Tuple[int, ...], int]:
    """Termwise expansion of sum_i x^{b(i)} f_i; empty dict means the identity holds."""
    acc: Dict[Tuple[int, ...], int] = {}
    for b, f in zip(syzygy_vectors(P), generators(P)):
        _accumulate(acc, _add_exponents(b, f.plus), 1)
        _accumulate(acc, _add_exponents(b, f.minus), -1)
    return acc


def witness_identity_residual(P: PcbMatrix) -> Dict[Tuple[int, ...], int]:
    """Expansion of x_1 g - x_n^{a_nn - a_n1} f_1 - x_2^{a_21}...x_{n-1}^{a_{n-1,1}} f_n."""
    n = P.n
    a = P.a
    g = mixedness_witness(P)
    f = generators(P)
    x1 = tuple(1 if i == 0 else 0 for i in range(n))
    xn_pow = tuple(a[n - 1][n - 1] - a[n - 1][0] if i == n - 1 else 0 for i in range(n))
    g1 = tuple(a[i][0] if 0 < i < n - 1 else 0 for i in range(n))
    acc: Dict[Tuple[int, ...], int] = {}
    _accumulate(acc, _add_exponents(x1, g.plus), 1)
    _accumulate(acc, _add_exponents(x1, g.minus), -1)
    _accumulate(acc, _add_exponents(xn_pow, f[0].plus), -1)
    _accumulate(acc, _add_exponents(xn_pow, f[0].minus), 1)
    _accumulate(acc, _add_exponents(g1, f[n - 1].plus), -1)
    _accumulate(acc, _add_exponents(g1, f[n - 1].minus), 1)
    return acc


def normalized_snf(P: PcbMatrix) -> SnfResult:
    """Smith normal form of the signed matrix with the last row of P pinned to +nu.

    The bottom row of P spans the left kernel, so it must be an integer
    multiple of nu; unimodularity forces the multiple to be +1 or -1 and a
    sign flip of that single row fixes the orientation without touching D.
    """
    snf = smith_normal_form(P.signed)
    _, _, nu = associated_vector(P)
    n = P.n
    if len(snf.invariant_factors) != n - 1:
        raise AssertionError("a PCB matrix must have rank n - 1")
    last = snf.P.row(n - 1)
    if last == nu:
        return snf
    if last == tuple(-v for v in nu):
        p = snf.P.to_rows()
        p[n - 1] = [-v for v in p[n - 1]]
        return SnfResult(
            P=IntMatrix(p), D=snf.D, Q=snf.Q, invariant_factors=snf.invariant_factors
        )
    raise AssertionError(f"kernel row {last} is not proportional to nu = {nu}")


def small_dim_decomposition(P: PcbMatrix) -> Optional[SnfResult]:
    """Closed-form normalized Smith decomposition for n = 2 and n = 3.

    For n = 3 the construction needs gcd(a_31, a_32) to equal the entry gcd
    of the whole matrix; otherwise, and for any n outside {2, 3}, the answer
    is None and callers fall back to normalized_snf. The returned transforms
    are re-multiplied on the spot as a guard.
    """
    n = P.n
    a = P.a
    if n == 2:
        a11, a22 = a[0][0], a[1][1]
        d, b1, b2 = bezout(a11, a22)
        pm = IntMatrix([[b1, -b2], [a22 // d, a11 // d]])
        qm = IntMatrix([[1, 1], [0, 1]])
        dm = IntMatrix([[d, 0], [0, 0]])
        result = SnfResult(pm, dm, qm, (d,))
    elif n == 3:
        d1 = minors_gcd(P.signed, 1)
        b, c1, c2 = bezout(a[2][0], a[2][1])
        if b != d1:
            return None
        _, d, nu = associated_vector(P)
        d2 = d // d1
        num1 = -c1 * a[0][0] + c2 * a[0][1]
        num2 = c1 * a[1][0] - c2 * a[1][1]
        if num1 % d1 or num2 % d1:
            raise AssertionError("entry gcd must divide the eliminated column")
        alpha1 = num1 // d1
        alpha2 = num2 // d1
        g, s1, s2 = bezout(nu[0], nu[1])
        if g != 1:
            raise AssertionError("first two weights must be coprime when gcd(a31, a32) = d1")
        c = s2 * alpha1 - s1 * alpha2
        pm = IntMatrix([[0, 0, 1], [s2, -s1, -c], [nu[0], nu[1], nu[2]]])
        qm = IntMatrix([[-c1, a[2][1] // b, 1], [-c2, -(a[2][0] // b), 1], [0, 0, 1]])
        dm = IntMatrix([[d1, 0, 0], [0, d2, 0], [0, 0, 0]])
        result = SnfResult(pm, dm, qm, (d1, d2))
    else:
        return None
    if result.P @ P.signed @ result.Q != result.D:
        raise AssertionError("closed-form transforms failed to reproduce D")
    return result


@dataclass(frozen=True)
class TorsionProfile:
    """Cokernel shape of the signed matrix: Z^n / (column lattice)."""

    fitting_zero: int
    fitting_one: int
    order: int
    free_rank: int
    cyclic_factors: Tuple[int, ...]
    is_direct_summand: bool


def torsion_profile(P: PcbMatrix) -> TorsionProfile:
    L = P.signed
    n = P.n
    fit0 = minors_gcd(L, n)
    fit1 = minors_gcd(L, n - 1)
    snf = normalized_snf(P)
    product = 1
    for f in snf.invariant_factors:
        product *= f
    if fit0 != 0 or product != fit1:
        raise AssertionError("minor gcds disagree with the invariant factors")
    factors = tuple(f for f in snf.invariant_factors if f > 1)
    return TorsionProfile(
        fitting_zero=fit0,
        fitting_one=fit1,
        order=fit1,
        free_rank=n - snf.rank,
        cyclic_factors=factors,
        is_direct_summand=(fit1 == 1),
    )


@dataclass(frozen=True)
class PcbAnalysis:
    """One-stop summary of the discrete invariants of a PCB matrix."""

    n: int
    m: Tuple[int, ...]
    d: int
    nu: Tuple[int, ...]
    invariant_factors: Tuple[int, ...]
    syzygy_exponents: Tuple[Tuple[int, ...], ...]
    hull_prime: bool
    isolated_components: int
    embedded_components: int


def analyze(P: PcbMatrix) -> PcbAnalysis:
    m, d, nu = associated_vector(P)
    snf = normalized_snf(P)
    return PcbAnalysis(
        n=P.n,
        m=m,
        d=d,
        nu=nu,
        invariant_factors=snf.invariant_factors,
        syzygy_exponents=syzygy_vectors(P),
        hull_prime=(d == 1),
        isolated_components=d,
        embedded_components=1 if P.n >= 4 else 0,
    )
