"""Exact matrices over Gaussian rationals.

Hermitian matrices, index subsets as bitmasks, principal submatrices,
fraction-free determinants, definiteness tests, and linear matrix pencils.
All values are immutable by convention and every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

RationalLike = Union[int, str, Fraction]


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """Complex number ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def real_or_raise(self) -> Fraction:
        if self.im:
            raise ValueError(f"expected a real value, got {self}")
        return self.re

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / den,
            (self.im * o.re - self.re * o.im) / den,
        )

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)


@dataclass(frozen=True)
class IndexSet:
    """Subset of {1, ..., n} stored as a bitmask (bit i-1 holds index i)."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient size must be nonnegative")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "IndexSet":
        mask = 0
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"index {i} outside 1..{n}")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "IndexSet":
        return cls(n, 0)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def members(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if (self.mask >> i) & 1)

    def contains(self, i: int) -> bool:
        return 1 <= i <= self.n and bool((self.mask >> (i - 1)) & 1)

    def complement(self) -> "IndexSet":
        return IndexSet(self.n, ((1 << self.n) - 1) ^ self.mask)

    def _check_ambient(self, other: "IndexSet"):
        if self.n != other.n:
            raise ValueError("index sets live in different ambient sizes")

    def union(self, other: "IndexSet") -> "IndexSet":
        self._check_ambient(other)
        return IndexSet(self.n, self.mask | other.mask)

    def intersection(self, other: "IndexSet") -> "IndexSet":
        self._check_ambient(other)
        return IndexSet(self.n, self.mask & other.mask)

    def difference(self, other: "IndexSet") -> "IndexSet":
        self._check_ambient(other)
        return IndexSet(self.n, self.mask & ~other.mask)

    __or__ = union
    __and__ = intersection

    def is_subset(self, other: "IndexSet") -> bool:
        self._check_ambient(other)
        return self.mask & ~other.mask == 0

    @staticmethod
    def all_subsets(n: int) -> Iterator["IndexSet"]:
        for mask in range(1 << n):
            yield IndexSet(n, mask)

    def __repr__(self):
        return f"IndexSet({self.n}, {{{', '.join(map(str, self.members()))}}})"


class HermitianMatrix:
    """Square matrix over Gaussian rationals with A equal to its conjugate
    transpose.  The 0x0 matrix is allowed; its determinant is 1."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence], *, check: bool = True):
        conv = tuple(
            tuple(
                e if isinstance(e, GaussianRational) else GaussianRational(e)
                for e in row
            )
            for row in rows
        )
        n = len(conv)
        for i, row in enumerate(conv):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has length {len(row)}, expected {n}")
        if check:
            for i in range(n):
                for j in range(i, n):
                    if conv[i][j] != conv[j][i].conjugate():
                        raise ValueError(
                            f"not Hermitian: entry ({i + 1},{j + 1}) = {conv[i][j]} "
                            f"is not the conjugate of entry ({j + 1},{i + 1}) = {conv[j][i]}"
                        )
        self.n = n
        self.rows = conv

    @classmethod
    def identity(cls, n: int) -> "HermitianMatrix":
        return cls(
            [[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)],
            check=False,
        )

    @classmethod
    def zero(cls, n: int) -> "HermitianMatrix":
        return cls([[GR_ZERO] * n for _ in range(n)], check=False)

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "HermitianMatrix":
        n = len(values)
        vals = [as_fraction(v) for v in values]
        return cls(
            [
                [GaussianRational(vals[i]) if i == j else GR_ZERO for j in range(n)]
                for i in range(n)
            ],
            check=False,
        )

    @classmethod
    def hermitian_part(cls, rows: Sequence[Sequence]) -> "HermitianMatrix":
        """(M + M*)/2 of an arbitrary square matrix."""
        conv = [
            [e if isinstance(e, GaussianRational) else GaussianRational(e) for e in row]
            for row in rows
        ]
        n = len(conv)
        half = Fraction(1, 2)
        out = [
            [(conv[i][j] + conv[j][i].conjugate()) * half for j in range(n)]
            for i in range(n)
        ]
        return cls(out, check=False)

    @property
    def order(self) -> int:
        return self.n

    def entry(self, i: int, j: int) -> GaussianRational:
        """1-based entry access."""
        return self.rows[i - 1][j - 1]

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.rows for e in row)

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("order mismatch in matrix addition")
        return HermitianMatrix(
            [
                [self.rows[i][j] + other.rows[i][j] for j in range(self.n)]
                for i in range(self.n)
            ],
            check=False,
        )

    def scaled(self, c: RationalLike) -> "HermitianMatrix":
        """Scale by a real rational (keeps the matrix Hermitian)."""
        c = as_fraction(c)
        return HermitianMatrix(
            [[e * c for e in row] for row in self.rows], check=False
        )

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.rows
        )
        return f"HermitianMatrix({self.n}: {body})"


@dataclass(frozen=True)
class Pencil:
    """Linear matrix pencil z_1*A_1 + ... + z_ell*A_ell + B of shared order."""

    coeffs: Tuple[HermitianMatrix, ...]
    constant: HermitianMatrix

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("a pencil needs at least one variable coefficient")
        n = self.constant.n
        for k, a in enumerate(self.coeffs):
            if a.n != n:
                raise ValueError(
                    f"coefficient {k + 1} has order {a.n}, expected {n}"
                )

    @property
    def ell(self) -> int:
        return len(self.coeffs)

    @property
    def order(self) -> int:
        return self.constant.n


class Definiteness(Enum):
    PD = "PD"
    PSD = "PSD"
    INDEFINITE_OR_NEGATIVE = "INDEFINITE/NEGATIVE"


def principal_submatrix(a: HermitianMatrix, s: IndexSet) -> HermitianMatrix:
    """Rows and columns of ``a`` restricted to ``s``; the empty set yields
    the 0x0 matrix."""
    if s.n != a.n:
        raise ValueError(f"index set over 1..{s.n} applied to order-{a.n} matrix")
    idx = [i - 1 for i in s.members()]
    return HermitianMatrix(
        [[a.rows[i][j] for j in idx] for i in idx], check=False
    )


# -- fraction-free determinant kernels -------------------------------------
#
# Entries are cleared to Gaussian integers once (a single global denominator
# lcm), then eliminated by Bareiss' algorithm; every interior division is
# exact in Z[i].


def _cleared_int_entries(
    rows: Sequence[Sequence[GaussianRational]],
) -> Tuple[List[List[Tuple[int, int]]], int, bool]:
    scale = 1
    for row in rows:
        for e in row:
            scale = math.lcm(scale, e.re.denominator, e.im.denominator)
    out = []
    all_real = True
    for row in rows:
        r = []
        for e in row:
            re = int(e.re * scale)
            im = int(e.im * scale)
            if im:
                all_real = False
            r.append((re, im))
        out.append(r)
    return out, scale, all_real


def _bareiss_int(m: List[List[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (pk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def _bareiss_gauss(m: List[List[Tuple[int, int]]]) -> Tuple[int, int]:
    n = len(m)
    if n == 0:
        return (1, 0)
    sign = 1
    pr, pi = 1, 0
    for k in range(n - 1):
        if m[k][k] == (0, 0):
            for i in range(k + 1, n):
                if m[i][k] != (0, 0):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return (0, 0)
        pkr, pki = m[k][k]
        rowk = m[k]
        den = pr * pr + pi * pi
        for i in range(k + 1, n):
            rowi = m[i]
            air, aii = rowi[k]
            for j in range(k + 1, n):
                akr, aki = rowk[j]
                br, bi = rowi[j]
                tr = pkr * br - pki * bi - (air * akr - aii * aki)
                ti = pkr * bi + pki * br - (air * aki + aii * akr)
                rowi[j] = ((tr * pr + ti * pi) // den, (ti * pr - tr * pi) // den)
            rowi[k] = (0, 0)
        pr, pi = pkr, pki
    vr, vi = m[n - 1][n - 1]
    return (sign * vr, sign * vi)


def _det_cleared(
    entries: List[List[Tuple[int, int]]],
    idx: Sequence[int],
    all_real: bool,
) -> Tuple[int, int]:
    if all_real:
        sub = [[entries[i][j][0] for j in idx] for i in idx]
        return (_bareiss_int(sub), 0)
    sub = [[entries[i][j] for j in idx] for i in idx]
    return _bareiss_gauss(sub)


def det(a: HermitianMatrix) -> GaussianRational:
    """Exact determinant; the 0x0 determinant is 1.  Hermitian input always
    yields a real value, which is asserted."""
    entries, scale, all_real = _cleared_int_entries(a.rows)
    dr, di = _det_cleared(entries, range(a.n), all_real)
    denom = scale**a.n
    value = GaussianRational(Fraction(dr, denom), Fraction(di, denom))
    if not value.is_real:
        raise AssertionError(f"Hermitian determinant came out non-real: {value}")
    return value


def _minor_values(a: HermitianMatrix) -> List[GaussianRational]:
    """All 2^n principal minors, indexed by subset bitmask."""
    n = a.n
    entries, scale, all_real = _cleared_int_entries(a.rows)
    out: List[GaussianRational] = [GR_ONE] * (1 << n)
    pows = [scale**k for k in range(n + 1)]
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if (mask >> i) & 1]
        dr, di = _det_cleared(entries, idx, all_real)
        denom = pows[len(idx)]
        out[mask] = GaussianRational(Fraction(dr, denom), Fraction(di, denom))
    return out


def all_principal_minors(a: HermitianMatrix) -> Dict[IndexSet, GaussianRational]:
    """Map every subset S to det(A[S]); the empty set maps to 1."""
    vals = _minor_values(a)
    return {IndexSet(a.n, mask): vals[mask] for mask in range(1 << a.n)}


def _leading_minors(a: HermitianMatrix) -> List[Fraction]:
    entries, scale, all_real = _cleared_int_entries(a.rows)
    out = []
    for k in range(1, a.n + 1):
        dr, di = _det_cleared(entries, range(k), all_real)
        if di:
            raise AssertionError("leading minor of a Hermitian matrix must be real")
        out.append(Fraction(dr, scale**k))
    return out


def _psd_by_elimination(a: HermitianMatrix) -> bool:
    # Exact Schur-complement test: a Hermitian matrix is PSD iff repeated
    # pivoting on positive diagonal entries empties it, with any zero
    # diagonal forcing its whole row to vanish.
    m = [list(row) for row in a.rows]
    active = list(range(a.n))
    while active:
        pivot = None
        for i in active:
            d = m[i][i]
            if d.im or d.re < 0:
                return False
            if d.re > 0 and pivot is None:
                pivot = i
        if pivot is None:
            return all(m[i][j].is_zero for i in active for j in active)
        p = m[pivot][pivot]
        rest = [i for i in active if i != pivot]
        for i in rest:
            ci = m[i][pivot]
            if ci.is_zero:
                continue
            for j in rest:
                m[i][j] = m[i][j] - ci * m[pivot][j] / p
        active = rest
    return True


def definiteness(a: HermitianMatrix) -> Definiteness:
    """PD iff all leading principal minors are positive; PSD iff every
    principal minor is nonnegative (decided exactly)."""
    leading = _leading_minors(a)
    if all(v > 0 for v in leading):
        return Definiteness.PD
    if a.n <= 12:
        vals = _minor_values(a)
        if all(v.real_or_raise() >= 0 for v in vals):
            return Definiteness.PSD
        return Definiteness.INDEFINITE_OR_NEGATIVE
    if _psd_by_elimination(a):
        return Definiteness.PSD
    return Definiteness.INDEFINITE_OR_NEGATIVE


def pencil_eval(pencil: Pencil, z: Sequence[RationalLike]) -> HermitianMatrix:
    """Evaluate the pencil at a real rational point."""
    if len(z) != pencil.ell:
        raise ValueError(f"expected {pencil.ell} coordinates, got {len(z)}")
    acc = pencil.constant
    for zk, ak in zip(z, pencil.coeffs):
        acc = acc + ak.scaled(as_fraction(zk))
    return acc
