"""Mixed determinants of Hermitian tuples and pencils.

The naive oracle sums over all m^n ordered partitions; the fast path builds
one principal-minor table per matrix and combines the tables by a ranked
zeta/Moebius subset convolution over disjoint supports.  Pencil input
produces exact multivariate polynomials, either symbolically (small orders)
or by exact evaluation-interpolation on an integer grid.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import _kernels
from .matcore import (
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    HermitianMatrix,
    IndexSet,
    Pencil,
    det,
    pencil_eval,
    principal_submatrix,
    _minor_values,
)
from .polycore import MultiPoly, UniPoly


@dataclass(frozen=True)
class MinorTable:
    """All 2^n principal minors of one matrix, indexed by subset bitmask."""

    n: int
    values: Tuple[GaussianRational, ...]

    def __post_init__(self):
        if len(self.values) != 1 << self.n:
            raise ValueError("minor table must hold exactly 2^n values")

    @classmethod
    def of(cls, a: HermitianMatrix) -> "MinorTable":
        return cls(a.n, tuple(_minor_values(a)))

    def value(self, s: IndexSet) -> GaussianRational:
        if s.n != self.n:
            raise ValueError("index set does not match table order")
        return self.values[s.mask]

    def real_values(self) -> List[Fraction]:
        return [v.real_or_raise() for v in self.values]


def minor_vector(a: HermitianMatrix) -> List[Fraction]:
    """Flat list of the (real) principal minors of a Hermitian matrix."""
    return [v.real_or_raise() for v in _minor_values(a)]


def _check_tuple(matrices: Sequence[HermitianMatrix]) -> int:
    if len(matrices) < 1:
        raise ValueError("need at least one matrix")
    n = matrices[0].n
    for k, a in enumerate(matrices):
        if a.n != n:
            raise ValueError(f"matrix {k + 1} has order {a.n}, expected {n}")
    return n


def mixed_det_naive(matrices: Sequence[HermitianMatrix]) -> GaussianRational:
    """Oracle: sum over all ordered partitions of {1..n} into m blocks of
    the product of the corresponding principal minors.  Intended for small
    n and m; each minor is computed through det(principal_submatrix(...))
    with memoization."""
    mats = list(matrices)
    n = _check_tuple(mats)
    m = len(mats)
    memo: List[Dict[int, GaussianRational]] = [dict() for _ in range(m)]

    def minor(j: int, mask: int) -> GaussianRational:
        cache = memo[j]
        v = cache.get(mask)
        if v is None:
            v = det(principal_submatrix(mats[j], IndexSet(n, mask)))
            cache[mask] = v
        return v

    total = GR_ZERO
    for assignment in itertools.product(range(m), repeat=n):
        masks = [0] * m
        for i, j in enumerate(assignment):
            masks[j] |= 1 << i
        term = GR_ONE
        for j in range(m):
            term = term * minor(j, masks[j])
        total = total + term
    return total


def _int_scaled(vec: Sequence[Fraction]) -> Tuple[List[int], int]:
    scale = 1
    for v in vec:
        scale = math.lcm(scale, v.denominator)
    return [int(v * scale) for v in vec], scale


def _ranked_convolve_int(f: Sequence[int], g: Sequence[int], n: int) -> List[int]:
    size = 1 << n
    fh = [[0] * size for _ in range(n + 1)]
    gh = [[0] * size for _ in range(n + 1)]
    for s in range(size):
        k = s.bit_count()
        fh[k][s] = f[s]
        gh[k][s] = g[s]
    for rows in (fh, gh):
        for row in rows:
            for b in range(n):
                bit = 1 << b
                for s in range(size):
                    if s & bit:
                        row[s] += row[s ^ bit]
    hh = [[0] * size for _ in range(n + 1)]
    for k in range(n + 1):
        acc = hh[k]
        for i in range(k + 1):
            fr = fh[i]
            gr = gh[k - i]
            for s in range(size):
                acc[s] += fr[s] * gr[s]
    for row in hh:
        for b in range(n):
            bit = 1 << b
            for s in range(size):
                if s & bit:
                    row[s] -= row[s ^ bit]
    return [hh[s.bit_count()][s] for s in range(size)]


def _mixed_det_float(mats: Sequence[HermitianMatrix]) -> float:
    n = mats[0].n
    acc = None
    for a in mats:
        arr = np.array(
            [[complex(e.re, e.im) for e in row] for row in a.rows],
            dtype=np.complex128,
        ).reshape(n, n)
        tab = _kernels.minor_table_f64(arr)
        acc = tab if acc is None else _kernels.subset_convolve_f64(acc, tab, n)
    return float(acc[-1])


def mixed_det(
    matrices: Sequence[HermitianMatrix], mode: str = "exact"
) -> Union[GaussianRational, float]:
    """Mixed determinant via minor tables + ranked subset convolution.

    ``mode="exact"`` (default) returns an exact GaussianRational;
    ``mode="float"`` runs the machine-double kernels and returns a float.
    """
    mats = list(matrices)
    n = _check_tuple(mats)
    if mode == "float":
        return _mixed_det_float(mats)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    scaled = [_int_scaled(minor_vector(a)) for a in mats]
    acc, total_scale = scaled[0]
    for vec, s in scaled[1:]:
        acc = _ranked_convolve_int(acc, vec, n)
        total_scale *= s
    return GaussianRational(Fraction(acc[-1], total_scale))


# -- characteristic-polynomial shapes ----------------------------------------


def char_from_vectors(
    va: Sequence[Fraction], vb: Sequence[Fraction], n: int
) -> UniPoly:
    """Polynomial with coefficient of z^k equal to
    (-1)^(n-k) * sum_{|S|=k} det(A[S]) det(B[S'])."""
    full = (1 << n) - 1
    coeffs = [Fraction(0)] * (n + 1)
    for mask in range(1 << n):
        coeffs[mask.bit_count()] += va[mask] * vb[full ^ mask]
    for k in range(n + 1):
        if (n - k) % 2:
            coeffs[k] = -coeffs[k]
    return UniPoly(coeffs)


def mixed_det_char(a: HermitianMatrix, b: HermitianMatrix) -> UniPoly:
    """The univariate mixed determinant of (z*A, -B); may be the zero
    polynomial, which is returned flagged rather than raised."""
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    return char_from_vectors(minor_vector(a), minor_vector(b), a.n)


def delete_index_from_vector(
    vec: Sequence[Fraction], n: int, j: int
) -> List[Fraction]:
    """Minor vector of the matrix with row/column j removed, sliced out of
    the parent's minor vector."""
    if not 1 <= j <= n:
        raise ValueError(f"index {j} outside 1..{n}")
    bit = j - 1
    low_mask = (1 << bit) - 1
    out = []
    for m in range(1 << (n - 1)):
        expanded = (m & low_mask) | ((m >> bit) << (bit + 1))
        out.append(vec[expanded])
    return out


def charpoly_from_minors(
    vec: Sequence[Fraction], s: IndexSet
) -> UniPoly:
    """det(z*I - A[S]) assembled from A's principal-minor vector."""
    if len(vec) != 1 << s.n:
        raise ValueError("vector length does not match ambient order")
    k = s.size
    coeffs = [Fraction(0)] * (k + 1)
    sub = s.mask
    while True:
        j = sub.bit_count()
        if j % 2:
            coeffs[k - j] -= vec[sub]
        else:
            coeffs[k - j] += vec[sub]
        if sub == 0:
            break
        sub = (sub - 1) & s.mask
    return UniPoly(coeffs)


def multivariate_char_poly(a: HermitianMatrix) -> MultiPoly:
    """det(diag(z_1..z_n) - A) as an exact multi-affine polynomial."""
    n = a.n
    vec = minor_vector(a)
    full = (1 << n) - 1
    terms = {}
    for mask in range(1 << n):
        c = vec[full ^ mask]
        if not c:
            continue
        if (n - mask.bit_count()) % 2:
            c = -c
        terms[tuple((mask >> i) & 1 for i in range(n))] = c
    return MultiPoly(n, terms)


# -- pencils ------------------------------------------------------------------
#
# Symbolic path: per-pencil minor tables with polynomial values, computed by
# division-free column-mask expansion in complex pairs (re, im) of rational
# multivariate polynomials, then combined by direct subset convolution over
# the polynomial ring.


_PolyPair = Tuple[MultiPoly, MultiPoly]


def _pp_add(a: _PolyPair, b: _PolyPair) -> _PolyPair:
    return (a[0] + b[0], a[1] + b[1])


def _pp_sub(a: _PolyPair, b: _PolyPair) -> _PolyPair:
    return (a[0] - b[0], a[1] - b[1])


def _pp_mul(a: _PolyPair, b: _PolyPair) -> _PolyPair:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _pencil_entry_pairs(p: Pencil) -> List[List[_PolyPair]]:
    n, ell = p.order, p.ell
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            re_terms: Dict[Tuple[int, ...], Fraction] = {}
            im_terms: Dict[Tuple[int, ...], Fraction] = {}
            zero_e = (0,) * ell
            c = p.constant.rows[i][j]
            if c.re:
                re_terms[zero_e] = c.re
            if c.im:
                im_terms[zero_e] = c.im
            for k, ak in enumerate(p.coeffs):
                e = tuple(1 if t == k else 0 for t in range(ell))
                v = ak.rows[i][j]
                if v.re:
                    re_terms[e] = v.re
                if v.im:
                    im_terms[e] = v.im
            row.append((MultiPoly(ell, re_terms), MultiPoly(ell, im_terms)))
        rows.append(row)
    return rows


def _poly_det(entries: List[List[_PolyPair]], idx: Sequence[int], ell: int) -> _PolyPair:
    k = len(idx)
    one = (MultiPoly.constant(ell, 1), MultiPoly.zero(ell))
    if k == 0:
        return one
    memo: Dict[int, _PolyPair] = {0: one}

    def rec(colmask: int) -> _PolyPair:
        got = memo.get(colmask)
        if got is not None:
            return got
        r = k - colmask.bit_count()
        row = entries[idx[r]]
        acc = None
        pos = 0
        rem = colmask
        while rem:
            low = rem & -rem
            c = low.bit_length() - 1
            term = _pp_mul(row[idx[c]], rec(colmask ^ low))
            if pos % 2:
                term = (-term[0], -term[1])
            acc = term if acc is None else _pp_add(acc, term)
            pos += 1
            rem ^= low
        memo[colmask] = acc
        return acc

    return rec((1 << k) - 1)


def _poly_minor_table(p: Pencil) -> List[_PolyPair]:
    entries = _pencil_entry_pairs(p)
    n, ell = p.order, p.ell
    out = []
    for mask in range(1 << n):
        idx = [i for i in range(n) if (mask >> i) & 1]
        out.append(_poly_det(entries, idx, ell))
    return out


def _ring_convolve(
    f: List[_PolyPair], g: List[_PolyPair], n: int, ell: int
) -> List[_PolyPair]:
    size = 1 << n
    out = []
    zero = (MultiPoly.zero(ell), MultiPoly.zero(ell))
    for s in range(size):
        acc = zero
        sub = s
        while True:
            acc = _pp_add(acc, _pp_mul(f[sub], g[s ^ sub]))
            if sub == 0:
                break
            sub = (sub - 1) & s
        out.append(acc)
    return out


def _ring_convolve_at_full(
    f: List[_PolyPair], g: List[_PolyPair], n: int, ell: int
) -> _PolyPair:
    full = (1 << n) - 1
    acc = (MultiPoly.zero(ell), MultiPoly.zero(ell))
    for sub in range(1 << n):
        acc = _pp_add(acc, _pp_mul(f[sub], g[full ^ sub]))
    return acc


def _check_pencils(pencils: Sequence[Pencil]) -> Tuple[int, int]:
    if len(pencils) < 1:
        raise ValueError("need at least one pencil")
    n, ell = pencils[0].order, pencils[0].ell
    for k, p in enumerate(pencils):
        if p.order != n or p.ell != ell:
            raise ValueError(
                f"pencil {k + 1} has shape (order={p.order}, ell={p.ell}), "
                f"expected (order={n}, ell={ell})"
            )
    return n, ell


def _delete_pencil(p: Pencil, j: int) -> Pencil:
    s = IndexSet.full(p.order).difference(IndexSet.from_indices(p.order, [j]))
    return Pencil(
        tuple(principal_submatrix(a, s) for a in p.coeffs),
        principal_submatrix(p.constant, s),
    )


def _lagrange_basis(deg: int) -> List[UniPoly]:
    out = []
    for v in range(deg + 1):
        p = UniPoly([1])
        denom = Fraction(1)
        for u in range(deg + 1):
            if u == v:
                continue
            p = p * UniPoly([-u, 1])
            denom *= v - u
        out.append(p * (1 / denom))
    return out


def _interpolate(
    ell: int, deg: int, evalfn: Callable[[Tuple[int, ...]], Fraction]
) -> MultiPoly:
    if ell == 0:
        return MultiPoly(0, {(): evalfn(())})
    basis = _lagrange_basis(deg)
    parts: Dict[Tuple[int, ...], Fraction] = {}
    for v in range(deg + 1):
        tail = _interpolate(ell - 1, deg, lambda rest, v=v: evalfn((v,) + rest))
        for i, cl in enumerate(basis[v].coeffs):
            if not cl:
                continue
            for e, c in tail.terms.items():
                key = (i,) + e
                prev = parts.get(key)
                val = cl * c if prev is None else prev + cl * c
                if val:
                    parts[key] = val
                elif prev is not None:
                    del parts[key]
    return MultiPoly(ell, parts)


def mixed_det_pencil(
    pencils: Sequence[Pencil],
    augment_delete: Optional[int] = None,
    method: str = "auto",
) -> MultiPoly:
    """Exact multivariate mixed determinant of a tuple of pencils.

    With ``augment_delete=j`` the result gains one trailing variable v and
    equals base + v * (mixed determinant of the pencils with row/column j
    removed).  ``method`` is ``auto`` (symbolic up to order 8, then
    evaluation-interpolation), ``symbolic`` or ``interpolation``.
    """
    pens = list(pencils)
    n, ell = _check_pencils(pens)
    if augment_delete is not None:
        if not 1 <= augment_delete <= n:
            raise ValueError(f"deletion index {augment_delete} outside 1..{n}")
        base = mixed_det_pencil(pens, method=method)
        deleted = mixed_det_pencil(
            [_delete_pencil(p, augment_delete) for p in pens], method=method
        )
        terms = {e + (0,): c for e, c in base.terms.items()}
        for e, c in deleted.terms.items():
            terms[e + (1,)] = c
        return MultiPoly(ell + 1, terms)

    if method == "auto":
        method = "symbolic" if n <= 8 else "interpolation"
    if method == "symbolic":
        tables = [_poly_minor_table(p) for p in pens]
        acc = tables[0]
        for t in tables[1:-1]:
            acc = _ring_convolve(acc, t, n, ell)
        if len(tables) > 1:
            re, im = _ring_convolve_at_full(acc, tables[-1], n, ell)
        else:
            re, im = acc[(1 << n) - 1]
        if not im.is_zero:
            raise AssertionError("mixed determinant of Hermitian pencils must be real")
        return re
    if method == "interpolation":
        def ev(point: Tuple[int, ...]) -> Fraction:
            mats = [pencil_eval(p, point) for p in pens]
            return mixed_det(mats).real_or_raise()

        return _interpolate(ell, n, ev)
    raise ValueError(f"unknown method {method!r}")
