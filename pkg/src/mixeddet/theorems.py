"""Fischer products, majorization, and executable verifiers for the
interlacing/inertia conjectures and the determinantal inequalities.

Every verifier returns VerificationReport values whose FAIL branches carry a
full reproduction bundle (matrices and index data inline).  Reference
quantities that guard against shared bugs (the characteristic polynomial for
inertia comparison) are computed by an independent Leibniz expansion rather
than through the minor-table pipeline.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import jsonio
from .matcore import (
    GR_ONE,
    GR_ZERO,
    Definiteness,
    GaussianRational,
    HermitianMatrix,
    IndexSet,
    Pencil,
    definiteness,
)
from .mixed import (
    char_from_vectors,
    charpoly_from_minors,
    delete_index_from_vector,
    minor_vector,
    mixed_det_pencil,
)
from .polycore import MultiPoly, UniPoly, inertia, interlaces, is_hyperbolic, is_nonneg_on_reals, normalized_coeff


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    instance: str
    verdict: str  # "PASS" | "FAIL"
    witness: Optional[dict] = None
    detail: str = ""

    def __post_init__(self):
        if self.verdict == "FAIL" and self.witness is None:
            raise ValueError("FAIL reports must carry a reproduction witness")

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.witness,
            "detail": self.detail,
        }


def _digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _matrix_digest(*mats: HermitianMatrix) -> str:
    return _digest([jsonio.matrix_to_obj(a) for a in mats])


# -- random instance generators ----------------------------------------------


def _rand_frac(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _rand_gauss(rng: random.Random, bound: int) -> GaussianRational:
    return GaussianRational(_rand_frac(rng, bound), _rand_frac(rng, bound))


def random_square(
    rng: random.Random, n: int, bound: int = 10
) -> List[List[GaussianRational]]:
    return [[_rand_gauss(rng, bound) for _ in range(n)] for _ in range(n)]


def random_hermitian(rng: random.Random, n: int, bound: int = 10) -> HermitianMatrix:
    """(M + M*)/2 of a random Gaussian-rational square matrix."""
    return HermitianMatrix.hermitian_part(random_square(rng, n, bound))


def gram(rows: Sequence[Sequence[GaussianRational]]) -> HermitianMatrix:
    """G * G^* for a square Gaussian-rational matrix G (always PSD)."""
    n = len(rows)
    out = [[GR_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            acc = GR_ZERO
            for k in range(n):
                acc = acc + rows[i][k] * rows[j][k].conjugate()
            out[i][j] = acc
            if i != j:
                out[j][i] = acc.conjugate()
    return HermitianMatrix(out, check=False)


def random_psd(
    rng: random.Random, n: int, bound: int = 10, force_singular: bool = False
) -> HermitianMatrix:
    g = random_square(rng, n, bound)
    if force_singular and n >= 1:
        col = rng.randrange(n)
        for i in range(n):
            g[i][col] = GR_ZERO
    return gram(g)


def random_pd(rng: random.Random, n: int, bound: int = 10) -> HermitianMatrix:
    return random_psd(rng, n, bound) + HermitianMatrix.identity(n)


def random_singular_hermitian(
    rng: random.Random, n: int, bound: int = 5
) -> HermitianMatrix:
    """Random Hermitian matrix of rank < n (sum of < n signed rank-1 terms)."""
    out = [[GR_ZERO] * n for _ in range(n)]
    for _ in range(max(0, n - 1)):
        v = [_rand_gauss(rng, bound) for _ in range(n)]
        c = GaussianRational(Fraction(rng.choice([-1, 1]) * rng.randint(1, bound)))
        for i in range(n):
            for j in range(n):
                out[i][j] = out[i][j] + c * v[i] * v[j].conjugate()
    return HermitianMatrix(out, check=False)


# -- Fischer products and majorization ----------------------------------------


def fischer_k(a: HermitianMatrix, k: int) -> Tuple[Fraction, Fraction]:
    """Symmetrized Fischer product over subsets of size k, and its average."""
    d = a.n
    if not 0 <= k <= d:
        raise ValueError(f"k={k} outside 0..{d}")
    vec = minor_vector(a)
    full = (1 << d) - 1
    s = Fraction(0)
    for mask in range(1 << d):
        if mask.bit_count() == k:
            s += vec[mask] * vec[full ^ mask]
    return s, s / math.comb(d, k)


def _fischer_k_all(vec: Sequence[Fraction], d: int) -> List[Fraction]:
    full = (1 << d) - 1
    out = [Fraction(0)] * (d + 1)
    for mask in range(1 << d):
        out[mask.bit_count()] += vec[mask] * vec[full ^ mask]
    return out


def multinomial(alpha: Sequence[int]) -> int:
    out = math.factorial(sum(alpha))
    for x in alpha:
        out //= math.factorial(x)
    return out


def fischer_alpha(
    a: HermitianMatrix, alpha: Sequence[int], _vec: Optional[Sequence[Fraction]] = None
) -> Tuple[Fraction, Fraction]:
    """Fischer product over ordered partitions with block sizes alpha, plus
    its multinomial average."""
    d = a.n
    parts = [int(x) for x in alpha]
    if any(x < 0 for x in parts):
        raise ValueError("alpha entries must be nonnegative")
    if sum(parts) != d:
        raise ValueError(f"alpha must sum to the order {d}")
    vec = minor_vector(a) if _vec is None else _vec
    memo: Dict[Tuple[int, int], Fraction] = {}

    def rec(i: int, mask: int) -> Fraction:
        if i == len(parts):
            return Fraction(1) if mask == 0 else Fraction(0)
        key = (i, mask)
        got = memo.get(key)
        if got is not None:
            return got
        size = parts[i]
        avail = [b for b in range(d) if (mask >> b) & 1]
        acc = Fraction(0)
        for combo in itertools.combinations(avail, size):
            sub = 0
            for b in combo:
                sub |= 1 << b
            acc += vec[sub] * rec(i + 1, mask ^ sub)
        memo[key] = acc
        return acc

    s = rec(0, (1 << d) - 1)
    return s, s / multinomial(parts)


def majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff x is majorized by y (x precedes y in the majorization
    preorder): decreasing partial sums of x never exceed those of y, with
    equal totals."""
    if len(x) != len(y):
        raise ValueError("majorization needs tuples of equal length")
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    px = py = 0
    for a, b in zip(xs, ys):
        px += a
        py += b
        if px > py:
            return False
    return px == py


def pinch(y: Sequence[int], i: int, t: int) -> Tuple[int, ...]:
    """Transfer t from the i-th largest entry to the (i+1)-th largest.

    The result is returned in decreasing order and is majorized by y."""
    n = len(y)
    if not 1 <= i <= n - 1:
        raise ValueError(f"pinch position {i} outside 1..{n - 1}")
    ys = sorted(y, reverse=True)
    gap = ys[i - 1] - ys[i]
    if not isinstance(t, int) or t <= 0 or Fraction(gap, 2) < t:
        raise ValueError(f"transfer amount must satisfy 0 < t <= {Fraction(gap, 2)}")
    ys[i - 1] -= t
    ys[i] += t
    return tuple(ys)


# -- independent characteristic polynomial -------------------------------------


def _perm_sign(perm: Sequence[int]) -> int:
    n = len(perm)
    inv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def charpoly_reference(b: HermitianMatrix) -> UniPoly:
    """det(zI - B) by direct Leibniz expansion over all permutations.

    Deliberately independent of the minor-table pipeline so that inertia
    comparisons do not share code with the quantity under test.  Intended
    for small orders."""
    n = b.n
    rows = b.rows
    diag_cache: Dict[int, List[GaussianRational]] = {0: [GR_ONE]}

    def diag_poly(mask: int) -> List[GaussianRational]:
        got = diag_cache.get(mask)
        if got is not None:
            return got
        low = mask & -mask
        i = low.bit_length() - 1
        rest = diag_poly(mask ^ low)
        bii = rows[i][i]
        out = [GR_ZERO] * (len(rest) + 1)
        for k, c in enumerate(rest):
            out[k + 1] = out[k + 1] + c
            out[k] = out[k] - bii * c
        diag_cache[mask] = out
        return out

    total = [GR_ZERO] * (n + 1)
    for perm in itertools.permutations(range(n)):
        fixed = 0
        scalar = GR_ONE
        for i, pi in enumerate(perm):
            if pi == i:
                fixed |= 1 << i
            else:
                scalar = scalar * (-rows[i][pi])
        if _perm_sign(perm) < 0:
            scalar = -scalar
        if scalar.is_zero:
            continue
        for k, c in enumerate(diag_poly(fixed)):
            total[k] = total[k] + scalar * c
    return UniPoly([c.real_or_raise() for c in total])


# -- verifiers -----------------------------------------------------------------


def _require(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


def verify_johnson(
    a: HermitianMatrix,
    b: HermitianMatrix,
    claims: Optional[Sequence[str]] = None,
) -> List[VerificationReport]:
    """Check real-rootedness (CONJ1), deletion interlacing (CONJ2) and the
    inertia law (CONJ3) for the pair (A, B).

    A must be PSD; CONJ3 additionally requires A to be PD and is only
    included by default when it is.
    """
    _require(a.n == b.n, f"order mismatch: {a.n} vs {b.n}")
    n = a.n
    defn = definiteness(a)
    if claims is None:
        claims = (
            ("CONJ1", "CONJ2", "CONJ3")
            if defn == Definiteness.PD
            else ("CONJ1", "CONJ2")
        )
    _require(
        defn in (Definiteness.PD, Definiteness.PSD),
        f"A must be positive semidefinite, definiteness(A) = {defn.value}",
    )
    if "CONJ3" in claims:
        _require(
            defn == Definiteness.PD,
            f"CONJ3 requires positive definite A, definiteness(A) = {defn.value}",
        )
    digest = _matrix_digest(a, b)
    bundle = {"A": jsonio.matrix_to_obj(a), "B": jsonio.matrix_to_obj(b)}
    vec_a = minor_vector(a)
    vec_b = minor_vector(b)
    p = char_from_vectors(vec_a, vec_b, n)
    reports = []

    if "CONJ1" in claims:
        if p.is_zero:
            reports.append(
                VerificationReport(
                    "CONJ1", digest, "PASS", detail="polynomial is identically zero"
                )
            )
        elif is_hyperbolic(p):
            reports.append(VerificationReport("CONJ1", digest, "PASS"))
        else:
            reports.append(
                VerificationReport(
                    "CONJ1",
                    digest,
                    "FAIL",
                    witness=dict(bundle, poly=jsonio.unipoly_to_obj(p)),
                )
            )

    if "CONJ2" in claims:
        degenerate = 0
        failure = None
        for j in range(1, n + 1):
            pj = char_from_vectors(
                delete_index_from_vector(vec_a, n, j),
                delete_index_from_vector(vec_b, n, j),
                n - 1,
            )
            if p.is_zero or pj.is_zero:
                degenerate += 1
                continue
            try:
                ok = interlaces(pj, p)
            except ValueError:
                ok = False  # a non-hyperbolic polynomial cannot interlace
            if not ok:
                failure = j
                break
        if failure is None:
            detail = f"{degenerate} deletion(s) hit the zero-polynomial convention" if degenerate else ""
            reports.append(VerificationReport("CONJ2", digest, "PASS", detail=detail))
        else:
            reports.append(
                VerificationReport(
                    "CONJ2",
                    digest,
                    "FAIL",
                    witness=dict(bundle, j=failure, poly=jsonio.unipoly_to_obj(p)),
                )
            )

    if "CONJ3" in claims:
        reference = charpoly_reference(b)
        try:
            got = inertia(p)
            expected = inertia(reference)
            ok = got == expected
        except ValueError:
            got = expected = None
            ok = False
        if ok:
            reports.append(
                VerificationReport(
                    "CONJ3", digest, "PASS", detail=f"inertia {got.as_tuple()}"
                )
            )
        else:
            reports.append(
                VerificationReport(
                    "CONJ3",
                    digest,
                    "FAIL",
                    witness=dict(
                        bundle,
                        inertia=None if got is None else got.as_tuple(),
                        expected=None if expected is None else expected.as_tuple(),
                    ),
                )
            )
    return reports


def verify_cor31(a: HermitianMatrix) -> List[VerificationReport]:
    """Average-Fischer-product monotonicity up to the middle (a),
    log-concavity (b), and the root-free Maclaurin chain (c, PD only)."""
    defn = definiteness(a)
    _require(
        defn in (Definiteness.PD, Definiteness.PSD),
        f"A must be positive semidefinite, definiteness(A) = {defn.value}",
    )
    d = a.n
    digest = _matrix_digest(a)
    bundle = {"A": jsonio.matrix_to_obj(a)}
    vec = minor_vector(a)
    s = _fischer_k_all(vec, d)
    sbar = [s[k] / math.comb(d, k) for k in range(d + 1)]
    reports = []

    bad = [
        (k, l)
        for k in range(d // 2 + 1)
        for l in range(k, d // 2 + 1)
        if sbar[k] > sbar[l]
    ]
    reports.append(
        VerificationReport("COR31a", digest, "PASS")
        if not bad
        else VerificationReport(
            "COR31a",
            digest,
            "FAIL",
            witness=dict(bundle, pair=bad[0], values=[str(v) for v in sbar]),
        )
    )

    bad_b = [
        k for k in range(1, d) if sbar[k] ** 2 < sbar[k - 1] * sbar[k + 1]
    ]
    reports.append(
        VerificationReport("COR31b", digest, "PASS")
        if not bad_b
        else VerificationReport(
            "COR31b",
            digest,
            "FAIL",
            witness=dict(bundle, k=bad_b[0], values=[str(v) for v in sbar]),
        )
    )

    if defn == Definiteness.PD:
        deta = vec[(1 << d) - 1]
        ratios = [v / deta for v in sbar]
        # k-th roots compared by cross-multiplied integer powers
        bad_c = [
            k
            for k in range(1, d)
            if ratios[k] ** (k + 1) < ratios[k + 1] ** k
        ]
        if not bad_c and ratios[d] != 1:
            bad_c = [d]
        reports.append(
            VerificationReport("COR31c", digest, "PASS")
            if not bad_c
            else VerificationReport(
                "COR31c",
                digest,
                "FAIL",
                witness=dict(bundle, k=bad_c[0], values=[str(v) for v in ratios]),
            )
        )
    return reports


def verify_tlog(
    f: MultiPoly, alpha: Sequence[int], i: int, j: int
) -> VerificationReport:
    """Log-concavity of normalized coefficients of a homogeneous real stable
    polynomial along the e_i - e_j direction through alpha."""
    al = tuple(int(x) for x in alpha)
    _require(len(al) == f.nvars, "alpha length must match the variable count")
    _require(not f.is_zero and f.is_homogeneous, "f must be homogeneous and nonzero")
    d = f.total_degree
    _require(sum(al) == d, f"alpha must sum to deg f = {d}")
    _require(i != j, "need distinct variable indices")
    ai, aj = al[i - 1], al[j - 1]
    _require(ai >= aj > 0, "need alpha_i >= alpha_j > 0")
    digest = _digest([jsonio.multipoly_to_obj(f), list(al), i, j])

    def shifted(k: int) -> Tuple[int, ...]:
        e = list(al)
        e[i - 1] += k
        e[j - 1] -= k
        return tuple(e)

    def ncoef(e: Tuple[int, ...]) -> Fraction:
        if any(x < 0 for x in e):
            return Fraction(0)
        return normalized_coeff(f, e)

    for k in range(-ai + 1, aj):
        mid = ncoef(shifted(k))
        lo = ncoef(shifted(k - 1))
        hi = ncoef(shifted(k + 1))
        if mid * mid < lo * hi:
            return VerificationReport(
                "THM32",
                digest,
                "FAIL",
                witness={
                    "alpha": list(al),
                    "i": i,
                    "j": j,
                    "k": k,
                    "values": [str(lo), str(mid), str(hi)],
                    "poly": jsonio.multipoly_to_obj(f),
                },
            )
    return VerificationReport("THM32", digest, "PASS")


def scaled_copies_poly(a: HermitianMatrix, nvars: int) -> MultiPoly:
    """The mixed determinant of (z_1*A, ..., z_nvars*A), a symmetric
    homogeneous polynomial of degree order(A)."""
    zero = HermitianMatrix.zero(a.n)
    pens = [
        Pencil(tuple(a if k == j else zero for k in range(nvars)), zero)
        for j in range(nvars)
    ]
    return mixed_det_pencil(pens)


def verify_cmajor_cgen(
    a: HermitianMatrix, alpha: Sequence[int], beta: Sequence[int]
) -> List[VerificationReport]:
    """Majorization monotonicity of average Fischer products (COR36a), the
    matching normalized-coefficient statement on the scaled-copies
    polynomial (COR34), and log-concavity along transfers (COR36b)."""
    d = a.n
    al = tuple(int(x) for x in alpha)
    be = tuple(int(x) for x in beta)
    _require(len(al) == len(be), "alpha and beta must have equal length")
    _require(sum(al) == d and sum(be) == d, f"alpha and beta must sum to the order {d}")
    _require(majorizes(be, al), "beta must be majorized by alpha")
    defn = definiteness(a)
    _require(
        defn in (Definiteness.PD, Definiteness.PSD),
        f"A must be positive semidefinite, definiteness(A) = {defn.value}",
    )
    nvars = len(al)
    digest = _digest([_matrix_digest(a), list(al), list(be)])
    bundle = {"A": jsonio.matrix_to_obj(a), "alpha": list(al), "beta": list(be)}
    vec = minor_vector(a)
    f = scaled_copies_poly(a, nvars)
    reports = []

    a_hat = normalized_coeff(f, al)
    b_hat = normalized_coeff(f, be)
    reports.append(
        VerificationReport("COR34", digest, "PASS")
        if a_hat <= b_hat
        else VerificationReport(
            "COR34",
            digest,
            "FAIL",
            witness=dict(bundle, ahat=str(a_hat), bhat=str(b_hat)),
        )
    )

    _, sb_alpha = fischer_alpha(a, al, _vec=vec)
    _, sb_beta = fischer_alpha(a, be, _vec=vec)
    reports.append(
        VerificationReport("COR36a", digest, "PASS")
        if sb_alpha <= sb_beta
        else VerificationReport(
            "COR36a",
            digest,
            "FAIL",
            witness=dict(bundle, s_alpha=str(sb_alpha), s_beta=str(sb_beta)),
        )
    )

    failure = None
    cache: Dict[Tuple[int, ...], Fraction] = {}

    def sbar(e: Tuple[int, ...]) -> Fraction:
        if any(x < 0 for x in e):
            return Fraction(0)
        got = cache.get(e)
        if got is None:
            got = fischer_alpha(a, e, _vec=vec)[1]
            cache[e] = got
        return got

    for i in range(nvars):
        for j in range(nvars):
            if i == j or not (al[i] >= al[j] > 0):
                continue
            for k in range(-al[i] + 1, al[j]):
                e_mid = list(al)
                e_mid[i] += k
                e_mid[j] -= k
                e_lo = list(e_mid)
                e_lo[i] -= 1
                e_lo[j] += 1
                e_hi = list(e_mid)
                e_hi[i] += 1
                e_hi[j] -= 1
                mid = sbar(tuple(e_mid))
                if mid * mid < sbar(tuple(e_lo)) * sbar(tuple(e_hi)):
                    failure = {"i": i + 1, "j": j + 1, "k": k}
                    break
            if failure:
                break
        if failure:
            break
    reports.append(
        VerificationReport("COR36b", digest, "PASS")
        if failure is None
        else VerificationReport(
            "COR36b", digest, "FAIL", witness=dict(bundle, **failure)
        )
    )
    return reports


def verify_laguerre_kotel(
    a: HermitianMatrix, s: IndexSet, t: IndexSet
) -> List[VerificationReport]:
    """Characteristic-polynomial product inequality (THM41), its z = 0
    determinant instance (COR42), and the singular-matrix corollary (COR45,
    emitted when det(A) = 0)."""
    _require(s.n == a.n and t.n == a.n, "index sets must match the matrix order")
    inter = s & t
    _require(
        inter.size == s.size - 1 == t.size - 1,
        f"need |S∩T| = |S|-1 = |T|-1, got |S|={s.size}, |T|={t.size}, |S∩T|={inter.size}",
    )
    union = s | t
    vec = minor_vector(a)
    digest = _digest([_matrix_digest(a), s.mask, t.mask])
    bundle = {
        "A": jsonio.matrix_to_obj(a),
        "S": list(s.members()),
        "T": list(t.members()),
    }
    reports = []

    p_s = charpoly_from_minors(vec, s)
    p_t = charpoly_from_minors(vec, t)
    p_u = charpoly_from_minors(vec, union)
    p_i = charpoly_from_minors(vec, inter)
    diff = p_s * p_t - p_u * p_i
    reports.append(
        VerificationReport("THM41", digest, "PASS")
        if is_nonneg_on_reals(diff)
        else VerificationReport(
            "THM41",
            digest,
            "FAIL",
            witness=dict(bundle, difference=jsonio.unipoly_to_obj(diff)),
        )
    )

    lhs = vec[union.mask] * vec[inter.mask]
    rhs = vec[s.mask] * vec[t.mask]
    reports.append(
        VerificationReport("COR42", digest, "PASS")
        if lhs <= rhs
        else VerificationReport(
            "COR42", digest, "FAIL", witness=dict(bundle, lhs=str(lhs), rhs=str(rhs))
        )
    )

    n = a.n
    if n >= 1 and vec[(1 << n) - 1] == 0:
        bad = None
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                vi = vec[delete_mask(n, i)]
                vj = vec[delete_mask(n, j)]
                if vi * vj < 0:
                    bad = {"i": i, "j": j, "values": [str(vi), str(vj)]}
                    break
            if bad:
                break
        reports.append(
            VerificationReport("COR45", digest, "PASS")
            if bad is None
            else VerificationReport("COR45", digest, "FAIL", witness=dict(bundle, **bad))
        )
    return reports


def delete_mask(n: int, j: int) -> int:
    """Bitmask of {1..n} minus {j}."""
    return ((1 << n) - 1) ^ (1 << (j - 1))


# -- batch runners --------------------------------------------------------------

CLAIMS = (
    "CONJ1",
    "CONJ2",
    "CONJ3",
    "COR31",
    "THM32",
    "COR34",
    "COR36",
    "THM41",
    "COR42",
    "COR45",
)


def _random_composition(rng: random.Random, total: int, parts: int) -> Tuple[int, ...]:
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    out = []
    prev = 0
    for c in cuts:
        out.append(c - prev)
        prev = c
    out.append(total - prev)
    return tuple(out)


def _random_pinch_chain(rng: random.Random, alpha: Tuple[int, ...]) -> Tuple[int, ...]:
    cur = tuple(sorted(alpha, reverse=True))
    for _ in range(rng.randint(1, 3)):
        options = [
            i
            for i in range(1, len(cur))
            if (sorted(cur, reverse=True)[i - 1] - sorted(cur, reverse=True)[i]) >= 2
        ]
        if not options:
            break
        i = rng.choice(options)
        ys = sorted(cur, reverse=True)
        tmax = (ys[i - 1] - ys[i]) // 2
        cur = pinch(cur, i, rng.randint(1, tmax))
    return cur


def _random_st_pair(
    rng: random.Random, n: int, max_size: int = 4
) -> Tuple[IndexSet, IndexSet]:
    # need two distinct indices outside the shared core, so |S| <= n - 1
    size = rng.randint(1, min(max_size, n - 1))
    core = rng.sample(range(1, n + 1), size - 1)
    rest = [i for i in range(1, n + 1) if i not in core]
    i, j = rng.sample(rest, 2)
    s = IndexSet.from_indices(n, core + [i])
    t = IndexSet.from_indices(n, core + [j])
    return s, t


def _instance_reports(claim: str, rng: random.Random, order: int, bound: int):
    if claim in ("CONJ1", "CONJ2", "CONJ3"):
        n = rng.randint(2, max(2, order))
        b = random_hermitian(rng, n, bound)
        if claim == "CONJ3":
            a = random_pd(rng, n, bound)
        else:
            a = random_psd(rng, n, bound, force_singular=rng.random() < 0.3)
        return verify_johnson(a, b, claims=(claim,))
    if claim == "COR31":
        d = rng.randint(2, max(2, order))
        a = random_pd(rng, d, bound) if rng.random() < 0.5 else random_psd(rng, d, bound)
        return verify_cor31(a)
    if claim in ("THM32", "COR34", "COR36"):
        d = rng.randint(2, max(2, min(order, 6)))
        nvars = rng.randint(2, min(4, d))
        a = random_pd(rng, d, max(2, bound // 2))
        alpha = _random_composition(rng, d, nvars)
        if claim == "THM32":
            positives = [k for k, x in enumerate(alpha) if x > 0]
            if len(positives) < 2:
                alpha = tuple(
                    x + 1 if k < 2 else x for k, x in enumerate(_random_composition(rng, d - 2, nvars))
                )
                positives = [0, 1]
            i, j = rng.sample(positives, 2)
            if alpha[i] < alpha[j]:
                i, j = j, i
            f = scaled_copies_poly(a, nvars)
            return [verify_tlog(f, alpha, i + 1, j + 1)]
        beta = _random_pinch_chain(rng, alpha)
        reports = verify_cmajor_cgen(a, alpha, beta)
        prefix = claim
        return [r for r in reports if r.claim.startswith(prefix)]
    if claim in ("THM41", "COR42", "COR45"):
        n = rng.randint(2, max(2, order))
        if claim == "COR45":
            a = random_singular_hermitian(rng, n, max(2, bound // 2))
        else:
            a = random_hermitian(rng, n, bound)
        s, t = _random_st_pair(rng, n)
        reports = verify_laguerre_kotel(a, s, t)
        return [r for r in reports if r.claim == claim]
    raise ValueError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}")


def run_verification(
    claim: str,
    instances: int = 10,
    order: int = 5,
    seed: int = 0,
    bound: int = 10,
    threads: int = 1,
) -> List[VerificationReport]:
    """Generate random instances and run the verifier for one claim (or
    "ALL").  Generation is sequential and seeded, so reports are
    deterministic; verification may fan out over threads."""
    claim = claim.upper()
    if claim == "ALL":
        out = []
        for c in CLAIMS:
            out.extend(
                run_verification(c, instances, order, seed, bound, threads)
            )
        return out
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS + ('ALL',))}")
    rng = random.Random(f"{claim}:{seed}")
    seeds = [random.Random(rng.random()) for _ in range(instances)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(
                pool.map(lambda r: _instance_reports(claim, r, order, bound), seeds)
            )
    else:
        chunks = [_instance_reports(claim, r, order, bound) for r in seeds]
    return [rep for chunk in chunks for rep in chunk]
