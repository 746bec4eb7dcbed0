"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every check is exact (zero tolerance) except the two wall-clock
performance targets of criterion 10.
"""

import itertools
import math
import random
import time
from fractions import Fraction

from mixeddet.matcore import (
    GaussianRational,
    HermitianMatrix,
    IndexSet,
    Pencil,
    pencil_eval,
)
from mixeddet.mixed import (
    char_from_vectors,
    charpoly_from_minors,
    delete_index_from_vector,
    minor_vector,
    mixed_det,
    mixed_det_char,
    mixed_det_naive,
    mixed_det_pencil,
    multivariate_char_poly,
)
from mixeddet.polycore import (
    MultiPoly,
    UniPoly,
    inertia,
    interlaces,
    is_hyperbolic,
    is_nonneg_on_reals,
    normalized_coeff,
)
from mixeddet.stability import (
    CERTIFIED_STABLE,
    SAMPLED_STABLE,
    delta_ij,
    gws_lift,
    multiaffine_stability_check,
)
from mixeddet.theorems import (
    charpoly_reference,
    fischer_alpha,
    majorizes,
    random_hermitian,
    random_pd,
    random_psd,
    scaled_copies_poly,
)


def _report(num: int, name: str, ok: bool, detail: str = ""):
    tag = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{tag}] criterion {num}: {name}{suffix}")
    assert ok, f"criterion {num} failed: {name} {detail}"


def test_criterion_01_oracle_equivalence():
    rng = random.Random(101)
    mismatches = 0
    for _ in range(200):
        n = rng.randint(1, 6)
        m = rng.randint(1, 3)
        mats = [random_hermitian(rng, n, 4) for _ in range(m)]
        if mixed_det(mats) != mixed_det_naive(mats):
            mismatches += 1
    for _ in range(100):
        n = rng.randint(1, 5)
        ell = rng.randint(1, 3)
        m = rng.randint(1, 2)
        pens = [
            Pencil(
                tuple(random_psd(rng, n, 3) for _ in range(ell)),
                random_hermitian(rng, n, 3),
            )
            for _ in range(m)
        ]
        f = mixed_det_pencil(pens)
        pt = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(ell)]
        mats = [pencil_eval(p, pt) for p in pens]
        if f.eval(pt) != mixed_det_naive(mats).real_or_raise():
            mismatches += 1
    _report(
        1,
        "fast/naive oracle equivalence",
        mismatches == 0,
        "200 tuple + 100 pencil instances, exact",
    )


def test_criterion_02_characteristic_polynomial_identity():
    rng = random.Random(102)
    bad = 0
    for _ in range(100):
        n = rng.randint(2, 7)
        b = random_hermitian(rng, n, 5)
        if mixed_det_char(HermitianMatrix.identity(n), b) != charpoly_reference(b):
            bad += 1
    _report(
        2,
        "characteristic polynomial vs independent Leibniz expansion",
        bad == 0,
        "100 Hermitian instances, exact coefficients",
    )


def test_criterion_03_real_rootedness_suite():
    rng = random.Random(103)
    bad = 0
    zeros = 0
    for k in range(500):
        n = rng.randint(2, 8)
        a = random_psd(rng, n, 4, force_singular=(k % 3 == 0))
        b = random_hermitian(rng, n, 4)
        p = mixed_det_char(a, b)
        if p.is_zero:
            zeros += 1
        elif not is_hyperbolic(p):
            bad += 1
    _report(
        3,
        "real-rootedness of the mixed characteristic polynomial",
        bad == 0,
        f"500 PSD instances (incl. singular), {zeros} hit the zero polynomial",
    )


def test_criterion_04_interlacing_suite():
    rng = random.Random(104)
    bad = 0
    degenerate = 0
    cases = []
    for k in range(198):
        n = rng.randint(2, 7)
        cases.append(
            (
                random_psd(rng, n, 4, force_singular=(k % 4 == 0)),
                random_hermitian(rng, n, 4),
            )
        )
    # crafted degenerate pairs: zero slope matrix and singular B force the
    # zero-polynomial convention branch
    cases.append((HermitianMatrix.zero(3), HermitianMatrix.diagonal([1, 0, -1])))
    cases.append((HermitianMatrix.zero(2), HermitianMatrix.diagonal([0, 5])))
    for a, b in cases:
        n = a.n
        va, vb = minor_vector(a), minor_vector(b)
        p = char_from_vectors(va, vb, n)
        for j in range(1, n + 1):
            pj = char_from_vectors(
                delete_index_from_vector(va, n, j),
                delete_index_from_vector(vb, n, j),
                n - 1,
            )
            if p.is_zero or pj.is_zero:
                degenerate += 1
                continue
            if not interlaces(pj, p):
                bad += 1
    _report(
        4,
        "deletion interlacing with the zero-polynomial convention",
        bad == 0 and degenerate > 0,
        f"200 instances, every deletion index, {degenerate} degenerate branches",
    )


def test_criterion_05_inertia_suite():
    rng = random.Random(105)
    bad = 0
    for _ in range(200):
        n = rng.randint(2, 7)
        a = random_pd(rng, n, 4)
        b = random_hermitian(rng, n, 4)
        p = mixed_det_char(a, b)
        if inertia(p) != inertia(charpoly_reference(b)):
            bad += 1
    _report(
        5,
        "inertia equality against the independent reference",
        bad == 0,
        "200 PD instances, exact triple equality",
    )


def test_criterion_06_fischer_unimodality_suite():
    rng = random.Random(106)
    bad = []
    for k in range(100):
        d = rng.randint(2, 8)
        pd = k % 2 == 0
        a = random_pd(rng, d, 3) if pd else random_psd(rng, d, 3)
        vec = minor_vector(a)
        full = (1 << d) - 1
        s = [Fraction(0)] * (d + 1)
        for mask in range(1 << d):
            s[mask.bit_count()] += vec[mask] * vec[full ^ mask]
        sbar = [s[i] / math.comb(d, i) for i in range(d + 1)]
        if any(s[i] != s[d - i] for i in range(d + 1)):
            bad.append("symmetry")
        if any(
            sbar[i] > sbar[j]
            for i in range(d // 2 + 1)
            for j in range(i, d // 2 + 1)
        ):
            bad.append("monotone")
        if any(sbar[i] ** 2 < sbar[i - 1] * sbar[i + 1] for i in range(1, d)):
            bad.append("logconcave")
        if pd:
            deta = vec[full]
            ratios = [v / deta for v in sbar]
            if any(ratios[i] ** (i + 1) < ratios[i + 1] ** i for i in range(1, d)):
                bad.append("maclaurin")
            if ratios[d] != 1:
                bad.append("normalization")
        # Newton chain on the coefficients of the self-paired polynomial
        p = mixed_det_char(a, a)
        hat = [
            (p.coeffs[i] if i <= p.degree else Fraction(0)) / math.comb(d, i)
            for i in range(d + 1)
        ]
        if any(hat[i] ** 2 < hat[i - 1] * hat[i + 1] for i in range(1, d)):
            bad.append("newton")
    _report(
        6,
        "Fischer-product symmetry, unimodality, Maclaurin and Newton chains",
        not bad,
        "100 PSD/PD instances, exact",
    )


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def test_criterion_07_majorization_suite():
    rng = random.Random(107)
    bad = []
    for nvars, d in [(2, 4), (3, 5), (4, 6)]:
        a = random_pd(rng, d, 3)
        vec = minor_vector(a)
        f = scaled_copies_poly(a, nvars)
        alphas = list(_compositions(d, nvars))
        sbar = {}
        for al in alphas:
            sb = fischer_alpha(a, al, _vec=vec)[1]
            sbar[al] = sb
            # dual route: the normalized coefficient of the scaled-copies
            # polynomial must equal the partition-enumeration average
            if normalized_coeff(f, al) != sb:
                bad.append(("route", al))
        for al in alphas:
            for be in alphas:
                if majorizes(be, al) and sbar[al] > sbar[be]:
                    bad.append(("c-major", al, be))
        for al in alphas:
            for i in range(nvars):
                for j in range(nvars):
                    if i == j or not (al[i] >= al[j] > 0):
                        continue
                    for k in range(-al[i] + 1, al[j]):
                        def sh(t):
                            e = list(al)
                            e[i] += t
                            e[j] -= t
                            return sbar.get(tuple(e), Fraction(0))

                        if sh(k) ** 2 < sh(k - 1) * sh(k + 1):
                            bad.append(("t-log", al, i, j, k))
    _report(
        7,
        "majorization monotonicity and transfer log-concavity",
        not bad,
        "all admissible pairs for (vars,deg) in {(2,4),(3,5),(4,6)}, exact",
    )


def test_criterion_08_laguerre_koteljanskii_suite():
    rng = random.Random(108)
    bad = 0
    cor45_checked = 0
    for k in range(200):
        n = rng.randint(2, 7)
        if k % 5 == 0:
            from mixeddet.theorems import random_singular_hermitian

            a = random_singular_hermitian(rng, n, 3)
        else:
            a = random_hermitian(rng, n, 4)
        vec = minor_vector(a)
        full = IndexSet.full(n)
        for size in range(1, min(4, n - 1) + 1):
            for core in itertools.combinations(range(1, n + 1), size - 1):
                rest = [i for i in range(1, n + 1) if i not in core]
                for i, j in itertools.combinations(rest, 2):
                    s = IndexSet.from_indices(n, list(core) + [i])
                    t = IndexSet.from_indices(n, list(core) + [j])
                    ps = charpoly_from_minors(vec, s)
                    pt = charpoly_from_minors(vec, t)
                    pu = charpoly_from_minors(vec, s | t)
                    pi = charpoly_from_minors(vec, s & t)
                    if not is_nonneg_on_reals(ps * pt - pu * pi):
                        bad += 1
                    if vec[(s | t).mask] * vec[(s & t).mask] > vec[s.mask] * vec[t.mask]:
                        bad += 1
        if vec[full.mask] == 0:
            cor45_checked += 1
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    vi = vec[full.mask ^ (1 << (i - 1))]
                    vj = vec[full.mask ^ (1 << (j - 1))]
                    if vi * vj < 0:
                        bad += 1
    _report(
        8,
        "Laguerre/Koteljanskii polynomial nonnegativity and determinant instances",
        bad == 0 and cor45_checked > 0,
        f"200 instances, all (S,T) pairs with |S| <= 4; {cor45_checked} singular",
    )


def test_criterion_09_stability_certificates():
    rng = random.Random(109)
    bad = []
    for _ in range(50):
        n = rng.randint(2, 5)
        f = multivariate_char_poly(random_hermitian(rng, n, 4))
        v = multiaffine_stability_check(f, samples=1000, seed=rng.randint(0, 10**6))
        if v.status not in (CERTIFIED_STABLE, SAMPLED_STABLE):
            bad.append(("witness", v.witness))
    for _ in range(50):
        nv = rng.randint(2, 4)
        terms = {}
        for mask in range(1 << nv):
            c = rng.randint(-5, 5)
            if c:
                terms[tuple((mask >> b) & 1 for b in range(nv))] = c
        if not terms:
            continue
        f = MultiPoly(nv, terms)
        i, j = rng.sample(range(1, nv + 1), 2)
        di = f.partial_derivative(i)
        cleared = f * di.partial_derivative(j) - di * f.partial_derivative(j)
        if delta_ij(f, i, j) != -cleared:
            bad.append(("identity", terms))
    for _ in range(50):
        deg = rng.randint(1, 5)
        roots = [rng.randint(-5, 5) for _ in range(deg)]
        p = UniPoly.from_roots(roots, lead=rng.choice([-2, -1, 1, 2]))
        lift = gws_lift(p, deg)
        v = multiaffine_stability_check(lift, samples=200, seed=rng.randint(0, 10**6))
        if v.status not in (CERTIFIED_STABLE, SAMPLED_STABLE):
            bad.append(("gws", roots, v.witness))
    _report(
        9,
        "criterion sampling, log-derivative identity, and symmetric lifts",
        not bad,
        "50 determinantal + 50 identity + 50 lift instances",
    )


def test_criterion_10_performance_targets():
    rng = random.Random(110)

    def int_hermitian(n, bound=5):
        rows = [[None] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = GaussianRational(rng.randint(-bound, bound))
            for j in range(i + 1, n):
                re, im = rng.randint(-bound, bound), rng.randint(-bound, bound)
                rows[i][j] = GaussianRational(re, im)
                rows[j][i] = GaussianRational(re, -im)
        return HermitianMatrix(rows, check=False)

    # warm up the jitted kernels so compilation is not billed to the target
    mixed_det([int_hermitian(3), int_hermitian(3)], mode="float")

    mats14 = [int_hermitian(14) for _ in range(2)]
    t0 = time.perf_counter()
    mixed_det(mats14, mode="float")
    float_elapsed = time.perf_counter() - t0

    mats10 = [int_hermitian(10) for _ in range(3)]
    t0 = time.perf_counter()
    mixed_det(mats10)
    exact_elapsed = time.perf_counter() - t0

    _report(
        10,
        "performance targets",
        float_elapsed <= 5.0 and exact_elapsed <= 30.0,
        f"float n=14 m=2: {float_elapsed:.2f}s (limit 5s); "
        f"exact n=10 m=3: {exact_elapsed:.2f}s (limit 30s)",
    )
