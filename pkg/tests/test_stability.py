import random
from fractions import Fraction

import pytest

from mixeddet.mixed import multivariate_char_poly
from mixeddet.polycore import MultiPoly, UniPoly, homogenize, is_hyperbolic
from mixeddet.stability import (
    CERTIFIED_STABLE,
    CERTIFIED_UNSTABLE,
    SAMPLED_STABLE,
    StabilityVerdict,
    delta_ij,
    gws_lift,
    hermite_biehler_stable,
    hyperbolic_in_direction,
    line_restriction_test,
    multiaffine_stability_check,
)
from mixeddet.theorems import random_hermitian, random_psd


def mp(nvars, terms):
    return MultiPoly(nvars, terms)


class TestDeltaIJ:
    def test_examples(self):
        assert delta_ij(mp(2, {(1, 0): 1, (0, 1): 1}), 1, 2) == mp(2, {(0, 0): 1})
        assert delta_ij(mp(2, {(1, 1): 1, (0, 0): 1}), 1, 2) == mp(2, {(0, 0): -1})
        assert delta_ij(mp(2, {(1, 1): 1, (0, 0): -1}), 1, 2) == mp(2, {(0, 0): 1})

    def test_symmetry(self):
        rng = random.Random(0)
        f = _random_multiaffine(rng, 4)
        for i in range(1, 5):
            for j in range(i + 1, 5):
                assert delta_ij(f, i, j) == delta_ij(f, j, i)

    def test_log_second_derivative_identity(self):
        # Delta_ij(f) equals the negated cleared numerator of
        # d^2(log f)/dz_i dz_j, i.e. -(f * d_j(d_i f) - d_i f * d_j f).
        rng = random.Random(1)
        for _ in range(20):
            nv = rng.randint(2, 4)
            f = _random_multiaffine(rng, nv)
            i, j = rng.sample(range(1, nv + 1), 2)
            di = f.partial_derivative(i)
            numerator = f * di.partial_derivative(j) - di * f.partial_derivative(j)
            assert delta_ij(f, i, j) == -numerator

    def test_rejects_non_multiaffine(self):
        with pytest.raises(ValueError):
            delta_ij(mp(2, {(2, 0): 1}), 1, 2)
        with pytest.raises(ValueError):
            delta_ij(mp(2, {(1, 1): 1}), 1, 1)


def _random_multiaffine(rng, nvars, bound=5):
    terms = {}
    for mask in range(1 << nvars):
        if rng.random() < 0.7:
            c = rng.randint(-bound, bound)
            if c:
                terms[tuple((mask >> i) & 1 for i in range(nvars))] = c
    if not terms:
        terms[(0,) * nvars] = 1
    return MultiPoly(nvars, terms)


class TestMultiaffineCheck:
    def test_unstable_product_plus_one(self):
        v = multiaffine_stability_check(mp(2, {(1, 1): 1, (0, 0): 1}))
        assert v.status == CERTIFIED_UNSTABLE
        assert v.witness is not None

    def test_stable_linear(self):
        v = multiaffine_stability_check(mp(2, {(1, 0): 1, (0, 1): 1}))
        assert v.status == CERTIFIED_STABLE

    def test_determinantal_polynomials_sampled_stable(self):
        rng = random.Random(2)
        for _ in range(5):
            n = rng.randint(3, 5)
            f = multivariate_char_poly(random_hermitian(rng, n, 4))
            v = multiaffine_stability_check(f, samples=300, seed=7)
            assert v.status == SAMPLED_STABLE

    def test_unstable_in_three_vars_found_by_sampling(self):
        # z1 z2 + 1 padded with a spectator variable
        f = mp(3, {(1, 1, 0): 1, (0, 0, 0): 1})
        v = multiaffine_stability_check(f, samples=500, seed=0)
        assert v.status == CERTIFIED_UNSTABLE
        i, j = v.witness["i"], v.witness["j"]
        point = [Fraction(x) for x in v.witness["point"]]
        assert delta_ij(f, i, j).eval(point) < 0

    def test_zero_and_shape_errors(self):
        with pytest.raises(ValueError):
            multiaffine_stability_check(MultiPoly.zero(2))
        with pytest.raises(ValueError):
            multiaffine_stability_check(mp(1, {(2,): 1}))

    def test_constant_and_univariate(self):
        assert multiaffine_stability_check(MultiPoly.constant(3, 5)).status == CERTIFIED_STABLE
        assert multiaffine_stability_check(mp(1, {(1,): 2, (0,): -3})).status == CERTIFIED_STABLE


class TestLineRestriction:
    def test_sum_of_squares_unstable(self):
        f = mp(2, {(2, 0): 1, (0, 2): 1, (0, 0): 1})
        v = line_restriction_test(f, trials=10, seed=0)
        assert v.status == CERTIFIED_UNSTABLE
        alpha = [Fraction(x) for x in v.witness["alpha"]]
        vel = [Fraction(x) for x in v.witness["v"]]
        r = f.restrict_line(alpha, vel)
        assert r.is_zero or not is_hyperbolic(r)

    def test_stable_example(self):
        f = mp(2, {(1, 1): 1, (0, 0): -1})
        assert line_restriction_test(f, trials=40, seed=1).status == SAMPLED_STABLE

    def test_nonvanishing_constant(self):
        assert line_restriction_test(MultiPoly.constant(2, 1), trials=5).status == SAMPLED_STABLE

    def test_vanishing_line_is_witness(self):
        # z1 - z2 vanishes along diagonal lines; with bound=1 every sampled
        # direction is (1, 1), so such a line is hit quickly
        f = mp(2, {(1, 0): 1, (0, 1): -1})
        found = line_restriction_test(f, trials=50, seed=3, bound=1)
        assert found.status == CERTIFIED_UNSTABLE
        assert [Fraction(x) for x in found.witness["alpha"]][0] == Fraction(
            found.witness["alpha"][1]
        )

    def test_closure_under_derivative_and_fixing(self):
        rng = random.Random(4)
        for _ in range(4):
            n = rng.randint(2, 4)
            f = multivariate_char_poly(random_hermitian(rng, n, 4))
            assert line_restriction_test(f, trials=30, seed=11).status == SAMPLED_STABLE
            fj = f.partial_derivative(1)
            if not fj.is_zero:
                assert line_restriction_test(fj, trials=30, seed=11).status == SAMPLED_STABLE
            fixed = f.restrict(1, Fraction(rng.randint(-3, 3)))
            if not fixed.is_zero and fixed.nvars >= 1:
                assert (
                    line_restriction_test(fixed, trials=30, seed=11).status
                    == SAMPLED_STABLE
                )


class TestAugmentedPencil:
    def test_augmented_mixed_determinant_is_stable(self):
        # base + v * deletion stays real stable for PSD slope matrices, so
        # line sampling over all variables including v finds no witness
        from mixeddet.matcore import Pencil
        from mixeddet.mixed import mixed_det_pencil

        rng = random.Random(21)
        for _ in range(3):
            n = rng.randint(2, 4)
            ell = rng.randint(1, 2)
            pens = [
                Pencil(
                    tuple(random_psd(rng, n, 3) for _ in range(ell)),
                    random_hermitian(rng, n, 3),
                )
                for _ in range(2)
            ]
            g = mixed_det_pencil(pens, augment_delete=rng.randint(1, n))
            if g.is_zero:
                continue
            assert line_restriction_test(g, trials=30, seed=17).status == SAMPLED_STABLE


class TestHermiteBiehler:
    def test_examples(self):
        assert hermite_biehler_stable(UniPoly([-1, 0, 1]), UniPoly([0, 1]))
        assert not hermite_biehler_stable(UniPoly([0, 1]), UniPoly([-1, 0, 1]))
        assert hermite_biehler_stable(UniPoly([1]), UniPoly.zero())

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            hermite_biehler_stable(UniPoly.zero(), UniPoly.zero())

    def test_non_hyperbolic_is_unstable(self):
        assert not hermite_biehler_stable(UniPoly([1, 0, 1]), UniPoly([0, 1]))

    def test_deletion_pairs_from_psd_instances(self):
        # the mixed characteristic polynomial and its deletion form a stable
        # complex combination for PSD slope matrices
        rng = random.Random(5)
        from mixeddet.mixed import char_from_vectors, delete_index_from_vector, minor_vector

        for _ in range(6):
            n = rng.randint(2, 5)
            a = random_psd(rng, n, 4)
            b = random_hermitian(rng, n, 4)
            va, vb = minor_vector(a), minor_vector(b)
            p = char_from_vectors(va, vb, n)
            j = rng.randint(1, n)
            pj = char_from_vectors(
                delete_index_from_vector(va, n, j),
                delete_index_from_vector(vb, n, j),
                n - 1,
            )
            if p.is_zero or pj.is_zero:
                continue
            assert hermite_biehler_stable(p, pj)


class TestGwsLift:
    def test_examples(self):
        assert gws_lift(UniPoly([1, 1]), 2) == mp(
            2, {(0, 0): 1, (1, 0): Fraction(1, 2), (0, 1): Fraction(1, 2)}
        )
        assert gws_lift(UniPoly([0, 0, 1]), 2) == mp(2, {(1, 1): 1})

    def test_degree_cap(self):
        with pytest.raises(ValueError):
            gws_lift(UniPoly([0, 0, 1]), 1)

    def test_diagonal_recovers_input(self):
        rng = random.Random(6)
        for _ in range(15):
            deg = rng.randint(0, 5)
            p = UniPoly([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(deg + 1)])
            n = deg + rng.randint(0, 2) if not p.is_zero else 2
            n = max(n, p.degree, 1)
            lift = gws_lift(p, n)
            assert lift.restrict_diagonal() == p

    def test_hyperbolic_lift_is_stable(self):
        p = UniPoly.from_roots([1, 2])
        v = multiaffine_stability_check(gws_lift(p, 2))
        assert v.status == CERTIFIED_STABLE


class TestHyperbolicInDirection:
    def test_light_cone(self):
        cone = mp(3, {(2, 0, 0): 1, (0, 2, 0): -1, (0, 0, 2): -1})
        assert hyperbolic_in_direction(cone, [1, 0, 0], trials=40, seed=0).status == SAMPLED_STABLE

    def test_definite_quadric_fails(self):
        f = mp(2, {(2, 0): 1, (0, 2): 1})
        v = hyperbolic_in_direction(f, [1, 0], trials=40, seed=0)
        assert v.status == CERTIFIED_UNSTABLE

    def test_vanishing_direction_rejected(self):
        f = mp(2, {(1, 1): 1})
        with pytest.raises(ValueError):
            hyperbolic_in_direction(f, [1, 0])

    def test_homogenization_bridge(self):
        # real stable f <-> homogenization hyperbolic in positive directions
        rng = random.Random(7)
        for _ in range(4):
            n = rng.randint(2, 4)
            f = multivariate_char_poly(random_hermitian(rng, n, 4))
            p = homogenize(f, f.total_degree)
            e = [Fraction(0)] + [Fraction(rng.randint(1, 3)) for _ in range(n)]
            assert hyperbolic_in_direction(p, e, trials=25, seed=13).status == SAMPLED_STABLE


class TestVerdictInvariants:
    def test_unstable_requires_witness(self):
        with pytest.raises(ValueError):
            StabilityVerdict(CERTIFIED_UNSTABLE, method="exact")

    def test_to_dict_round(self):
        v = StabilityVerdict(SAMPLED_STABLE, method="lines", trials=10, seed=3)
        d = v.to_dict()
        assert d["status"] == SAMPLED_STABLE and d["trials"] == 10 and d["seed"] == 3
