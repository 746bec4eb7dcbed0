import random
from fractions import Fraction

import pytest

from mixeddet.matcore import (
    Definiteness,
    GaussianRational,
    HermitianMatrix,
    IndexSet,
    Pencil,
    all_principal_minors,
    definiteness,
    det,
    pencil_eval,
    principal_submatrix,
    _psd_by_elimination,
)
from mixeddet.theorems import random_hermitian, random_psd, random_square, gram


def GR(re, im=0):
    return GaussianRational(re, im)


class TestGaussianRational:
    def test_arithmetic(self):
        a = GR(Fraction(1, 2), 3)
        b = GR(2, -1)
        assert a + b == GR(Fraction(5, 2), 2)
        assert a * b == GR(4, Fraction(11, 2))
        assert (a - a).is_zero
        assert a.conjugate() == GR(Fraction(1, 2), -3)
        assert (a / a) == GR(1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GR(1) / GR(0)

    def test_real_or_raise(self):
        assert GR(5).real_or_raise() == 5
        with pytest.raises(ValueError):
            GR(0, 1).real_or_raise()

    def test_mixed_scalar_ops(self):
        assert GR(1, 1) * 2 == GR(2, 2)
        assert 1 + GR(0, 1) == GR(1, 1)


class TestIndexSet:
    def test_members_and_complement(self):
        s = IndexSet.from_indices(4, [1, 3])
        assert s.members() == (1, 3)
        assert s.complement().members() == (2, 4)
        assert s.size == 2
        assert (s | s.complement()) == IndexSet.full(4)
        assert (s & s.complement()) == IndexSet.empty(4)

    def test_bounds(self):
        with pytest.raises(ValueError):
            IndexSet.from_indices(3, [4])
        with pytest.raises(ValueError):
            IndexSet(2, 4)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            IndexSet.full(2).union(IndexSet.full(3))


class TestHermitianValidation:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match=r"\(1,2\)"):
            HermitianMatrix([[GR(0), GR(1)], [GR(2), GR(0)]])

    def test_rejects_complex_diagonal(self):
        with pytest.raises(ValueError):
            HermitianMatrix([[GR(0, 1)]])

    def test_hermitian_part(self):
        m = HermitianMatrix.hermitian_part([[GR(0), GR(2)], [GR(0), GR(0)]])
        assert m.entry(1, 2) == GR(1)
        assert m.entry(2, 1) == GR(1)

    def test_zero_order_allowed(self):
        assert HermitianMatrix([]).n == 0


class TestPrincipalSubmatrix:
    def test_diagonal_selection(self):
        a = HermitianMatrix.diagonal([1, 2, 3])
        s = IndexSet.from_indices(3, [1, 3])
        assert principal_submatrix(a, s) == HermitianMatrix.diagonal([1, 3])

    def test_empty_convention(self):
        a = HermitianMatrix.diagonal([4, 5])
        sub = principal_submatrix(a, IndexSet.empty(2))
        assert sub.n == 0
        assert det(sub) == GR(1)

    def test_single_entry(self):
        a = HermitianMatrix([[0, 1], [1, 0]])
        sub = principal_submatrix(a, IndexSet.from_indices(2, [2]))
        assert sub == HermitianMatrix([[0]])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            principal_submatrix(HermitianMatrix.identity(2), IndexSet.full(3))

    def test_full_set_identity(self):
        rng = random.Random(0)
        a = random_hermitian(rng, 4)
        assert principal_submatrix(a, IndexSet.full(4)) == a

    def test_nested_translation(self):
        # A[S][T] equals A at the members of S selected by positions T
        rng = random.Random(1)
        a = random_hermitian(rng, 5)
        s = IndexSet.from_indices(5, [1, 3, 4])
        t = IndexSet.from_indices(3, [1, 3])
        translated = IndexSet.from_indices(5, [s.members()[i - 1] for i in t.members()])
        assert principal_submatrix(principal_submatrix(a, s), t) == principal_submatrix(
            a, translated
        )


class TestDet:
    def test_identity(self):
        assert det(HermitianMatrix.identity(3)) == GR(1)

    def test_antidiagonal(self):
        assert det(HermitianMatrix([[0, 1], [1, 0]])) == GR(-1)

    def test_complex_two_by_two(self):
        # [[2, i], [-i, 2]]: 2*2 - i*(-i) = 3
        a = HermitianMatrix([[GR(2), GR(0, 1)], [GR(0, -1), GR(2)]])
        assert det(a) == GR(3)

    def test_rational_entries(self):
        a = HermitianMatrix(
            [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 3), Fraction(1, 5)]]
        )
        assert det(a).real_or_raise() == Fraction(1, 10) - Fraction(1, 9)

    def test_singular_with_pivoting(self):
        a = HermitianMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 2]])
        assert det(a) == GR(-2)

    def test_hermitian_minors_real(self):
        rng = random.Random(2)
        for _ in range(10):
            a = random_hermitian(rng, rng.randint(1, 5), 6)
            for v in all_principal_minors(a).values():
                assert v.is_real


class TestAllPrincipalMinors:
    def test_diag_table(self):
        table = all_principal_minors(HermitianMatrix.diagonal([2, 3]))
        want = {(): 1, (1,): 2, (2,): 3, (1, 2): 6}
        assert {s.members(): v.real_or_raise() for s, v in table.items()} == want

    def test_identity_all_ones(self):
        table = all_principal_minors(HermitianMatrix.identity(4))
        assert all(v == GR(1) for v in table.values())

    def test_antidiagonal_enumeration(self):
        table = all_principal_minors(HermitianMatrix([[0, 1], [1, 0]]))
        want = {(): 1, (1,): 0, (2,): 0, (1, 2): -1}
        assert {s.members(): v.real_or_raise() for s, v in table.items()} == want

    def test_agrees_with_det_exhaustively(self):
        rng = random.Random(3)
        for n in (1, 3, 5, 8):
            a = random_hermitian(rng, n, 4)
            table = all_principal_minors(a)
            for s, v in table.items():
                assert v == det(principal_submatrix(a, s))


class TestDefiniteness:
    def test_examples(self):
        assert definiteness(HermitianMatrix.diagonal([1, 2])) == Definiteness.PD
        assert definiteness(HermitianMatrix([[1, 1], [1, 1]])) == Definiteness.PSD
        assert (
            definiteness(HermitianMatrix.diagonal([1, -1]))
            == Definiteness.INDEFINITE_OR_NEGATIVE
        )

    def test_gram_matrices_are_psd(self):
        rng = random.Random(4)
        for _ in range(15):
            n = rng.randint(1, 6)
            g = random_square(rng, n, 4)
            kind = definiteness(gram(g))
            assert kind in (Definiteness.PD, Definiteness.PSD)

    def test_singular_gram_is_psd_not_pd(self):
        rng = random.Random(5)
        a = random_psd(rng, 4, 4, force_singular=True)
        assert definiteness(a) == Definiteness.PSD

    def test_invertible_gram_is_pd(self):
        # G invertible <=> det(G G*) > 0, and then the Gram matrix is PD
        rng = random.Random(7)
        for _ in range(12):
            n = rng.randint(1, 5)
            a = gram(random_square(rng, n, 4))
            if det(a).real_or_raise() != 0:
                assert definiteness(a) == Definiteness.PD

    def test_elimination_fallback_matches_table(self):
        rng = random.Random(6)
        for _ in range(20):
            n = rng.randint(1, 5)
            choice = rng.random()
            if choice < 0.4:
                a = random_psd(rng, n, 3, force_singular=rng.random() < 0.5)
            else:
                a = random_hermitian(rng, n, 3)
            by_table = definiteness(a) in (Definiteness.PD, Definiteness.PSD)
            assert _psd_by_elimination(a) == by_table


class TestPencil:
    def test_eval_examples(self):
        i2 = HermitianMatrix.identity(2)
        z2 = HermitianMatrix.zero(2)
        assert pencil_eval(Pencil((i2,), z2), [5]) == i2.scaled(5)
        assert pencil_eval(
            Pencil((i2,), HermitianMatrix.diagonal([1, -1])), [0]
        ) == HermitianMatrix.diagonal([1, -1])
        p = Pencil(
            (HermitianMatrix.diagonal([1, 0]), HermitianMatrix.diagonal([0, 1])), z2
        )
        assert pencil_eval(p, [2, 3]) == HermitianMatrix.diagonal([2, 3])

    def test_shape_validation(self):
        i2 = HermitianMatrix.identity(2)
        with pytest.raises(ValueError):
            Pencil((i2,), HermitianMatrix.identity(3))
        with pytest.raises(ValueError):
            pencil_eval(Pencil((i2,), HermitianMatrix.zero(2)), [1, 2])
