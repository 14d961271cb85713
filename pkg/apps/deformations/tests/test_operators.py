import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from apps.algebras.axioms import is_left_prejj
from apps.algebras.catalog import a1, a2, anti_associative_3, zero_algebra
from apps.algebras.constructions import check_morphism, sub_adjacent
from apps.algebras.exceptions import NotJJ
from apps.algebras.tests.corpus import CORPUS_SETTINGS, prejj_algebras
from apps.cohomology.cochains import Cochain
from apps.deformations.exceptions import NotNijenhuis, PreconditionNotIdempotent, PreconditionNotNilpotent
from apps.deformations.linear import check_deformation
from apps.deformations.operators import (
    OperatorEquivalence,
    deformed_product_N,
    idempotent_equivalence,
    nijenhuis_algebra_of_operators,
    nijenhuis_check,
    nijenhuis_jj_check,
    nijenhuis_trivial_deformation,
    nilpotent_equivalence,
    rota_baxter_check,
    search_nijenhuis,
    shift_preserves,
    triviality_holds,
)
from apps.ratlinalg.linalg import as_matrix, identity, zeros
from apps.ratlinalg.scalars import parse_scalar
from apps.ratlinalg.tests.strategies import matrices, small_integers

NILPOTENT = [[0, 0], [1, 0]]
PROJECTION = [[1, 0], [0, 0]]
SHIFTS = (0, 1, -2, '5/7')


def nil():
    return as_matrix(NILPOTENT)


def corpus_operators():
    """(algebra, Nijenhuis operator) pairs known without a search."""
    pairs = []
    for a in (a1(), a2(), anti_associative_3()):
        for factor in (0, 1, 3, parse_scalar('-2/5')):
            pairs.append((a, factor * identity(a.dim)))
    pairs.append((a1(), nil()))
    return pairs


def a1_operators():
    return search_nijenhuis(a1())


class NijenhuisCheckTests(SimpleTestCase):

    def test_identity_and_zero(self):
        for a in (a1(), a2()):
            self.assertTrue(nijenhuis_check(a, identity(a.dim)).holds)
            self.assertTrue(nijenhuis_check(a, zeros(a.dim, a.dim)).holds)

    def test_nilpotent_on_a1(self):
        self.assertTrue(nijenhuis_check(a1(), nil()))

    def test_projection_is_not_nijenhuis(self):
        result = nijenhuis_check(a1(), as_matrix(PROJECTION))
        self.assertFalse(result.holds)
        self.assertEqual([w.indices for w in result.witnesses], [(1, 1)])
        self.assertEqual(list(result.witnesses[0].defect), [0, 1])


class DeformedProductTests(SimpleTestCase):

    def test_identity_gives_the_algebra(self):
        for a in (a1(), a2()):
            self.assertEqual(deformed_product_N(a, identity(a.dim)), a)

    def test_scalar_multiple_scales_the_product(self):
        a = a2()
        deformed = deformed_product_N(a, 3 * identity(4))
        np.testing.assert_array_equal(deformed.sc, a.sc * 3)

    def test_nilpotent_on_a1_gives_the_zero_algebra(self):
        deformed = deformed_product_N(a1(), nil())
        self.assertEqual(deformed, zero_algebra(2))

    def test_rejects_non_nijenhuis(self):
        with self.assertRaises(NotNijenhuis):
            deformed_product_N(a1(), as_matrix(PROJECTION))

    def test_corpus(self):
        for a, n in corpus_operators() + [(a1(), n) for n in a1_operators()]:
            deformed = deformed_product_N(a, n)
            self.assertTrue(is_left_prejj(deformed))
            self.assertTrue(check_morphism(n, deformed, a).holds)


class TrivialDeformationTests(SimpleTestCase):

    def test_zero_operator(self):
        result = nijenhuis_trivial_deformation(a1(), zeros(2, 2))
        self.assertTrue(result.w.is_zero())
        self.assertTrue(result.trivial)

    def test_identity_gives_the_product(self):
        for a in (a1(), a2()):
            result = nijenhuis_trivial_deformation(a, identity(a.dim))
            self.assertEqual(result.w, Cochain.from_bilinear(a.sc))
            self.assertTrue(result.check.generates)
            self.assertEqual([str(t) for t, _ in result.samples], ['1', '-1', '1/2', '7/3'])

    def test_nilpotent_on_a1(self):
        self.assertTrue(nijenhuis_trivial_deformation(a1(), nil()).w.is_zero())

    def test_corpus(self):
        for a, n in corpus_operators() + [(a1(), n) for n in a1_operators()]:
            result = nijenhuis_trivial_deformation(a, n)
            self.assertTrue(check_deformation(a, result.w).generates)
            self.assertTrue(result.trivial)
            self.assertTrue(triviality_holds(a, n, '3/4'))

    def test_rejects_non_nijenhuis(self):
        with self.assertRaises(NotNijenhuis):
            nijenhuis_trivial_deformation(a1(), as_matrix(PROJECTION))


class RotaBaxterTests(SimpleTestCase):

    def test_zero_for_any_weight(self):
        for weight in (0, 1, -1, '2/3'):
            self.assertTrue(rota_baxter_check(a2(), zeros(4, 4), weight).holds)

    def test_identity_weight_minus_one(self):
        self.assertTrue(rota_baxter_check(a1(), identity(2), -1).holds)

    def test_identity_weight_zero_fails_on_a1(self):
        # e1·e1 against 2(e1·e1)
        self.assertFalse(rota_baxter_check(a1(), identity(2), 0).holds)

    @settings(CORPUS_SETTINGS, max_examples=100)
    @given(st.data())
    def test_weight_minus_one_is_nijenhuis(self, data):
        a = data.draw(st.sampled_from([a1, anti_associative_3, a2]))()
        n = data.draw(matrices(a.dim, a.dim, small_integers))
        self.assertEqual(rota_baxter_check(a, n, -1).holds, nijenhuis_check(a, n).holds)


class SubAdjacentTests(SimpleTestCase):

    def test_corpus_operators_transfer(self):
        for a, n in corpus_operators() + [(a1(), n) for n in a1_operators()]:
            self.assertTrue(nijenhuis_jj_check(sub_adjacent(a), n).holds)

    def test_requires_jacobi_jordan(self):
        with self.assertRaises(NotJJ):
            nijenhuis_jj_check(a2(), identity(4))

    def test_identity_and_zero(self):
        jj = sub_adjacent(a2())
        self.assertTrue(nijenhuis_jj_check(jj, identity(4)).holds)
        self.assertTrue(nijenhuis_jj_check(jj, zeros(4, 4)).holds)


class OperatorAlgebraTests(SimpleTestCase):

    def test_shifts_of_corpus_operators(self):
        for a, n in corpus_operators():
            for shift in SHIFTS:
                self.assertTrue(shift_preserves(a, n, shift))

    def test_nilpotent(self):
        self.assertEqual(nilpotent_equivalence(a1(), nil()), OperatorEquivalence(True, True))
        self.assertEqual(nilpotent_equivalence(a2(), zeros(4, 4)), OperatorEquivalence(True, True))

    def test_idempotent(self):
        self.assertEqual(idempotent_equivalence(a1(), identity(2)), OperatorEquivalence(True, True))
        self.assertEqual(idempotent_equivalence(a1(), as_matrix(PROJECTION)), OperatorEquivalence(False, False))

    def test_preconditions(self):
        with self.assertRaises(PreconditionNotNilpotent):
            nilpotent_equivalence(a1(), identity(2))
        with self.assertRaises(PreconditionNotIdempotent):
            idempotent_equivalence(a1(), nil())

    def test_report(self):
        report = nijenhuis_algebra_of_operators(a1(), nil())
        self.assertTrue(report.nijenhuis)
        self.assertTrue(report.shift_ok('5/7'))
        self.assertEqual(report.nilpotent_equiv, OperatorEquivalence(True, True))
        self.assertIsNone(report.idempotent_equiv)

    def test_report_for_zero_operator(self):
        report = nijenhuis_algebra_of_operators(a1(), zeros(2, 2))
        self.assertEqual(report.nilpotent_equiv, OperatorEquivalence(True, True))
        self.assertEqual(report.idempotent_equiv, OperatorEquivalence(True, True))

    @settings(CORPUS_SETTINGS, max_examples=30)
    @given(st.data())
    def test_shift_keeps_the_answer_on_random_maps(self, data):
        a = data.draw(prejj_algebras(max_dim=3))
        n = data.draw(matrices(a.dim, a.dim, small_integers))
        expected = nijenhuis_check(a, n).holds
        for shift in SHIFTS:
            self.assertEqual(shift_preserves(a, n, shift), expected)


class SearchTests(SimpleTestCase):

    def test_a1_over_zero_and_one(self):
        found = search_nijenhuis(a1(), entries=[0, 1], limit=16)
        found_lists = [n.tolist() for n in found]
        for expected in ([[0, 0], [0, 0]], [[1, 0], [0, 1]], NILPOTENT):
            self.assertIn(expected, found_lists)
        self.assertNotIn(PROJECTION, found_lists)

    def test_limit_is_logged(self):
        with self.assertLogs('apps.deformations.linear', 'WARNING'):
            search_nijenhuis(a1(), limit=3)
