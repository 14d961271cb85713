from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings
from hypothesis import strategies as st

from apps.algebras.axioms import anti_associator, check_axioms, jacobian
from apps.algebras.catalog import a1, a2, anti_associative_6, unital_field, zero_algebra
from apps.algebras.constructions import sub_adjacent
from apps.algebras.structures import Algebra, multiply
from apps.algebras.tests.corpus import CORPUS_SETTINGS, prejj_algebras
from apps.ratlinalg.exceptions import DimensionMismatch
from apps.ratlinalg.linalg import as_vector, unit_vector, zero_vector
from apps.ratlinalg.tests.strategies import small_integers, vectors


def e(n, i):
    return unit_vector(n, i - 1)


class MultiplyTests(SimpleTestCase):

    def test_a1_square(self):
        np.testing.assert_array_equal(multiply(a1(), e(2, 1), e(2, 1)), e(2, 2))

    def test_a2_product(self):
        np.testing.assert_array_equal(multiply(a2(), e(4, 1), e(4, 3)), as_vector([0, 0, 0, Fraction(5, 9)]))

    def test_zero_factor(self):
        np.testing.assert_array_equal(multiply(a2(), zero_vector(4), e(4, 1)), zero_vector(4))

    def test_length_is_checked(self):
        with self.assertRaises(DimensionMismatch):
            multiply(a1(), e(3, 1), e(2, 1))

    def test_entries_are_one_based(self):
        self.assertEqual(a2().entries()[0], (1, 1, 2, Fraction(1, 2)))


class MultilinearExpressionTests(SimpleTestCase):

    def test_anti_associator_vanishes_on_a1(self):
        self.assertFalse(np.count_nonzero(anti_associator(a1(), e(2, 1), e(2, 1), e(2, 1))))

    def test_anti_associator_vanishes_on_a2(self):
        self.assertFalse(np.count_nonzero(anti_associator(a2(), e(4, 1), e(4, 1), e(4, 3))))

    def test_jacobian_of_a1(self):
        self.assertFalse(np.count_nonzero(jacobian(a1(), e(2, 1), e(2, 1), e(2, 1))))

    def test_jacobian_of_sub_adjacent_a2(self):
        self.assertFalse(np.count_nonzero(jacobian(sub_adjacent(a2()), e(4, 1), e(4, 1), e(4, 3))))


class AxiomReportTests(SimpleTestCase):

    def test_a1_satisfies_everything(self):
        report = check_axioms(a1())
        self.assertTrue(all(report.flags().values()))
        self.assertEqual(report.witnesses, ())
        self.assertEqual(report.jacobian_product, 'product')

    def test_a2_is_left_prejj_but_not_commutative(self):
        report = check_axioms(a2())
        self.assertTrue(report.left_prejj)
        self.assertFalse(report.commutative)
        self.assertFalse(report.jacobi_jordan)
        self.assertEqual(report.jacobian_product, 'sub-adjacent')
        [witness] = report.witnesses_for('commutative')
        self.assertEqual(witness.indices, (1, 3))
        np.testing.assert_array_equal(witness.defect, as_vector([0, 0, 0, Fraction(1, 9)]))
        self.assertTrue(report.witnesses_for('jacobi_jordan'))

    def test_zero_algebra(self):
        self.assertTrue(all(check_axioms(zero_algebra(3)).flags().values()))

    def test_unital_field_is_not_prejj(self):
        report = check_axioms(unital_field())
        self.assertFalse(report.left_prejj)
        self.assertFalse(report.anti_associative)
        self.assertEqual(report.witnesses_for('left_prejj')[0].indices, (1, 1, 1))

    def test_anti_associative_6(self):
        report = check_axioms(anti_associative_6())
        self.assertTrue(report.anti_associative)
        self.assertTrue(report.left_prejj and report.right_prejj)

    @override_settings(PJJ_WITNESS_CAP=1)
    def test_witnesses_are_capped(self):
        sc = np.full((2, 2, 2), Fraction(1), dtype=object)
        report = check_axioms(Algebra(sc))
        self.assertEqual(len(report.witnesses_for('left_prejj')), 1)
        self.assertGreater(report.violations['left_prejj'], 1)
        self.assertGreater(len(check_axioms(Algebra(sc), witness_cap=0).witnesses_for('left_prejj')), 1)


class AxiomPropertyTests(SimpleTestCase):

    @settings(CORPUS_SETTINGS, max_examples=30)
    @given(prejj_algebras(), st.data())
    def test_basis_check_extends_to_all_vectors(self, algebra, data):
        n = algebra.dim
        x, y, z = (data.draw(vectors(n, small_integers)) for _ in range(3))
        defect = anti_associator(algebra, x, y, z) + anti_associator(algebra, y, x, z)
        self.assertFalse(np.count_nonzero(defect))

    @settings(CORPUS_SETTINGS, max_examples=30)
    @given(prejj_algebras(), st.data())
    def test_cubes_vanish_in_sub_adjacent(self, algebra, data):
        jj = sub_adjacent(algebra)
        self.assertTrue(check_axioms(jj).cubes_vanish)
        x = data.draw(vectors(jj.dim, small_integers))
        self.assertFalse(np.count_nonzero(multiply(jj, multiply(jj, x, x), x)))
