import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from apps.algebras.catalog import a1, a2, zero_algebra
from apps.algebras.structures import multiply
from apps.algebras.tests.corpus import CORPUS_SETTINGS, prejj_algebras
from apps.derivations.brackets import (
    adjoint_spaces,
    anticommutator,
    anticommutator_condition,
    bracket,
    classify,
    derivation_lie_algebra,
)
from apps.derivations.spaces import (
    ANTIDERIVATION,
    DERIVATION,
    antiderivation_space,
    derivation_space,
    inner_antiderivation_space,
    map_to_vector,
    vector_to_map,
)
from apps.ratlinalg.linalg import as_matrix, matvec, span, unit_vector, zeros
from apps.ratlinalg.tests.strategies import small_integers
from apps.representations.constructions import regular_representation, zero_representation


def map_span(maps, vdim, dim):
    return span([map_to_vector(as_matrix(m)) for m in maps], vdim * dim)


class FlatteningTests(SimpleTestCase):

    def test_column_major_round_trip(self):
        d = as_matrix([[1, 2], [3, 4], [5, 6]])
        v = map_to_vector(d)
        self.assertEqual(list(v), [1, 3, 5, 2, 4, 6])
        np.testing.assert_array_equal(vector_to_map(v, 3, 2), d)


class SpaceTests(SimpleTestCase):

    def test_zero_algebra_everything_is_a_derivation(self):
        r = zero_representation(zero_algebra(2), 3)
        self.assertEqual(derivation_space(r).dim, 6)
        self.assertEqual(antiderivation_space(r).dim, 6)
        self.assertEqual(inner_antiderivation_space(r).dim, 0)

    def test_a1_derivations(self):
        space = derivation_space(regular_representation(a1()))
        self.assertEqual(space.basis, map_span([[[1, 0], [0, 2]], [[0, 0], [1, 0]]], 2, 2))

    def test_a1_antiderivations(self):
        space = antiderivation_space(regular_representation(a1()))
        self.assertEqual(space.dim, 2)
        self.assertEqual(space.basis, map_span([[[1, 0], [0, -2]], [[0, 0], [1, 0]]], 2, 2))

    def test_a1_inner_antiderivations(self):
        space = inner_antiderivation_space(regular_representation(a1()))
        self.assertEqual(space.basis, map_span([[[0, 0], [2, 0]]], 2, 2))

    def test_a2_dimensions(self):
        r = regular_representation(a2())
        self.assertEqual(derivation_space(r).dim, 7)
        self.assertEqual(antiderivation_space(r).dim, 7)

    def test_a2_inner_antiderivations(self):
        m_a = zeros(4, 4)
        m_a[1, 0] = m_a[3, 2] = 1
        m_c = zeros(4, 4)
        m_c[3, 0] = 1
        space = inner_antiderivation_space(regular_representation(a2()))
        self.assertEqual(space.basis, map_span([m_a, m_c], 4, 4))

    def test_maps_reshape_basis(self):
        space = antiderivation_space(regular_representation(a1()))
        for d in space.maps():
            self.assertTrue(space.contains(d))

    @settings(CORPUS_SETTINGS, max_examples=20)
    @given(prejj_algebras())
    def test_inner_antiderivations_are_antiderivations(self, algebra):
        r = regular_representation(algebra)
        inner = inner_antiderivation_space(r)
        self.assertTrue(antiderivation_space(r).basis.contains_subspace(inner.basis))


def combination(maps, data):
    out = zeros(*maps[0].shape) if maps else None
    for m in maps:
        out = out + data.draw(small_integers) * m
    return out


class BracketTests(SimpleTestCase):

    def test_self_bracket_vanishes(self):
        d = as_matrix([[1, 0], [0, 2]])
        self.assertFalse(np.count_nonzero(bracket(d, d)))
        self.assertEqual(classify(DERIVATION, DERIVATION, bracket(d, d), a1()), DERIVATION)

    def test_a1_antiderivations_bracket_to_derivation(self):
        d1 = as_matrix([[1, 0], [0, -2]])
        d2 = as_matrix([[0, 0], [1, 0]])
        self.assertEqual(classify(ANTIDERIVATION, ANTIDERIVATION, bracket(d1, d2), a1()), DERIVATION)

    def test_mixed_bracket(self):
        d1 = as_matrix([[1, 0], [0, -2]])
        d2 = as_matrix([[0, 0], [1, 0]])
        result = bracket(d1, d2)
        np.testing.assert_array_equal(result, as_matrix([[0, 0], [-3, 0]]))
        self.assertEqual(classify(ANTIDERIVATION, DERIVATION, result, a1()), ANTIDERIVATION)

    def test_zero_algebra(self):
        d1 = as_matrix([[1, 2], [3, 4]])
        d2 = as_matrix([[0, 1], [1, 0]])
        self.assertEqual(classify(DERIVATION, DERIVATION, bracket(d1, d2), zero_algebra(2)), DERIVATION)

    @settings(CORPUS_SETTINGS, max_examples=20)
    @given(prejj_algebras(), st.data())
    def test_closure_table_on_samples(self, algebra, data):
        spaces = adjoint_spaces(algebra)
        samples = {kind: combination(space.maps(), data) for kind, space in spaces.items() if space.dim}
        for k1, d1 in samples.items():
            for k2, d2 in samples.items():
                classify(k1, k2, bracket(d1, d2), algebra, spaces)


class AnticommutatorTests(SimpleTestCase):

    def test_zero_maps(self):
        report = anticommutator_condition(zeros(2, 2), zeros(2, 2), a1())
        self.assertTrue(report.antider_condition and report.der_condition)
        self.assertTrue(report.is_ader and report.is_der)

    def test_a1_antiderivation_squared(self):
        d = as_matrix([[1, 0], [0, -2]])
        report = anticommutator_condition(d, d, a1())
        self.assertFalse(report.der_condition)
        self.assertFalse(report.antider_condition)
        self.assertFalse(report.is_ader or report.is_der)
        self.assertIn((ANTIDERIVATION, ANTIDERIVATION), report.checked_cases)

    def test_zero_algebra(self):
        report = anticommutator_condition(as_matrix([[1, 2], [0, 1]]), as_matrix([[0, 1], [1, 1]]), zero_algebra(2))
        self.assertTrue(report.antider_condition and report.der_condition)

    def test_anticommutator_expansion_on_a2(self):
        a = a2()
        maps = adjoint_spaces(a)[ANTIDERIVATION].maps()
        for d1 in maps:
            for d2 in maps:
                s = anticommutator(d1, d2)
                for i in range(a.dim):
                    for j in range(a.dim):
                        u, v = unit_vector(a.dim, i), unit_vector(a.dim, j)
                        ends = multiply(a, s[:, i], v) + multiply(a, u, s[:, j])
                        cross = multiply(a, d1[:, i], d2[:, j]) + multiply(a, d2[:, i], d1[:, j])
                        self.assertTrue(np.array_equal(matvec(s, multiply(a, u, v)), ends + 2 * cross))
                report = anticommutator_condition(d1, d2, a)
                self.assertEqual(report.antider_condition, report.is_ader)

    @settings(CORPUS_SETTINGS, max_examples=20)
    @given(prejj_algebras(max_dim=3), st.data())
    def test_criterion_matches_membership(self, algebra, data):
        spaces = adjoint_spaces(algebra)
        samples = [combination(space.maps(), data) for space in spaces.values() if space.dim]
        for d1 in samples:
            for d2 in samples:
                anticommutator_condition(d1, d2, algebra)


class LieAlgebraTests(SimpleTestCase):

    def test_a1(self):
        lie = derivation_lie_algebra(a1())
        self.assertEqual(lie.dim, 2)
        self.assertTrue(lie.antisymmetric and lie.jacobi)

    @settings(CORPUS_SETTINGS, max_examples=15)
    @given(prejj_algebras(max_dim=3))
    def test_corpus(self, algebra):
        self.assertTrue(derivation_lie_algebra(algebra).jacobi)
