from fractions import Fraction
from pathlib import Path

import numpy as np
from django.test import SimpleTestCase

from apps.algebras.catalog import a1, a2, anti_associative_6
from apps.cli.exceptions import DuplicateEntry, FormatError, IndexOutOfRange, ParseError, ZeroDenominator
from apps.cli.formats import (
    parse_algebra,
    parse_cochain,
    parse_map,
    parse_representation,
    serialize_algebra,
    serialize_cochain,
    serialize_map,
    serialize_representation,
)
from apps.cohomology.cochains import Cochain
from apps.ratlinalg.linalg import as_matrix
from apps.representations.constructions import regular_representation

FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures'


def fixture(name):
    return (FIXTURES / name).read_text(encoding='utf-8')


class AlgebraFileTests(SimpleTestCase):

    def test_a1(self):
        a = parse_algebra(fixture('A1.alg'))
        self.assertEqual(a.name, 'A1')
        self.assertEqual(a.entries(), [(1, 1, 2, 1)])

    def test_bundled_files_match_the_catalog(self):
        self.assertEqual(parse_algebra(fixture('A2.alg')), a2())
        self.assertEqual(parse_algebra(fixture('N6.alg')), anti_associative_6())

    def test_canonical_serialization(self):
        self.assertEqual(serialize_algebra(a1()), 'algebra A1\ndim 2\n1 1 2 1\nend\n')
        text = 'algebra A2\ndim 4\n3 1 4 8/18  # reduced on output\n1 1 2 1/2\n1 3 4 5/9\nend\n'
        self.assertEqual(serialize_algebra(parse_algebra(text)), fixture('A2.alg').split('\n', 1)[1])

    def test_round_trip(self):
        for a in (a1(), a2(), anti_associative_6()):
            self.assertEqual(parse_algebra(serialize_algebra(a)), a)

    def test_zero_denominator(self):
        with self.assertRaises(ZeroDenominator) as ctx:
            parse_algebra(fixture('bad_denominator.alg'))
        self.assertEqual(ctx.exception.line, 3)
        self.assertIn('line 3', str(ctx.exception))

    def test_malformed_scalar(self):
        with self.assertRaises(ParseError) as ctx:
            parse_algebra('algebra X\ndim 1\n1 1 1 one\nend\n')
        self.assertNotIsInstance(ctx.exception, ZeroDenominator)
        self.assertEqual(ctx.exception.line, 3)

    def test_duplicate_entry(self):
        with self.assertRaises(DuplicateEntry) as ctx:
            parse_algebra('algebra X\ndim 2\n1 1 2 1\n\n1 1 2 3\nend\n')
        self.assertEqual(ctx.exception.line, 5)

    def test_index_out_of_range(self):
        with self.assertRaises(IndexOutOfRange):
            parse_algebra('algebra X\ndim 2\n1 3 2 1\nend\n')
        with self.assertRaises(IndexOutOfRange):
            parse_algebra('algebra X\ndim 2\n0 1 2 1\nend\n')

    def test_structure_errors(self):
        for text in ('dim 2\nalgebra X\nend\n', 'algebra X\ndim 2\n1 1 2 1\n', 'algebra X\ndim 2\n1 1 1\nend\n', ''):
            with self.assertRaises(ParseError):
                parse_algebra(text)

    def test_text_after_end_is_ignored(self):
        a = parse_algebra(fixture('A1.alg') + '\nRESULT dim=2\n')
        self.assertEqual(a, a1())

    def test_errors_share_a_base(self):
        self.assertTrue(issubclass(ZeroDenominator, FormatError))
        self.assertTrue(issubclass(FormatError, ValueError))


class MapFileTests(SimpleTestCase):

    def test_nilpotent(self):
        name, m = parse_map(fixture('nil.map'))
        self.assertEqual(name, 'N')
        np.testing.assert_array_equal(m, as_matrix([[0, 0], [1, 0]]))

    def test_serialization(self):
        m = as_matrix([[1, 0, 0], [0, 0, -2]])
        text = serialize_map(m, 'M')
        self.assertEqual(text, 'map M\nrows 2\ncols 3\n1 1 1\n2 3 -2\nend\n')
        np.testing.assert_array_equal(parse_map(text)[1], m)

    def test_column_out_of_range(self):
        with self.assertRaises(IndexOutOfRange):
            parse_map('map M\nrows 2\ncols 1\n1 2 1\nend\n')


class RepresentationFileTests(SimpleTestCase):

    def test_regular_a1(self):
        r = parse_representation(fixture('regular_a1.rep'), a1())
        self.assertEqual(r, regular_representation(a1()))
        self.assertEqual(r.name, 'A1-regular')

    def test_serialization(self):
        text = serialize_representation(regular_representation(a1()))
        self.assertEqual(text, 'rep A1-regular\nalgdim 2\nrepdim 2\nrho 1 2 1 1\nmu 1 2 1 1\nend\n')

    def test_algebra_dimension_must_match(self):
        with self.assertRaises(ParseError) as ctx:
            parse_representation(fixture('regular_a1.rep'), a2())
        self.assertEqual(ctx.exception.line, 3)

    def test_unknown_action(self):
        with self.assertRaises(ParseError):
            parse_representation('rep V\nalgdim 2\nrepdim 1\nnu 1 1 1 1\nend\n', a1())

    def test_duplicate_is_per_action(self):
        text = 'rep V\nalgdim 2\nrepdim 1\nrho 1 1 1 1\nmu 1 1 1 1\nend\n'
        self.assertEqual(parse_representation(text, a1()).mu[0, 0, 0], 1)
        with self.assertRaises(DuplicateEntry):
            parse_representation(text.replace('mu', 'rho'), a1())


class CochainFileTests(SimpleTestCase):

    def test_bilinear(self):
        self.assertEqual(parse_cochain(fixture('omega_a1.cochain')), Cochain.from_bilinear(a1().sc))
        self.assertTrue(parse_cochain(fixture('zero2.cochain')).is_zero())

    def test_degree_zero(self):
        f = parse_cochain('cochain 0\nalgdim 3\nrepdim 2\n2 -1/3\nend\n')
        self.assertEqual(f.degree, 0)
        self.assertEqual(list(f.as_vector()), [0, Fraction(-1, 3)])

    def test_serialization(self):
        text = serialize_cochain(Cochain.from_bilinear(a2().sc))
        self.assertEqual(text, 'cochain 2\nalgdim 4\nrepdim 4\n1 1 2 1/2\n1 3 4 5/9\n3 1 4 4/9\nend\n')

    def test_arity_follows_the_degree(self):
        with self.assertRaises(ParseError):
            parse_cochain('cochain 1\nalgdim 2\nrepdim 2\n1 1 1 1\nend\n')
