import inspect
import random
import unittest

import numpy as np

from plateau.errors import NotPlateaued
from plateau.field import CycInt
from plateau.funcspace import FunctionTable, eval_to_table, parse_poly
from plateau.walsh import (
    Regularity,
    Side,
    WalshSpectrum,
    classify_plateaued,
    dual_exponent,
    nwrf_exponent,
    profile_function,
    regularity_of,
    structural_checks,
    walsh_counts_fast,
    walsh_counts_naive,
)


EXAMPLE_PLUS = '2*x1^2*x4^2+2*x1^2+x2^2+x3*x4'
EXAMPLE_MINUS = 'x1^2*x4^2+x1^2+x2^2+x3*x4'


def table(src, p, n):
    return eval_to_table(parse_poly(src, p, n))


def random_table(rng, p, n):
    return FunctionTable(p, n, [rng.randrange(p) for _ in range(p**n)])


class TestWalshCounts(unittest.TestCase):
    def test_fast_matches_naive(self):
        rng = random.Random(1)
        shapes = [(3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (5, 3)]
        for i in range(200):
            p, n = shapes[i % len(shapes)]
            f = random_table(rng, p, n)
            with self.subTest(i=i, p=p, n=n):
                self.assertEqual(walsh_counts_fast(f), walsh_counts_naive(f))

    def test_workers(self):
        f = random_table(random.Random(2), 3, 4)
        self.assertEqual(walsh_counts_naive(f, workers=4),
                         walsh_counts_naive(f))

    def test_linear(self):
        spectrum = walsh_counts_fast(table('x1', 3, 1))
        self.assertEqual(spectrum.value(1), CycInt.integer(3, 3))
        self.assertTrue(spectrum.value(0).is_zero())
        self.assertTrue(spectrum.value(2).is_zero())
        self.assertEqual(list(spectrum.support()), [1])

    def test_parseval(self):
        rng = random.Random(3)
        functions = [table(EXAMPLE_PLUS, 3, 5), table('x1^2*x3^4+x1^2+x2*x3',
                                                      5, 4)]
        functions += [random_table(rng, 3, 3) for _ in range(5)]
        for f in functions:
            with self.subTest(f=f):
                self.assertEqual(walsh_counts_fast(f).parseval_total(),
                                 CycInt.integer(f.p, f.p**(2 * f.n)))


class TestClassify(unittest.TestCase):
    def test_example_plus(self):
        f = table(EXAMPLE_PLUS, 3, 5)
        prof = profile_function(f)
        self.assertEqual(prof.s, 1)
        self.assertEqual(len(prof.supp), 81)
        self.assertEqual(prof.k, 27)
        self.assertEqual(len(prof.b_minus), 54)
        self.assertIs(prof.regularity, Regularity.NON_WEAKLY_REGULAR)
        self.assertIs(prof.type_of_f, Side.PLUS)
        self.assertEqual(prof.eps0, 1)
        self.assertEqual(prof.nwrf_t, 2)
        self.assertEqual(prof.dual_h, 2)
        self.assertIsNotNone(prof.dual_bent)
        self.assertIs(prof.dual_bent.type_of_fstar, Side.PLUS)
        self.assertTrue(prof.dual_bent.involution_ok)

    def test_example_minus(self):
        prof = profile_function(table(EXAMPLE_MINUS, 3, 5))
        self.assertEqual(prof.k, 54)
        self.assertIs(prof.type_of_f, Side.MINUS)
        self.assertIs(prof.dual_bent.type_of_fstar, Side.MINUS)

    def test_regularity_witness(self):
        prof = profile_function(table(EXAMPLE_PLUS, 3, 5))
        regularity, (plus, minus) = regularity_of(prof)
        self.assertIs(regularity, Regularity.NON_WEAKLY_REGULAR)
        self.assertEqual(prof.eps[plus], 1)
        self.assertEqual(prof.eps[minus], -1)

    def test_bent(self):
        prof = profile_function(table('x1*x2', 3, 2))
        self.assertEqual(prof.s, 0)
        self.assertIs(prof.regularity, Regularity.REGULAR)
        self.assertEqual(regularity_of(prof), (Regularity.REGULAR, None))
        self.assertEqual(set(prof.eps.values()), {1})

    def test_quadratic_odd(self):
        # 5 = 1 mod 4 makes the Gauss sum real.
        self.assertIs(profile_function(table('x1^2', 5, 1)).regularity,
                      Regularity.REGULAR)
        self.assertIs(profile_function(table('x1^2', 3, 1)).regularity,
                      Regularity.WEAKLY_REGULAR)

    def test_zero_function(self):
        prof = profile_function(FunctionTable(3, 2, [0] * 9))
        self.assertEqual(prof.s, 2)
        self.assertEqual(prof.supp, (0,))
        self.assertIs(prof.regularity, Regularity.WEAKLY_REGULAR)

    def test_balanced(self):
        prof = profile_function(table('x1', 3, 2))
        self.assertEqual(prof.s, 2)
        self.assertIs(prof.type_of_f, Side.BALANCED)
        self.assertIsNone(prof.eps0)

    def test_not_plateaued_support(self):
        counts = np.array([[3, 0, 0], [3, 0, 0], [1, 1, 1]])
        with self.assertRaises(NotPlateaued):
            classify_plateaued(WalshSpectrum(3, 1, counts))

    def test_not_plateaued_modulus(self):
        # Full support with a value of the wrong modulus.
        counts = np.array([[2, 1, 0], [2, 1, 0], [3, 0, 0]])
        with self.assertRaises(NotPlateaued):
            classify_plateaued(WalshSpectrum(3, 1, counts))


class TestDual(unittest.TestCase):
    def test_dual_exponent(self):
        self.assertEqual(dual_exponent(3, 2), 2)
        self.assertEqual(dual_exponent(5, 2), 2)
        self.assertEqual(dual_exponent(5, 4), 4)

    def test_signatures(self):
        self.assertEqual(list(inspect.signature(profile_function).parameters),
                         ['f'])
        self.assertEqual(list(inspect.signature(nwrf_exponent).parameters),
                         ['f'])

    def test_nwrf_exponent(self):
        self.assertEqual(nwrf_exponent(table(EXAMPLE_PLUS, 3, 5)), 2)
        self.assertEqual(nwrf_exponent(table('x1^2*x3^4+x1^2+x2*x3', 5, 4)),
                         2)
        self.assertIsNone(nwrf_exponent(table('x1', 3, 1)))
        self.assertIsNone(nwrf_exponent(table('x1^2+1', 3, 1)))

    def test_structural_checks(self):
        for src in [EXAMPLE_PLUS, EXAMPLE_MINUS]:
            f = table(src, 3, 5)
            checks = structural_checks(f, profile_function(f))
            with self.subTest(src=src):
                self.assertEqual(checks, {
                    'dual_zero_at_origin': True,
                    'dual_homogeneous': True,
                    'types_agree_rule': True,
                    'dual_involution': True,
                })

    def test_structural_checks_types_differ(self):
        f = table('x1^2*x5^2+x1^2+x2^2+x3^2+x4*x5', 3, 5)
        prof = profile_function(f)
        self.assertIs(prof.regularity, Regularity.NON_WEAKLY_REGULAR)
        self.assertEqual((prof.n + prof.s) % 2, 1)
        self.assertIs(prof.type_of_f, Side.MINUS)
        self.assertIs(prof.dual_bent.type_of_fstar, Side.PLUS)
        self.assertEqual(set(structural_checks(f, prof).values()), {True})

    def test_structural_checks_f5(self):
        f = table('x1^2*x3^4+x1^2+x2*x3', 5, 4)
        prof = profile_function(f)
        self.assertEqual(prof.s, 1)
        self.assertIs(prof.regularity, Regularity.NON_WEAKLY_REGULAR)
        self.assertEqual(set(structural_checks(f, prof).values()), {True})

    def test_structural_checks_not_applicable(self):
        f = table('x1*x2', 3, 2)
        checks = structural_checks(f, profile_function(f))
        self.assertIsNone(checks['dual_zero_at_origin'])
        self.assertIsNone(checks['dual_homogeneous'])
        self.assertIsNone(checks['types_agree_rule'])
