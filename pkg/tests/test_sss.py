import random
import unittest

import numpy as np

from plateau.codes import CodeKind, CodeSpec, build_code
from plateau.errors import BudgetExceeded, DimensionCollapse, NotAnAccessSet
from plateau.funcspace import eval_to_table, parse_poly
from plateau.sss import (
    _subset_counts,
    coverage_report,
    massey_deal,
    massey_recover,
    minimal_access_sets,
    parallel_participants,
    recovery_vector,
    rref_mod_p,
    scheme_from_code,
    solve_mod_p,
)
from plateau.theory import Construction


EXAMPLE_PLUS = '2*x1^2*x4^2+2*x1^2+x2^2+x3*x4'


def small_spec(n, coords):
    return CodeSpec(p=3, n=n, kind=CodeKind.DEFSET, coords=np.array(coords),
                    message_dim=n, function=None, selector=None,
                    punctured=False)


class TestLinearAlgebra(unittest.TestCase):
    def test_rref(self):
        rows, pivots = rref_mod_p([[2, 1], [1, 2]], 3)
        self.assertEqual(rows.tolist(), [[1, 2]])
        self.assertEqual(pivots, [0])

    def test_solve(self):
        x = solve_mod_p([[1, 1], [0, 1]], [2, 1], 3)
        self.assertEqual(x.tolist(), [1, 1])
        self.assertIsNone(solve_mod_p([[1, 1], [1, 1]], [0, 1], 3))


class TestScheme(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        f = eval_to_table(parse_poly(EXAMPLE_PLUS, 3, 5))
        cls.ctx = scheme_from_code(build_code(f, Construction.DEFSET_ZERO))
        cls.access = minimal_access_sets(cls.ctx)
        cls.punctured = scheme_from_code(
            build_code(f, Construction.DEFSET_ZERO, punctured=True))

    def test_context(self):
        self.assertEqual(self.ctx.participants, 97)
        self.assertEqual(len(self.ctx.free), 98 - 5)

    def test_access_sets(self):
        self.assertEqual(self.access.count, 81)
        self.assertEqual(self.access.removed, 0)
        self.assertTrue(self.access.minimal_code)
        self.assertEqual(self.access.supports.shape, (81, 97))

    def test_filter_budget(self):
        with self.assertRaises(BudgetExceeded) as cm:
            minimal_access_sets(self.ctx, budget=100000)
        self.assertEqual(cm.exception.required, 81**2 * 97)

    def test_coverage(self):
        report = coverage_report(self.ctx, self.access, 2)
        self.assertTrue(report.parallel)
        self.assertTrue(report.parallel_ok)
        self.assertEqual([(c.t, c.expected, c.ok) for c in report.checks],
                         [(0, 81, True), (1, 54, True)])

    def test_coverage_punctured(self):
        access = minimal_access_sets(self.punctured)
        self.assertEqual(parallel_participants(self.punctured), [])
        report = coverage_report(self.punctured, access, 3)
        self.assertIsNone(report.parallel_ok)
        self.assertEqual([(c.t, c.expected, c.ok) for c in report.checks],
                         [(0, 81, True), (1, 54, True)])

    def test_round_trip(self):
        rng = random.Random(11)
        everyone = range(1, self.ctx.participants + 1)
        for trial in range(100):
            secret = rng.randrange(3)
            randomness = [rng.randrange(3) for _ in self.ctx.free]
            shares = massey_deal(self.ctx, secret, randomness)
            row = self.access.supports[rng.randrange(self.access.count)]
            access = set(int(j) + 1 for j in np.flatnonzero(row))
            access |= set(rng.sample(everyone, rng.randrange(5)))
            with self.subTest(trial=trial):
                self.assertEqual(
                    massey_recover(self.ctx, access, shares), secret)
                self.assertEqual(
                    massey_recover(self.ctx, everyone, shares), secret)

    def test_zero_secret(self):
        shares = massey_deal(self.ctx, 0, [0] * len(self.ctx.free))
        self.assertFalse(shares.any())

    def test_parallel_participant(self):
        j = parallel_participants(self.ctx)[0]
        self.assertTrue(self.access.supports[:, j - 1].all())
        shares = massey_deal(self.ctx, 2, [1] * len(self.ctx.free))
        with self.assertRaises(NotAnAccessSet):
            massey_recover(self.ctx, {j}, shares)
        row = self.access.supports[0]
        access = set(int(i) + 1 for i in np.flatnonzero(row))
        self.assertIn(j, access)
        self.assertEqual(massey_recover(self.ctx, access, shares), 2)
        with self.assertRaises(NotAnAccessSet):
            massey_recover(self.ctx, access - {j}, shares)

    def test_not_an_access_set(self):
        shares = massey_deal(self.ctx, 1, [0] * len(self.ctx.free))
        self.assertIsNone(recovery_vector(self.ctx, set()))
        with self.assertRaises(NotAnAccessSet):
            massey_recover(self.ctx, set(), shares)
        with self.assertRaises(ValueError):
            recovery_vector(self.ctx, {0})

    def test_bad_randomness(self):
        with self.assertRaises(ValueError):
            massey_deal(self.ctx, 1, [0])


class TestSmallSchemes(unittest.TestCase):
    def test_non_minimal_code(self):
        ctx = scheme_from_code(small_spec(2, [1, 3, 4]))
        access = minimal_access_sets(ctx)
        self.assertEqual(access.count, 2)
        self.assertEqual(access.removed, 1)
        self.assertFalse(access.minimal_code)
        self.assertEqual(sorted(access.supports.tolist()),
                         [[False, True], [True, False]])

    def test_deal_small(self):
        ctx = scheme_from_code(small_spec(2, [1, 3, 4]))
        for secret in range(3):
            for r in range(3):
                shares = massey_deal(ctx, secret, [r])
                with self.subTest(secret=secret, r=r):
                    self.assertEqual(massey_recover(ctx, {1}, shares), secret)
                    self.assertEqual(massey_recover(ctx, {2}, shares), secret)

    def test_subset_counts(self):
        supports = np.array([[1, 1, 0], [1, 0, 1], [1, 1, 1]], dtype=bool)
        self.assertEqual(_subset_counts(supports, 1, None).tolist(),
                         [3, 2, 2])
        self.assertEqual(_subset_counts(supports, 2, None).tolist(),
                         [2, 2, 1])
        self.assertEqual(_subset_counts(supports, 3, None).tolist(), [1])
        with self.assertRaises(BudgetExceeded):
            _subset_counts(supports, 2, 10)

    def test_dimension_one(self):
        with self.assertRaises(ValueError):
            scheme_from_code(small_spec(1, [1, 2]))

    def test_rank_deficient(self):
        with self.assertRaises(DimensionCollapse):
            scheme_from_code(small_spec(2, [1, 2]))
