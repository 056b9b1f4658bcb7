import unittest
from unittest import mock

from plateau.funcspace import eval_to_table, parse_poly
from plateau.report import code_report
from plateau.theory import Construction, DualLowWeights
from plateau.walsh import profile_function


class TestCodeReport(unittest.TestCase):
    def setUp(self):
        self.f = eval_to_table(parse_poly('x1*x2', 3, 2))
        self.prof = profile_function(self.f)

    def test_dual_bounds(self):
        report, _, _ = code_report(self.f, self.prof, Construction.FIRST_GEN)
        self.assertEqual(report['dual_distance'], '2')
        self.assertEqual(report['dual_parameters'], [8, 5, 2])
        self.assertEqual(report['dual_bounds']['singleton_defect'], 2)

    @mock.patch('plateau.report.pless_dual_low_weights',
                return_value=DualLowWeights(0, 0, 0, 0, '>=5'))
    def test_dual_distance_lower_bound(self, pless):
        report, _, _ = code_report(self.f, self.prof, Construction.FIRST_GEN)
        self.assertEqual(report['dual_parameters'], [8, 5, '>=5'])
        self.assertNotIn('dual_bounds', report)
        self.assertIn('bounds', report)
