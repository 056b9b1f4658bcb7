import unittest

from plateau.fixtures import FIXTURES, fixture_by_name, run_fixture
from plateau.theory import parse_enumerator
from tests import timed_test


class TestTranscription(unittest.TestCase):
    def check_code(self, p, params, enumerator, dual):
        length, dimension, d = params
        wd = parse_enumerator(enumerator, length, dimension)
        self.assertEqual(wd.total(), p**dimension)
        self.assertEqual(wd.counts[0], 1)
        self.assertEqual(wd.min_distance(), d)
        self.assertEqual(dual[:2], (length, length - dimension))

    def test_fixtures(self):
        for fixture in FIXTURES:
            with self.subTest(name=fixture.name):
                self.check_code(fixture.p, fixture.params,
                                fixture.enumerator, fixture.dual)
                if fixture.punctured is not None:
                    punctured = fixture.punctured
                    self.check_code(fixture.p, punctured.params,
                                    punctured.enumerator, punctured.dual)
                    self.assertEqual(punctured.params[0] * (fixture.p - 1),
                                     fixture.params[0])

    def test_names(self):
        names = [fixture.name for fixture in FIXTURES]
        self.assertEqual(len(names), len(set(names)))
        self.assertIs(fixture_by_name(names[0]), FIXTURES[0])
        with self.assertRaises(KeyError):
            fixture_by_name('no-such-example')


class TestRunFixture(unittest.TestCase):
    def test_ternary(self):
        for fixture in FIXTURES:
            if fixture.p != 3:
                continue
            with self.subTest(name=fixture.name):
                result = run_fixture(fixture)
                self.assertEqual(
                    [name for name, ok in result.checks.items() if not ok],
                    [])
                self.assertTrue(result.passed)

    def test_detects_wrong_enumerator(self):
        fixture = fixture_by_name('defset-zero-f3n4-plus')
        wrong = fixture._replace(
            enumerator='1+36z^{18}+14z^{20}+12z^{24}+18z^{26}')
        with self.assertLogs(level='INFO'):
            result = run_fixture(wrong)
        self.assertFalse(result.passed)
        self.assertFalse(result.checks['enumerator'])
        self.assertTrue(result.checks['parameters'])
        self.assertTrue(result.checks['punctured-enumerator'])

    def test_parallel(self):
        fixture = fixture_by_name('defset-sq-f3n4-minus')
        self.assertEqual(run_fixture(fixture, workers=4).checks,
                         run_fixture(fixture).checks)

    @timed_test
    def test_all(self):
        for fixture in FIXTURES:
            with self.subTest(name=fixture.name):
                self.assertTrue(run_fixture(fixture, workers=4).passed)
