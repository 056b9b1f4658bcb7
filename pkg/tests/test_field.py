import json
import unittest

import numpy as np
import sympy

from plateau.field import (
    CycInt,
    Form,
    FormTable,
    Parity,
    ZERO_FORM,
    NO_MATCH,
    check_width,
    cyc_canonicalize,
    cyc_mul,
    field,
    galois_apply,
    gauss_sum,
    quadratic_character,
    recognize_walsh_form,
)


PRIMES = [3, 5, 7, 11, 13]


class TestFieldCtx(unittest.TestCase):
    def test_eta(self):
        self.assertEqual(field(3).eta, (0, 1, -1))
        self.assertEqual(field(5).eta, (0, 1, -1, -1, 1))
        self.assertEqual(field(7).sq_set, {1, 2, 4})
        self.assertEqual(field(7).nsq_set, {3, 5, 6})

    def test_p_star(self):
        self.assertEqual(field(3).p_star, -3)
        self.assertEqual(field(5).p_star, 5)
        self.assertEqual(field(7).p_star, -7)
        self.assertEqual(field(13).p_star, 13)

    def test_not_odd_prime(self):
        for p in [1, 2, 4, 9, 15]:
            with self.subTest(p=p), self.assertRaises(ValueError):
                field(p)

    def test_inverse(self):
        ctx = field(7)
        for a in range(1, 7):
            self.assertEqual(a * ctx.inverse(a) % 7, 1)
        with self.assertRaises(ValueError):
            ctx.inverse(0)

    def test_quadratic_character(self):
        self.assertEqual(quadratic_character(field(5), 2), -1)
        self.assertEqual(quadratic_character(field(5), 0), 0)
        with self.assertRaises(ValueError):
            quadratic_character(field(5), 5)

    def test_eta_values_are_int(self):
        for p in PRIMES:
            with self.subTest(p=p):
                self.assertEqual({type(e) for e in field(p).eta}, {int})
        self.assertEqual(json.dumps(quadratic_character(field(11), 2)), '-1')

    def test_check_width(self):
        check_width(5, 6)
        with self.assertRaises(ValueError):
            check_width(3, 40)


class TestCycInt(unittest.TestCase):
    def test_canonical(self):
        x = cyc_canonicalize(3, [4, 2, 1])
        self.assertEqual(x.coeffs, (3, 1, 0))
        # 1 + xi + xi^2 = 0
        self.assertTrue(cyc_canonicalize(3, [1, 1, 1]).is_zero())

    def test_xi_powers(self):
        for p in PRIMES:
            for j in range(p):
                for k in range(p):
                    self.assertEqual(
                        CycInt.xi_power(p, j) * CycInt.xi_power(p, k),
                        CycInt.xi_power(p, j + k))

    def test_arithmetic(self):
        x = cyc_canonicalize(5, [1, 2, 0, 0, 3])
        y = cyc_canonicalize(5, [0, 1, 1, 0, 0])
        self.assertTrue((x - x).is_zero())
        self.assertEqual(x + y - y, x)
        self.assertEqual(-x + x, CycInt.integer(5, 0))
        self.assertEqual(2 * x, x + x)
        self.assertEqual(x * y, y * x)

    def test_integral_scaling(self):
        x = CycInt.xi_power(5, 2)
        self.assertEqual(x * np.int64(3), 3 * x)
        self.assertEqual(x * sympy.Integer(-1), -x)
        self.assertEqual(type((x * np.int64(3)).coeffs[0]), int)

    def test_rational(self):
        self.assertEqual(CycInt.integer(7, -4).rational(), -4)
        with self.assertRaises(ValueError):
            CycInt.xi_power(7, 1).rational()

    def test_mismatched_p(self):
        with self.assertRaises(ValueError):
            CycInt.integer(3, 1) + CycInt.integer(5, 1)

    def test_hash(self):
        self.assertEqual(len({CycInt.xi_power(3, 1),
                              cyc_canonicalize(3, [0, 1, 0])}), 1)


class TestCharacterSumIdentities(unittest.TestCase):
    def test_sum_of_roots(self):
        for p in PRIMES:
            total = CycInt.integer(p, 0)
            for j in range(p):
                total = total + CycInt.xi_power(p, j)
            self.assertTrue(total.is_zero())

    def test_units_sum(self):
        for p in PRIMES:
            for a in range(1, p):
                total = CycInt.integer(p, 0)
                for y in range(1, p):
                    total = total + CycInt.xi_power(p, y * a)
                self.assertEqual(total, CycInt.integer(p, -1))

    def test_gauss_sum_square(self):
        for p in PRIMES:
            with self.subTest(p=p):
                ctx = field(p)
                g = gauss_sum(ctx)
                self.assertEqual(cyc_mul(g, g), CycInt.integer(p, ctx.p_star))

    def test_gauss_sum_conjugate(self):
        for p in PRIMES:
            with self.subTest(p=p):
                ctx = field(p)
                g = gauss_sum(ctx)
                self.assertEqual(g.conj(), ctx.eta[p - 1] * g)
                self.assertEqual(g * g.conj(), CycInt.integer(p, p))

    def test_twisted_sum(self):
        for p in PRIMES:
            ctx = field(p)
            g = gauss_sum(ctx)
            for a in range(1, p):
                with self.subTest(p=p, a=a):
                    total = CycInt.integer(p, 0)
                    for y in range(1, p):
                        total = total + ctx.eta[y] * CycInt.xi_power(p, y * a)
                    self.assertEqual(total, ctx.eta[a] * g)
                    self.assertEqual(galois_apply(g, a), ctx.eta[a] * g)

    def test_galois_apply_zero(self):
        with self.assertRaises(ValueError):
            galois_apply(CycInt.integer(5, 1), 0)


class TestRecognizeWalshForm(unittest.TestCase):
    def test_root_form(self):
        w = CycInt.xi_power(3, 2) * -3
        self.assertEqual(recognize_walsh_form(w, 3, Parity.EVEN),
                         (Form.ROOT, -1, 2))

    def test_gauss_form(self):
        g = gauss_sum(field(5))
        w = cyc_mul(g, CycInt.xi_power(5, 3)) * 25
        self.assertEqual(recognize_walsh_form(w, 25, Parity.ODD),
                         (Form.GAUSS, 1, 3))

    def test_zero_and_no_match(self):
        self.assertEqual(recognize_walsh_form(CycInt.integer(3, 0), 3,
                                              Parity.EVEN), ZERO_FORM)
        self.assertEqual(recognize_walsh_form(CycInt.integer(3, 2), 3,
                                              Parity.EVEN), NO_MATCH)
        self.assertEqual(recognize_walsh_form(CycInt.integer(3, 3), 3,
                                              Parity.ODD), NO_MATCH)

    def test_bad_magnitude(self):
        with self.assertRaises(ValueError):
            recognize_walsh_form(CycInt.integer(3, 6), 6, Parity.EVEN)

    def test_table_agrees(self):
        for p in [3, 5, 7]:
            for parity in Parity:
                table = FormTable(p, p**2, parity)
                ctx = field(p)
                for sign in (1, -1):
                    for j in range(p):
                        w = CycInt.xi_power(p, j) * (sign * p**2)
                        if parity is Parity.ODD:
                            w = cyc_mul(w, gauss_sum(ctx))
                        with self.subTest(p=p, parity=parity, sign=sign, j=j):
                            self.assertEqual(
                                table.lookup(w.coeffs),
                                recognize_walsh_form(w, p**2, parity))
                            self.assertEqual(table.lookup(w.coeffs)[1:],
                                             (sign, j))
