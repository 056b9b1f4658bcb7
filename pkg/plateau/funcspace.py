import functools
import re

import numpy as np

from plateau.errors import PolySyntaxError, TableFormatError
from plateau.field import check_width, field


def encode_point(p, n, x):
    if len(x) != n:
        raise ValueError('expected %d digits, got %d' % (n, len(x)))
    index = 0
    for digit in x:
        if not 0 <= digit < p:
            raise ValueError('digit %d out of range for p=%d' % (digit, p))
        index = index * p + digit
    return index


def decode_point(p, n, index):
    if not 0 <= index < p**n:
        raise ValueError('index %d out of range for %d^%d' % (index, p, n))
    x = [0] * n
    for i in range(n - 1, -1, -1):
        index, x[i] = divmod(index, p)
    return tuple(x)


@functools.lru_cache(maxsize=16)
def all_points(p, n):
    """
    The p^n x n digit matrix of F_p^n in encoding order (x_1 most
    significant). Read-only.
    """
    powers = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    points = (np.arange(p**n, dtype=np.int64)[:, np.newaxis] // powers) % p
    points.flags.writeable = False
    return points


def encode_points(p, points):
    n = points.shape[-1]
    powers = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return points @ powers


@functools.lru_cache(maxsize=64)
def scale_map(p, n, a):
    """Index permutation x -> a*x."""
    if a % p == 0:
        raise ValueError('scale_map needs a unit, got %d' % a)
    perm = encode_points(p, (all_points(p, n) * a) % p)
    perm.flags.writeable = False
    return perm


def negate_map(p, n):
    return scale_map(p, n, p - 1)


def dot(p, a, x):
    if len(a) != len(x):
        raise ValueError('length mismatch: %d and %d' % (len(a), len(x)))
    return sum(ai * xi for ai, xi in zip(a, x)) % p


class PolyExpr:
    """
    A polynomial over F_p in variables x1..xn as a list of
    (coeff, exponents) monomials, in source order.
    """

    def __init__(self, p, n, monomials):
        self.p = p
        self.n = n
        self.monomials = monomials

    def __repr__(self):
        return 'PolyExpr(%d, %d, %r)' % (self.p, self.n, self.monomials)

    def __str__(self):
        terms = []
        for coeff, exponents in self.monomials:
            factors = []
            for i, e in enumerate(exponents):
                if e == 1:
                    factors.append('x%d' % (i + 1))
                elif e > 1:
                    factors.append('x%d^%d' % (i + 1, e))
            if coeff != 1 or not factors:
                factors.insert(0, str(coeff))
            terms.append('*'.join(factors))
        return '+'.join(terms) if terms else '0'


_token_re = re.compile(r'\s*(?:(\d+)|(x)|([-+*^]))')


def _tokenize(src):
    pos = 0
    tokens = []
    src = src.rstrip()
    while pos < len(src):
        match = _token_re.match(src, pos)
        if not match:
            rest = src[pos:].lstrip()
            raise PolySyntaxError('unexpected character %r' % rest[:1],
                                  len(src) - len(rest))
        start = match.start(match.lastindex)
        if match.group(1) is not None:
            tokens.append(('int', int(match.group(1)), start))
        elif match.group(2) is not None:
            tokens.append(('x', None, start))
        else:
            tokens.append((match.group(3), None, start))
        pos = match.end()
    tokens.append(('end', None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src, p, n):
        self.tokens = _tokenize(src)
        self.i = 0
        self.p = p
        self.n = n

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        token = self.tokens[self.i]
        if token[0] != kind:
            raise PolySyntaxError('expected %s, found %s' % (kind, token[0]),
                                  token[2])
        self.i += 1
        return token

    def expr(self):
        monomials = []
        sign = 1
        if self.peek()[0] in '+-':
            sign = -1 if self.take(self.peek()[0])[0] == '-' else 1
        monomials.append(self.term(sign))
        while self.peek()[0] in ('+', '-'):
            sign = -1 if self.take(self.peek()[0])[0] == '-' else 1
            monomials.append(self.term(sign))
        self.take('end')
        return monomials

    def term(self, sign):
        start = self.peek()[2]
        coeff = 1
        exponents = [0] * self.n
        if self.peek()[0] == 'int':
            coeff = self.take('int')[1]
            if self.peek()[0] != '*':
                # Bare constant term.
                return self._finish(sign * coeff, exponents, start)
            self.take('*')
        self.factor(exponents)
        while self.peek()[0] == '*':
            self.take('*')
            self.factor(exponents)
        return self._finish(sign * coeff, exponents, start)

    def factor(self, exponents):
        self.take('x')
        token = self.take('int')
        index = token[1]
        if not 1 <= index <= self.n:
            raise PolySyntaxError('variable x%d exceeds n=%d' %
                                  (index, self.n), token[2])
        e = 1
        if self.peek()[0] == '^':
            self.take('^')
            e = self.take('int')[1]
        exponents[index - 1] += e

    def _finish(self, coeff, exponents, pos):
        coeff %= self.p
        if coeff == 0:
            raise PolySyntaxError('coefficient is 0 mod %d' % self.p, pos)
        return (coeff, tuple(exponents))


def parse_poly(src, p, n):
    field(p)
    return PolyExpr(p, n, _Parser(src, p, n).expr())


@functools.lru_cache(maxsize=256)
def _power_table(p, e):
    """v -> v^e mod p for v in F_p, without intermediate overflow."""
    table = np.array([pow(v, e, p) for v in range(p)], dtype=np.int64)
    table.flags.writeable = False
    return table


def _fermat(e, p):
    # x^e = x^{((e-1) mod (p-1)) + 1} on F_p for e >= 1.
    return 0 if e == 0 else (e - 1) % (p - 1) + 1


class FunctionTable:
    """
    f: F_p^n -> F_p as a dense value vector indexed by the point encoding.
    """

    def __init__(self, p, n, values):
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (p**n,):
            raise ValueError('expected %d values, got %r' %
                             (p**n, values.shape))
        if values.size and (values.min() < 0 or values.max() >= p):
            raise ValueError('table values must lie in [0, %d)' % p)
        values.flags.writeable = False
        self.p = p
        self.n = n
        self.values = values

    def __repr__(self):
        return 'FunctionTable(p=%d, n=%d)' % (self.p, self.n)

    def __eq__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return (self.p == other.p and self.n == other.n and
                np.array_equal(self.values, other.values))

    def __call__(self, x):
        return int(self.values[encode_point(self.p, self.n, x)])

    def value_counts(self):
        return np.bincount(self.values, minlength=self.p)


def eval_to_table(expr):
    p, n = expr.p, expr.n
    check_width(p, n)
    points = all_points(p, n)
    values = np.zeros(p**n, dtype=np.int64)
    for coeff, exponents in expr.monomials:
        term = np.full(p**n, coeff, dtype=np.int64)
        for i, e in enumerate(exponents):
            if e:
                term = term * _power_table(p, _fermat(e, p))[points[:, i]] % p
        values = (values + term) % p
    return FunctionTable(p, n, values)


def eval_point(expr, x):
    total = 0
    for coeff, exponents in expr.monomials:
        term = coeff
        for xi, e in zip(x, exponents):
            term *= pow(xi, e, expr.p)
        total += term
    return total % expr.p


def read_table(f):
    header = f.readline().split()
    try:
        p, n = (int(t) for t in header)
    except ValueError:
        raise TableFormatError('first line must be "p n"')
    try:
        field(p)
    except ValueError as e:
        raise TableFormatError(str(e))
    digits = f.readline().split()
    if len(digits) != p**n:
        raise TableFormatError('expected %d values, got %d' %
                               (p**n, len(digits)))
    try:
        values = [int(d) for d in digits]
        return FunctionTable(p, n, values)
    except ValueError as e:
        raise TableFormatError(str(e))


def write_table(table, f):
    f.write('%d %d\n' % (table.p, table.n))
    f.write(' '.join(str(int(v)) for v in table.values))
    f.write('\n')
