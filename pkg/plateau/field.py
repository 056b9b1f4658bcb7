import collections
import enum
import functools
import numbers

import numpy as np
from sympy import isprime
from sympy.functions.combinatorial.numbers import legendre_symbol


# Count tables and Walsh coefficients are int64.
MAX_MAGNITUDE = 2**62


def check_width(p, n):
    if p**(n + 1) > MAX_MAGNITUDE:
        raise ValueError('p^(n+1) = %d^%d exceeds the 64-bit range' %
                         (p, n + 1))


class FieldCtx:
    """
    The prime field F_p together with its quadratic character.

    eta[a] is the Legendre symbol of a (eta[0] = 0), sq_set and nsq_set are
    the squares and non-squares of F_p^x, and p_star = eta(-1) * p.
    """

    def __init__(self, p):
        if p < 3 or not isprime(p):
            raise ValueError('%d is not an odd prime' % p)
        self.p = p
        self.eta = (0,) + tuple(int(legendre_symbol(a, p))
                                for a in range(1, p))
        self.sq_set = frozenset(a for a in range(1, p) if self.eta[a] == 1)
        self.nsq_set = frozenset(a for a in range(1, p) if self.eta[a] == -1)
        self.p_star = self.eta[p - 1] * p

    def __repr__(self):
        return 'FieldCtx(%d)' % self.p

    def inverse(self, a):
        if a % self.p == 0:
            raise ValueError('0 has no inverse')
        return pow(a, -1, self.p)


@functools.lru_cache(maxsize=None)
def field(p):
    return FieldCtx(p)


def quadratic_character(ctx, a):
    if not 0 <= a < ctx.p:
        raise ValueError('%d is not an element of F_%d' % (a, ctx.p))
    return ctx.eta[a]


class CycInt:
    """
    An element sum(c_j xi^j) of Z[xi_p], kept in the canonical form c_{p-1} = 0
    (the basis 1, xi, ..., xi^{p-2}).
    """

    __slots__ = ('p', 'coeffs')

    def __init__(self, p, coeffs):
        # Callers go through cyc_canonicalize; this trusts its input.
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_counts(cls, p, counts):
        return cyc_canonicalize(p, counts)

    @classmethod
    def integer(cls, p, value):
        return cls(p, (value,) + (0,) * (p - 1))

    @classmethod
    def xi_power(cls, p, j):
        raw = [0] * p
        raw[j % p] = 1
        return cyc_canonicalize(p, raw)

    def __repr__(self):
        return 'CycInt(%d, %r)' % (self.p, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _check(self, other):
        if self.p != other.p:
            raise ValueError('mismatched p: %d and %d' % (self.p, other.p))

    def __add__(self, other):
        self._check(other)
        return CycInt(self.p, tuple(a + b for a, b in
                                    zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return CycInt(self.p, tuple(a - b for a, b in
                                    zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, numbers.Integral):
            other = int(other)
            return CycInt(self.p, tuple(other * a for a in self.coeffs))
        return cyc_mul(self, other)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError('%r is not a rational integer' % (self,))
        return self.coeffs[0]

    def conj(self):
        return galois_apply(self, self.p - 1)


def cyc_canonicalize(p, raw):
    if len(raw) != p:
        raise ValueError('expected %d coefficients, got %d' % (p, len(raw)))
    top = int(raw[p - 1])
    return CycInt(p, tuple(int(c) - top for c in raw))


def cyc_mul(x, y):
    x._check(y)
    p = x.p
    # xi^p = 1 folds the linear convolution back onto p slots.
    full = np.convolve(np.array(x.coeffs, dtype=np.int64),
                       np.array(y.coeffs, dtype=np.int64))
    folded = full[:p].copy()
    folded[:p - 1] += full[p:]
    return cyc_canonicalize(p, folded)


def galois_apply(x, a):
    p = x.p
    if a % p == 0:
        raise ValueError('galois_apply needs a unit, got %d' % a)
    moved = [0] * p
    for j, c in enumerate(x.coeffs):
        moved[(a * j) % p] += c
    return cyc_canonicalize(p, moved)


def gauss_sum(ctx):
    return cyc_canonicalize(ctx.p, list(ctx.eta))


class Form(enum.Enum):
    ZERO = 'zero'
    ROOT = 'root'
    GAUSS = 'gauss'
    NO_MATCH = 'none'


class Parity(enum.Enum):
    EVEN = 'even'
    ODD = 'odd'

    @classmethod
    def of(cls, m):
        return cls.EVEN if m % 2 == 0 else cls.ODD


WalshForm = collections.namedtuple('WalshForm', ['form', 'sign', 'j'])

ZERO_FORM = WalshForm(Form.ZERO, 0, None)
NO_MATCH = WalshForm(Form.NO_MATCH, 0, None)


def _check_magnitude(p, magnitude):
    m = magnitude
    while m > 1 and m % p == 0:
        m //= p
    if magnitude < 1 or m != 1:
        raise ValueError('magnitude %d is not a power of %d' % (magnitude, p))


def _candidate(ctx, magnitude, parity, sign, j):
    value = CycInt.xi_power(ctx.p, j) * (sign * magnitude)
    if parity is Parity.ODD:
        value = cyc_mul(value, gauss_sum(ctx))
    return value


def recognize_walsh_form(w, magnitude, parity):
    """
    Match w against sign * magnitude * xi^j (even parity) or
    sign * magnitude * G * xi^j with G the Gauss sum (odd parity) by trying
    every sign and j.
    """
    ctx = field(w.p)
    _check_magnitude(w.p, magnitude)
    if w.is_zero():
        return ZERO_FORM
    form = Form.ROOT if parity is Parity.EVEN else Form.GAUSS
    for sign in (1, -1):
        for j in range(w.p):
            if _candidate(ctx, magnitude, parity, sign, j) == w:
                return WalshForm(form, sign, j)
    return NO_MATCH


class FormTable:
    """
    Precomputed inverse of the candidate map for one (p, magnitude, parity),
    keyed by canonical coefficient tuples. Agrees with recognize_walsh_form.
    """

    def __init__(self, p, magnitude, parity):
        _check_magnitude(p, magnitude)
        ctx = field(p)
        form = Form.ROOT if parity is Parity.EVEN else Form.GAUSS
        self.p = p
        self.magnitude = magnitude
        self.parity = parity
        self._table = {}
        for sign in (1, -1):
            for j in range(p):
                value = _candidate(ctx, magnitude, parity, sign, j)
                assert value.coeffs not in self._table
                self._table[value.coeffs] = WalshForm(form, sign, j)

    def lookup(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if not any(coeffs):
            return ZERO_FORM
        return self._table.get(coeffs, NO_MATCH)


@functools.lru_cache(maxsize=32)
def form_table(p, magnitude, parity):
    return FormTable(p, magnitude, parity)
