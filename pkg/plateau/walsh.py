import collections
import enum
import logging
import math
import time

import numpy as np

from plateau.errors import NotPlateaued
from plateau.field import CycInt, Form, Parity, check_width, form_table
from plateau.funcspace import all_points, negate_map, scale_map
from plateau.workers import map_ranges


class Side(enum.Enum):
    PLUS = 'plus'
    MINUS = 'minus'
    BALANCED = 'balanced'

    @classmethod
    def of(cls, sign):
        return cls.PLUS if sign > 0 else cls.MINUS

    @property
    def sign(self):
        return {Side.PLUS: 1, Side.MINUS: -1}.get(self)


class Regularity(enum.Enum):
    REGULAR = 'regular'
    WEAKLY_REGULAR = 'weakly-regular'
    NON_WEAKLY_REGULAR = 'non-weakly-regular'


class WalshSpectrum:
    """
    Exact Walsh spectrum as fiber counts: counts[alpha][j] is the number of x
    with f(x) - alpha.x = j, so the Walsh value at alpha is
    sum_j counts[alpha][j] xi^j.
    """

    def __init__(self, p, n, counts):
        assert counts.shape == (p**n, p)
        self.p = p
        self.n = n
        self.counts = counts

    def __eq__(self, other):
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return (self.p == other.p and self.n == other.n and
                np.array_equal(self.counts, other.counts))

    def value(self, alpha):
        return CycInt.from_counts(self.p, self.counts[alpha])

    def canonical(self):
        return self.counts - self.counts[:, -1:]

    def support(self):
        return np.flatnonzero(self.canonical().any(axis=1))

    def parseval_total(self):
        # |W|^2 = sum_{i,j} N_i N_j xi^{i-j}; the autocorrelation of each row
        # gives its coefficient at xi^d.
        p = self.p
        counts = self.counts.astype(object)
        raw = [int(np.sum(counts * np.roll(counts, d, axis=1)))
               for d in range(p)]
        return CycInt.from_counts(p, raw)


def walsh_counts_naive(f, workers=1):
    p, n = f.p, f.n
    check_width(p, n)
    points = all_points(p, n)

    def rows(start, stop):
        out = np.empty((stop - start, p), dtype=np.int64)
        for alpha in range(start, stop):
            shifted = (f.values - points @ points[alpha]) % p
            out[alpha - start] = np.bincount(shifted, minlength=p)
        return out

    counts = np.concatenate(map_ranges(rows, p**n, workers))
    return WalshSpectrum(p, n, counts)


def _one_hot(p, n, values, rows=None):
    table = np.zeros((p**n, p), dtype=np.int64)
    if rows is None:
        rows = np.arange(p**n)
    table[rows, values] = 1
    return table


def _butterfly(p, n, table):
    """
    Decimate coordinate by coordinate: summing over x_i with the count
    vectors cyclically shifted by -alpha_i x_i turns the x_i axis into the
    alpha_i axis.
    """
    cube = table.reshape((p,) * n + (p,))
    for axis in range(n):
        slices = [np.take(cube, x, axis=axis) for x in range(p)]
        outs = []
        for a in range(p):
            acc = slices[0].copy()
            for x in range(1, p):
                acc += np.roll(slices[x], -a * x, axis=-1)
            outs.append(acc)
        cube = np.stack(outs, axis=axis)
    return cube.reshape(p**n, p)


def walsh_counts_fast(f):
    p, n = f.p, f.n
    check_width(p, n)
    start = time.perf_counter()
    counts = _butterfly(p, n, _one_hot(p, n, f.values))
    logging.debug('spectrum of F_%d^%d in %.3fs', p, n,
                  time.perf_counter() - start)
    return WalshSpectrum(p, n, counts)


DualBent = collections.namedtuple('DualBent', [
    'fstarstar',
    'b_plus_star',
    'b_minus_star',
    'type_of_fstar',
    'involution_ok',
])


PlateauProfile = collections.namedtuple('PlateauProfile', [
    'p',
    'n',
    's',
    'supp',
    'eps',
    'fstar',
    'b_plus',
    'b_minus',
    'k',
    'type_of_f',
    'regularity',
    'eps0',
    'nwrf_t',
    'dual_h',
    'dual_bent',
])


def _exponent_of(p, size):
    m = 0
    while size > 1 and size % p == 0:
        size //= p
        m += 1
    return m if size == 1 else None


def classify_plateaued(spectrum):
    p, n = spectrum.p, spectrum.n
    canon = spectrum.canonical()
    supp = np.flatnonzero(canon.any(axis=1))
    m = _exponent_of(p, len(supp))
    if m is None:
        raise NotPlateaued('support size %d is not a power of %d' %
                           (len(supp), p))
    s = n - m
    parity = Parity.of(n + s)
    table = form_table(p, p**((n + s) // 2), parity)
    eps = {}
    fstar = {}
    for alpha in supp.tolist():
        form = table.lookup(canon[alpha])
        if form.form is Form.NO_MATCH:
            logging.debug('no %s form at alpha=%d', parity.value, alpha)
            raise NotPlateaued('Walsh value at index %d has modulus other '
                               'than %d^(%d/2)' % (alpha, p, n + s))
        eps[alpha] = form.sign
        fstar[alpha] = form.j
    b_plus = frozenset(a for a, e in eps.items() if e > 0)
    b_minus = frozenset(eps) - b_plus
    if b_plus and b_minus:
        regularity = Regularity.NON_WEAKLY_REGULAR
    elif s == 0 and not b_minus and p**n % 4 == 1:
        regularity = Regularity.REGULAR
    else:
        regularity = Regularity.WEAKLY_REGULAR
    if 0 in eps:
        type_of_f = Side.of(eps[0])
        eps0 = eps[0]
    else:
        type_of_f = Side.BALANCED
        eps0 = None
    logging.info('F_%d^%d: %d-plateaued, |Supp| = %d, k = %d, %s',
                 p, n, s, len(supp), len(b_plus), regularity.value)
    return PlateauProfile(p=p, n=n, s=s, supp=tuple(supp.tolist()), eps=eps,
                          fstar=fstar, b_plus=b_plus, b_minus=b_minus,
                          k=len(b_plus), type_of_f=type_of_f,
                          regularity=regularity, eps0=eps0, nwrf_t=None,
                          dual_h=None, dual_bent=None)


def dual_spectrum(prof):
    """Counts of sum over x in Supp of xi^{f*(x) - alpha.x}."""
    p, n = prof.p, prof.n
    rows = np.array(prof.supp, dtype=np.int64)
    values = np.array([prof.fstar[x] for x in prof.supp], dtype=np.int64)
    return WalshSpectrum(p, n, _butterfly(p, n, _one_hot(p, n, values, rows)))


def dual_spectrum_and_bent_check(f, prof):
    """
    Return prof with dual_bent filled in, or unchanged (dual_bent None) when
    some value of the dual transform is not +-p^((n-s)/2) times a root of
    unity (times the Gauss sum for odd n-s).
    """
    p, n, s = prof.p, prof.n, prof.s
    canon = dual_spectrum(prof).canonical()
    table = form_table(p, p**((n - s) // 2), Parity.of(n - s))
    fstarstar = np.empty(p**n, dtype=np.int64)
    plus = []
    minus = []
    for alpha in range(p**n):
        form = table.lookup(canon[alpha])
        if form.form not in (Form.ROOT, Form.GAUSS):
            logging.debug('dual is not bent relative to Supp: index %d', alpha)
            return prof._replace(dual_bent=None)
        fstarstar[alpha] = form.j
        (plus if form.sign > 0 else minus).append(alpha)
    involution_ok = bool(np.array_equal(fstarstar,
                                        f.values[negate_map(p, n)]))
    if not involution_ok:
        logging.warning('f** differs from f(-x)')
    fstarstar.flags.writeable = False
    dual = DualBent(fstarstar=fstarstar,
                    b_plus_star=frozenset(plus),
                    b_minus_star=frozenset(minus),
                    type_of_fstar=Side.PLUS if 0 in plus else Side.MINUS,
                    involution_ok=involution_ok)
    return prof._replace(dual_bent=dual)


def dual_exponent(p, t):
    l = pow(t - 1, -1, p - 1)
    return l + 1


def nwrf_exponent(f):
    """
    Smallest even t with gcd(t - 1, p - 1) = 1 and f(ax) = a^t f(x) for all
    units a, provided f(0) = 0; None otherwise.
    """
    p, n = f.p, f.n
    if f.values[0] != 0:
        return None
    for t in range(2, 2 * (p - 1) + 1, 2):
        if math.gcd(t - 1, p - 1) != 1:
            continue
        if all(np.array_equal(f.values[scale_map(p, n, a)],
                              (pow(a, t, p) * f.values) % p)
               for a in range(2, p)):
            return t
    return None


def regularity_of(prof):
    if prof.regularity is Regularity.NON_WEAKLY_REGULAR:
        return prof.regularity, (min(prof.b_plus), min(prof.b_minus))
    return prof.regularity, None


def profile_function(f):
    prof = classify_plateaued(walsh_counts_fast(f))
    prof = dual_spectrum_and_bent_check(f, prof)
    t = nwrf_exponent(f)
    if t is not None:
        prof = prof._replace(nwrf_t=t, dual_h=dual_exponent(f.p, t))
    return prof


def _dual_homogeneous(prof):
    p, n, h = prof.p, prof.n, prof.dual_h
    for a in range(2, p):
        perm = scale_map(p, n, a)
        for x in prof.supp:
            y = int(perm[x])
            if y not in prof.eps or prof.eps[y] != prof.eps[x]:
                return False
            if prof.fstar[y] != pow(a, h, p) * prof.fstar[x] % p:
                return False
    return True


def structural_checks(f, prof):
    """
    Structural facts about NWRF functions and their duals. An entry is None
    when its hypotheses do not hold for prof.
    """
    p, n, s = prof.p, prof.n, prof.s
    nwrf = (prof.nwrf_t is not None and
            prof.regularity is Regularity.NON_WEAKLY_REGULAR)
    checks = {
        'dual_zero_at_origin': None,
        'dual_homogeneous': None,
        'types_agree_rule': None,
        'dual_involution': None,
    }
    if nwrf and 0 in prof.fstar:
        checks['dual_zero_at_origin'] = prof.fstar[0] == 0
    if nwrf:
        checks['dual_homogeneous'] = _dual_homogeneous(prof)
    if prof.dual_bent is not None:
        checks['dual_involution'] = prof.dual_bent.involution_ok
        if nwrf and 0 < prof.k < p**(n - s) and prof.eps0 is not None:
            same = prof.type_of_f is prof.dual_bent.type_of_fstar
            checks['types_agree_rule'] = same == (p**(n + s) % 4 == 1)
    return checks
