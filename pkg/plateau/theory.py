import collections
import enum
import logging
import math
import re
from fractions import Fraction

from plateau.errors import (
    DivisibilityViolation,
    DualNotBentRelative,
    HypothesisError,
    NegativeSolution,
    NonIntegralSolution,
    InconsistentDistribution,
)
from plateau.field import field
from plateau.walsh import Regularity, Side


class Construction(enum.Enum):
    FIRST_GEN = 'first-gen'
    DEFSET_ZERO = 'defset-zero'
    DEFSET_SQ = 'defset-sq'
    DEFSET_NSQ = 'defset-nsq'

    @property
    def is_defset(self):
        return self is not Construction.FIRST_GEN


class WeightDistribution:
    """
    Weight distribution of an [length, dimension] code: counts maps each
    Hamming weight w to the number A_w of codewords of that weight.
    """

    def __init__(self, length, dimension, counts):
        self.length = length
        self.dimension = dimension
        self.counts = {int(w): int(c) for w, c in counts.items() if c}

    def __repr__(self):
        return 'WeightDistribution(%d, %d, %s)' % (self.length, self.dimension,
                                                  self.enumerator())

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return (self.length == other.length and
                self.dimension == other.dimension and
                self.counts == other.counts)

    def weights(self):
        return sorted(self.counts)

    def total(self):
        return sum(self.counts.values())

    def nonzero_weights(self):
        return [w for w in self.weights() if w]

    def min_distance(self):
        nonzero = self.nonzero_weights()
        return nonzero[0] if nonzero else None

    def max_weight(self):
        nonzero = self.nonzero_weights()
        return nonzero[-1] if nonzero else None

    def parameters(self):
        return [self.length, self.dimension, self.min_distance()]

    def enumerator(self):
        terms = []
        for w in self.weights():
            if w == 0:
                terms.append(str(self.counts[w]))
            else:
                terms.append('%dz^%d' % (self.counts[w], w))
        return '+'.join(terms)

    def scaled(self, divisor):
        if self.length % divisor:
            raise ValueError('length %d is not divisible by %d' %
                             (self.length, divisor))
        counts = {}
        for w, c in self.counts.items():
            if w % divisor:
                raise ValueError('weight %d is not divisible by %d' %
                                 (w, divisor))
            counts[w // divisor] = c
        return WeightDistribution(self.length // divisor, self.dimension,
                                  counts)

    def to_json(self):
        return {
            'length': self.length,
            'dimension': self.dimension,
            'weights': [[w, self.counts[w]] for w in self.weights()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj['length'], obj['dimension'],
                   {w: c for w, c in obj['weights']})


_term_re = re.compile(r'^(\d*)z\^\{?(\d+)\}?$|^(\d*)z$|^(\d+)$')


def parse_enumerator(text, length, dimension):
    counts = collections.Counter()
    for term in re.sub(r'\s+', '', text).split('+'):
        match = _term_re.match(term)
        if not match:
            raise ValueError('bad enumerator term %r' % term)
        if match.group(2) is not None:
            counts[int(match.group(2))] += int(match.group(1) or 1)
        elif match.group(4) is not None:
            counts[0] += int(match.group(4))
        else:
            counts[1] += int(match.group(3) or 1)
    return WeightDistribution(length, dimension, counts)


PredictionInput = collections.namedtuple('PredictionInput', [
    'p',
    'n',
    's',
    'k',
    'eps0_f',
    'eps0_fstar',
    'kind',
    'punctured',
])


def _pp(p, e):
    return Fraction(p)**e


def _exact(value, what):
    if isinstance(value, Fraction) and value.denominator != 1:
        raise HypothesisError('%s = %s is not an integer' % (what, value))
    return int(value)


def _sign(side):
    if isinstance(side, Side):
        side = side.sign
    if side not in (1, -1):
        raise HypothesisError('f is balanced; the value counts need a sign')
    return side


def value_distribution_f(p, n, s, type_of_f, j0):
    """Number of x with f(x) = j for an unbalanced s-plateaued f."""
    sign = _sign(type_of_f)
    eta = field(p).eta
    counts = {}
    if (n + s) % 2 == 0:
        half = _pp(p, (n + s) // 2)
        lower = _pp(p, (n + s) // 2 - 1)
        for j in range(p):
            counts[j] = _pp(p, n - 1) - sign * lower
        counts[j0 % p] = _pp(p, n - 1) + sign * (half - lower)
    else:
        q = _pp(p, (n + s - 1) // 2)
        for j in range(p):
            counts[(j0 + j) % p] = _pp(p, n - 1) + sign * eta[j] * q
    return {j: _exact(c, 'N_%d(f)' % j) for j, c in counts.items()}


def value_distribution_fstar(p, n, s, type_of_fstar, j0):
    """Number of x in Supp with f*(x) = j when f* is bent relative to Supp."""
    sign = _sign(type_of_fstar)
    eta = field(p).eta
    counts = {}
    if (n - s) % 2 == 0:
        half = _pp(p, (n - s) // 2)
        lower = _pp(p, (n - s) // 2 - 1)
        for j in range(p):
            counts[j] = _pp(p, n - s - 1) - sign * lower
        counts[j0 % p] = _pp(p, n - s - 1) + sign * (half - lower)
    else:
        q = _pp(p, (n - s - 1) // 2)
        for j in range(p):
            counts[(j0 + j) % p] = _pp(p, n - s - 1) + sign * eta[j] * q
    return {j: _exact(c, 'N_%d(f*)' % j) for j, c in counts.items()}


ClassCounts = collections.namedtuple('ClassCounts', ['c', 'd', 'e'])


def bplus_value_counts(p, n, s, k, side0_fstar, j0):
    """
    c[j] and d[j] count the points of B+(f) and B-(f) with f* = j, for a
    non-weakly regular f whose dual is bent relative to its support.
    """
    side = _sign(side0_fstar)
    if not 0 < k < p**(n - s):
        raise HypothesisError('k = %d must satisfy 0 < k < %d' %
                              (k, p**(n - s)))
    if k % p:
        raise DivisibilityViolation('k = %d is not divisible by p = %d' %
                                    (k, p))
    eta = field(p).eta
    kp = Fraction(k, p)
    top = _pp(p, n - s - 1)
    c = {}
    d = {}
    if (n + s) % 2 == 0:
        q = _pp(p, (n - s) // 2 - 1)
        for j in range(p):
            if side > 0:
                c[j], d[j] = kp - q, top - kp
            else:
                c[j], d[j] = kp, top + q - kp
        if side > 0:
            c[j0 % p], d[j0 % p] = kp + (p - 1) * q, top - kp
        else:
            c[j0 % p], d[j0 % p] = kp, top - (p - 1) * q - kp
    else:
        q = _pp(p, (n - s - 1) // 2)
        c[j0 % p], d[j0 % p] = kp, top - kp
        for j in range(1, p):
            if p % 4 == 1 and side > 0:
                cj, dj = kp + eta[j] * q, top - kp
            elif p % 4 == 1:
                cj, dj = kp, top - eta[j] * q - kp
            elif side > 0:
                cj, dj = kp, top + eta[j] * q - kp
            else:
                cj, dj = kp - eta[j] * q, top - kp
            c[(j0 + j) % p], d[(j0 + j) % p] = cj, dj
    c = {j: _exact(v, 'c_%d' % j) for j, v in c.items()}
    d = {j: _exact(v, 'd_%d' % j) for j, v in d.items()}
    e = {j: c[j] - d[j] for j in range(p)}
    return ClassCounts(c, d, e)


def _check_input(inp, kinds):
    if inp.kind not in kinds:
        raise HypothesisError('construction %s is not handled here' %
                              inp.kind.value)
    p, n, s = inp.p, inp.n, inp.s
    field(p)
    if s < 0:
        raise HypothesisError('s = %d is negative' % s)
    even = (n + s) % 2 == 0
    if inp.kind is Construction.FIRST_GEN:
        limit = n - 2 if even else n - 1
        if inp.punctured:
            raise HypothesisError('the first construction is not punctured')
    else:
        limit = n - 4 if even else n - 3
        if inp.eps0_f not in (1, -1):
            raise HypothesisError('f is balanced; epsilon_0 is undefined')
    if s > limit:
        raise HypothesisError('s = %d exceeds %d for n = %d with n+s %s' %
                              (s, limit, n, 'even' if even else 'odd'))


def _classes(inp):
    counts = bplus_value_counts(inp.p, inp.n, inp.s, inp.k, inp.eps0_fstar, 0)
    for j in range(inp.p):
        yield 1, j, counts.c[j]
        yield -1, j, counts.d[j]


def _collect(inp, length, dimension, entries):
    counts = collections.Counter()
    for weight, multiplicity in entries:
        weight = _exact(weight, 'weight')
        if multiplicity < 0 or not 0 <= weight <= length:
            raise HypothesisError('prediction out of range: %d codewords of '
                                  'weight %d' % (multiplicity, weight))
        counts[weight] += multiplicity
    wd = WeightDistribution(_exact(length, 'length'), dimension, counts)
    assert wd.total() == inp.p**dimension, wd
    return wd


def predict_weights_firstgen(inp):
    _check_input(inp, (Construction.FIRST_GEN,))
    p, n, s = inp.p, inp.n, inp.s
    ctx = field(p)
    base = (p - 1) * p**(n - 1)
    if (n + s) % 2 == 0:
        q = _pp(p, (n + s) // 2 - 1)

        def weight(sign, j):
            if j == 0:
                return (p - 1) * (p**(n - 1) - sign * q)
            return base + sign * q
    else:
        q = _pp(p, (n + s - 3) // 2) * ctx.p_star

        def weight(sign, j):
            if j == 0:
                return base
            return base - sign * ctx.eta[j] * q

    entries = [(0, 1), (base, p**n - 1), (base, (p - 1) * (p**n - p**(n - s)))]
    for sign, j, count in _classes(inp):
        entries.append((weight(sign, j), (p - 1) * count))
    return _collect(inp, p**n - 1, n + 1, entries)


def _predict_defset(inp, length, unsupported, weight):
    p, n, s = inp.p, inp.n, inp.s
    entries = [(0, 1), (unsupported, p**n - p**(n - s))]
    for sign, j, count in _classes(inp):
        if sign == inp.eps0_f and j == 0:
            # The zero vector is not a coordinate.
            count -= 1
        entries.append((weight(sign, j), count))
    wd = _collect(inp, length, n, entries)
    if inp.punctured:
        wd = wd.scaled(p - 1)
    return wd


def predict_weights_defset(inp):
    _check_input(inp, (Construction.DEFSET_ZERO,))
    p, n, s, eps0 = inp.p, inp.n, inp.s, inp.eps0_f
    ctx = field(p)
    lead = _pp(p, n - 2)
    if (n + s) % 2 == 0:
        q = _pp(p, (n + s) // 2 - 2)
        length = p**(n - 1) + eps0 * (p - 1) * _pp(p, (n + s) // 2 - 1) - 1
        unsupported = (p - 1) * (lead + eps0 * (p - 1) * q)

        def weight(sign, j):
            if j == 0:
                return (p - 1) * (lead + (eps0 - sign) * (p - 1) * q)
            return (p - 1) * (lead + (eps0 * (p - 1) + sign) * q)
    else:
        q = _pp(p, (n + s - 5) // 2) * ctx.p_star
        length = p**(n - 1) - 1
        unsupported = (p - 1) * lead

        def weight(sign, j):
            if j == 0:
                return unsupported
            return (p - 1) * (lead - sign * ctx.eta[j] * q)

    return _predict_defset(inp, length, unsupported, weight)


def predict_weights_quadratic_defset(inp):
    _check_input(inp, (Construction.DEFSET_SQ, Construction.DEFSET_NSQ))
    p, n, s, eps0 = inp.p, inp.n, inp.s, inp.eps0_f
    ctx = field(p)
    half = Fraction(p - 1, 2)
    lead = _pp(p, n - 2)
    square = inp.kind is Construction.DEFSET_SQ
    if (n + s) % 2 == 0:
        q = _pp(p, (n + s) // 2 - 2)
        length = half * (p**(n - 1) - eps0 * _pp(p, (n + s) // 2 - 1))
        unsupported = half * (p - 1) * (lead - eps0 * q)

        def weight(sign, j):
            if j == 0:
                return half * (p - 1) * (lead + (sign - eps0) * q)
            if square:
                return unsupported - sign * half * q * (p * ctx.eta[j] + 1)
            return unsupported + sign * half * q * (p * ctx.eta[j] - 1)
    else:
        q3 = _pp(p, (n + s - 3) // 2)
        q5 = _pp(p, (n + s - 5) // 2)
        # The non-square set mirrors the square set with epsilon_0 negated.
        side = 1 if square else -1
        length = half * (p**(n - 1) + side * eps0 * _pp(p, (n + s - 1) // 2))
        unsupported = half * (p - 1) * (lead + side * eps0 * q3)

        def weight(sign, j):
            if j == 0:
                return half * (p - 1) * (lead + side * (eps0 - sign) * q3)
            return unsupported + side * sign * half * q5 * (
                p + side * ctx.p_star * ctx.eta[j])

    return _predict_defset(inp, length, unsupported, weight)


def predict(inp):
    if inp.kind is Construction.FIRST_GEN:
        return predict_weights_firstgen(inp)
    elif inp.kind is Construction.DEFSET_ZERO:
        return predict_weights_defset(inp)
    else:
        return predict_weights_quadratic_defset(inp)


def prediction_input(f, prof, construction, punctured=False):
    """
    Build the closed-form prediction input for f, raising HypothesisError
    (or DualNotBentRelative) on the first hypothesis f does not meet.
    """
    p, n, s = prof.p, prof.n, prof.s
    if f.values[0] != 0:
        raise HypothesisError('f(0) = %d, expected 0' % f.values[0])
    if prof.regularity is not Regularity.NON_WEAKLY_REGULAR:
        raise HypothesisError('f is %s, expected non-weakly regular' %
                              prof.regularity.value)
    if prof.dual_bent is None:
        raise DualNotBentRelative('f* is not bent relative to Supp')
    if not 0 < prof.k < p**(n - s):
        raise HypothesisError('k = %d must satisfy 0 < k < %d' %
                              (prof.k, p**(n - s)))
    if construction.is_defset and prof.nwrf_t is None:
        raise HypothesisError('f is not homogeneous of an admissible even '
                              'degree')
    if punctured and not construction.is_defset:
        raise HypothesisError('the first construction is not punctured')
    return PredictionInput(p=p, n=n, s=s, k=prof.k, eps0_f=prof.eps0,
                           eps0_fstar=prof.dual_bent.type_of_fstar.sign,
                           kind=construction, punctured=punctured)


DualLowWeights = collections.namedtuple('DualLowWeights', [
    'a1', 'a2', 'a3', 'a4', 'd_label',
])


def pless_dual_low_weights(wd, p):
    """
    Solve the first five Pless power moments for A_1..A_4 of the dual code.
    """
    n, k = wd.length, wd.dimension
    moments = [sum(Fraction(w)**r * c for w, c in wd.counts.items())
               for r in range(5)]
    if moments[0] != p**k:
        raise InconsistentDistribution('%d codewords, expected %d^%d' %
                                       (moments[0], p, k))
    scaled = [moments[r] / _pp(p, k - r) for r in range(5)]

    a1 = p * n - n - scaled[1]
    a2 = (scaled[2] - (p - 1) * n * (p * n - n + 1) +
          (2 * p * n - p - 2 * n + 2) * a1) / 2
    p3 = (p - 1) * n * (p**2 * n**2 - 2 * p * n**2 + 3 * p * n - p + n**2 -
                        3 * n + 2)
    c31 = (3 * p**2 * n**2 - 3 * p**2 * n - 6 * p * n**2 + 12 * p * n + p**2 -
           6 * p + 3 * n**2 - 9 * n + 6)
    a3 = (p3 - c31 * a1 + 6 * (p * n - p - n + 2) * a2 - scaled[3]) / 6
    p4 = (p - 1) * n * (p**3 * n**3 - 3 * p**2 * n**3 + 6 * p**2 * n**2 -
                        4 * p**2 * n + p**2 + 3 * p * n**3 - 12 * p * n**2 +
                        15 * p * n - 6 * p - n**3 + 6 * n**2 - 11 * n + 6)
    c41 = (4 * p**3 * n**3 - 6 * p**3 * n**2 + 4 * p**3 * n - p**3 -
           12 * p**2 * n**3 + 36 * p**2 * n**2 - 38 * p**2 * n + 14 * p**2 +
           12 * p * n**3 - 54 * p * n**2 + 78 * p * n - 36 * p - 4 * n**3 +
           24 * n**2 - 44 * n + 24)
    c42 = (12 * p**2 * n**2 - 24 * p**2 * n + 14 * p**2 - 24 * p * n**2 +
           84 * p * n - 72 * p + 12 * n**2 - 60 * n + 72)
    c43 = 24 * p * n - 36 * p - 24 * n + 72
    a4 = (scaled[4] - p4 + c41 * a1 - c42 * a2 + c43 * a3) / 24

    values = []
    for j, a in enumerate((a1, a2, a3, a4), 1):
        a = Fraction(a)
        if a.denominator != 1:
            raise NonIntegralSolution('A_%d of the dual is %s' % (j, a))
        if a < 0:
            raise NegativeSolution('A_%d of the dual is %s' % (j, a))
        values.append(int(a))
    if n == k:
        label = 'trivial'
    else:
        label = next((str(j) for j, a in enumerate(values, 1) if a), '>=5')
    return DualLowWeights(*values, d_label=label)


MinimalityVerdict = collections.namedtuple('MinimalityVerdict',
                                           ['minimal', 'ratio'])


def minimality_check(wd, p):
    """
    Sufficient test for minimality: wt_min / wt_max > (p - 1) / p. A False
    verdict is inconclusive.
    """
    lo, hi = wd.min_distance(), wd.max_weight()
    if lo is None:
        raise ValueError('the zero code has no nonzero weights')
    return MinimalityVerdict(lo * p > hi * (p - 1), Fraction(lo, hi))


BoundReport = collections.namedtuple('BoundReport', [
    'singleton_defect',
    'mds',
    'amds',
    'sphere_packing_ok',
    'sphere_packing_limit',
    'sphere_packing_verdict',
])


def _sphere_packing_holds(length, dimension, d, p):
    volume = sum(math.comb(length, j) * (p - 1)**j
                 for j in range((d - 1) // 2 + 1))
    return p**(length - dimension) >= volume


def bound_checks(length, dimension, d, p):
    defect = length - dimension + 1 - d
    limit = 1
    while (limit <= length and
           _sphere_packing_holds(length, dimension, limit + 1, p)):
        limit += 1
    if d == limit:
        verdict = 'optimal'
    elif d == limit - 1:
        verdict = 'almost-optimal'
    else:
        verdict = 'below'
    packing_ok = _sphere_packing_holds(length, dimension, d, p)
    return BoundReport(singleton_defect=defect,
                       mds=defect == 0,
                       amds=defect == 1,
                       sphere_packing_ok=packing_ok,
                       sphere_packing_limit=limit,
                       sphere_packing_verdict=verdict)


def tally_checks(f, prof):
    """
    Compare the closed-form value counts of f, of f* and of f* split by
    B+(f) and B-(f) against direct tallies. Entries are None when the
    hypotheses of the closed form do not hold.
    """
    p, n, s = prof.p, prof.n, prof.s
    checks = {
        'value_distribution_f': None,
        'value_distribution_fstar': None,
        'bplus_value_counts': None,
    }
    if prof.eps0 is not None:
        actual = [int(c) for c in f.value_counts()]
        predicted = value_distribution_f(p, n, s, prof.eps0, prof.fstar[0])
        checks['value_distribution_f'] = actual == [predicted[j]
                                                    for j in range(p)]
    if prof.dual_bent is None:
        return checks
    j0 = int(f.values[0])
    fstar_counts = collections.Counter(prof.fstar.values())
    predicted = value_distribution_fstar(p, n, s,
                                         prof.dual_bent.type_of_fstar, j0)
    checks['value_distribution_fstar'] = all(
        fstar_counts[j] == predicted[j] for j in range(p))
    if prof.regularity is Regularity.NON_WEAKLY_REGULAR:
        try:
            expected = bplus_value_counts(p, n, s, prof.k,
                                          prof.dual_bent.type_of_fstar, j0)
        except HypothesisError as e:
            logging.debug('B+ value counts not applicable: %s', e)
            return checks
        c = collections.Counter(prof.fstar[x] for x in prof.b_plus)
        d = collections.Counter(prof.fstar[x] for x in prof.b_minus)
        checks['bplus_value_counts'] = all(
            c[j] == expected.c[j] and d[j] == expected.d[j] for j in range(p))
    return checks
