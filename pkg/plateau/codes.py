import collections
import enum
import logging

import numpy as np

from plateau.errors import (
    BudgetExceeded,
    DimensionCollapse,
    EmptyDefiningSet,
    NotScalingClosed,
)
from plateau.field import field
from plateau.funcspace import all_points, scale_map
from plateau.theory import Construction, WeightDistribution
from plateau.workers import map_ranges, merge_histograms


DEFAULT_BUDGET = 10**10

# Codeword entries materialized per enumeration chunk.
CHUNK_ENTRIES = 1 << 22


class CodeKind(enum.Enum):
    FIRST_GEN = 'first-gen'
    DEFSET = 'defset'


class Selector(enum.Enum):
    ZERO = 'zero'
    SQ = 'sq'
    NSQ = 'nsq'


_selectors = {
    Construction.DEFSET_ZERO: Selector.ZERO,
    Construction.DEFSET_SQ: Selector.SQ,
    Construction.DEFSET_NSQ: Selector.NSQ,
}


CodeSpec = collections.namedtuple('CodeSpec', [
    'p',
    'n',
    'kind',
    'coords',
    'message_dim',
    'function',
    'selector',
    'punctured',
])


def _frozen(array):
    array = np.asarray(array, dtype=np.int64)
    array.flags.writeable = False
    return array


def first_generic(f):
    p, n = f.p, f.n
    return CodeSpec(p=p, n=n, kind=CodeKind.FIRST_GEN,
                    coords=_frozen(np.arange(1, p**n)), message_dim=n + 1,
                    function=f, selector=None, punctured=False)


def defining_set(f, selector):
    p, n = f.p, f.n
    if selector is Selector.ZERO:
        mask = f.values == 0
    else:
        ctx = field(p)
        chosen = ctx.sq_set if selector is Selector.SQ else ctx.nsq_set
        mask = np.isin(f.values, sorted(chosen))
    mask[0] = False
    coords = np.flatnonzero(mask)
    if not len(coords):
        raise EmptyDefiningSet('no nonzero x with f(x) in the %s class' %
                               selector.value)
    logging.debug('defining set %s: %d points', selector.value, len(coords))
    return CodeSpec(p=p, n=n, kind=CodeKind.DEFSET, coords=_frozen(coords),
                    message_dim=n, function=f, selector=selector,
                    punctured=False)


def puncture_representatives(spec):
    """
    Keep the smallest encoded index of every orbit {a*x : a != 0} in the
    defining set.
    """
    if spec.kind is not CodeKind.DEFSET:
        raise ValueError('only defining-set codes can be punctured')
    p, n, coords = spec.p, spec.n, spec.coords
    orbit_min = coords.copy()
    for a in range(2, p):
        image = scale_map(p, n, a)[coords]
        if not np.all(np.isin(image, coords)):
            raise NotScalingClosed('defining set is not closed under '
                                   'scaling by %d' % a)
        orbit_min = np.minimum(orbit_min, image)
    reps = coords[coords == orbit_min]
    assert len(reps) * (p - 1) == len(coords)
    return spec._replace(coords=_frozen(reps), punctured=True)


def build_code(f, construction, punctured=False):
    if construction is Construction.FIRST_GEN:
        if punctured:
            raise ValueError('the first construction is not punctured')
        return first_generic(f)
    spec = defining_set(f, _selectors[construction])
    if punctured:
        spec = puncture_representatives(spec)
    return spec


def generator_matrix(spec, f=None):
    """
    Rows f(x), -x_1, ..., -x_n for the first construction and x_1, ..., x_n
    for a defining set, one column per coordinate.
    """
    f = spec.function if f is None else f
    p = spec.p
    points = all_points(p, spec.n)[spec.coords].T
    if spec.kind is CodeKind.FIRST_GEN:
        if f is None or (f.p, f.n) != (p, spec.n):
            raise ValueError('the first construction needs f on F_%d^%d' %
                             (p, spec.n))
        rows = np.vstack([f.values[spec.coords], (-points) % p])
    else:
        rows = points.copy()
    return rows.astype(np.int64)


def check_budget(required, budget):
    if budget is not None and required > budget:
        raise BudgetExceeded(required, budget)
    logging.debug('job of %d operations within budget %s', required, budget)


def encode_messages(G, p, start, stop):
    """Codewords uG for the messages with encoded index in [start, stop)."""
    messages = all_points(p, G.shape[0])[start:stop]
    return (messages @ G) % p


def weight_distribution_exhaustive(spec, f=None, workers=1,
                                   budget=DEFAULT_BUDGET):
    p, k = spec.p, spec.message_dim
    length = len(spec.coords)
    check_budget(p**k * length, budget)
    G = generator_matrix(spec, f)

    def tally(start, stop):
        weights = np.count_nonzero(encode_messages(G, p, start, stop), axis=1)
        zeros = np.flatnonzero(weights == 0) + start
        witness = next((int(i) for i in zeros if i), None)
        values, counts = np.unique(weights, return_counts=True)
        return dict(zip(values.tolist(), counts.tolist())), witness

    chunk = max(1, CHUNK_ENTRIES // max(length, 1))
    results = map_ranges(tally, p**k, workers, chunk=chunk)
    for _, witness in results:
        if witness is not None:
            message = all_points(p, k)[witness].tolist()
            raise DimensionCollapse('message %r gives the zero codeword' %
                                    (message,), witness=message)
    counts = merge_histograms(histogram for histogram, _ in results)
    return WeightDistribution(length, k, counts)


def firstgen_weight_distribution_fast(spec, spectrum, budget=DEFAULT_BUDGET):
    """
    For a != 0 the codeword of (a, b) vanishes exactly where
    f(x) - alpha.x = 0 with alpha = b/a, so its weight is read off the zero
    count of the Walsh fiber at alpha; each alpha arises for p - 1 values
    of a.
    """
    if spec.kind is not CodeKind.FIRST_GEN:
        raise ValueError('the fast path covers the first construction only')
    p, n = spec.p, spec.n
    if (spectrum.p, spectrum.n) != (p, n):
        raise ValueError('spectrum is over F_%d^%d, code over F_%d^%d' %
                         (spectrum.p, spectrum.n, p, n))
    check_budget(p**(n + 1), budget)
    length = p**n - 1
    origin = 1 if spec.function.values[0] == 0 else 0
    weights = length - (spectrum.counts[:, 0] - origin)
    if np.any(weights == 0):
        alpha = int(np.flatnonzero(weights == 0)[0])
        message = [1] + all_points(p, n)[alpha].tolist()
        raise DimensionCollapse('message %r gives the zero codeword' %
                                (message,), witness=message)
    values, counts = np.unique(weights, return_counts=True)
    histogram = collections.Counter(
        dict(zip(values.tolist(), ((p - 1) * counts).tolist())))
    histogram[0] += 1
    histogram[length - (p**(n - 1) - 1)] += p**n - 1
    return WeightDistribution(length, n + 1, histogram)


VerificationReport = collections.namedtuple('VerificationReport', [
    'match',
    'length',
    'dimension',
    'deltas',
])


def verify_prediction(actual, predicted):
    """
    Compare two distributions exactly. length and dimension are
    (actual, predicted) pairs; deltas maps each weight whose count differs
    to (actual, predicted).
    """
    deltas = {}
    for w in sorted(set(actual.counts) | set(predicted.counts)):
        a, b = actual.counts.get(w, 0), predicted.counts.get(w, 0)
        if a != b:
            deltas[w] = (a, b)
    match = (not deltas and actual.length == predicted.length and
             actual.dimension == predicted.dimension)
    if not match:
        logging.warning('prediction mismatch: %s vs %s',
                        actual.enumerator(), predicted.enumerator())
    return VerificationReport(match=match,
                              length=(actual.length, predicted.length),
                              dimension=(actual.dimension,
                                         predicted.dimension),
                              deltas=deltas)
