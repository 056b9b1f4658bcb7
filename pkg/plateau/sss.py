"""
Massey secret sharing over the dual of a constructed code C.

Shares are coordinates of a codeword of C^perp whose coordinate 0 holds the
secret. A set of participants can recover the secret exactly when it covers
the support of some codeword c of C with c_0 = 1, so everything about the
access structure is computed from C and C^perp is never materialized.
"""

import collections
import itertools
import logging
import math

import numpy as np

from plateau.codes import (
    DEFAULT_BUDGET,
    CHUNK_ENTRIES,
    check_budget,
    encode_messages,
    generator_matrix,
)
from plateau.errors import DimensionCollapse, NotAnAccessSet
from plateau.field import field
from plateau.workers import map_ranges


def rref_mod_p(matrix, p):
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    ctx = field(p)
    rows = np.array(matrix, dtype=np.int64) % p
    pivots = []
    r = 0
    for col in range(rows.shape[1]):
        if r == rows.shape[0]:
            break
        nonzero = np.flatnonzero(rows[r:, col])
        if not len(nonzero):
            continue
        i = r + int(nonzero[0])
        rows[[r, i]] = rows[[i, r]]
        rows[r] = rows[r] * ctx.inverse(int(rows[r, col])) % p
        for i in range(rows.shape[0]):
            if i != r and rows[i, col]:
                rows[i] = (rows[i] - rows[i, col] * rows[r]) % p
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def solve_mod_p(matrix, target, p):
    """One solution x of matrix @ x = target over F_p, or None."""
    matrix = np.asarray(matrix, dtype=np.int64)
    target = np.asarray(target, dtype=np.int64).reshape(-1, 1)
    cols = matrix.shape[1]
    reduced, pivots = rref_mod_p(np.hstack([matrix, target]), p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row, col in zip(reduced, pivots):
        x[col] = row[cols]
    return x


SchemeCtx = collections.namedtuple('SchemeCtx', [
    'p',
    'spec',
    'G',
    'g0',
    'participants',
    'reduced',
    'pivots',
    'free',
])


def scheme_from_code(spec):
    G = generator_matrix(spec)
    p = spec.p
    k, m = G.shape
    if k < 2:
        raise ValueError('a scheme needs dimension at least 2, got %d' % k)
    reduced, pivots = rref_mod_p(G, p)
    if len(pivots) != k:
        raise DimensionCollapse('generator matrix has rank %d < %d' %
                                (len(pivots), k))
    free = [j for j in range(m) if j not in set(pivots)]
    return SchemeCtx(p=p, spec=spec, G=G, g0=G[:, 0].copy(),
                     participants=m - 1, reduced=reduced, pivots=pivots,
                     free=free)


def massey_deal(ctx, secret, randomness):
    """
    Shares (t_1, ..., t_{m-1}) of a codeword t of C^perp with t_0 = secret.
    randomness fills the free coordinates of t; the first free coordinate
    that moves t_0 is adjusted to hit the secret.
    """
    p = ctx.p
    t_free = np.array(randomness, dtype=np.int64) % p
    if t_free.shape != (len(ctx.free),):
        raise ValueError('expected %d random values, got %d' %
                         (len(ctx.free), t_free.size))
    # t_pivot = -R_free @ t_free
    coupling = ctx.reduced[:, ctx.free]
    if 0 in ctx.free:
        t_free[ctx.free.index(0)] = secret % p
    else:
        row = coupling[ctx.pivots.index(0)]
        movers = np.flatnonzero(row)
        if not len(movers):
            raise ValueError('invalid scheme: the secret coordinate is '
                             'always zero')
        j = int(movers[0])
        t_free[j] = 0
        rest = -int(row @ t_free) % p
        t_free[j] = ((rest - secret) * field(p).inverse(int(row[j]))) % p
    t = np.zeros(ctx.participants + 1, dtype=np.int64)
    t[ctx.free] = t_free
    t[ctx.pivots] = (-(coupling @ t_free)) % p
    assert t[0] == secret % p
    return t[1:]


def recovery_vector(ctx, access):
    """
    A codeword c of C with c_0 = 1 supported inside {0} and access, or
    None.
    """
    access = set(access)
    if not access <= set(range(1, ctx.participants + 1)):
        raise ValueError('participants are numbered 1..%d' %
                         ctx.participants)
    outside = [j for j in range(1, ctx.participants + 1) if j not in access]
    columns = ctx.G[:, [0] + outside]
    target = np.zeros(len(outside) + 1, dtype=np.int64)
    target[0] = 1
    v = solve_mod_p(columns.T, target, ctx.p)
    if v is None:
        return None
    return (v @ ctx.G) % ctx.p


def massey_recover(ctx, access, shares):
    """The secret is -sum c_j t_j for c in C with c_0 = 1 inside access."""
    c = recovery_vector(ctx, access)
    if c is None:
        raise NotAnAccessSet('participants %s cannot recover the secret' %
                             sorted(access))
    shares = np.asarray(shares, dtype=np.int64)
    return int(-(c[1:] @ shares)) % ctx.p


AccessStructure = collections.namedtuple('AccessStructure', [
    'supports',
    'count',
    'removed',
    'minimal_code',
])


def _gram(rows):
    # Entries are counts below 2^53, so float64 (BLAS) products are exact.
    as_float = rows.astype(np.float64)
    return np.rint(as_float @ as_float.T).astype(np.int64)


def _minimal_rows(supports, budget):
    supports = np.unique(supports, axis=0)
    check_budget(len(supports)**2 * supports.shape[1], budget)
    sizes = supports.sum(axis=1)
    overlap = _gram(supports)
    # Row j lies inside row i when their overlap is all of row j.
    contains = overlap == sizes[np.newaxis, :]
    np.fill_diagonal(contains, False)
    keep = ~contains.any(axis=1)
    return supports[keep], int(len(supports) - keep.sum())


def minimal_access_sets(ctx, workers=1, budget=DEFAULT_BUDGET):
    """
    Supports on participants 1..m-1 of the codewords of C with c_0 = 1, with
    any support that strictly contains another filtered out.
    """
    p = ctx.p
    k, m = ctx.G.shape
    check_budget(p**k * m, budget)

    def collect(start, stop):
        words = encode_messages(ctx.G, p, start, stop)
        return words[words[:, 0] == 1, 1:] != 0

    chunk = max(1, CHUNK_ENTRIES // m)
    found = np.concatenate(map_ranges(collect, p**k, workers, chunk=chunk))
    supports, removed = _minimal_rows(found, budget)
    if removed:
        logging.warning('%d of %d supports are not minimal', removed,
                        len(found))
    minimal = removed == 0 and len(found) == p**(k - 1)
    return AccessStructure(supports=supports, count=len(supports),
                           removed=removed, minimal_code=minimal)


CoverageCheck = collections.namedtuple('CoverageCheck',
                                       ['t', 'expected', 'ok'])

CoverageReport = collections.namedtuple('CoverageReport', [
    'parallel',
    'parallel_ok',
    'counts',
    'checks',
])


def parallel_participants(ctx):
    g0 = ctx.g0
    out = []
    for j in range(1, ctx.participants + 1):
        gj = ctx.G[:, j]
        if not gj.any():
            continue
        minors = (np.outer(g0, gj) - np.outer(gj, g0)) % ctx.p
        if not minors.any():
            out.append(j)
    return out


def _subset_counts(supports, t, budget):
    m = supports.shape[1]
    if t == 0:
        return np.array([len(supports)])
    as_int = supports.astype(np.int64)
    if t == 1:
        return as_int.sum(axis=0)
    if t == 2:
        check_budget(m**2 * len(supports), budget)
        together = _gram(supports.T)
        return together[np.triu_indices(m, 1)]
    check_budget(math.comb(m, t) * len(supports), budget)
    columns = supports.T
    return np.array([np.count_nonzero(np.logical_and.reduce(columns[list(c)]))
                     for c in itertools.combinations(range(m), t)])


def coverage_report(ctx, access, d_dual, budget=DEFAULT_BUDGET):
    """
    Compare how often participants occur in the minimal access sets with
    the closed-form counts: with dual distance 2, participants parallel to
    the secret column are in every set and the rest in (p-1)p^(k-2); with
    dual distance d >= 3 every t-set of participants, t <= min(k-1, d-2),
    is in (p-1)^t p^(k-t-1).
    """
    p = ctx.p
    k = ctx.G.shape[0]
    counts = access.supports.astype(np.int64).sum(axis=0)
    parallel = parallel_participants(ctx)
    parallel_ok = None
    checks = [CoverageCheck(0, p**(k - 1), access.count == p**(k - 1))]
    if d_dual == 2:
        if parallel:
            parallel_ok = bool(np.all(counts[np.array(parallel) - 1] ==
                                      access.count))
        others = np.ones(ctx.participants, dtype=bool)
        others[np.array(parallel, dtype=np.int64) - 1] = False
        expected = (p - 1) * p**(k - 2)
        checks.append(CoverageCheck(1, expected,
                                    bool(np.all(counts[others] == expected))))
    elif d_dual is not None and d_dual >= 3:
        for t in range(1, min(k - 1, d_dual - 2) + 1):
            expected = (p - 1)**t * p**(k - t - 1)
            tally = _subset_counts(access.supports, t, budget)
            checks.append(CoverageCheck(t, expected,
                                        bool(np.all(tally == expected))))
    return CoverageReport(parallel=parallel, parallel_ok=parallel_ok,
                          counts=counts.tolist(), checks=checks)
