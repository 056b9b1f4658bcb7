import json
import logging

from plateau.codes import (
    build_code,
    verify_prediction,
    weight_distribution_exhaustive,
)
from plateau.errors import PlateauError
from plateau.field import NO_MATCH, ZERO_FORM, Parity, form_table
from plateau.funcspace import decode_point
from plateau.sss import coverage_report, minimal_access_sets, scheme_from_code
from plateau.theory import (
    bound_checks,
    minimality_check,
    pless_dual_low_weights,
    predict,
    prediction_input,
    tally_checks,
)
from plateau.walsh import regularity_of, structural_checks


SCHEMA = 1


def _side(side):
    return None if side is None else side.value


def profile_summary(f, prof):
    _, witness = regularity_of(prof)
    dual = prof.dual_bent
    return {
        'p': prof.p,
        'n': prof.n,
        's': prof.s,
        'support_size': len(prof.supp),
        'k': prof.k,
        'regularity': prof.regularity.value,
        'regularity_witness': list(witness) if witness else None,
        'eps0': prof.eps0,
        'type': prof.type_of_f.value,
        'f_at_zero': int(f.values[0]),
        'nwrf_t': prof.nwrf_t,
        'dual_h': prof.dual_h,
        'dual_bent': dual is not None,
        'zero_side_fstar': _side(dual.type_of_fstar) if dual else None,
        # One variable: the dual-distance rules do not cover this case.
        'degenerate': prof.n == 1,
    }


def _dual_distance(label):
    if label == '>=5':
        return 5
    return int(label) if label.isdigit() else None


def code_report(f, prof, construction, punctured=False, workers=1,
                budget=None, strict=False):
    """
    Enumerate one construction and collect its parameters, dual data,
    minimality, bounds and the comparison with the closed form.
    Returns (report dict, spec, distribution).
    """
    spec = build_code(f, construction, punctured)
    wd = weight_distribution_exhaustive(spec, workers=workers, budget=budget)
    p = f.p
    low = pless_dual_low_weights(wd, p)
    d = wd.min_distance()
    report = {
        'construction': construction.value,
        'punctured': punctured,
        'parameters': wd.parameters(),
        'enumerator': wd.enumerator(),
        'weights': wd.to_json()['weights'],
        'dual_low_weights': [low.a1, low.a2, low.a3, low.a4],
        'dual_distance': low.d_label,
        'dual_parameters': [wd.length, wd.length - wd.dimension,
                            int(low.d_label) if low.d_label.isdigit()
                            else low.d_label],
    }
    if d is not None:
        minimal = minimality_check(wd, p)
        report['minimal'] = minimal.minimal
        report['weight_ratio'] = str(minimal.ratio)
        report['bounds'] = bound_checks(wd.length, wd.dimension, d,
                                        p)._asdict()
    # '>=5' only bounds d from below.
    if low.d_label.isdigit():
        report['dual_bounds'] = bound_checks(
            wd.length, wd.length - wd.dimension, int(low.d_label),
            p)._asdict()
    try:
        predicted = predict(prediction_input(f, prof, construction,
                                             punctured))
    except PlateauError as e:
        if strict:
            raise
        logging.info('closed form not applicable: %s', e)
        report['prediction'] = {'verdict': 'not-applicable',
                                'reason': str(e)}
    else:
        verification = verify_prediction(wd, predicted)
        report['prediction'] = {
            'verdict': 'match' if verification.match else 'mismatch',
            'enumerator': predicted.enumerator(),
            'deltas': [[w, a, b] for w, (a, b) in
                       sorted(verification.deltas.items())],
        }
    return report, spec, wd


def sss_report(spec, d_label, workers=1, budget=None, list_sets=False):
    ctx = scheme_from_code(spec)
    access = minimal_access_sets(ctx, workers=workers, budget=budget)
    coverage = coverage_report(ctx, access, _dual_distance(d_label),
                               budget=budget)
    report = {
        'minimal_access_sets': access.count,
        'participants': ctx.participants,
        'removed_by_filter': access.removed,
        'minimal_code': access.minimal_code,
        'parallel_participants': coverage.parallel,
        'parallel_in_every_set': coverage.parallel_ok,
        'coverage': [check._asdict() for check in coverage.checks],
    }
    if list_sets:
        report['sets'] = [
            [int(j) + 1 for j in row.nonzero()[0]] for row in access.supports
        ]
    return report


def analysis_report(f, prof, source, constructions, punctured=False,
                    workers=1, budget=None, strict=False, with_sss=False,
                    list_sets=False):
    if prof.n == 1:
        logging.warning('n = 1 is a degenerate case for the dual distance')
    report = {
        'schema': SCHEMA,
        'function': source,
        'profile': profile_summary(f, prof),
        'codes': [],
    }
    for construction in constructions:
        code, spec, _ = code_report(f, prof, construction,
                                    punctured and construction.is_defset,
                                    workers, budget, strict)
        if with_sss:
            code['sss'] = sss_report(spec, code['dual_distance'], workers,
                                     budget, list_sets)
        report['codes'].append(code)
    return report


def classification_report(f, prof, source):
    return {
        'schema': SCHEMA,
        'function': source,
        'profile': profile_summary(f, prof),
        'structural': structural_checks(f, prof),
        'tallies': tally_checks(f, prof),
    }


def to_json(report):
    return json.dumps(report, sort_keys=True, indent=2)


def render_text(report, indent=0):
    lines = []
    pad = '  ' * indent
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            lines.append('%s%s:' % (pad, key))
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append('%s%s:' % (pad, key))
            for i, item in enumerate(value):
                lines.append('%s  [%d]' % (pad, i))
                lines.append(render_text(item, indent + 2))
        else:
            lines.append('%s%s: %s' % (pad, key, _scalar(value)))
    return '\n'.join(lines)


def _scalar(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, list):
        return ' '.join('[%s]' % _scalar(v) if isinstance(v, list)
                        else _scalar(v) for v in value)
    return str(value)


def spectrum_report(spectrum, with_counts=False):
    """
    Recognized form of every Walsh value. Without a consistent plateau
    magnitude every nonzero value reports the form 'none'.
    """
    p, n = spectrum.p, spectrum.n
    canon = spectrum.canonical()
    supp = spectrum.support()
    size, m = len(supp), 0
    while size > 1 and size % p == 0:
        size //= p
        m += 1
    table = None
    if size == 1:
        s = n - m
        table = form_table(p, p**((n + s) // 2), Parity.of(n + s))
    values = []
    for alpha in range(p**n):
        if table is not None:
            form = table.lookup(canon[alpha])
        elif canon[alpha].any():
            form = NO_MATCH
        else:
            form = ZERO_FORM
        entry = {
            'alpha': alpha,
            'point': list(decode_point(p, n, alpha)),
            'form': form.form.value,
            'sign': form.sign,
            'j': form.j,
        }
        if with_counts:
            entry['counts'] = [int(c) for c in spectrum.counts[alpha]]
        values.append(entry)
    return {
        'schema': SCHEMA,
        'p': p,
        'n': n,
        'support_size': len(supp),
        'values': values,
    }
