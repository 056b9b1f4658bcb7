import argparse
import json
import logging
import sys

import plateau.config
import plateau.fixtures
import plateau.report
from plateau.errors import PlateauError
from plateau.funcspace import eval_to_table, parse_poly, read_table
from plateau.theory import Construction
from plateau.walsh import profile_function, walsh_counts_fast


EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _add_function_args(parser):
    parser.add_argument('--p', type=int, help='field characteristic')
    parser.add_argument('--n', type=int, help='number of variables')
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--poly', help='polynomial such as "x1^2+x2*x3"')
    source.add_argument('--table', metavar='FILE',
                        help='function table file')


def _add_compute_args(parser):
    parser.add_argument('--threads', type=int, help='worker count')
    parser.add_argument('--budget', type=int, metavar='OPS',
                        help='maximum enumeration operations')


def _add_format_arg(parser):
    parser.add_argument('--format', choices=['json', 'text'])


def _add_code_args(parser):
    parser.add_argument('--construction', action='append',
                        choices=[c.value for c in Construction],
                        help='code construction (repeatable, default '
                             'first-gen)')
    parser.add_argument('--punctured', action='store_true',
                        help='keep one coordinate per scaling orbit')
    parser.add_argument('--list-sets', action='store_true', default=None,
                        help='list every minimal access set')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='plateau',
        description='linear codes from plateaued functions over F_p')
    parser.add_argument('--config', metavar='FILE',
                        help='configuration file (default ./plateaurc)')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    subparsers = parser.add_subparsers(dest='command', required=True)

    analyze = subparsers.add_parser('analyze', help='full analysis')
    _add_function_args(analyze)
    _add_code_args(analyze)
    _add_compute_args(analyze)
    _add_format_arg(analyze)
    analyze.add_argument('--strict', action='store_true',
                         help='fail when the closed form does not apply')
    analyze.add_argument('--sss', action='store_true',
                         help='attach access-structure statistics')

    verify = subparsers.add_parser('verify-examples',
                                   help='run the worked-example suite')
    verify.add_argument('--only', action='append', metavar='NAME',
                        help='run only the named example (repeatable)')
    _add_compute_args(verify)
    _add_format_arg(verify)

    sss = subparsers.add_parser('sss', help='secret-sharing access structure')
    _add_function_args(sss)
    _add_code_args(sss)
    _add_compute_args(sss)
    _add_format_arg(sss)

    spectrum = subparsers.add_parser('spectrum', help='Walsh spectrum')
    _add_function_args(spectrum)
    spectrum.add_argument('--counts', action='store_true',
                          help='include raw count vectors')
    _add_format_arg(spectrum)

    classify = subparsers.add_parser('classify',
                                     help='plateau profile and checks')
    _add_function_args(classify)
    _add_format_arg(classify)
    return parser


def _load_function(args):
    if args.table is not None:
        with open(args.table, 'r') as f:
            table = read_table(f)
        source = {'table': args.table, 'p': table.p, 'n': table.n}
        return table, source
    if args.p is None or args.n is None:
        raise ValueError('--poly needs --p and --n')
    expr = parse_poly(args.poly, args.p, args.n)
    source = {'poly': str(expr), 'p': args.p, 'n': args.n}
    return eval_to_table(expr), source


def _settings(args, config):
    threads = getattr(args, 'threads', None) or config.compute.threads
    budget = getattr(args, 'budget', None) or config.compute.budget
    fmt = getattr(args, 'format', None) or config.output.format
    return threads, budget, fmt


def _emit(report, fmt):
    if fmt == 'text':
        print(plateau.report.render_text(report))
    else:
        print(plateau.report.to_json(report))


def _constructions(args):
    names = args.construction or [Construction.FIRST_GEN.value]
    return [Construction(name) for name in names]


def cmd_analyze(args, config):
    threads, budget, fmt = _settings(args, config)
    f, source = _load_function(args)
    prof = profile_function(f)
    list_sets = (config.output.list_sets if args.list_sets is None
                 else args.list_sets)
    report = plateau.report.analysis_report(
        f, prof, source, _constructions(args), punctured=args.punctured,
        workers=threads, budget=budget, strict=args.strict,
        with_sss=args.sss, list_sets=list_sets)
    _emit(report, fmt)
    verdicts = [code['prediction']['verdict'] for code in report['codes']]
    return EXIT_MISMATCH if 'mismatch' in verdicts else EXIT_OK


def cmd_verify_examples(args, config):
    threads, budget, fmt = _settings(args, config)
    fixtures = plateau.fixtures.FIXTURES
    if args.only:
        try:
            fixtures = [plateau.fixtures.fixture_by_name(name)
                        for name in args.only]
        except KeyError as e:
            raise ValueError('unknown example %s' % e)
    results = []
    for fixture in fixtures:
        try:
            result = plateau.fixtures.run_fixture(fixture, threads, budget)
        except PlateauError as e:
            logging.error('%s: %s', fixture.name, e)
            result = plateau.fixtures.FixtureResult(fixture.name,
                                                    {e.code: False}, False)
        results.append(result)
        if fmt == 'text':
            failed = [name for name, ok in result.checks.items() if not ok]
            print('%s %s%s' % ('PASS' if result.passed else 'FAIL',
                               fixture.name,
                               ' (%s)' % ', '.join(failed) if failed else ''))
    passed = sum(result.passed for result in results)
    if fmt == 'text':
        print('%d/%d PASS' % (passed, len(results)))
    else:
        _emit({
            'schema': plateau.report.SCHEMA,
            'passed': passed,
            'total': len(results),
            'examples': [{'name': r.name, 'passed': r.passed,
                          'checks': dict(r.checks)} for r in results],
        }, fmt)
    return EXIT_OK if passed == len(results) else EXIT_MISMATCH


def cmd_sss(args, config):
    threads, budget, fmt = _settings(args, config)
    f, source = _load_function(args)
    prof = profile_function(f)
    list_sets = (config.output.list_sets if args.list_sets is None
                 else args.list_sets)
    schemes = []
    for construction in _constructions(args):
        code, spec, _ = plateau.report.code_report(
            f, prof, construction,
            args.punctured and construction.is_defset, threads, budget)
        scheme = plateau.report.sss_report(spec, code['dual_distance'],
                                           threads, budget, list_sets)
        scheme['code'] = code['parameters']
        scheme['construction'] = code['construction']
        scheme['dual_distance'] = code['dual_distance']
        schemes.append(scheme)
    _emit({'schema': plateau.report.SCHEMA, 'function': source,
           'schemes': schemes}, fmt)
    return EXIT_OK


def cmd_spectrum(args, config):
    _, _, fmt = _settings(args, config)
    f, _ = _load_function(args)
    _emit(plateau.report.spectrum_report(walsh_counts_fast(f), args.counts),
          fmt)
    return EXIT_OK


def cmd_classify(args, config):
    _, _, fmt = _settings(args, config)
    f, source = _load_function(args)
    prof = profile_function(f)
    _emit(plateau.report.classification_report(f, prof, source), fmt)
    return EXIT_OK


COMMANDS = {
    'analyze': cmd_analyze,
    'verify-examples': cmd_verify_examples,
    'sss': cmd_sss,
    'spectrum': cmd_spectrum,
    'classify': cmd_classify,
}


def _report_error(e, fmt, code):
    if fmt == 'json':
        print(json.dumps({'schema': plateau.report.SCHEMA, 'error': code,
                          'message': str(e)}, sort_keys=True),
              file=sys.stderr)
    else:
        print('plateau: %s: %s' % (code, e), file=sys.stderr)


def main(argv=None):
    args = build_parser().parse_args(argv)
    fmt = getattr(args, 'format', None) or 'text'
    try:
        config = plateau.config.load_config(args.config)
    except (OSError, ValueError) as e:
        _report_error(e, fmt, 'config')
        return EXIT_USAGE

    level = min(config.logging.level, logging.WARNING - 10 * args.verbose)
    logging.basicConfig(filename=config.logging.file,
                        level=max(level, logging.DEBUG),
                        format='%(levelname)s %(message)s')
    fmt = getattr(args, 'format', None) or config.output.format
    try:
        return COMMANDS[args.command](args, config)
    except PlateauError as e:
        _report_error(e, fmt, e.code)
        return e.exit_code
    except (OSError, ValueError) as e:
        _report_error(e, fmt, getattr(e, 'code', 'usage'))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
