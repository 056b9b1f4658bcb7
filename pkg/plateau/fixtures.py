"""
Worked examples with their stated parameters, transcribed literally.

The expected values here are kept apart from the prediction code so that a
regression in one cannot hide a transcription error in the other.
"""

import collections
import logging

from plateau.codes import (
    DEFAULT_BUDGET,
    build_code,
    firstgen_weight_distribution_fast,
    verify_prediction,
    weight_distribution_exhaustive,
)
from plateau.errors import PlateauError
from plateau.funcspace import eval_to_table, parse_poly
from plateau.theory import (
    Construction,
    parse_enumerator,
    pless_dual_low_weights,
    predict,
    prediction_input,
)
from plateau.walsh import Side, profile_function, walsh_counts_fast


Fixture = collections.namedtuple('Fixture', [
    'name',
    'p',
    'n',
    'poly',
    'constructions',
    'k',
    # Side of 0: in B(f*) for the first construction, in B(f) otherwise.
    'zero_side',
    'params',
    'enumerator',
    'dual',
    'punctured',
    'note',
])

Punctured = collections.namedtuple('Punctured',
                                   ['params', 'enumerator', 'dual'])


FIRST = (Construction.FIRST_GEN,)
ZERO = (Construction.DEFSET_ZERO,)
SQ = (Construction.DEFSET_SQ,)
NSQ = (Construction.DEFSET_NSQ,)
BOTH = (Construction.DEFSET_SQ, Construction.DEFSET_NSQ)

F35_PLUS = '2*x1^2*x4^2+2*x1^2+x2^2+x3*x4'
F35_MINUS = 'x1^2*x4^2+x1^2+x2^2+x3*x4'
F54_PLUS = 'x1^2*x3^4+x1^2+x2*x3'
F54_MINUS = '4*x1^2*x3^4+2*x1^2+x2*x3'
F5_PLUS = 'x1^2*x5^4+x1^2+x2^2+x3^2+x4*x5'
F5_MINUS = '4*x1^2*x5^4+2*x1^2+x2^2+x3^2+x4*x5'


FIXTURES = [
    Fixture('first-gen-f3n5-plus', 3, 5, F35_PLUS, FIRST, 27, '+',
            (242, 6, 144),
            '1+30z^{144}+72z^{153}+566z^{162}+24z^{171}+36z^{180}',
            (242, 236, 2), None, None),
    Fixture('first-gen-f3n5-minus', 3, 5, F35_MINUS, FIRST, 54, '-',
            (242, 6, 144),
            '1+36z^{144}+48z^{153}+566z^{162}+72z^{171}+6z^{180}',
            (242, 236, 2), None, None),
    Fixture('first-gen-f5n4', 5, 4, F54_PLUS, FIRST, None, None,
            (624, 5, 475),
            '1+240z^{475}+2724z^{500}+160z^{525}',
            (624, 619, 2), None,
            'dual printed as [624, 618, 2]; the dimension is 624 - 5'),
    Fixture('first-gen-f5n4-plus', 5, 4,
            '4*x1^2*x4^4+4*x1^2*x4^3+3*x1^2*x4+x1^2+x2^2+x3*x4', FIRST,
            125, '+', (624, 5, 480),
            '1+180z^{480}+1600z^{495}+624z^{500}+320z^{505}+400z^{520}',
            (624, 619, 2), None, None),
    Fixture('first-gen-f3n4-minus', 3, 4,
            '2*x1^2*x4^2+x1^2*x4+x1^2+2*x2^2*x4^2+2*x2^2*x4+x2^2+x3*x4',
            FIRST, 54, '-', (80, 5, 48),
            '1+36z^{48}+48z^{51}+80z^{54}+72z^{57}+6z^{60}',
            (80, 75, 2), None, None),
    Fixture('first-gen-f5n5', 5, 5,
            '4*x1^2*x5^4+x1^2*x5^3+2*x1^2*x5+x1^2+x2^2+x3^2+x4*x5', FIRST,
            None, None, (3124, 6, 2475),
            '1+5200z^{2475}+5624z^{2500}+4800z^{2525}',
            (3124, 3118, 2), None, None),
    Fixture('defset-zero-f3n5-plus', 3, 5, F35_PLUS, ZERO, 27, '+',
            (98, 5, 54),
            '1+14z^{54}+36z^{60}+162z^{66}+12z^{72}+18z^{78}',
            (98, 93, 2),
            Punctured((49, 5, 27),
                      '1+14z^{27}+36z^{30}+162z^{33}+12z^{36}+18z^{39}',
                      (49, 44, 3)), None),
    Fixture('defset-zero-f3n5-minus', 3, 5, F35_MINUS, ZERO, 54, '-',
            (62, 5, 30),
            '1+18z^{30}+24z^{36}+162z^{42}+36z^{48}+2z^{54}',
            (62, 57, 2),
            Punctured((31, 5, 15),
                      '1+18z^{15}+24z^{18}+162z^{21}+36z^{24}+2z^{27}',
                      (31, 26, 3)), None),
    Fixture('defset-zero-f5n4', 5, 4, F54_PLUS, ZERO, None, None,
            (124, 4, 80),
            '1+60z^{80}+524z^{100}+40z^{120}',
            (124, 120, 2),
            Punctured((31, 4, 20), '1+60z^{20}+524z^{25}+40z^{30}',
                      (31, 27, 3)), None),
    Fixture('defset-zero-f3n4-plus', 3, 4, F35_PLUS, ZERO, 27, '+',
            (32, 4, 18),
            '1+14z^{18}+36z^{20}+12z^{24}+18z^{26}',
            (32, 28, 2),
            Punctured((16, 4, 9), '1+14z^{9}+36z^{10}+12z^{12}+18z^{13}',
                      (16, 12, 3)), None),
    Fixture('defset-zero-f3n4-minus', 3, 4, F35_MINUS, ZERO, 54, '-',
            (20, 4, 10),
            '1+18z^{10}+24z^{12}+36z^{16}+2z^{18}',
            (20, 16, 2),
            Punctured((10, 4, 5), '1+18z^{5}+24z^{6}+36z^{8}+2z^{9}',
                      (10, 6, 3)), None),
    Fixture('defset-zero-f3n5-odd', 3, 5, 'x1^2*x5^2+x1^2+x2^2+x3^2+x4*x5',
            ZERO, None, None, (80, 5, 48),
            '1+90z^{48}+80z^{54}+72z^{60}',
            (80, 75, 2),
            Punctured((40, 5, 24), '1+90z^{24}+80z^{27}+72z^{30}',
                      (40, 35, 3)), None),
    Fixture('defset-sq-f3n5-plus', 3, 5, F35_PLUS, BOTH, 27, '+',
            (72, 5, 36),
            '1+6z^{36}+36z^{42}+162z^{48}+20z^{54}+18z^{60}',
            (72, 67, 2),
            Punctured((36, 5, 18),
                      '1+6z^{18}+36z^{21}+162z^{24}+20z^{27}+18z^{30}',
                      (36, 31, 3)), None),
    Fixture('defset-sq-f3n5-minus', 3, 5, F35_MINUS, BOTH, 54, '-',
            (90, 5, 48),
            '1+18z^{48}+14z^{54}+162z^{60}+36z^{66}+12z^{72}',
            (90, 85, 2),
            Punctured((45, 5, 24),
                      '1+18z^{24}+14z^{27}+162z^{30}+36z^{33}+12z^{36}',
                      (45, 40, 3)), None),
    Fixture('defset-sq-f5n4-plus', 5, 4, F54_PLUS, SQ, 25, '+',
            (300, 4, 200),
            '1+4z^{200}+40z^{220}+540z^{240}+20z^{260}+20z^{280}',
            (300, 296, 2),
            Punctured((75, 4, 50),
                      '1+4z^{50}+40z^{55}+540z^{60}+20z^{65}+20z^{70}',
                      (75, 71, 3)), None),
    Fixture('defset-sq-f5n6-minus', 5, 6, F5_MINUS, SQ, 2500, '-',
            (6000, 6, 4600),
            '1+500z^{4600}+200z^{4700}+13800z^{4800}+1000z^{4900}'
            '+124z^{5000}',
            (6000, 5994, 2),
            Punctured((1500, 6, 1150),
                      '1+500z^{1150}+200z^{1175}+13800z^{1200}'
                      '+1000z^{1225}+124z^{1250}',
                      (1500, 1494, 3)), None),
    Fixture('defset-nsq-f5n6-plus', 5, 6, F5_PLUS, NSQ, 625, '+',
            (6000, 6, 4600),
            '1+500z^{4600}+200z^{4700}+13800z^{4800}+1000z^{4900}'
            '+124z^{5000}',
            (6000, 5994, 2),
            Punctured((1500, 6, 1150),
                      '1+500z^{1150}+200z^{1175}+13800z^{1200}'
                      '+1000z^{1225}+124z^{1250}',
                      (1500, 1494, 3)), None),
    Fixture('defset-nsq-f5n4-minus', 5, 4, F54_MINUS, NSQ, 100, '-',
            (300, 4, 200),
            '1+4z^{200}+40z^{220}+540z^{240}+20z^{260}+20z^{280}',
            (300, 296, 2),
            Punctured((75, 4, 50),
                      '1+4z^{50}+40z^{55}+540z^{60}+20z^{65}+20z^{70}',
                      (75, 71, 3)), None),
    Fixture('defset-sq-f3n4-plus', 3, 4, F35_PLUS, BOTH, 27, '+',
            (24, 4, 12),
            '1+6z^{12}+36z^{14}+20z^{18}+18z^{20}',
            (24, 20, 2),
            Punctured((12, 4, 6), '1+6z^{6}+36z^{7}+20z^{9}+18z^{10}',
                      (12, 8, 3)), None),
    Fixture('defset-sq-f3n4-minus', 3, 4, F35_MINUS, BOTH, 54, '-',
            (30, 4, 16),
            '1+18z^{16}+14z^{18}+36z^{22}+12z^{24}',
            (30, 26, 2),
            Punctured((15, 4, 8), '1+18z^{8}+14z^{9}+36z^{11}+12z^{12}',
                      (15, 11, 3)), None),
    Fixture('defset-sq-f5n5-plus', 5, 5, F5_PLUS, SQ, 625, '+',
            (1300, 5, 1000),
            '1+124z^{1000}+1000z^{1020}+1200z^{1040}+300z^{1060}'
            '+500z^{1080}',
            (1300, 1295, 2),
            Punctured((325, 5, 250),
                      '1+124z^{250}+1000z^{255}+1200z^{260}+300z^{265}'
                      '+500z^{270}',
                      (325, 320, 3)), None),
    Fixture('defset-sq-f5n5-minus', 5, 5, F5_MINUS, SQ, 2500, '-',
            (1200, 5, 920),
            '1+500z^{920}+200z^{940}+1300z^{960}+1000z^{980}+124z^{1000}',
            (1200, 1195, 2),
            Punctured((300, 5, 230),
                      '1+500z^{230}+200z^{235}+1300z^{240}+1000z^{245}'
                      '+124z^{250}',
                      (300, 295, 3)), None),
    Fixture('defset-nsq-f5n5-plus', 5, 5, F5_PLUS, NSQ, 625, '+',
            (1200, 5, 920),
            '1+500z^{920}+200z^{940}+1300z^{960}+1000z^{980}+124z^{1000}',
            (1200, 1195, 2),
            Punctured((300, 5, 230),
                      '1+500z^{230}+200z^{235}+1300z^{240}+1000z^{245}'
                      '+124z^{250}',
                      (300, 295, 3)), None),
    Fixture('defset-nsq-f5n5-minus', 5, 5, F5_MINUS, NSQ, 2500, '-',
            (1300, 5, 1000),
            '1+124z^{1000}+1000z^{1020}+1200z^{1040}+300z^{1060}'
            '+500z^{1080}',
            (1300, 1295, 2),
            Punctured((325, 5, 250),
                      '1+124z^{250}+1000z^{255}+1200z^{260}+300z^{265}'
                      '+500z^{270}',
                      (325, 320, 3)), None),
]


def fixture_by_name(name):
    for fixture in FIXTURES:
        if fixture.name == name:
            return fixture
    raise KeyError(name)


FixtureResult = collections.namedtuple('FixtureResult',
                                       ['name', 'checks', 'passed'])


def _dual_params(wd, p):
    low = pless_dual_low_weights(wd, p)
    d = int(low.d_label) if low.d_label.isdigit() else low.d_label
    return (wd.length, wd.length - wd.dimension, d)


def _check_code(checks, prefix, f, prof, construction, punctured, params,
                enumerator, dual, workers, budget):
    spec = build_code(f, construction, punctured)
    wd = weight_distribution_exhaustive(spec, workers=workers, budget=budget)
    expected = parse_enumerator(enumerator, params[0], params[1])
    checks[prefix + 'parameters'] = tuple(wd.parameters()) == params
    checks[prefix + 'enumerator'] = wd == expected
    checks[prefix + 'dual'] = _dual_params(wd, f.p) == dual
    try:
        inp = prediction_input(f, prof, construction, punctured)
        checks[prefix + 'prediction'] = verify_prediction(wd,
                                                          predict(inp)).match
    except PlateauError as e:
        logging.warning('%sprediction not applicable: %s', prefix, e)
        checks[prefix + 'prediction'] = False
    if construction is Construction.FIRST_GEN:
        fast = firstgen_weight_distribution_fast(spec, walsh_counts_fast(f),
                                                 budget=budget)
        checks[prefix + 'fast-path'] = fast == wd


def run_fixture(fixture, workers=1, budget=DEFAULT_BUDGET):
    f = eval_to_table(parse_poly(fixture.poly, fixture.p, fixture.n))
    prof = profile_function(f)
    checks = collections.OrderedDict()
    if fixture.k is not None:
        checks['k'] = prof.k == fixture.k
    if fixture.zero_side is not None:
        if fixture.constructions == FIRST:
            side = prof.dual_bent.type_of_fstar if prof.dual_bent else None
        else:
            side = prof.type_of_f
        want = Side.PLUS if fixture.zero_side == '+' else Side.MINUS
        checks['zero-side'] = side is want
    for construction in fixture.constructions:
        prefix = '' if len(fixture.constructions) == 1 else (
            construction.value + ':')
        _check_code(checks, prefix, f, prof, construction, False,
                    fixture.params, fixture.enumerator, fixture.dual,
                    workers, budget)
        if fixture.punctured is not None:
            _check_code(checks, prefix + 'punctured-', f, prof, construction,
                        True, fixture.punctured.params,
                        fixture.punctured.enumerator, fixture.punctured.dual,
                        workers, budget)
    passed = all(checks.values())
    logging.info('%s: %s', fixture.name, 'PASS' if passed else 'FAIL')
    return FixtureResult(fixture.name, checks, passed)
