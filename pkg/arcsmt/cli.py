# file arcsmt/cli.py
#
#   Copyright 2010,2011 Emory University Libraries
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.

"""Command-line entry point ``arcsmt``.

Results go to stdout, one JSON document per line unless ``--output
text`` is given; diagnostics go to stderr.  Exit codes: 0 success,
1 falsification, 2 parse or usage error, 3 not in the subring.
"""

import argparse
import json
import logging
import random
import sys

from arcsmt import __version__
from arcsmt import relations
from arcsmt.action import check_invariance, report
from arcsmt.diffring import Ambient
from arcsmt.smt import (BasisCoords, NotInSubringError, dimension_failures,
                        enumerate_standard, generators, random_words,
                        straighten, straighten_failures,
                        triangularity_failures)
from arcsmt.text import ParseError, parse_word

__all__ = ['Config', 'main', 'EXIT_OK', 'EXIT_FALSIFIED', 'EXIT_USAGE',
           'EXIT_NOT_IN_SUBRING']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_NOT_IN_SUBRING = 3

DEFAULT_MAX_WEIGHT = 1
DEFAULT_MAX_DEGREE = 2
DEFAULT_M_MAX = 1
OUTPUT_FORMATS = ('json', 'text')


class Config(object):
    '''Validated run settings collected from the command line.'''

    def __init__(self, p=1, q=1, h=1, max_weight=DEFAULT_MAX_WEIGHT,
                 max_degree=DEFAULT_MAX_DEGREE, m_max=DEFAULT_M_MAX,
                 output='json', seed=0):
        if h < 1:
            raise ValueError('h must be at least 1, got %d' % h)
        for name, value in (('max_weight', max_weight),
                            ('max_degree', max_degree), ('m_max', m_max)):
            if value < 0:
                raise ValueError('%s must be non-negative, got %d'
                                 % (name, value))
        if output not in OUTPUT_FORMATS:
            raise ValueError('unknown output format %r' % (output,))
        self.p, self.q, self.h = p, q, h
        self.max_weight = max_weight
        self.max_degree = max_degree
        self.m_max = m_max
        self.output = output
        self.seed = seed

    @classmethod
    def from_args(cls, args):
        return cls(args.p, args.q, args.h, args.max_weight, args.max_degree,
                   args.m_max, args.output, args.seed)

    @property
    def ambient(self):
        return Ambient(self.p, self.q, self.h)

    def __repr__(self):
        return '<%s p=%d q=%d h=%d>' % (self.__class__.__name__,
                                        self.p, self.q, self.h)


def _emit(config, record, text):
    out = sys.stdout
    if config.output == 'json':
        out.write(json.dumps(record, sort_keys=True) + '\n')
    else:
        out.write(text + '\n')


def cmd_generators(config, args):
    for var, poly in generators(config.ambient, config.max_weight):
        _emit(config, {'generator': str(var), 'poly': poly.to_json()},
              '%s = %s' % (var, poly))
    return EXIT_OK


def cmd_straighten(config, args):
    text = sys.stdin.read()
    sign, word = parse_word(text)
    coords = BasisCoords()
    if sign:
        try:
            coords = straighten(word, config.ambient)
        except NotInSubringError as e:
            _emit(config, {'error': str(e), 'residual': e.residual.to_json()},
                  'not in subring: %s; residual %s' % (e, e.residual))
            return EXIT_NOT_IN_SUBRING
    if config.output == 'json':
        result = [dict(item, coeff=str(int(item['coeff']) * sign))
                  for item in coords.to_json()]
        sys.stdout.write(json.dumps(result, sort_keys=True) + '\n')
    else:
        for word, coeff in coords.items_sorted():
            sys.stdout.write('%d %s\n' % (coeff * sign, word))
    return EXIT_OK


def _families(text):
    if text is None:
        return list(relations.FAMILIES)
    names = [name.strip() for name in text.split(',') if name.strip()]
    for name in names:
        if name not in relations.FAMILIES:
            raise ValueError('unknown relation family %r' % (name,))
    return names


def cmd_verify_relations(config, args):
    ambient = config.ambient
    rng = random.Random(config.seed)
    status = EXIT_OK
    for family in _families(args.families):
        instances = list(relations.iter_instances(family, ambient,
                                                  args.max_order))
        if args.sample is not None and len(instances) > args.sample:
            picked = sorted(rng.sample(range(len(instances)), args.sample))
            instances = [instances[i] for i in picked]
        logger.debug('%s: %d instances' % (family, len(instances)))
        for inst in instances:
            rel = relations.gen_relation(inst, ambient)
            if args.corrupt:
                rel = relations.corrupt(rel)
            verdict = relations.verify_kernel(rel, ambient)
            if not verdict:
                status = EXIT_FALSIFIED
            record = inst.to_json()
            record['verdict'] = verdict
            _emit(config, record, '%s %s' % ('ok' if verdict else 'FAIL',
                                             inst))
    return status


def cmd_nilradical(config, args):
    result = relations.nilradical_check(config.ambient, args.side)
    _emit(config, result, ' '.join('%s=%s' % (k, result[k])
                                   for k in sorted(result)))
    falsified = not result['qstar_is_zero'] or result['in_classical_span'] \
        or not result['in_full_span']
    return EXIT_FALSIFIED if falsified else EXIT_OK


def cmd_enumerate_standard(config, args):
    for word in enumerate_standard(config.ambient, config.max_weight,
                                   config.max_degree):
        _emit(config, {'word': [str(j) for j in word]}, str(word) or '1')
    return EXIT_OK


def cmd_invariance(config, args):
    verdicts = check_invariance(config.ambient, config.max_weight,
                                config.m_max)
    status = EXIT_OK
    for record in report(verdicts):
        if not record['zero']:
            status = EXIT_FALSIFIED
        _emit(config, record, '%s %s t^%d %s' % (
            record['generator'], record['xi'], record['m'],
            'zero' if record['zero'] else 'NONZERO'))
    return status


def cmd_check_basis(config, args):
    ambient = config.ambient
    status = EXIT_OK
    for word, reason in triangularity_failures(ambient, config.max_weight,
                                               config.max_degree):
        status = EXIT_FALSIFIED
        _emit(config, {'word': [str(j) for j in word], 'failure': reason},
              'FAIL %s: %s' % (word, reason))
    for content, standard, found in dimension_failures(
            ambient, config.max_weight, config.max_degree):
        status = EXIT_FALSIFIED
        reason = '%d standard words, span of rank %d' % (standard, found)
        _emit(config, {'content': list(content), 'failure': reason},
              'FAIL %s: %s' % (content, reason))
    if status == EXIT_OK:
        _emit(config, {'verdict': True}, 'ok')
    return status


def cmd_check_straighten(config, args):
    ambient = config.ambient
    status = EXIT_OK
    for word in random_words(ambient, args.count, config.max_weight,
                             config.max_degree, config.seed):
        try:
            problems = straighten_failures(word, straighten(word, ambient),
                                           ambient)
        except NotInSubringError as e:
            problems = [str(e)]
        if problems:
            status = EXIT_FALSIFIED
        _emit(config, {'word': [str(j) for j in word],
                       'verdict': not problems, 'failures': problems},
              '%s %s' % ('FAIL' if problems else 'ok', word))
    return status


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--p', type=int, default=1, help='rows of a')
    common.add_argument('--q', type=int, default=1, help='rows of b')
    common.add_argument('--h', type=int, default=1, help='number of columns')
    common.add_argument('--max-weight', type=int, default=DEFAULT_MAX_WEIGHT)
    common.add_argument('--max-degree', type=int, default=DEFAULT_MAX_DEGREE)
    common.add_argument('--m-max', type=int, default=DEFAULT_M_MAX)
    common.add_argument('--output', choices=OUTPUT_FORMATS, default='json')
    common.add_argument('--seed', type=int, default=0)
    common.add_argument('-v', '--verbose', action='store_true',
                        help='log debugging output to stderr')

    parser = argparse.ArgumentParser(
        prog='arcsmt', description='Standard monomials for arc space '
        'invariants of the special linear group.')
    parser.add_argument('--version', action='version', version=__version__)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    cmd = sub.add_parser('generators', parents=[common],
                         help='expand the derived generators')
    cmd.set_defaults(func=cmd_generators)

    cmd = sub.add_parser('straighten', parents=[common],
                         help='straighten a word read from stdin')
    cmd.set_defaults(func=cmd_straighten)

    cmd = sub.add_parser('verify-relations', parents=[common],
                         help='check relations evaluate to zero')
    cmd.add_argument('--families', default=None,
                     help='comma-separated family names (default: all)')
    cmd.add_argument('--max-order', type=int, default=1,
                     help='largest derivative order')
    cmd.add_argument('--sample', type=int, default=None,
                     help='check a seeded random sample per family')
    cmd.add_argument('--corrupt', action='store_true',
                     help='flip one sign in every relation')
    cmd.set_defaults(func=cmd_verify_relations)

    cmd = sub.add_parser('nilradical', parents=[common],
                         help='check the nilradical witness')
    cmd.add_argument('--side', choices=('a', 'b'), default='a',
                     help='build the witness from Y (a) or Z (b) minors')
    cmd.set_defaults(func=cmd_nilradical)

    cmd = sub.add_parser('enumerate-standard', parents=[common],
                         help='list standard words within the bounds')
    cmd.set_defaults(func=cmd_enumerate_standard)

    cmd = sub.add_parser('invariance', parents=[common],
                         help='apply the current algebra to the generators')
    cmd.set_defaults(func=cmd_invariance)

    cmd = sub.add_parser('check-basis', parents=[common],
                         help='check leading monomials and basis dimensions')
    cmd.set_defaults(func=cmd_check_basis)

    cmd = sub.add_parser('check-straighten', parents=[common],
                         help='straighten seeded random words and check '
                         'the results')
    cmd.add_argument('--count', type=int, default=20,
                     help='number of random words')
    cmd.set_defaults(func=cmd_check_straighten)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if args.verbose else
                        logging.WARNING)
    try:
        config = Config.from_args(args)
        return args.func(config, args)
    except ParseError as e:
        sys.stderr.write('parse error: %s\n' % e)
        return EXIT_USAGE
    except ValueError as e:
        sys.stderr.write('error: %s\n' % e)
        return EXIT_USAGE
