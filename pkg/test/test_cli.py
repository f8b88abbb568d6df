#!/usr/bin/env python

# file test_cli.py
#
#   Copyright 2011 Emory University Libraries
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


import json
import unittest
from io import StringIO

try:
    from mock import patch
except ImportError:
    from unittest.mock import patch

from arcsmt import cli


class CliTestCase(unittest.TestCase):

    def run_cli(self, argv, stdin=''):
        with patch('sys.stdout', new_callable=StringIO) as out, \
                patch('sys.stderr', new_callable=StringIO), \
                patch('sys.stdin', StringIO(stdin)):
            status = cli.main(argv)
        return status, out.getvalue()

    def json_lines(self, output):
        return [json.loads(line) for line in output.splitlines()]


class ConfigTest(unittest.TestCase):

    def test_defaults(self):
        config = cli.Config()
        self.assertEqual(cli.DEFAULT_MAX_WEIGHT, config.max_weight)
        self.assertEqual((1, 1, 1), tuple(config.ambient))

    def test_invalid(self):
        self.assertRaises(ValueError, cli.Config, h=0)
        self.assertRaises(ValueError, cli.Config, max_degree=-1)
        self.assertRaises(ValueError, cli.Config, output='xml')


class StraightenCommandTest(CliTestCase):
    plucker = ['straighten', '--p', '4', '--q', '1', '--h', '2']

    def test_plucker(self):
        status, output = self.run_cli(self.plucker, 'D^0(3,2| D^0(4,1|\n')
        self.assertEqual(cli.EXIT_OK, status)
        (result,) = self.json_lines(output)
        self.assertEqual({('D^0(2,1|', 'D^0(4,3|'): '-1',
                          ('D^0(3,1|', 'D^0(4,2|'): '1'},
                         dict((tuple(r['word']), r['coeff']) for r in result))

    def test_input_sign(self):
        # writing the first minor's rows in order flips every coefficient
        status, output = self.run_cli(self.plucker, 'D^0(2,3| D^0(4,1|')
        (result,) = self.json_lines(output)
        self.assertEqual({('D^0(2,1|', 'D^0(4,3|'): '1',
                          ('D^0(3,1|', 'D^0(4,2|'): '-1'},
                         dict((tuple(r['word']), r['coeff']) for r in result))

    def test_empty_word(self):
        status, output = self.run_cli(self.plucker, '')
        self.assertEqual(cli.EXIT_OK, status)
        self.assertEqual([[{'coeff': '1', 'word': []}]],
                         self.json_lines(output))

    def test_standard_text_output(self):
        status, output = self.run_cli(self.plucker + ['--output', 'text'],
                                      'D^0(2,1| D^0(4,3|')
        self.assertEqual(cli.EXIT_OK, status)
        self.assertEqual('1 D^0(2,1| D^0(4,3|\n', output)

    def test_garbage(self):
        status, output = self.run_cli(self.plucker, 'D^0(2,1')
        self.assertEqual(cli.EXIT_USAGE, status)
        self.assertEqual('', output)


class VerifyCommandTest(CliTestCase):
    base = ['verify-relations', '--p', '2', '--q', '2', '--h', '2']

    def test_no_families(self):
        status, output = self.run_cli(self.base + ['--families', ''])
        self.assertEqual(cli.EXIT_OK, status)
        self.assertEqual('', output)

    def test_det_yz(self):
        status, output = self.run_cli(self.base + ['--families', 'DetYZ'])
        self.assertEqual(cli.EXIT_OK, status)
        records = self.json_lines(output)
        self.assertEqual(2, len(records))
        self.assertTrue(all(r['verdict'] for r in records))
        self.assertEqual('DetYZ', records[0]['family'])

    def test_corrupt(self):
        status, output = self.run_cli(self.base + ['--families', 'DetYZ',
                                                   '--corrupt'])
        self.assertEqual(cli.EXIT_FALSIFIED, status)
        self.assertFalse(any(r['verdict'] for r in self.json_lines(output)))

    def test_sample(self):
        argv = ['verify-relations', '--p', '3', '--q', '3', '--h', '2',
                '--families', 'DetYZ', '--sample', '3', '--seed', '7']
        status, output = self.run_cli(argv)
        self.assertEqual(cli.EXIT_OK, status)
        self.assertEqual(3, len(self.json_lines(output)))
        self.assertEqual(output, self.run_cli(argv)[1])

    def test_unknown_family(self):
        status, output = self.run_cli(self.base + ['--families', 'YZ'])
        self.assertEqual(cli.EXIT_USAGE, status)


class OtherCommandsTest(CliTestCase):

    def test_generators_text(self):
        status, output = self.run_cli(['generators', '--max-weight', '0',
                                       '--output', 'text'])
        self.assertEqual(cli.EXIT_OK, status)
        self.assertEqual(['X[1,1]^(0) = 1*a[1,1]^(0)*b[1,1]^(0)',
                          'Y[1]^(0) = 1*a[1,1]^(0)',
                          'Z[1]^(0) = 1*b[1,1]^(0)'], output.splitlines())

    def test_enumerate_standard(self):
        status, output = self.run_cli(['enumerate-standard', '--max-weight',
                                       '0', '--max-degree', '1',
                                       '--output', 'text'])
        self.assertEqual(cli.EXIT_OK, status)
        self.assertEqual(['1', 'D^0(1|', 'D^0|1)'], output.splitlines())

    def test_nilradical_needs_rank_three(self):
        status, output = self.run_cli(['nilradical', '--p', '6', '--h', '2'])
        self.assertEqual(cli.EXIT_USAGE, status)

    def test_nilradical_columns(self):
        status, output = self.run_cli(['nilradical', '--p', '1', '--q', '6',
                                       '--h', '3', '--side', 'b'])
        self.assertEqual(cli.EXIT_OK, status)
        (record,) = self.json_lines(output)
        self.assertEqual('b', record['side'])
        self.assertTrue(record['qstar_is_zero'])
        self.assertFalse(record['in_classical_span'])

    def test_nilradical_bad_side(self):
        self.assertRaises(SystemExit, self.run_cli,
                          ['nilradical', '--side', 'c'])

    def test_invariance(self):
        status, output = self.run_cli(['invariance', '--p', '2', '--q', '2',
                                       '--h', '2', '--max-weight', '0',
                                       '--m-max', '0'])
        self.assertEqual(cli.EXIT_OK, status)
        records = self.json_lines(output)
        self.assertEqual(6 * 3, len(records))
        self.assertTrue(all(r['zero'] for r in records))

    def test_bad_config(self):
        status, output = self.run_cli(['generators', '--h', '0'])
        self.assertEqual(cli.EXIT_USAGE, status)

    def test_usage_errors(self):
        self.assertRaises(SystemExit, self.run_cli, ['bogus'])
        self.assertRaises(SystemExit, self.run_cli,
                          ['generators', '--output', 'xml'])


class CheckCommandsTest(CliTestCase):

    def test_check_basis(self):
        status, output = self.run_cli(['check-basis', '--p', '2', '--q', '2',
                                       '--h', '2', '--max-weight', '1',
                                       '--max-degree', '2'])
        self.assertEqual(cli.EXIT_OK, status)
        self.assertEqual([{'verdict': True}], self.json_lines(output))

    def test_check_basis_failure(self):
        with patch('arcsmt.smt.rank', return_value=0):
            status, output = self.run_cli(['check-basis', '--max-weight', '0',
                                           '--max-degree', '1'])
        self.assertEqual(cli.EXIT_FALSIFIED, status)
        records = self.json_lines(output)
        self.assertEqual(2, len(records))
        self.assertEqual([[], [1], 0], records[0]['content'])
        self.assertEqual('1 standard words, span of rank 0',
                         records[0]['failure'])

    def test_check_straighten(self):
        status, output = self.run_cli(['check-straighten', '--p', '3',
                                       '--q', '3', '--h', '2',
                                       '--max-weight', '2',
                                       '--max-degree', '3', '--count', '5',
                                       '--seed', '3'])
        self.assertEqual(cli.EXIT_OK, status)
        records = self.json_lines(output)
        self.assertEqual(5, len(records))
        for record in records:
            self.assertTrue(record['verdict'])
            self.assertEqual([], record['failures'])

    def test_check_straighten_needs_degree(self):
        status, output = self.run_cli(['check-straighten', '--max-degree',
                                       '0'])
        self.assertEqual(cli.EXIT_USAGE, status)
