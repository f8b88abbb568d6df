#!/usr/bin/env python

# file test_relations.py
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


import itertools
import unittest
from unittest import skipIf

from arcsmt.diffring import Ambient, Monomial, PresPoly, PresVar
from arcsmt.relations import (CLASSICAL_FAMILIES, FAMILIES, WIDE_FAMILIES,
                              RelationInstance, component_span_rank, corrupt,
                              gen_relation, graded_basis, iter_instances,
                              membership, nilradical_check,
                              nilradical_witness, shuffle_relations,
                              straightening_coeffs, verify_kernel)
from testsettings import SLOW_REASON, SLOW_TESTS


class InstanceTest(unittest.TestCase):

    def test_unknown_family(self):
        self.assertRaises(ValueError, RelationInstance, 'XX', ((1,), (1,)))

    def test_negative_order(self):
        self.assertRaises(ValueError, RelationInstance, 'DetYZ',
                          ((1,), (1,)), -1)

    def test_to_json(self):
        inst = RelationInstance('DetYZ', ([1], [2]), 3)
        self.assertEqual({'family': 'DetYZ', 'indices': [[1], [2]],
                          'n': 3, 'l': 0}, inst.to_json())
        inst = RelationInstance('L-L', ((), (1, 2, 3), (4,)), 1, 0,
                                (0, [1, 0]))
        self.assertEqual({'k0': 0, 'values': ['1', '0']},
                         inst.to_json()['window'])


class GenRelationTest(unittest.TestCase):

    def test_det_yz_rank_one(self):
        amb = Ambient(1, 1, 1)
        rel = gen_relation(RelationInstance('DetYZ', ((1,), (1,))), amb)
        expected = PresPoly.x(1, 1) - PresPoly.y((1,)) * PresPoly.z((1,))
        self.assertEqual(expected, rel)
        self.assertTrue(verify_kernel(rel, amb))

    def test_det_yz_orders_are_derivatives(self):
        amb = Ambient(2, 2, 2)
        base = gen_relation(RelationInstance('DetYZ', ((1, 2), (1, 2))), amb)
        second = gen_relation(RelationInstance('DetYZ', ((1, 2), (1, 2)), 2),
                              amb)
        self.assertEqual(base.dbar(2), second)

    def test_shuffle_orders_are_derivatives(self):
        amb = Ambient(4, 1, 2)
        pool = ((), (1, 2, 3, 4))
        first = gen_relation(RelationInstance('YYShuffle', pool, 1, 1), amb)
        second = gen_relation(RelationInstance('YYShuffle', pool, 2, 1), amb)
        self.assertEqual(first.dbar(1), second)
        self.assertTrue(verify_kernel(second, amb))

    def test_shuffle_bad_depth(self):
        amb = Ambient(4, 1, 2)
        pool = ((), (1, 2, 3, 4))
        # order below the depth
        self.assertRaises(ValueError, gen_relation,
                          RelationInstance('YYShuffle', pool, 0, 1), amb)
        # depth must stay below i
        self.assertRaises(ValueError, gen_relation,
                          RelationInstance('YYShuffle', pool, 2, 2), amb)

    def test_det_yz_wrong_size(self):
        amb = Ambient(2, 2, 2)
        self.assertRaises(ValueError, gen_relation,
                          RelationInstance('DetYZ', ((1,), (1, 2))), amb)

    def test_plucker_relation(self):
        amb = Ambient(3, 1, 2)
        rel = gen_relation(RelationInstance('XY', ((1, 2, 3), (1,))), amb)
        self.assertEqual(3, len(rel))
        self.assertTrue(verify_kernel(rel, amb))

    def test_window_required(self):
        inst = RelationInstance('L-L', ((), (1, 2, 3), (4,)), 1)
        self.assertRaises(ValueError, gen_relation, inst, Ambient(4, 1, 2))


class CoefficientTest(unittest.TestCase):

    def test_extension(self):
        self.assertEqual([2, 1, 0, -1], straightening_coeffs(1, 1, 3, (1, 0)))

    def test_given_values_kept(self):
        coeffs = straightening_coeffs(2, 2, 6, (3, -1, 4))
        self.assertEqual([3, -1, 4], coeffs[2:5])
        self.assertEqual(7, len(coeffs))

    def test_constant_window(self):
        self.assertEqual([5, 5, 5, 5], straightening_coeffs(2, 0, 3, (5,)))

    def test_bad_window(self):
        self.assertRaises(ValueError, straightening_coeffs, 2, 2, 3, (1, 0, 0))
        self.assertRaises(ValueError, straightening_coeffs, 0, 1, 3, (1,))


class KernelTest(unittest.TestCase):
    # first few instances of every family at small scale
    sample = 12

    def test_every_family_vanishes(self):
        amb = Ambient(4, 4, 2)
        for family in FAMILIES:
            instances = list(itertools.islice(
                iter_instances(family, amb, 1), self.sample))
            self.assertTrue(instances, '%s has no instances' % family)
            for inst in instances:
                self.assertTrue(verify_kernel(inst, amb),
                                '%s does not vanish' % (inst,))

    def test_rank_one_families(self):
        amb = Ambient(2, 2, 1)
        for family in CLASSICAL_FAMILIES:
            for inst in iter_instances(family, amb, 2):
                self.assertTrue(verify_kernel(inst, amb),
                                '%s does not vanish' % (inst,))

    def test_corrupted_relation(self):
        amb = Ambient(4, 2, 2)
        for family in ('DetYZ', 'YYShuffle'):
            rel = gen_relation(next(iter_instances(family, amb, 1)), amb)
            self.assertFalse(verify_kernel(corrupt(rel), amb))
        self.assertEqual(PresPoly(), corrupt(PresPoly()))

    def test_unknown_family(self):
        self.assertRaises(ValueError, list,
                          iter_instances('YZ', Ambient(2, 2, 2), 0))


class ThreeColumnKernelTest(unittest.TestCase):

    def check_families(self, amb, families, sample, n_max):
        for family in families:
            instances = list(itertools.islice(
                iter_instances(family, amb, n_max), sample))
            self.assertTrue(instances, '%s has no instances' % family)
            for inst in instances:
                self.assertTrue(verify_kernel(inst, amb),
                                '%s does not vanish' % (inst,))

    def test_every_family_vanishes(self):
        self.check_families(Ambient(6, 6, 3), FAMILIES, 2, 2)

    def test_second_order(self):
        amb = Ambient(6, 6, 3)
        for family in ('DetYZ', 'YYShuffle', 'BasicPlus4'):
            inst = [i for i in itertools.islice(
                iter_instances(family, amb, 2), 20) if i.n == 2][0]
            self.assertTrue(verify_kernel(inst, amb),
                            '%s does not vanish' % (inst,))

    def test_narrow_ambient(self):
        # five indices a side: every family that fits
        amb = Ambient(5, 5, 3)
        narrow = [f for f in FAMILIES if f not in WIDE_FAMILIES]
        self.check_families(amb, narrow, 2, 1)

    def test_wide_families_need_2h_indices(self):
        amb = Ambient(5, 5, 3)
        for family in WIDE_FAMILIES:
            with self.assertLogs('arcsmt.relations', 'WARNING') as logs:
                self.assertEqual([], list(iter_instances(family, amb, 1)))
            self.assertTrue('needs 6 distinct' in logs.output[0])
        self.assertTrue(list(itertools.islice(
            iter_instances('ZZShuffle', Ambient(1, 6, 3), 0), 1)))

    @skipIf(not SLOW_TESTS, SLOW_REASON)
    def test_desk_scale(self):
        self.check_families(Ambient(6, 6, 3), FAMILIES, 40, 2)


class GradedTest(unittest.TestCase):

    def test_component_sizes(self):
        self.assertEqual(3, len(graded_basis((2, 0, 0),
                                             Ambient(3, 1, 2)).monomials))
        self.assertEqual(36, len(graded_basis((4, 0, 1),
                                              Ambient(4, 1, 2)).monomials))
        self.assertEqual([], graded_basis((-1, 0, 0),
                                          Ambient(2, 2, 2)).monomials)

    def test_bilinear_component(self):
        comp = graded_basis((1, 1, 0), Ambient(2, 2, 2))
        self.assertEqual(4, len(comp.monomials))
        self.assertEqual((1, 1, 0), comp.degree)

    def test_shuffle_depths_agree_for_rank_two(self):
        amb = Ambient(4, 1, 2)
        degree = (4, 0, 1)
        classical = shuffle_relations(amb, (0,))
        full = classical + shuffle_relations(amb, (1,))
        self.assertTrue(classical)
        self.assertEqual(component_span_rank(classical, degree, amb)[0],
                         component_span_rank(full, degree, amb)[0])

    def test_membership(self):
        amb = Ambient(4, 1, 2)
        degree = (4, 0, 1)
        classical = shuffle_relations(amb, (0,))
        self.assertTrue(membership(classical[0].scale(3), classical, degree,
                                   amb))
        self.assertTrue(membership(PresPoly(), classical, degree, amb))
        single = PresPoly.from_monomial(Monomial.of(
            PresVar.y((1, 2)), PresVar.y((3, 4), 1)))
        self.assertFalse(membership(single, classical, degree, amb))
        self.assertRaises(ValueError, membership, single, classical,
                          (4, 0, 0), amb)


class NilradicalTest(unittest.TestCase):

    def setUp(self):
        self.amb = Ambient(6, 1, 3)

    def test_witness(self):
        f = nilradical_witness(self.amb)
        self.assertEqual(10, len(f))
        self.assertTrue(f.is_homogeneous())
        self.assertEqual((6, 0, 1), f.degree)

    def test_witness_is_a_shuffle_relation(self):
        f = nilradical_witness(self.amb)
        rel = gen_relation(RelationInstance(
            'YYShuffle', ((6,), (1, 2, 3, 4, 5)), 1, 1), self.amb)
        self.assertTrue((f + rel).is_zero())

    def test_check(self):
        report = nilradical_check(self.amb)
        self.assertTrue(report['qstar_is_zero'])
        self.assertFalse(report['in_classical_span'])
        self.assertTrue(report['in_full_span'])

    def test_too_small(self):
        self.assertRaises(ValueError, nilradical_witness, Ambient(6, 1, 2))
        self.assertRaises(ValueError, nilradical_witness, Ambient(5, 1, 3))


class ColumnNilradicalTest(unittest.TestCase):
    # the witness built from Z minors

    def setUp(self):
        self.amb = Ambient(1, 6, 3)

    def test_witness(self):
        f = nilradical_witness(self.amb, 'b')
        self.assertEqual(10, len(f))
        self.assertTrue(f.is_homogeneous())
        self.assertEqual((0, 6, 1), f.degree)
        self.assertTrue(all(var.kind == 'Z' for mono, _ in f.items()
                            for var, _ in mono))

    def test_witness_is_a_shuffle_relation(self):
        f = nilradical_witness(self.amb, 'b')
        rel = gen_relation(RelationInstance(
            'ZZShuffle', ((6,), (1, 2, 3, 4, 5)), 1, 1), self.amb)
        self.assertTrue((f + rel).is_zero())

    def test_check(self):
        report = nilradical_check(self.amb, 'b')
        self.assertEqual('b', report['side'])
        self.assertTrue(report['qstar_is_zero'])
        self.assertFalse(report['in_classical_span'])
        self.assertTrue(report['in_full_span'])

    def test_needs_columns(self):
        self.assertRaises(ValueError, nilradical_witness, Ambient(6, 5, 3),
                          'b')
        self.assertRaises(ValueError, nilradical_witness, self.amb, 'c')
        # the default side still looks at the rows of a
        self.assertRaises(ValueError, nilradical_witness, self.amb)
