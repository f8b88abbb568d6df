#!/usr/bin/env python

# file test_text.py
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


import unittest

from arcsmt import text
from arcsmt.diffring import Ambient, DiffVar, Monomial, Poly, det_a
from arcsmt.seqcomb import ESeq, JSeq, SignedJ
from arcsmt.smt import JWord
from arcsmt.text import ParseError


class ParseJSeqTest(unittest.TestCase):
    def test_left(self):
        self.assertEqual(SignedJ(1, JSeq.left(1, (1, 3))),
                         text.parse_jseq('D^1(3,1|'))

    def test_unsorted_sign(self):
        self.assertEqual(SignedJ(-1, JSeq.left(0, (1, 3))),
                         text.parse_jseq('D^0(1,3|'))

    def test_right_and_full(self):
        self.assertEqual(SignedJ(1, JSeq.right(2, (1, 2))),
                         text.parse_jseq('D^2|1,2)'))
        self.assertEqual(SignedJ(1, JSeq.full(0, (2,), (4,))),
                         text.parse_jseq('D^0(2|4)'))

    def test_repeated_index(self):
        self.assertEqual(SignedJ(0, None), text.parse_jseq('D^0(2,2|'))

    def test_whitespace(self):
        self.assertEqual(text.parse_jseq('D^1(3,1|'),
                         text.parse_jseq(' D ^ 1 ( 3 , 1 | '))

    def test_not_one_minor(self):
        self.assertRaises(ParseError, text.parse_jseq, '')
        self.assertRaises(ParseError, text.parse_jseq, 'D^0(1| D^0(2|')


class ParseWordTest(unittest.TestCase):
    def test_word(self):
        sign, word = text.parse_word('D^0(2,1| D^1|1,2)')
        self.assertEqual(1, sign)
        self.assertEqual(JWord([JSeq.left(0, (1, 2)),
                                JSeq.right(1, (1, 2))]), word)

    def test_factors_are_sorted(self):
        sign, word = text.parse_word('D^1|1,2) D^0(2,1|')
        self.assertEqual(text.parse_word('D^0(2,1| D^1|1,2)'), (sign, word))

    def test_signs_multiply(self):
        sign, word = text.parse_word('D^0(1,2| D^0|2,1)')
        self.assertEqual(1, sign)
        sign, word = text.parse_word('D^0(1,2| D^0|1,2)')
        self.assertEqual(-1, sign)

    def test_empty(self):
        self.assertEqual((1, JWord()), text.parse_word(''))

    def test_repeat(self):
        self.assertEqual((0, None), text.parse_word('D^0(2,1| D^0(3,3|'))

    def test_serialize(self):
        word = JWord([JSeq.left(0, (1, 2)), JSeq.full(1, (2,), (1,))])
        self.assertEqual((1, word), text.parse_word(str(word)))


class ParseESeqTest(unittest.TestCase):
    def test_left(self):
        self.assertEqual(ESeq('L', [(1, 0), (2, 1)]),
                         text.parse_eseq('((2,1),(1,0)|'))

    def test_right(self):
        self.assertEqual(ESeq('R', (), [(3, 0), (1, 2)]),
                         text.parse_eseq('|(3,0),(1,2))'))

    def test_full(self):
        e = ESeq('F', [(1, 1)], [(2, 0)])
        self.assertEqual(e, text.parse_eseq('((1,1)|(2,0))'))
        self.assertEqual(e, text.parse_eseq(str(e)))


class ParsePolyTest(unittest.TestCase):
    def test_determinant(self):
        f = det_a((1, 2), Ambient(2, 2, 2))
        self.assertEqual(f, text.parse_poly(str(f)))

    def test_zero(self):
        self.assertEqual(Poly(), text.parse_poly('0'))

    def test_powers_and_constants(self):
        f = text.parse_poly('3*a[1,2]^(1)^2 - b[2,1]^(0) + 5')
        a = DiffVar('a', 1, 2, 1)
        b = DiffVar('b', 2, 1, 0)
        self.assertEqual(3, f.coefficient(Monomial(((a, 2),))))
        self.assertEqual(-1, f.coefficient(Monomial.of(b)))
        self.assertEqual(5, f.coefficient(Monomial()))

    def test_leading_minus(self):
        self.assertEqual(-Poly.var('a', 1, 1), text.parse_poly('-a[1,1]^(0)'))

    def test_order_required(self):
        self.assertRaises(ParseError, text.parse_poly, 'a[1,1]')


class ParseErrorTest(unittest.TestCase):
    def test_syntax(self):
        self.assertRaises(ParseError, text.parse_word, 'D^0(1,2')
        self.assertRaises(ParseError, text.parse_word, 'x')

    def test_wrong_form(self):
        self.assertRaises(ParseError, text.parse_eseq, 'D^0(1|')
        self.assertRaises(ParseError, text.parse_poly, '((1,0)|')

    def test_error_keeps_text(self):
        try:
            text.parse_word('D^0(1,2')
        except ParseError as e:
            self.assertEqual('D^0(1,2', e.text)
        else:
            self.fail('ParseError not raised')

    def test_bad_eseq(self):
        # repeated index inside the sequence
        self.assertRaises(ParseError, text.parse_eseq, '((1,0),(1,1)|')
