# file arcsmt/text/parserules.py
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

"""Parsing rules for the canonical text forms.

A single grammar covers words of derived minors, tagged sequences and
concrete ring polynomials; their first tokens differ, so the parse
result is tagged with the form that matched.

To understand how this module works, it is valuable to have a strong
understanding of the `ply <http://www.dabeaz.com/ply/>` module.
"""

from arcsmt.diffring import DiffVar, Monomial, Poly
from arcsmt.seqcomb import ESeq, normalize_raw
from arcsmt.text.lexrules import tokens

#
# top level
#

def p_text(p):
    """
    Text : Word
         | ESeq
         | Poly
    """
    p[0] = p[1]


def p_word_empty(p):
    """
    Word :
    """
    p[0] = ('word', [])


def p_word_factors(p):
    """
    Word : Factors
    """
    p[0] = ('word', p[1])


def p_factors_single(p):
    """
    Factors : JSeq
    """
    p[0] = [p[1]]


def p_factors_recursive(p):
    """
    Factors : Factors JSeq
    """
    p[0] = p[1]
    p[0].append(p[2])

#
# derived minors
#

def p_jseq_left(p):
    """
    JSeq : DERIV CARET INTEGER OPEN_PAREN IndexList BAR
    """
    p[0] = normalize_raw('L', p[3], p[5], ())


def p_jseq_right(p):
    """
    JSeq : DERIV CARET INTEGER BAR IndexList CLOSE_PAREN
    """
    p[0] = normalize_raw('R', p[3], (), p[5])


def p_jseq_full(p):
    """
    JSeq : DERIV CARET INTEGER OPEN_PAREN IndexList BAR IndexList CLOSE_PAREN
    """
    p[0] = normalize_raw('F', p[3], p[5], p[7])


def p_index_list_single(p):
    """
    IndexList : INTEGER
    """
    p[0] = [p[1]]


def p_index_list_recursive(p):
    """
    IndexList : IndexList COMMA INTEGER
    """
    p[0] = p[1]
    p[0].append(p[3])

#
# tagged sequences; pairs are written from the highest left position
# down to the bar, then from the bar outwards on the right
#

def p_eseq_left(p):
    """
    ESeq : OPEN_PAREN PairList BAR
    """
    p[0] = ('eseq', ESeq('L', reversed(p[2])))


def p_eseq_right(p):
    """
    ESeq : BAR PairList CLOSE_PAREN
    """
    p[0] = ('eseq', ESeq('R', (), p[2]))


def p_eseq_full(p):
    """
    ESeq : OPEN_PAREN PairList BAR PairList CLOSE_PAREN
    """
    p[0] = ('eseq', ESeq('F', reversed(p[2]), p[4]))


def p_pair_list_single(p):
    """
    PairList : Pair
    """
    p[0] = [p[1]]


def p_pair_list_recursive(p):
    """
    PairList : PairList COMMA Pair
    """
    p[0] = p[1]
    p[0].append(p[3])


def p_pair(p):
    """
    Pair : OPEN_PAREN INTEGER COMMA INTEGER CLOSE_PAREN
    """
    p[0] = (p[2], p[4])

#
# polynomials
#

def p_poly_single(p):
    """
    Poly : Term
    """
    p[0] = ('poly', Poly.from_monomial(*p[1]))


def p_poly_negated(p):
    """
    Poly : MINUS_OP Term
    """
    p[0] = ('poly', Poly.from_monomial(p[2][0], -p[2][1]))


def p_poly_binary(p):
    """
    Poly : Poly PLUS_OP Term
         | Poly MINUS_OP Term
    """
    mono, coeff = p[3]
    if p[2] == '-':
        coeff = -coeff
    p[0] = ('poly', p[1][1] + Poly.from_monomial(mono, coeff))


def p_term_constant(p):
    """
    Term : INTEGER
    """
    p[0] = (Monomial(), p[1])


def p_term_scaled(p):
    """
    Term : INTEGER MULT_OP Monomial
    """
    p[0] = (p[3], p[1])


def p_term_monomial(p):
    """
    Term : Monomial
    """
    p[0] = (p[1], 1)


def p_monomial_single(p):
    """
    Monomial : Power
    """
    p[0] = Monomial((p[1],))


def p_monomial_recursive(p):
    """
    Monomial : Monomial MULT_OP Power
    """
    p[0] = p[1] * Monomial((p[3],))


def p_power_single(p):
    """
    Power : Variable
    """
    p[0] = (p[1], 1)


def p_power_exponent(p):
    """
    Power : Variable CARET INTEGER
    """
    p[0] = (p[1], p[3])


def p_variable(p):
    """
    Variable : VAR OPEN_BRACKET INTEGER COMMA INTEGER CLOSE_BRACKET CARET OPEN_PAREN INTEGER CLOSE_PAREN
    """
    p[0] = DiffVar(p[1], p[3], p[5], p[9])

#
# error handling
#

def p_error(p):
    # p is None at end of input
    raise RuntimeError("Syntax error at '%s'" % repr(p))
