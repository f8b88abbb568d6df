# file arcsmt/text/core.py
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

"""Core text parsing glue.

This module builds a lexer and parser for the canonical text forms for
import into arcsmt.text. To understand how this module builds the lexer
and parser, it is helpful to understand how the `ply
<http://www.dabeaz.com/ply/>`_ module works.

Note that most client applications will import these functions from
arcsmt.text, not directly from here."""

import logging
import os
import tempfile

from ply import lex, yacc

from arcsmt.smt import JWord
from arcsmt.text import lexrules
from arcsmt.text import parserules

__all__ = ['lexer', 'parser', 'ParseError', 'parse', 'parse_jseq',
           'parse_word', 'parse_eseq', 'parse_poly']

logger = logging.getLogger(__name__)

# try to build the lexer with cached lex table generation. this will fail if
# the user doesn't have write perms on the source directory. in that case,
# try again without lex table generation.
lexdir = os.path.dirname(lexrules.__file__)
lexer = None
try:
    lexer = lex.lex(module=lexrules, optimize=1, outputdir=lexdir)
except IOError as e:
    import errno
    if e.errno != errno.EACCES:
        raise
    logger.warning('cannot write lexer tables to %s' % lexdir)
if lexer is None:
    lexer = lex.lex(module=lexrules)

# build the parser. This will generate a parsetab.py in the arcsmt.text
# directory, or in the configured tempdir if that is not writable.
parsedir = os.path.dirname(parserules.__file__)
if not os.access(parsedir, os.W_OK):
    logger.warning('cannot write parser tables to %s, using %s'
                   % (parsedir, tempfile.gettempdir()))
    parsedir = tempfile.gettempdir()
parser = yacc.yacc(module=parserules, outputdir=parsedir, debug=0)


class ParseError(ValueError):
    '''Text that does not read as the requested form; ``text`` holds the
    input.'''

    def __init__(self, message, text):
        super(ParseError, self).__init__(message)
        self.text = text


def parse(text):
    '''Parse any canonical form; returns a ``(form, value)`` pair with
    form ``'word'``, ``'eseq'`` or ``'poly'``.'''
    # explicitly specify the lexer created here, since otherwise parse
    # will use the most-recently created lexer.
    try:
        return parser.parse(text, lexer=lexer)
    except (TypeError, RuntimeError, ValueError) as e:
        raise ParseError(str(e), text)


def _expect(text, form):
    found, value = parse(text)
    if found != form:
        raise ParseError('expected a %s, found a %s' % (form, found), text)
    return value


def parse_word(text):
    '''Parse a whitespace-separated product of derived minors.  Returns a
    ``(sign, JWord)`` pair; ``(0, None)`` when some factor repeats an
    index.'''
    sign = 1
    factors = []
    for signed in _expect(text, 'word'):
        if not signed.sign:
            return 0, None
        sign *= signed.sign
        factors.append(signed.seq)
    return sign, JWord(factors)


def parse_jseq(text):
    '''Parse one derived minor, such as ``D^1(3,1|`` or ``D^0(2|4)``, as a
    :class:`~arcsmt.seqcomb.SignedJ`.'''
    factors = _expect(text, 'word')
    if len(factors) != 1:
        raise ParseError('expected one derived minor, found %d'
                         % len(factors), text)
    return factors[0]


def parse_eseq(text):
    '''Parse a tagged sequence such as ``((2,1),(1,0)|``.'''
    return _expect(text, 'eseq')


def parse_poly(text):
    '''Parse a concrete ring polynomial in the form printed by ``str``.'''
    return _expect(text, 'poly')


def ptokens(s):
    '''Lex a string and print each token as it is lexed.  This is used
    primarily for debugging.'''
    lexer.input(s)
    for tok in lexer:
        print(tok)
