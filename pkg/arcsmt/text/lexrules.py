# file arcsmt/text/lexrules.py
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

"""Lexing rules for the canonical text forms.

To understand how this module works, it is valuable to have a strong
understanding of the `ply <http://www.dabeaz.com/ply/>` module.
"""

tokens = [
    'DERIV',
    'VAR',
    'CARET',
    'OPEN_PAREN',
    'CLOSE_PAREN',
    'OPEN_BRACKET',
    'CLOSE_BRACKET',
    'BAR',
    'COMMA',
    'MULT_OP',
    'PLUS_OP',
    'MINUS_OP',
    'INTEGER',
    ]

t_DERIV = r'D'
t_VAR = r'[ab]'
t_CARET = r'\^'
t_OPEN_PAREN = r'\('
t_CLOSE_PAREN = r'\)'
t_OPEN_BRACKET = r'\['
t_CLOSE_BRACKET = r'\]'
t_BAR = r'\|'
t_COMMA = r','
t_MULT_OP = r'\*'
t_PLUS_OP = r'\+'
t_MINUS_OP = r'-'

t_ignore = ' \t\r\n'


def t_INTEGER(t):
    r'\d+'
    t.value = int(t.value)
    return t


def t_error(t):
    raise TypeError("Unknown text '%s'" % (t.value,))
