# lextab.py. This file automatically created by PLY (version 3.11). Don't edit!
_tabversion   = '3.10'
_lextokens    = set(('BAR', 'CARET', 'CLOSE_BRACKET', 'CLOSE_PAREN', 'COMMA', 'DERIV', 'INTEGER', 'MINUS_OP', 'MULT_OP', 'OPEN_BRACKET', 'OPEN_PAREN', 'PLUS_OP', 'VAR'))
_lexreflags   = 64
_lexliterals  = ''
_lexstateinfo = {'INITIAL': 'inclusive'}
_lexstatere   = {'INITIAL': [('(?P<t_INTEGER>\\d+)|(?P<t_VAR>[ab])|(?P<t_BAR>\\|)|(?P<t_CARET>\\^)|(?P<t_CLOSE_BRACKET>\\])|(?P<t_CLOSE_PAREN>\\))|(?P<t_MULT_OP>\\*)|(?P<t_OPEN_BRACKET>\\[)|(?P<t_OPEN_PAREN>\\()|(?P<t_PLUS_OP>\\+)|(?P<t_COMMA>,)|(?P<t_DERIV>D)|(?P<t_MINUS_OP>-)', [None, ('t_INTEGER', 'INTEGER'), (None, 'VAR'), (None, 'BAR'), (None, 'CARET'), (None, 'CLOSE_BRACKET'), (None, 'CLOSE_PAREN'), (None, 'MULT_OP'), (None, 'OPEN_BRACKET'), (None, 'OPEN_PAREN'), (None, 'PLUS_OP'), (None, 'COMMA'), (None, 'DERIV'), (None, 'MINUS_OP')])]}
_lexstateignore = {'INITIAL': ' \t\r\n'}
_lexstateerrorf = {'INITIAL': 't_error'}
_lexstateeoff = {}
