# file arcsmt/tableau.py
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

"""Double tableaux, their reading words, and leading monomials.

A monomial of the concrete ring is laid out as a double tableau:

* pure ``a`` rows, one per ``a`` entry in column ``h``, each taking the
  next smallest entry of every column;
* pure ``b`` rows, likewise for ``b``;
* mixed rows holding what is left in columns ``1..h-1``, top-aligned.

Entries compare by ``(order, row)``; an empty cell (``STAR``) compares
below every entry.  The reading word lists pure ``a`` rows (columns
``h..1``), then pure ``b`` rows (columns ``h..1``), then each mixed row's
``a`` run followed by its ``b`` run (columns ``h-1..1``).

Monomials are ordered by their shape first: the column counts of each
family read from column ``h`` down, fewer entries in high columns being
larger.  Monomials of one shape have their cells in the same places, and
compare lexicographically on their reading words.
"""

import logging
from collections import namedtuple

from arcsmt.diffring import DiffVar, Monomial
from arcsmt.seqcomb import ESeq, NotStandardError, build_chain

__all__ = [
    'STAR', 'Word', 'TableauLayout', 'layout', 'word', 'shape_key',
    'word_key',
    'ld_plus', 't_plus', 'invert_t_plus', 'pretty',
    ]

logger = logging.getLogger(__name__)

#: an empty cell
STAR = None


def entry_key(entry):
    if entry is STAR:
        return (-1, -1)
    return (entry.order, entry.row)


def _entry_tag(entry):
    if entry is STAR:
        return ('', 0)
    return (entry.family, entry.col)


class Word(tuple):
    '''The reading word of a monomial: :class:`DiffVar` entries and
    ``STAR`` cells in reading order.'''

    def sort_key(self):
        return (tuple(entry_key(e) for e in self),
                tuple(_entry_tag(e) for e in self))

    def __str__(self):
        return ' '.join('*' if e is STAR else str(e) for e in self)


class TableauLayout(namedtuple('TableauLayout',
                               ['h', 'pure_a', 'pure_b', 'mixed'])):
    '''Rows of a double tableau.

    ``pure_a`` and ``pure_b`` rows are tuples indexed by column ``1..h``;
    ``mixed`` rows are ``(a_run, b_run)`` pairs indexed by column
    ``1..h-1``.  Absent cells hold ``STAR``.
    '''
    __slots__ = ()

    def entries(self):
        cells = []
        for row in self.pure_a + self.pure_b:
            cells.extend(row)
        for a_run, b_run in self.mixed:
            cells.extend(a_run)
            cells.extend(b_run)
        return [c for c in cells if c is not STAR]


def _buckets(mono, family, h):
    columns = dict((c, []) for c in range(1, h + 1))
    for var in mono.variables():
        if var.family == family:
            columns[var.col].append(var)
    for entries in columns.values():
        entries.sort(key=entry_key)
    return columns


def _pure_rows(columns, h):
    count = len(columns[h])
    rows = []
    for r in range(count):
        rows.append(tuple(columns[c][r] if r < len(columns[c]) else STAR
                          for c in range(1, h + 1)))
    rest = dict((c, columns[c][count:]) for c in range(1, h))
    return tuple(rows), rest


def layout(mono, ambient):
    '''Lay a monomial out as a double tableau.'''
    h = ambient.h
    mono = Monomial(mono)
    pure_a, rest_a = _pure_rows(_buckets(mono, 'a', h), h)
    pure_b, rest_b = _pure_rows(_buckets(mono, 'b', h), h)
    depth = max([len(v) for v in rest_a.values()] +
                [len(v) for v in rest_b.values()] + [0])

    def cell(rest, c, s):
        return rest[c][s] if s < len(rest[c]) else STAR

    mixed = tuple((tuple(cell(rest_a, c, s) for c in range(1, h)),
                   tuple(cell(rest_b, c, s) for c in range(1, h)))
                  for s in range(depth))
    return TableauLayout(h, pure_a, pure_b, mixed)


def word(mono, ambient):
    '''The reading word of a monomial.'''
    tab = layout(mono, ambient)
    entries = []
    for row in tab.pure_a + tab.pure_b:
        entries.extend(reversed(row))
    for a_run, b_run in tab.mixed:
        entries.extend(reversed(a_run))
        entries.extend(reversed(b_run))
    return Word(entries)


def shape_key(mono, ambient):
    '''Negated column counts per family, columns ``h..1``; a larger key
    is a larger shape.'''
    counts = dict(((f, c), 0) for f in ('a', 'b')
                  for c in range(1, ambient.h + 1))
    for var, exp in Monomial(mono):
        counts[(var.family, var.col)] += exp
    return tuple(-counts[(f, c)] for f in ('a', 'b')
                 for c in range(ambient.h, 0, -1))


def word_key(mono, ambient):
    '''The sort key of a monomial: shape, then reading word.'''
    return (shape_key(mono, ambient), word(mono, ambient).sort_key())


def ld_plus(f, ambient):
    '''The leading monomial of ``f`` under the word order, with its
    coefficient.'''
    if f.is_zero():
        raise ValueError('the zero polynomial has no leading monomial')
    mono = max(f.terms, key=lambda m: word_key(m, ambient))
    return mono, f.terms[mono]


def _row_monomial(e):
    factors = [DiffVar('a', u, pos, k) for pos, (u, k) in enumerate(e.left, 1)]
    factors += [DiffVar('b', v, pos, k)
                for pos, (v, k) in enumerate(e.right, 1)]
    return Monomial.of(*factors)


def t_plus(chain, ambient):
    '''The monomial of a standard tagged chain: a left pair ``(u, k)`` at
    position ``i`` contributes ``a[u,i]^(k)``, a right pair ``(v, l)``
    contributes ``b[v,i]^(l)``.'''
    chain = list(chain)
    norms = [e.norm() for e in chain]
    if sorted(norms, key=lambda j: j.sort_key()) != norms:
        raise NotStandardError('tagged chain is not in increasing order')
    rebuilt, failure = build_chain(norms, ambient.h)
    if failure is not None or rebuilt != chain:
        raise NotStandardError('tagged chain is not standard',
                               failure or len(rebuilt) + 1)
    mono = Monomial()
    for e in chain:
        mono = mono * _row_monomial(e)
    return mono


def _leading_run(cells):
    size = 0
    while size < len(cells) and cells[size] is not STAR:
        size += 1
    if any(c is not STAR for c in cells[size:]):
        return None
    return size


def invert_t_plus(mono, ambient):
    '''Read a tagged chain back off the tableau of ``mono``; None when
    some row cannot come from :func:`t_plus`.'''
    tab = layout(mono, ambient)
    chain = []
    try:
        for family, rows in (('L', tab.pure_a), ('R', tab.pure_b)):
            for row in rows:
                if STAR in row:
                    return None
                pairs = [(v.row, v.order) for v in row]
                if family == 'L':
                    chain.append(ESeq('L', pairs))
                else:
                    chain.append(ESeq('R', (), pairs))
        for a_run, b_run in tab.mixed:
            size = _leading_run(a_run)
            if not size or size != _leading_run(b_run):
                return None
            chain.append(ESeq('F', [(v.row, v.order) for v in a_run[:size]],
                              [(v.row, v.order) for v in b_run[:size]]))
    except ValueError:
        # a repeated index inside a row
        return None
    return chain


def pretty(tab):
    '''Render a layout one row per line, ``*`` marking empty cells.'''

    def fmt(cells):
        return ', '.join('*' if c is STAR else str(c) for c in cells)

    lines = []
    for row in tab.pure_a:
        lines.append('(%s|' % fmt(reversed(row)))
    for row in tab.pure_b:
        lines.append('|%s)' % fmt(row))
    for a_run, b_run in tab.mixed:
        lines.append('(%s|%s)' % (fmt((STAR,) + tuple(reversed(a_run))),
                                  fmt(tuple(b_run) + (STAR,))))
    return '\n'.join(lines)
