# file arcsmt/seqcomb.py
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

"""The alphabet of derived minors and its tagged refinement.

A :class:`JSeq` names a derived minor: ``D^k(u_h,...,u_1|`` (kind ``L``,
a derived ``Y``), ``D^k|v_1,...,v_h)`` (kind ``R``, a derived ``Z``) or
``D^k(u_s,...,u_1|v_1,...,v_s)`` (kind ``F``, a derived minor of the
bilinear matrix).  Index lists are stored ascending.

An :class:`ESeq` spreads the weight of a minor over its index slots.  Its
``left`` and ``right`` tuples hold ``(index, tag)`` pairs by position:
entry 0 is position 1, the slot next to the bar.  Pairs compare
weight-major: ``(u, k) <= (u', k')`` iff ``k < k'``, or ``k == k'`` and
``u <= u'``.

Total orders:

* kinds compare ``L < R < F``;
* within ``L`` and ``R``: weight, then the index word read from the
  highest position down;
* within ``F``: the larger size is smaller, then weight, then the left
  word followed by the right word.

Tagged sequences order the same way with pair words in place of index
words.
"""

import itertools
import logging
from collections import namedtuple

from arcsmt.utils.combinat import compositions, sort_with_sign

__all__ = [
    'JSeq', 'ESeq', 'SignedJ', 'normalize_raw', 'norm_of_E', 'eclass',
    'cmp_total_J', 'cmp_total_E', 'le_partial_E', 'restrict', 'left_part',
    'right_part', 'fuse', 'initial_left', 'initial_right', 'lnum', 'rnum',
    'is_greater', 'largest_e_above', 'min_w', 'NotStandardError',
    'build_chain',
    ]

logger = logging.getLogger(__name__)

KINDS = ('L', 'R', 'F')
KIND_RANK = {'L': 0, 'R': 1, 'F': 2}


def _cmp(a, b):
    return (a > b) - (a < b)


def _check_increasing(seq):
    if any(x >= y for x, y in zip(seq, seq[1:])):
        raise ValueError('index list %s is not strictly increasing'
                         % (list(seq),))


class _KeyOrdered(object):
    # rich comparisons through sort_key; equality stays tuple equality
    __slots__ = ()

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()


class JSeq(_KeyOrdered, namedtuple('JSeq', ['kind', 'weight', 'us', 'vs'])):
    '''A derived minor ``D^weight`` on rows ``us`` and columns ``vs``.'''
    __slots__ = ()

    def __new__(cls, kind, weight, us=(), vs=()):
        us, vs = tuple(us), tuple(vs)
        if kind not in KINDS:
            raise ValueError('unknown sequence kind %r' % (kind,))
        if weight < 0:
            raise ValueError('negative weight %d' % weight)
        if kind == 'L' and (vs or not us):
            raise ValueError('L sequences take a nonempty left list only')
        if kind == 'R' and (us or not vs):
            raise ValueError('R sequences take a nonempty right list only')
        if kind == 'F' and (not us or len(us) != len(vs)):
            raise ValueError('F sequences take two nonempty lists of equal '
                             'length')
        _check_increasing(us)
        _check_increasing(vs)
        return super(JSeq, cls).__new__(cls, kind, weight, us, vs)

    @classmethod
    def left(cls, weight, us):
        return cls('L', weight, us, ())

    @classmethod
    def right(cls, weight, vs):
        return cls('R', weight, (), vs)

    @classmethod
    def full(cls, weight, us, vs):
        return cls('F', weight, us, vs)

    @property
    def size(self):
        return len(self.us or self.vs)

    def sort_key(self):
        word = tuple(reversed(self.us)) + tuple(reversed(self.vs))
        if self.kind == 'F':
            return (KIND_RANK['F'], -self.size, self.weight, word)
        return (KIND_RANK[self.kind], self.weight, word)

    def check(self, ambient):
        '''Reject indices outside the ambient ranges.'''
        ambient.check_rows('a', self.us)
        ambient.check_rows('b', self.vs)

    def in_alphabet(self, ambient):
        '''True when the sequence is a letter of the alphabet for
        ``ambient``: one-sided minors of full size ``h``, two-sided minors
        of size at most ``h - 1``.'''
        try:
            self.check(ambient)
        except ValueError:
            return False
        if self.kind == 'F':
            return self.size <= ambient.h - 1
        return self.size == ambient.h

    def __str__(self):
        left = ','.join(str(u) for u in reversed(self.us))
        right = ','.join(str(v) for v in self.vs)
        if self.kind == 'L':
            return 'D^%d(%s|' % (self.weight, left)
        if self.kind == 'R':
            return 'D^%d|%s)' % (self.weight, right)
        return 'D^%d(%s|%s)' % (self.weight, left, right)

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self)


SignedJ = namedtuple('SignedJ', ['sign', 'seq'])
SignedJ.__doc__ = '''A sequence with the sign picked up while sorting its
indices; ``sign == 0`` and ``seq is None`` when an index repeats.'''


def normalize_raw(kind, weight, raw_us=(), raw_vs=(), ambient=None):
    '''Bring index lists into canonical form.

    ``raw_us`` is read in written order ``u_h, ..., u_1`` and ``raw_vs`` in
    written order ``v_1, ..., v_h``.  The result carries the product of the
    sorting signs; a repeated index gives sign 0.
    '''
    if ambient is not None:
        ambient.check_rows('a', raw_us, distinct=False)
        ambient.check_rows('b', raw_vs, distinct=False)
    sign = 1
    us, vs = (), ()
    if kind in ('L', 'F'):
        s, us = sort_with_sign(list(reversed(list(raw_us))))
        sign *= s
    if kind in ('R', 'F'):
        s, vs = sort_with_sign(list(raw_vs))
        sign *= s
    if sign == 0:
        return SignedJ(0, None)
    return SignedJ(sign, JSeq(kind, weight, us, vs))


def _pair_key(pair):
    return (pair[1], pair[0])


def _check_pairs(pairs):
    indices = [u for u, _ in pairs]
    if len(set(indices)) != len(indices):
        raise ValueError('repeated index in %s' % (list(pairs),))
    for u, k in pairs:
        if u < 1 or k < 0:
            raise ValueError('invalid pair (%s,%s)' % (u, k))


class ESeq(_KeyOrdered, namedtuple('ESeq', ['kind', 'left', 'right'])):
    '''A tagged sequence; ``left`` and ``right`` hold ``(index, tag)``
    pairs by position, position 1 first.'''
    __slots__ = ()

    def __new__(cls, kind, left=(), right=()):
        left = tuple(tuple(p) for p in left)
        right = tuple(tuple(p) for p in right)
        if kind not in KINDS:
            raise ValueError('unknown sequence kind %r' % (kind,))
        if kind == 'L' and (right or not left):
            raise ValueError('L tagged sequences take a left list only')
        if kind == 'R' and (left or not right):
            raise ValueError('R tagged sequences take a right list only')
        if kind == 'F' and (not left or len(left) != len(right)):
            raise ValueError('F tagged sequences take two lists of equal '
                             'length')
        _check_pairs(left)
        _check_pairs(right)
        return super(ESeq, cls).__new__(cls, kind, left, right)

    @property
    def size(self):
        return len(self.left or self.right)

    @property
    def weight(self):
        return sum(k for _, k in self.left) + sum(k for _, k in self.right)

    def sort_key(self):
        word = tuple(_pair_key(p) for p in reversed(self.left)) + \
            tuple(_pair_key(p) for p in reversed(self.right))
        if self.kind == 'F':
            return (KIND_RANK['F'], -self.size, self.weight, word)
        return (KIND_RANK[self.kind], self.weight, word)

    def norm(self):
        return JSeq(self.kind, self.weight,
                    sorted(u for u, _ in self.left),
                    sorted(v for v, _ in self.right))

    def __str__(self):
        left = ','.join('(%d,%d)' % p for p in reversed(self.left))
        right = ','.join('(%d,%d)' % p for p in self.right)
        if self.kind == 'L':
            return '(%s|' % left
        if self.kind == 'R':
            return '|%s)' % right
        return '(%s|%s)' % (left, right)

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self)


def norm_of_E(e):
    '''The derived minor a tagged sequence represents.'''
    return e.norm()


def cmp_total_J(j1, j2):
    return _cmp(j1.sort_key(), j2.sort_key())


def cmp_total_E(e1, e2):
    return _cmp(e1.sort_key(), e2.sort_key())


def eclass(j):
    '''Generate every tagged sequence whose norm is ``j``: each bijection of
    the indices onto positions on each side, combined with each
    composition of the weight over all slots.'''
    size = j.size
    nslots = len(j.us) + len(j.vs)
    for tags in compositions(j.weight, nslots):
        left_tags, right_tags = tags[:len(j.us)], tags[len(j.us):]
        for lperm in itertools.permutations(j.us):
            for rperm in itertools.permutations(j.vs):
                yield ESeq(j.kind, zip(lperm, left_tags),
                           zip(rperm, right_tags))
    logger.debug('enumerated tagged sequences of %s (size %d)' % (j, size))


def _dominated(lower, upper):
    # positions 1..len(upper) of lower lie below upper, pair by pair
    if len(upper) > len(lower):
        return False
    return all(_pair_key(a) <= _pair_key(b) for a, b in zip(lower, upper))


def le_partial_E(e1, e2):
    '''The partial order ``e1 <= e2``: pairwise comparison of the first
    ``sz(e2)`` positions on every side ``e2`` shares with ``e1``.'''
    kinds = (e1.kind, e2.kind)
    if kinds in (('F', 'F'),):
        return _dominated(e1.left, e2.left) and \
            _dominated(e1.right, e2.right)
    if kinds in (('L', 'L'), ('L', 'F')):
        return _dominated(e1.left, e2.left)
    if kinds in (('R', 'R'), ('R', 'F')):
        return _dominated(e1.right, e2.right)
    return False


def restrict(e, size):
    '''Keep positions ``1..size`` on each side.'''
    if not 1 <= size <= e.size:
        raise ValueError('cannot restrict a size %d sequence to %d'
                         % (e.size, size))
    return ESeq(e.kind, e.left[:size], e.right[:size])


def left_part(e):
    if e.kind == 'R':
        raise ValueError('%s has no left part' % (e,))
    return ESeq('L', e.left)


def right_part(e):
    if e.kind == 'L':
        raise ValueError('%s has no right part' % (e,))
    return ESeq('R', (), e.right)


def fuse(e_left, e_right):
    '''Join a left and a right tagged sequence of equal size.'''
    if e_left.kind != 'L' or e_right.kind != 'R':
        raise ValueError('fuse takes an L and an R tagged sequence')
    if e_left.size != e_right.size:
        raise ValueError('cannot fuse sizes %d and %d'
                         % (e_left.size, e_right.size))
    return ESeq('F', e_left.left, e_right.right)


def initial_left(h):
    '''The bound ``((h,0),...,(1,0)|`` that starts every left chain.'''
    return ESeq('L', [(i, 0) for i in range(1, h + 1)])


def initial_right(h):
    '''The bound ``|(1,0),...,(h,0))`` that starts every right chain.'''
    return ESeq('R', (), [(i, 0) for i in range(1, h + 1)])


def _shift_number(indices, pairs):
    size = len(indices)
    if size > len(pairs):
        raise ValueError('sequence of size %d is longer than the bound'
                         % size)
    bound = sorted(u for u, _ in pairs[:size])
    for i0 in range(size + 1):
        if all(indices[i - 1] >= bound[i - i0 - 1]
               for i in range(i0 + 1, size + 1)):
            return i0
    return size


def lnum(e, j):
    '''The least shift ``i0`` such that the ``i``-th smallest row of ``j``
    dominates the ``(i - i0)``-th smallest row of ``e`` restricted to
    ``sz(j)`` positions.'''
    if not e.left or not j.us:
        raise ValueError('lnum needs left sides on both arguments')
    return _shift_number(j.us, e.left)


def rnum(e, j):
    '''The right-hand analogue of :func:`lnum`.'''
    if not e.right or not j.vs:
        raise ValueError('rnum needs right sides on both arguments')
    return _shift_number(j.vs, e.right)


_CONSTRAINED = {
    ('L', 'L'): ('left',),
    ('R', 'R'): ('right',),
    ('F', 'F'): ('left', 'right'),
    ('L', 'F'): ('left',),
    ('R', 'F'): ('right',),
    }


def _constrained_sides(e, j):
    try:
        return _CONSTRAINED[(e.kind, j.kind)]
    except KeyError:
        raise ValueError('a %s sequence cannot lie above a %s tagged '
                         'sequence' % (j.kind, e.kind))


def is_greater(j, e):
    '''True when some element of ``eclass(j)`` lies above ``e``, decided by
    the weight gap against the shift numbers.'''
    sides = _constrained_sides(e, j)
    if j.size > e.size:
        return False
    size = j.size
    gap = j.weight
    need = 0
    if 'left' in sides:
        gap -= sum(k for _, k in e.left[:size])
        need += lnum(e, j)
    if 'right' in sides:
        gap -= sum(k for _, k in e.right[:size])
        need += rnum(e, j)
    return gap >= need


def _matching(indices, floors):
    # maximum matching of indices to floors with index >= floor
    matched = 0
    floors = sorted(floors)
    for u in sorted(indices):
        if matched < len(floors) and u >= floors[matched]:
            matched += 1
    return matched


def _min_cost(slots, bounds, pools):
    cost = 0
    for side in ('left', 'right'):
        constrained = [bounds[s] for s in slots
                       if s[0] == side and bounds.get(s) is not None]
        if not constrained:
            continue
        cost += sum(f for _, f in constrained)
        cost += len(constrained) - _matching(pools[side],
                                             [e for e, _ in constrained])
    return cost


def _feasible(slots, bounds, pools, weight):
    if not slots:
        return weight == 0
    return _min_cost(slots, bounds, pools) <= weight


def largest_e_above(e, j):
    '''The largest element of ``eclass(j)`` above ``e``, or None.

    Slots are filled from the most significant word position down; each
    takes the largest pair for which the remaining slots can still be
    completed, judged by the exact minimum-weight bound.
    '''
    if not is_greater(j, e):
        return None
    sides = _constrained_sides(e, j)
    size = j.size
    slots = []
    if j.us:
        slots.extend(('left', pos) for pos in range(size, 0, -1))
    if j.vs:
        slots.extend(('right', pos) for pos in range(size, 0, -1))
    bounds = {}
    for side in sides:
        pairs = e.left if side == 'left' else e.right
        for pos in range(1, size + 1):
            bounds[(side, pos)] = pairs[pos - 1]
    pools = {'left': set(j.us), 'right': set(j.vs)}
    weight = j.weight
    chosen = {}
    for n, slot in enumerate(slots):
        rest = slots[n + 1:]
        side = slot[0]
        bound = bounds.get(slot)
        placed = False
        for k in range(weight, -1, -1):
            for u in sorted(pools[side], reverse=True):
                if bound is not None and (k, u) < _pair_key(bound):
                    continue
                pools[side].discard(u)
                if _feasible(rest, bounds, pools, weight - k):
                    chosen[slot] = (u, k)
                    weight -= k
                    placed = True
                    break
                pools[side].add(u)
            if placed:
                break
        if not placed:
            # unreachable when the criterion holds
            raise RuntimeError('no feasible pair for slot %s of %s above %s'
                               % (slot, j, e))
    left = [chosen[('left', pos)] for pos in range(1, size + 1)] \
        if j.us else ()
    right = [chosen[('right', pos)] for pos in range(1, size + 1)] \
        if j.vs else ()
    return ESeq(j.kind, left, right)


def min_w(e, j, s, side):
    '''The smallest sequence of size ``s`` built from rows (side ``L``),
    columns (side ``R``) or both (side ``F``) of ``j`` that is greater than
    the matching part of ``e``; None when there is none.

    Weights are searched up to ``wt(j)``, which bounds the answer whenever
    ``j`` itself is greater than ``e``.
    '''
    if side == 'L':
        bound = e if e.kind == 'L' else left_part(e)
        candidates = (JSeq('L', k, us)
                      for us in itertools.combinations(j.us, s)
                      for k in range(j.weight + 1))
    elif side == 'R':
        bound = e if e.kind == 'R' else right_part(e)
        candidates = (JSeq('R', k, (), vs)
                      for vs in itertools.combinations(j.vs, s)
                      for k in range(j.weight + 1))
    elif side == 'F':
        bound = e
        candidates = (JSeq('F', k, us, vs)
                      for us in itertools.combinations(j.us, s)
                      for vs in itertools.combinations(j.vs, s)
                      for k in range(j.weight + 1))
    else:
        raise ValueError("side must be 'L', 'R' or 'F', got %r" % (side,))
    found = [c for c in candidates if is_greater(c, bound)]
    if not found:
        return None
    return min(found, key=lambda c: c.sort_key())


class NotStandardError(ValueError):
    '''Raised when a word or tagged chain fails the standardness test;
    ``position`` is the 1-based position of the first failing factor.'''

    def __init__(self, message, position=None):
        super(NotStandardError, self).__init__(message)
        self.position = position


def build_chain(seqs, h):
    '''Walk sorted sequences building the chain of largest tagged
    representatives.

    Left sequences chain from :func:`initial_left`, right sequences from
    :func:`initial_right`; the first two-sided sequence is bounded by the
    fusion of the last left and right representatives (or the initial
    ones).  Returns ``(chain, None)`` on success and
    ``(partial_chain, position)`` at the first failure.
    '''
    chain = []
    last = {'L': None, 'R': None, 'F': None}
    for position, j in enumerate(seqs, 1):
        if j.kind == 'F':
            if j.size > h - 1:
                return chain, position
            bound = last['F']
            if bound is None:
                bound = fuse(last['L'] or initial_left(h),
                             last['R'] or initial_right(h))
        else:
            if j.size != h:
                return chain, position
            if j.kind == 'L' and (last['R'] or last['F']):
                return chain, position
            if j.kind == 'R' and last['F']:
                return chain, position
            bound = last[j.kind]
            if bound is None:
                bound = initial_left(h) if j.kind == 'L' else initial_right(h)
        e = largest_e_above(bound, j)
        if e is None:
            return chain, position
        chain.append(e)
        last[j.kind] = e
    return chain, None
