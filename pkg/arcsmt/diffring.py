# file arcsmt/diffring.py
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

"""Sparse integer polynomials with divided-power derivations.

Two rings share one implementation:

* :class:`Poly` lives in the concrete ring generated by the arc
  coordinates ``a[i,l]^(k)`` and ``b[j,l]^(k)`` (:class:`DiffVar`);
* :class:`PresPoly` lives in the presentation ring generated by the
  symbols ``X[i,j]^(k)``, ``Y[u1,...,uh]^(k)`` and ``Z[v1,...,vh]^(k)``
  (:class:`PresVar`), graded by :meth:`PresVar.degree`.

Every variable carries a derivative order ``k``; the normalized
derivation of order ``n`` sends ``x^(k)`` to ``binomial(k+n, n) x^(k+n)``
and is extended to products by the Leibniz rule, so coefficients stay in
the integers throughout.

The module also builds the weight-0 determinants that generate the
invariant ring, and their derivatives.
"""

import itertools
import logging
from collections import namedtuple
from functools import lru_cache

from arcsmt.utils.combinat import binomial, compositions, permutation_sign

__all__ = [
    'Ambient', 'DiffVar', 'Monomial', 'Poly', 'PresVar', 'PresPoly',
    'dbar', 'det_a', 'det_b', 'det_x_minor', 'x_entry',
    'dbar_det_expansion', 'pres_det_minor',
    ]

logger = logging.getLogger(__name__)

FAMILIES = ('a', 'b')


class Ambient(namedtuple('Ambient', ['p', 'q', 'h'])):
    '''The ambient sizes: ``p`` rows of ``a``, ``q`` rows of ``b`` and
    ``h`` columns (the rank of the special linear group).'''
    __slots__ = ()

    def __new__(cls, p, q, h):
        for name, value in (('p', p), ('q', q), ('h', h)):
            if not isinstance(value, int) or value < 1:
                raise ValueError('%s must be a positive integer, got %r'
                                 % (name, value))
        return super(Ambient, cls).__new__(cls, p, q, h)

    def rows(self, family):
        return self.p if family == 'a' else self.q

    def check_rows(self, family, rows, distinct=True):
        '''Reject row indices outside ``1..p`` (family ``a``) or ``1..q``
        (family ``b``), and repeated indices unless ``distinct`` is off.'''
        bound = self.rows(family)
        for row in rows:
            if not 1 <= row <= bound:
                raise ValueError('row index %s out of range 1..%d for %s'
                                 % (row, bound, family))
        if distinct and len(set(rows)) != len(rows):
            raise ValueError('repeated row index in %s' % (list(rows),))

    def check_var(self, var):
        '''Reject a :class:`DiffVar` whose row or column is out of range.'''
        if not 1 <= var.col <= self.h:
            raise ValueError('column %d out of range 1..%d'
                             % (var.col, self.h))
        self.check_rows(var.family, (var.row,))


class DiffVar(namedtuple('DiffVar', ['family', 'row', 'col', 'order'])):
    '''The arc coordinate ``a[row,col]^(order)`` or ``b[row,col]^(order)``.'''
    __slots__ = ()

    def __new__(cls, family, row, col, order=0):
        if family not in FAMILIES:
            raise ValueError("family must be 'a' or 'b', got %r" % (family,))
        if row < 1 or col < 1 or order < 0:
            raise ValueError('invalid variable %s[%s,%s]^(%s)'
                             % (family, row, col, order))
        return super(DiffVar, cls).__new__(cls, family, row, col, order)

    def sort_key(self):
        return (self.family, self.col, self.order, self.row)

    def shift(self, n):
        return self._replace(order=self.order + n)

    def __str__(self):
        return '%s[%d,%d]^(%d)' % (self.family, self.row, self.col, self.order)


class PresVar(namedtuple('PresVar', ['kind', 'left', 'right', 'order'])):
    '''A generator of the presentation ring.

    ``X`` symbols carry ``left=(i,)`` and ``right=(j,)``; ``Y`` symbols
    carry the strictly increasing row list in ``left``; ``Z`` symbols carry
    it in ``right``.
    '''
    __slots__ = ()

    def __new__(cls, kind, left, right, order=0):
        left, right = tuple(left), tuple(right)
        if kind == 'X':
            if len(left) != 1 or len(right) != 1:
                raise ValueError('X takes one row on each side')
        elif kind == 'Y':
            if right or not left:
                raise ValueError('Y takes a nonempty left list only')
        elif kind == 'Z':
            if left or not right:
                raise ValueError('Z takes a nonempty right list only')
        else:
            raise ValueError('unknown presentation symbol %r' % (kind,))
        for side in (left, right):
            if any(x >= y for x, y in zip(side, side[1:])):
                raise ValueError('index list %s is not strictly increasing'
                                 % (list(side),))
        if order < 0:
            raise ValueError('negative order %d' % order)
        return super(PresVar, cls).__new__(cls, kind, left, right, order)

    @classmethod
    def x(cls, i, j, order=0):
        return cls('X', (i,), (j,), order)

    @classmethod
    def y(cls, us, order=0):
        return cls('Y', us, (), order)

    @classmethod
    def z(cls, vs, order=0):
        return cls('Z', (), vs, order)

    def degree(self):
        return (len(self.left), len(self.right), self.order)

    def sort_key(self):
        return (self.kind, self.left, self.right, self.order)

    def shift(self, n):
        return self._replace(order=self.order + n)

    def __str__(self):
        if self.kind == 'X':
            idx = '%d,%d' % (self.left[0], self.right[0])
        else:
            idx = ','.join(str(i) for i in (self.left or self.right))
        return '%s[%s]^(%d)' % (self.kind, idx, self.order)


class Monomial(tuple):
    '''A product of variables, stored as ``(variable, exponent)`` pairs
    sorted by the variables' ``sort_key``.  The empty monomial is 1.'''

    def __new__(cls, factors=()):
        powers = {}
        for var, exp in factors:
            powers[var] = powers.get(var, 0) + exp
        items = sorted(((v, e) for v, e in powers.items() if e),
                       key=lambda item: item[0].sort_key())
        return tuple.__new__(cls, items)

    @classmethod
    def of(cls, *variables):
        return cls((v, 1) for v in variables)

    def __mul__(self, other):
        return Monomial(tuple(self) + tuple(other))

    def variables(self):
        '''Every variable repeated by its exponent, in sorted order.'''
        return [var for var, exp in self for _ in range(exp)]

    def degree(self):
        return sum(exp for _, exp in self)

    def weight(self):
        return sum(var.order * exp for var, exp in self)

    def sort_key(self):
        return tuple((var.sort_key(), exp) for var, exp in self)

    def __str__(self):
        return '*'.join(str(var) + ('^%d' % exp if exp > 1 else '')
                        for var, exp in self)

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self or '1')


@lru_cache(maxsize=None)
def _dbar_monomial(mono, n):
    '''The normalized derivative of order ``n`` of a monomial, as a tuple
    of ``(monomial, coefficient)`` pairs.'''
    if n == 0:
        return ((mono, 1),)
    if not mono:
        return ()
    var, exp = mono[0]
    rest = Monomial(((var, exp - 1),) + tuple(mono[1:]))
    result = {}
    for i in range(n + 1):
        head = Monomial.of(var.shift(i))
        c_head = binomial(var.order + i, i)
        for tail, c_tail in _dbar_monomial(rest, n - i):
            key = head * tail
            result[key] = result.get(key, 0) + c_head * c_tail
    return tuple((m, c) for m, c in result.items() if c)


class SparsePoly(object):
    '''Integer polynomial stored as a map from :class:`Monomial` to a
    nonzero coefficient.  Instances are treated as immutable.'''

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, coeff in dict(terms).items():
                self._add_term(Monomial(mono), coeff)

    def _add_term(self, mono, coeff):
        total = self.terms.get(mono, 0) + coeff
        if total:
            self.terms[mono] = total
        else:
            self.terms.pop(mono, None)

    @classmethod
    def _from_dict(cls, terms):
        poly = cls()
        poly.terms = dict((m, c) for m, c in terms.items() if c)
        return poly

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def constant(cls, c):
        return cls._from_dict({Monomial(): c})

    @classmethod
    def from_var(cls, var, coeff=1):
        return cls._from_dict({Monomial.of(var): coeff})

    @classmethod
    def from_monomial(cls, mono, coeff=1):
        return cls._from_dict({Monomial(mono): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        '''Terms in canonical order.'''
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, mono):
        return self.terms.get(Monomial(mono), 0)

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if type(other) is not type(self):
                raise TypeError('cannot combine %s with %s'
                                % (type(self).__name__, type(other).__name__))
            return other
        if isinstance(other, int):
            return self.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self.terms)
        for mono, coeff in other.terms.items():
            result[mono] = result.get(mono, 0) + coeff
        return self._from_dict(result)

    __radd__ = __add__

    def __neg__(self):
        return self._from_dict(dict((m, -c) for m, c in self.terms.items()))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return self.zero()
        return self._from_dict(dict((m, c * v) for m, v in self.terms.items()))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = m1 * m2
                result[key] = result.get(key, 0) + c1 * c2
        return self._from_dict(result)

    __rmul__ = __mul__

    def __pow__(self, exp):
        result = self.one()
        for _ in range(exp):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.constant(other)
        if not isinstance(other, SparsePoly) or type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def dbar(self, n):
        '''The normalized derivative of order ``n``.'''
        if n < 0:
            raise ValueError('derivative order must be non-negative, got %d'
                             % n)
        result = {}
        for mono, coeff in self.terms.items():
            for dmono, dcoeff in _dbar_monomial(mono, n):
                result[dmono] = result.get(dmono, 0) + coeff * dcoeff
        return self._from_dict(result)

    def substitute(self, image, target):
        '''Map every variable through ``image`` (a callable returning an
        element of the ``target`` class) and expand.'''
        cache = {}
        result = target.zero()
        for mono, coeff in self.terms.items():
            term = target.constant(coeff)
            for var, exp in mono:
                if var not in cache:
                    cache[var] = image(var)
                term = term * cache[var] ** exp
            result = result + term
        return result

    def variables(self):
        return set(var for mono in self.terms for var, _ in mono)

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for mono, coeff in self.items():
            if mono:
                parts.append('%d*%s' % (coeff, mono))
            else:
                parts.append('%d' % coeff)
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self)


class Poly(SparsePoly):
    '''An element of the concrete ring in the ``a`` and ``b`` arc
    coordinates.'''

    @classmethod
    def var(cls, family, row, col, order=0):
        return cls.from_var(DiffVar(family, row, col, order))

    def to_json(self):
        return [{'coeff': str(coeff),
                 'vars': [[v.family, v.row, v.col, v.order, exp]
                          for v, exp in mono]}
                for mono, coeff in self.items()]

    @classmethod
    def from_json(cls, data):
        poly = cls()
        for term in data:
            mono = Monomial((DiffVar(f, r, c, k), e)
                            for f, r, c, k, e in term['vars'])
            poly._add_term(mono, int(term['coeff']))
        return poly


class PresPoly(SparsePoly):
    '''An element of the presentation ring.'''

    _degree = None

    @classmethod
    def x(cls, i, j, order=0):
        return cls.from_var(PresVar.x(i, j, order))

    @classmethod
    def y(cls, us, order=0):
        return cls.from_var(PresVar.y(us, order))

    @classmethod
    def z(cls, vs, order=0):
        return cls.from_var(PresVar.z(vs, order))

    @staticmethod
    def monomial_degree(mono):
        degree = (0, 0, 0)
        for var, exp in mono:
            d = var.degree()
            degree = tuple(x + exp * y for x, y in zip(degree, d))
        return degree

    def degrees(self):
        return set(self.monomial_degree(m) for m in self.terms)

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        '''The tri-degree of a nonzero homogeneous element.'''
        if self._degree is None:
            degrees = self.degrees()
            if len(degrees) != 1:
                raise ValueError('no single tri-degree: %d degrees present'
                                 % len(degrees))
            self._degree = degrees.pop()
        return self._degree


def dbar(f, n):
    '''The normalized derivative of order ``n`` of a :class:`Poly` or
    :class:`PresPoly`.'''
    return f.dbar(n)


def det_poly(matrix, target):
    '''Leibniz determinant of a square matrix of polynomials.'''
    size = len(matrix)
    result = target.zero()
    for perm in itertools.permutations(range(size)):
        term = target.constant(permutation_sign(perm))
        for row, col in enumerate(perm):
            term = term * matrix[row][col]
            if term.is_zero():
                break
        result = result + term
    return result


def _det_family(family, rows, ambient):
    rows = list(rows)
    if len(rows) != ambient.h:
        raise ValueError('expected %d indices, got %s' % (ambient.h, rows))
    ambient.check_rows(family, rows)
    matrix = [[Poly.var(family, row, col) for col in range(1, ambient.h + 1)]
              for row in rows]
    return det_poly(matrix, Poly)


def det_a(us, ambient):
    '''The weight-0 determinant ``Y`` on the ``a`` rows ``us``; the rows
    are taken in the given order, so a transposition flips the sign.'''
    return _det_family('a', us, ambient)


def det_b(vs, ambient):
    '''The weight-0 determinant ``Z`` on the ``b`` rows ``vs``.'''
    return _det_family('b', vs, ambient)


@lru_cache(maxsize=None)
def x_entry(u, v, k, h):
    '''``dbar^k`` of the bilinear invariant ``sum_l a[u,l] b[v,l]``.'''
    result = Poly()
    for col in range(1, h + 1):
        for j in range(k + 1):
            result._add_term(Monomial.of(DiffVar('a', u, col, j),
                                         DiffVar('b', v, col, k - j)), 1)
    return result


def _check_minor(us, vs, ambient):
    us, vs = list(us), list(vs)
    if len(us) != len(vs) or not 1 <= len(us) <= ambient.h:
        raise ValueError('minor index lists must have equal length 1..%d'
                         % ambient.h)
    ambient.check_rows('a', us)
    ambient.check_rows('b', vs)
    return us, vs


def det_x_minor(us, vs, ambient):
    '''The weight-0 minor of the bilinear matrix on rows ``us`` and
    columns ``vs``, expanded in the concrete ring.'''
    us, vs = _check_minor(us, vs, ambient)
    matrix = [[x_entry(u, v, 0, ambient.h) for v in vs] for u in us]
    return det_poly(matrix, Poly)


def dbar_det_expansion(us, vs, n, ambient):
    '''The closed-form ``dbar^n`` of a minor: a sum over compositions of
    ``n`` across the rows and over permutations of the columns.'''
    us, vs = _check_minor(us, vs, ambient)
    size = len(us)
    result = Poly()
    for orders in compositions(n, size):
        for perm in itertools.permutations(range(size)):
            term = Poly.constant(permutation_sign(perm))
            for r, c in enumerate(perm):
                term = term * x_entry(us[r], vs[c], orders[r], ambient.h)
            result = result + term
    return result


def pres_det_minor(us, vs, n=0):
    '''``dbar^n`` of the minor of ``X^(0)`` on rows ``us`` and columns
    ``vs``, in the presentation ring.'''
    matrix = [[PresPoly.x(u, v) for v in vs] for u in us]
    return det_poly(matrix, PresPoly).dbar(n)
