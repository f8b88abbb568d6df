# file arcsmt/action.py
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

"""Infinitesimal invariance under the truncated current algebra.

An element ``xi * t^m`` acts on the concrete ring by the derivation::

    D(a[i,l]^(k)) =  sum_l' xi[l',l] a[i,l']^(k-m)
    D(b[j,l]^(k)) = -sum_l' xi[l,l'] b[j,l']^(k-m)

with both images zero when ``k < m``.  The ``a`` rows transform by right
multiplication and the ``b`` rows by the inverse transpose, so every
generator of the invariant subring is annihilated when ``xi`` has trace
zero.
"""

import logging
from collections import namedtuple

from arcsmt.diffring import DiffVar, Monomial, Poly
from arcsmt.smt import generators

__all__ = ['LieElem', 'Verdict', 'lie_basis', 'infinitesimal_action',
           'check_invariance', 'report']

logger = logging.getLogger(__name__)


class LieElem(namedtuple('LieElem', ['xi', 'm'])):
    '''``xi * t^m`` for an integer matrix ``xi``.  Trace zero is required
    unless ``traceless=False`` is passed.'''
    __slots__ = ()

    def __new__(cls, xi, m=0, traceless=True):
        xi = tuple(tuple(row) for row in xi)
        size = len(xi)
        if not size or any(len(row) != size for row in xi):
            raise ValueError('xi must be a nonempty square matrix')
        if m < 0:
            raise ValueError('t-power must be non-negative, got %d' % m)
        if traceless and sum(xi[r][r] for r in range(size)):
            raise ValueError('xi must have trace zero')
        return super(LieElem, cls).__new__(cls, xi, m)

    @classmethod
    def unit(cls, h, r, s, m=0, traceless=True):
        '''The matrix unit ``E_rs`` (1-based).'''
        xi = [[int(i == r - 1 and j == s - 1) for j in range(h)]
              for i in range(h)]
        return cls(xi, m, traceless)

    @property
    def h(self):
        return len(self.xi)

    def label(self):
        '''A short name: ``E12`` for matrix units, ``H1`` for diagonal
        differences, otherwise the matrix rows.'''
        entries = dict(((r, c), v) for r, row in enumerate(self.xi, 1)
                       for c, v in enumerate(row, 1) if v)
        if len(entries) == 1:
            (r, c), v = entries.popitem()
            if v == 1:
                return 'E%d%d' % (r, c)
        if len(entries) == 2:
            keys = sorted(entries)
            (r, _), (s, _) = keys
            if keys == [(r, r), (r + 1, r + 1)] and \
                    entries[keys[0]] == 1 and entries[keys[1]] == -1:
                return 'H%d' % r
        return str([list(row) for row in self.xi])


Verdict = namedtuple('Verdict', ['generator', 'element', 'zero'])


def lie_basis(h, m_max=0):
    '''``E_rs`` for ``r != s`` and ``H_r = E_rr - E_(r+1)(r+1)``, for each
    t-power ``0..m_max``.'''
    if h < 1:
        raise ValueError('h must be positive, got %d' % h)
    basis = []
    for m in range(m_max + 1):
        for r in range(1, h + 1):
            for s in range(1, h + 1):
                if r != s:
                    basis.append(LieElem.unit(h, r, s, m))
        for r in range(1, h):
            xi = [[0] * h for _ in range(h)]
            xi[r - 1][r - 1] = 1
            xi[r][r] = -1
            basis.append(LieElem(xi, m))
    return basis


def _act_var(g, var):
    # the image of one variable as a list of (monomial, coeff)
    if var.order < g.m:
        return []
    order = var.order - g.m
    image = []
    for other in range(1, g.h + 1):
        if var.family == 'a':
            coeff = g.xi[other - 1][var.col - 1]
        else:
            coeff = -g.xi[var.col - 1][other - 1]
        if coeff:
            image.append((Monomial.of(DiffVar(var.family, var.row, other,
                                              order)), coeff))
    return image


def infinitesimal_action(g, f):
    '''Apply the derivation of ``g`` to a concrete ring element.'''
    result = {}
    for mono, coeff in f.terms.items():
        for idx, (var, exp) in enumerate(mono):
            image = _act_var(g, var)
            if not image:
                continue
            rest = Monomial(mono[:idx] + ((var, exp - 1),) + mono[idx + 1:])
            for part, c in image:
                key = rest * part
                result[key] = result.get(key, 0) + coeff * exp * c
    return Poly._from_dict(result)


def check_invariance(ambient, weight_max, m_max):
    '''Apply every basis element with t-power at most ``m_max`` to every
    generator of weight at most ``weight_max``; one :class:`Verdict` per
    pair.'''
    if weight_max < 0 or m_max < 0:
        raise ValueError('bounds must be non-negative')
    basis = lie_basis(ambient.h, m_max)
    verdicts = []
    for var, poly in generators(ambient, weight_max):
        for g in basis:
            zero = infinitesimal_action(g, poly).is_zero()
            if not zero:
                logger.warning('%s is not annihilated by %s t^%d'
                               % (var, g.label(), g.m))
            verdicts.append(Verdict(var, g, zero))
    logger.info('checked %d generator/algebra pairs' % len(verdicts))
    return verdicts


def report(verdicts):
    '''JSON-ready records for a list of verdicts.'''
    return [{'generator': str(v.generator), 'xi': v.element.label(),
             'm': v.element.m, 'zero': v.zero} for v in verdicts]
