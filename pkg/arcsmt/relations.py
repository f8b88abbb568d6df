# file arcsmt/relations.py
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

"""Relations among the generators, their verification in the concrete
ring, and exact linear algebra in graded components of the presentation
ring.

Every relation is built as a :class:`~arcsmt.diffring.PresPoly` with
integer coefficients.  Alternating sums over all permutations of a pool
of indices are taken over unordered splits of the pool instead, so no
division ever happens.

Index data per family (``RelationInstance.indices``):

``DetYZ``
    ``(us, vs)``, both of length ``h``.
``XY`` / ``XZ``
    ``(us, (v,))`` with ``h + 1`` rows / ``((u,), vs)`` with ``h + 1``
    columns.
``YYShuffle`` / ``ZZShuffle``
    ``(fixed, pool)``: ``h - i`` fixed indices and a pool of ``h + i``.
``BasicPlus4`` / ``BasicPlus5``
    ``(fixed, pool, other)``: the two-sided minor takes the fixed indices
    and ``i`` pooled ones on one side and ``other`` on the opposite side;
    the one-sided minor takes the remaining ``h`` pooled indices.
``L-Full`` / ``R-Full``
    ``(fixed, pool, fixed_minor, other)``.
``L-L`` / ``R-R``
    ``(fixed, pool, fixed_second)``.
"""

import itertools
import logging
from collections import namedtuple

from arcsmt import linalg
from arcsmt.diffring import Monomial, PresPoly, PresVar, pres_det_minor
from arcsmt.smt import q_eval_pres
from arcsmt.utils.combinat import binomial, signed_splits, sort_with_sign

__all__ = [
    'FAMILIES', 'CLASSICAL_FAMILIES', 'LEMMA_FAMILIES', 'RelationInstance',
    'GradedComponent', 'gen_relation', 'straightening_coeffs',
    'verify_kernel', 'corrupt', 'iter_instances', 'graded_basis',
    'component_span_rank', 'membership', 'shuffle_relations',
    'nilradical_witness', 'nilradical_check',
    ]

logger = logging.getLogger(__name__)

CLASSICAL_FAMILIES = ('DetYZ', 'XY', 'XZ', 'YYShuffle', 'ZZShuffle')
LEMMA_FAMILIES = ('BasicPlus4', 'BasicPlus5', 'L-Full', 'R-Full', 'L-L',
                  'R-R')
FAMILIES = CLASSICAL_FAMILIES + LEMMA_FAMILIES

# families whose index lists are pairwise disjoint and fill 2h indices
# on one side
WIDE_FAMILIES = {'YYShuffle': 'a', 'ZZShuffle': 'b', 'L-L': 'a', 'R-R': 'b'}


class RelationInstance(namedtuple('RelationInstance',
                                  ['family', 'indices', 'n', 'l', 'window'])):
    '''One member of a relation family.

    ``n`` is the derivative order (the total order ``m`` for the
    ``L-Full``, ``R-Full``, ``L-L`` and ``R-R`` families), ``l`` the
    shuffle depth, and ``window`` a ``(k0, values)`` pair fixing the
    coefficients ``a_k0 .. a_(k0+l0)`` of the four coefficient-window
    families.
    '''
    __slots__ = ()

    def __new__(cls, family, indices, n=0, l=0, window=None):
        if family not in FAMILIES:
            raise ValueError('unknown relation family %r' % (family,))
        if n < 0 or l < 0:
            raise ValueError('negative order in %s instance' % family)
        indices = tuple(tuple(side) for side in indices)
        if window is not None:
            window = (window[0], tuple(window[1]))
        return super(RelationInstance, cls).__new__(cls, family, indices,
                                                    n, l, window)

    def to_json(self):
        data = {'family': self.family,
                'indices': [list(side) for side in self.indices],
                'n': self.n, 'l': self.l}
        if self.window is not None:
            data['window'] = {'k0': self.window[0],
                              'values': [str(v) for v in self.window[1]]}
        return data

    def __str__(self):
        return '%s%s n=%d l=%d' % (self.family, list(self.indices),
                                   self.n, self.l)


GradedComponent = namedtuple('GradedComponent', ['degree', 'monomials'])
GradedComponent.__doc__ = '''The monomials of one tri-degree
``(a_rows, b_rows, weight)`` of the presentation ring, in canonical
order.'''


def _signed(kind, rows, order):
    # a one-sided generator on rows in the given order; 0 on a repeat
    sign, rows = sort_with_sign(rows)
    if not sign:
        return PresPoly()
    var = PresVar.y(rows, order) if kind == 'Y' else PresVar.z(rows, order)
    return PresPoly.from_var(var, sign)


def _minor(rows, cols, order, side):
    # two-sided minor; ``rows`` belong to ``side`` ('a' rows or 'b' columns)
    if side == 'a':
        return pres_det_minor(rows, cols, order)
    return pres_det_minor(cols, rows, order)


def _check(ambient, family, *lists):
    for rows in lists:
        ambient.check_rows(family, rows, distinct=False)


def _det_yz(inst, ambient):
    us, vs = inst.indices
    h = ambient.h
    if len(us) != h or len(vs) != h:
        raise ValueError('DetYZ takes %d rows and %d columns' % (h, h))
    ambient.check_rows('a', us)
    ambient.check_rows('b', vs)
    us, vs = tuple(sorted(us)), tuple(sorted(vs))
    result = pres_det_minor(us, vs, inst.n)
    for k in range(inst.n + 1):
        result = result - PresPoly.y(us, k) * PresPoly.z(vs, inst.n - k)
    return result


def _plucker(inst, ambient, side):
    h = ambient.h
    if side == 'a':
        pool, (other,) = inst.indices
    else:
        (other,), pool = inst.indices
    if len(pool) != h + 1:
        raise ValueError('%s takes %d pooled indices' % (inst.family, h + 1))
    ambient.check_rows(side, pool)
    ambient.check_rows('b' if side == 'a' else 'a', (other,))
    pool = tuple(sorted(pool))
    kind = 'Y' if side == 'a' else 'Z'
    result = PresPoly()
    for k in range(inst.n + 1):
        for i, w in enumerate(pool):
            rest = pool[:i] + pool[i + 1:]
            x = PresPoly.x(w, other, k) if side == 'a' else \
                PresPoly.x(other, w, k)
            term = x * _signed(kind, rest, inst.n - k)
            result = result + (term if i % 2 == 0 else -term)
    return result


def _shuffle(inst, ambient, side):
    h = ambient.h
    fixed, pool = inst.indices
    i = len(pool) - h
    if not 0 < i <= h or len(fixed) != h - i:
        raise ValueError('%s takes h - i fixed and h + i pooled indices, '
                         'got %d and %d' % (inst.family, len(fixed),
                                            len(pool)))
    if not inst.l < i:
        raise ValueError('shuffle depth %d must be below %d' % (inst.l, i))
    if inst.n < inst.l:
        raise ValueError('derivative order %d is below the shuffle depth %d'
                         % (inst.n, inst.l))
    _check(ambient, side, fixed, pool)
    kind = 'Y' if side == 'a' else 'Z'
    result = PresPoly()
    for sign, chosen, rest in signed_splits(pool, i):
        for k in range(inst.l, inst.n + 1):
            c = binomial(k, inst.l)
            term = _signed(kind, fixed + chosen, inst.n - k) * \
                _signed(kind, rest, k)
            result = result + term.scale(sign * c)
    return result


def _basic_plus(inst, ambient, side):
    h = ambient.h
    fixed, pool, other = inst.indices
    i = len(pool) - h
    size = len(fixed) + i
    if i <= 0 or size != len(other) or size > h:
        raise ValueError('%s index data does not fit h=%d' % (inst.family, h))
    if not inst.l < i:
        raise ValueError('order %d must be below %d' % (inst.l, i))
    opposite = 'b' if side == 'a' else 'a'
    _check(ambient, side, fixed, pool)
    ambient.check_rows(opposite, other)
    kind = 'Y' if side == 'a' else 'Z'
    inner = PresPoly()
    for sign, chosen, rest in signed_splits(pool, i):
        term = _minor(fixed + chosen, other, inst.l, side) * \
            _signed(kind, rest, 0)
        inner = inner + term.scale(sign)
    return inner.dbar(inst.n)


def _window_coeffs(inst, l0):
    if inst.window is None:
        raise ValueError('%s needs a coefficient window' % inst.family)
    k0, values = inst.window
    if len(values) != l0 + 1:
        raise ValueError('%s needs %d window values, got %d'
                         % (inst.family, l0 + 1, len(values)))
    return straightening_coeffs(k0, l0, inst.n, values)


def _lemma_full(inst, ambient, side):
    h = ambient.h
    fixed, pool, fixed_minor, other = inst.indices
    i1 = h - len(fixed)
    i2 = len(pool) - i1
    size = len(other)
    if i1 < 0 or i2 < 0 or len(fixed_minor) + i2 != size or size > h:
        raise ValueError('%s index data does not fit h=%d'
                         % (inst.family, h))
    l0 = i1 + i2 - h - 1
    if l0 < 0:
        raise ValueError('%s needs i1 + i2 > h' % inst.family)
    opposite = 'b' if side == 'a' else 'a'
    _check(ambient, side, fixed, pool, fixed_minor)
    ambient.check_rows(opposite, other)
    coeffs = _window_coeffs(inst, l0)
    kind = 'Y' if side == 'a' else 'Z'
    m = inst.n
    result = PresPoly()
    for sign, chosen, rest in signed_splits(pool, i1):
        for k, a in enumerate(coeffs):
            if not a:
                continue
            term = _signed(kind, fixed + chosen, m - k) * \
                _minor(fixed_minor + rest, other, k, side)
            result = result + term.scale(sign * a)
    return result


def _lemma_pair(inst, ambient, side):
    h = ambient.h
    fixed, pool, fixed_second = inst.indices
    i1 = h - len(fixed)
    i2 = len(pool) - i1
    if i1 < 0 or i2 < 0 or len(fixed_second) + i2 != h:
        raise ValueError('%s index data does not fit h=%d'
                         % (inst.family, h))
    l0 = i1 + i2 - h - 1
    if l0 < 0:
        raise ValueError('%s needs i1 + i2 > h' % inst.family)
    _check(ambient, side, fixed, pool, fixed_second)
    coeffs = _window_coeffs(inst, l0)
    kind = 'Y' if side == 'a' else 'Z'
    m = inst.n
    result = PresPoly()
    for sign, chosen, rest in signed_splits(pool, i1):
        for k, a in enumerate(coeffs):
            if not a:
                continue
            term = _signed(kind, fixed + chosen, m - k) * \
                _signed(kind, fixed_second + rest, k)
            result = result + term.scale(sign * a)
    return result


_BUILDERS = {
    'DetYZ': _det_yz,
    'XY': lambda inst, amb: _plucker(inst, amb, 'a'),
    'XZ': lambda inst, amb: _plucker(inst, amb, 'b'),
    'YYShuffle': lambda inst, amb: _shuffle(inst, amb, 'a'),
    'ZZShuffle': lambda inst, amb: _shuffle(inst, amb, 'b'),
    'BasicPlus4': lambda inst, amb: _basic_plus(inst, amb, 'a'),
    'BasicPlus5': lambda inst, amb: _basic_plus(inst, amb, 'b'),
    'L-Full': lambda inst, amb: _lemma_full(inst, amb, 'a'),
    'R-Full': lambda inst, amb: _lemma_full(inst, amb, 'b'),
    'L-L': lambda inst, amb: _lemma_pair(inst, amb, 'a'),
    'R-R': lambda inst, amb: _lemma_pair(inst, amb, 'b'),
    }


def gen_relation(inst, ambient):
    '''The relation named by ``inst`` as an integer
    :class:`~arcsmt.diffring.PresPoly`.'''
    return _BUILDERS[inst.family](inst, ambient)


def straightening_coeffs(k0, l0, m, given):
    '''Extend the coefficients ``a_k0 .. a_(k0+l0)`` to ``a_0 .. a_m``.

    The binomial matrix ``c[j][i] = C(k0 + j, i)`` has determinant 1; with
    ``b`` its integer inverse, ``a_k = sum C(k, l) b[l][j] a_(k0+j)``.
    '''
    given = list(given)
    if not 0 <= k0 <= k0 + l0 <= m:
        raise ValueError('need 0 <= k0 <= k0 + l0 <= m, got k0=%d l0=%d '
                         'm=%d' % (k0, l0, m))
    if len(given) != l0 + 1:
        raise ValueError('expected %d given coefficients' % (l0 + 1))
    matrix = [[binomial(k0 + j, i) for i in range(l0 + 1)]
              for j in range(l0 + 1)]
    inverse = linalg.integer_inverse(matrix)
    weights = [sum(inverse[l][j] * given[j] for j in range(l0 + 1))
               for l in range(l0 + 1)]
    return [sum(binomial(k, l) * weights[l] for l in range(l0 + 1))
            for k in range(m + 1)]


def verify_kernel(rel, ambient):
    '''True when ``rel`` evaluates to zero in the concrete ring.'''
    if isinstance(rel, RelationInstance):
        rel = gen_relation(rel, ambient)
    return q_eval_pres(rel, ambient).is_zero()


def corrupt(rel):
    '''Flip the sign of the first term of ``rel`` in canonical order.'''
    items = rel.items()
    if not items:
        return rel
    mono, coeff = items[0]
    return rel - PresPoly.from_monomial(mono, 2 * coeff)


def _disjoint(pool_size, extra_size, bound):
    # a pool and disjoint extra indices, both ascending
    indices = range(1, bound + 1)
    for pool in itertools.combinations(indices, pool_size):
        rest = [x for x in indices if x not in pool]
        for extra in itertools.combinations(rest, extra_size):
            yield extra, pool


def _windows(l0, n_max):
    for m in range(l0, n_max + 1):
        for k0 in sorted(set([0, m - l0])):
            yield m, (k0, (1,) + (0,) * l0)


def iter_instances(family, ambient, n_max):
    '''Every instance of ``family`` on the ambient indices with derivative
    order at most ``n_max``, in a fixed order.

    Fixed, pooled and spare index lists are kept pairwise disjoint, so the
    shuffle families and ``L-L`` / ``R-R`` need ``2h`` indices on their
    side (``p >= 2h`` or ``q >= 2h``); on a smaller ambient they yield
    nothing and a warning is logged.
    '''
    h, p, q = ambient.h, ambient.p, ambient.q
    if family not in FAMILIES:
        raise ValueError('unknown relation family %r' % (family,))
    bound = {'a': p, 'b': q}
    if family in WIDE_FAMILIES and bound[WIDE_FAMILIES[family]] < 2 * h:
        logger.warning('%s needs %d distinct %s indices, %s has %d; no '
                       'instances' % (family, 2 * h, WIDE_FAMILIES[family],
                                       ambient, bound[WIDE_FAMILIES[family]]))
        return
    if family == 'DetYZ':
        for us in itertools.combinations(range(1, p + 1), h):
            for vs in itertools.combinations(range(1, q + 1), h):
                for n in range(n_max + 1):
                    yield RelationInstance(family, (us, vs), n)
    elif family in ('XY', 'XZ'):
        side, opposite = ('a', 'b') if family == 'XY' else ('b', 'a')
        for pool in itertools.combinations(range(1, bound[side] + 1), h + 1):
            for other in range(1, bound[opposite] + 1):
                indices = (pool, (other,)) if side == 'a' else \
                    ((other,), pool)
                for n in range(n_max + 1):
                    yield RelationInstance(family, indices, n)
    elif family in ('YYShuffle', 'ZZShuffle'):
        side = 'a' if family == 'YYShuffle' else 'b'
        for i in range(1, h + 1):
            for fixed, pool in _disjoint(h + i, h - i, bound[side]):
                for l in range(i):
                    for n in range(l, n_max + 1):
                        yield RelationInstance(family, (fixed, pool), n, l)
    elif family in ('BasicPlus4', 'BasicPlus5'):
        side, opposite = ('a', 'b') if family == 'BasicPlus4' else \
            ('b', 'a')
        for i in range(1, h + 1):
            for size in range(i, h + 1):
                for fixed, pool in _disjoint(h + i, size - i, bound[side]):
                    for other in itertools.combinations(
                            range(1, bound[opposite] + 1), size):
                        for l in range(i):
                            for n in range(n_max + 1):
                                yield RelationInstance(
                                    family, (fixed, pool, other), n, l)
    elif family in ('L-Full', 'R-Full'):
        side, opposite = ('a', 'b') if family == 'L-Full' else ('b', 'a')
        for size in range(1, h + 1):
            for i1 in range(h + 1):
                for i2 in range(size + 1):
                    l0 = i1 + i2 - h - 1
                    if l0 < 0:
                        continue
                    for fixed, pool in _disjoint(i1 + i2, h - i1,
                                                 bound[side]):
                        used = set(fixed) | set(pool)
                        spare = [x for x in range(1, bound[side] + 1)
                                 if x not in used]
                        for fixed_minor in itertools.combinations(
                                spare, size - i2):
                            for other in itertools.combinations(
                                    range(1, bound[opposite] + 1), size):
                                for m, window in _windows(l0, n_max):
                                    yield RelationInstance(
                                        family,
                                        (fixed, pool, fixed_minor, other),
                                        m, 0, window)
    else:
        side = 'a' if family == 'L-L' else 'b'
        for i1 in range(h + 1):
            for i2 in range(h + 1):
                l0 = i1 + i2 - h - 1
                if l0 < 0:
                    continue
                for fixed, pool in _disjoint(i1 + i2, h - i1, bound[side]):
                    used = set(fixed) | set(pool)
                    spare = [x for x in range(1, bound[side] + 1)
                             if x not in used]
                    for second in itertools.combinations(spare, h - i2):
                        for m, window in _windows(l0, n_max):
                            yield RelationInstance(
                                family, (fixed, pool, second), m, 0, window)


def _generators(ambient, degree):
    d1, d2, w = degree
    h = ambient.h
    found = []
    for k in range(w + 1):
        if d1 >= 1 and d2 >= 1:
            for i in range(1, ambient.p + 1):
                for j in range(1, ambient.q + 1):
                    found.append(PresVar.x(i, j, k))
        if d1 >= h:
            for us in itertools.combinations(range(1, ambient.p + 1), h):
                found.append(PresVar.y(us, k))
        if d2 >= h:
            for vs in itertools.combinations(range(1, ambient.q + 1), h):
                found.append(PresVar.z(vs, k))
    found.sort(key=lambda v: v.sort_key())
    return found


def graded_basis(degree, ambient):
    '''All presentation monomials of tri-degree ``degree``.'''
    degree = tuple(degree)
    if min(degree) < 0:
        return GradedComponent(degree, [])
    variables = _generators(ambient, degree)
    monomials = []

    def extend(start, remaining, factors):
        if remaining == (0, 0, 0):
            monomials.append(Monomial.of(*factors))
            return
        for idx in range(start, len(variables)):
            var = variables[idx]
            rest = tuple(r - d for r, d in zip(remaining, var.degree()))
            if min(rest) < 0:
                continue
            extend(idx, rest, factors + [var])

    extend(0, degree, [])
    monomials.sort(key=lambda m: m.sort_key())
    logger.debug('graded component %s has %d monomials'
                 % (degree, len(monomials)))
    return GradedComponent(degree, monomials)


def _component_rows(rels, degree, ambient):
    rows = []
    for rel in rels:
        if rel.is_zero():
            continue
        if not rel.is_homogeneous():
            raise ValueError('relation %s is not homogeneous' % (rel,))
        shift = tuple(d - r for d, r in zip(degree, rel.degree))
        for mono in graded_basis(shift, ambient).monomials:
            rows.append(rel * PresPoly.from_monomial(mono))
    return rows


def _matrix(polys):
    columns = {}
    for poly in polys:
        for mono in poly.terms:
            columns.setdefault(mono, len(columns))
    matrix = []
    for poly in polys:
        row = [0] * len(columns)
        for mono, coeff in poly.terms.items():
            row[columns[mono]] = coeff
        matrix.append(row)
    return matrix


def component_span_rank(rels, degree, ambient):
    '''The rank of the degree-``degree`` component of the ideal generated
    by ``rels``, and the matrix whose rows span it.'''
    degree = tuple(degree)
    matrix = _matrix(_component_rows(rels, degree, ambient))
    rank = linalg.rank(matrix)
    logger.debug('ideal component %s: %d spanning products, rank %d'
                 % (degree, len(matrix), rank))
    return rank, matrix


def membership(f, rels, degree, ambient):
    '''True when ``f`` lies in the rational span of the degree-``degree``
    component of the ideal generated by ``rels``.'''
    degree = tuple(degree)
    if f.is_zero():
        return True
    if not f.is_homogeneous() or f.degree != degree:
        raise ValueError('element is not homogeneous of degree %s'
                         % (degree,))
    rows = _component_rows(rels, degree, ambient)
    matrix = _matrix(rows + [f])
    base = linalg.rank(matrix[:-1])
    return linalg.rank(matrix) == base


def shuffle_relations(ambient, depths, n=1, family='YYShuffle'):
    '''Every shuffle relation of order ``n`` with depth in ``depths``.'''
    rels = []
    for inst in iter_instances(family, ambient, n):
        if inst.n == n and inst.l in depths:
            rels.append(gen_relation(inst, ambient))
    return rels


# side -> (generator kind, shuffle family)
_WITNESS_SIDES = {'a': ('Y', 'YYShuffle'), 'b': ('Z', 'ZZShuffle')}


def _witness_degree(h, side):
    return (2 * h, 0, 1) if side == 'a' else (0, 2 * h, 1)


def nilradical_witness(ambient, side='a'):
    '''An element of degree ``(2h, 0, 1)`` killed by evaluation but not a
    consequence of the depth-0 relations::

        sum over i < j <= h + 2 of (-1)^(i+j) Y^(0)[h+3..2h, i, j]
                                             * Y^(1)[1..h+2 without i, j]

    With ``side='b'`` the same sum is taken in the ``Z`` generators and
    has degree ``(0, 2h, 1)``.
    '''
    if side not in _WITNESS_SIDES:
        raise ValueError("side must be 'a' or 'b', got %r" % (side,))
    kind = _WITNESS_SIDES[side][0]
    h, rows = ambient.h, ambient.rows(side)
    if h < 3:
        raise ValueError('the witness needs h >= 3, got %d' % h)
    if rows < max(h + 3, 2 * h):
        raise ValueError('the witness needs %s >= %d, got %d'
                         % ('p' if side == 'a' else 'q', max(h + 3, 2 * h),
                            rows))
    fixed = tuple(range(h + 3, 2 * h + 1))
    pool = tuple(range(1, h + 3))
    result = PresPoly()
    for i, j in itertools.combinations(pool, 2):
        rest = tuple(x for x in pool if x not in (i, j))
        term = _signed(kind, fixed + (i, j), 0) * _signed(kind, rest, 1)
        result = result + (term if (i + j) % 2 == 0 else -term)
    return result


def nilradical_check(ambient, side='a'):
    '''Evaluate the witness against the depth-0 relations and against all
    shuffle relations of its side, at the witness degree.'''
    f = nilradical_witness(ambient, side)
    family = _WITNESS_SIDES[side][1]
    degree = _witness_degree(ambient.h, side)
    classical = shuffle_relations(ambient, (0,), family=family)
    full = classical + shuffle_relations(ambient, range(1, ambient.h),
                                         family=family)
    report = {
        'side': side,
        'f': str(f),
        'qstar_is_zero': verify_kernel(f, ambient),
        'in_classical_span': membership(f, classical, degree, ambient),
        'in_full_span': membership(f, full, degree, ambient),
        }
    logger.info('nilradical check for %s: %s' % (ambient, report))
    return report
