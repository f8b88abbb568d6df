# file arcsmt/smt.py
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

"""Standard monomials: evaluation into the concrete ring, the
standardness test, enumeration and straightening.

Straightening works by peeling leading terms: the leading monomial of a
subring element is the image of exactly one standard word, whose
evaluation has leading coefficient +1 or -1, so subtracting an integer
multiple of it strictly lowers the leading word.
"""

import itertools
import logging
import random
from collections import defaultdict
from functools import lru_cache
from numbers import Integral

from arcsmt.diffring import (Poly, PresVar, det_a, det_b, dbar_det_expansion,
                             x_entry)
from arcsmt.linalg import rank
from arcsmt.seqcomb import JSeq, NotStandardError, build_chain
from arcsmt.tableau import (invert_t_plus, layout, ld_plus, pretty, t_plus,
                            word_key)

__all__ = [
    'JWord', 'BasisCoords', 'NotInSubringError', 'NotStandardError',
    'q_eval_j', 'q_eval_word', 'q_eval_pres', 'generators', 'is_standard',
    'pi_inverse', 'alphabet', 'enumerate_standard', 'enumerate_words',
    'word_content', 'peel', 'straighten', 'triangularity_failures',
    'dimension_failures', 'random_words', 'straighten_failures',
    ]

logger = logging.getLogger(__name__)


class JWord(tuple):
    '''A product of derived minors, kept sorted ascending.  Words compare
    lexicographically on their factors, a proper prefix being smaller.'''

    def __new__(cls, factors=()):
        return super(JWord, cls).__new__(
            cls, sorted(factors, key=lambda j: j.sort_key()))

    def sort_key(self):
        return tuple(j.sort_key() for j in self)

    @property
    def weight(self):
        return sum(j.weight for j in self)

    def __str__(self):
        return ' '.join(str(j) for j in self)

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self)


class BasisCoords(dict):
    '''Integer coordinates over standard words: a map from :class:`JWord`
    to a nonzero coefficient.'''

    def add(self, word, coeff):
        total = self.get(word, 0) + coeff
        if total:
            self[word] = total
        else:
            self.pop(word, None)

    def items_sorted(self):
        return sorted(self.items(), key=lambda t: t[0].sort_key())

    def expand(self, ambient):
        '''Sum of ``coeff * q_eval_word(word)`` over the coordinates.'''
        result = Poly()
        for word, coeff in self.items():
            result = result + q_eval_word(word, ambient).scale(coeff)
        return result

    def to_json(self):
        return [{'word': [str(j) for j in word], 'coeff': str(coeff)}
                for word, coeff in self.items_sorted()]


class NotInSubringError(ValueError):
    '''Peeling could not proceed; ``residual`` holds what was left.'''

    def __init__(self, message, residual):
        super(NotInSubringError, self).__init__(message)
        self.residual = residual


@lru_cache(maxsize=None)
def q_eval_j(j, ambient):
    '''The derived minor ``j`` expanded in the concrete ring.'''
    j.check(ambient)
    if j.kind == 'L':
        return det_a(j.us, ambient).dbar(j.weight)
    if j.kind == 'R':
        return det_b(j.vs, ambient).dbar(j.weight)
    if j.size > ambient.h:
        # a product of an h-column matrix with an h-row matrix has rank <= h
        return Poly()
    return dbar_det_expansion(j.us, j.vs, j.weight, ambient)


def q_eval_word(word, ambient):
    result = Poly.one()
    for j in word:
        result = result * q_eval_j(j, ambient)
    return result


@lru_cache(maxsize=None)
def _q_eval_var(var, ambient):
    if var.kind == 'X':
        ambient.check_rows('a', var.left)
        ambient.check_rows('b', var.right)
        return x_entry(var.left[0], var.right[0], var.order, ambient.h)
    if var.kind == 'Y':
        return det_a(var.left, ambient).dbar(var.order)
    return det_b(var.right, ambient).dbar(var.order)


def q_eval_pres(f, ambient):
    '''Map a presentation ring element into the concrete ring:
    ``X^(k)`` to the derived bilinear entry, ``Y^(k)`` and ``Z^(k)`` to
    derived determinants.'''
    return f.substitute(lambda var: _q_eval_var(var, ambient), Poly)


def generators(ambient, max_weight):
    '''Yield ``(PresVar, Poly)`` for every generator ``X^(k)``, ``Y^(k)``
    and ``Z^(k)`` with ``k <= max_weight``.'''
    h, p, q = ambient.h, ambient.p, ambient.q
    for k in range(max_weight + 1):
        for i in range(1, p + 1):
            for j in range(1, q + 1):
                var = PresVar.x(i, j, k)
                yield var, _q_eval_var(var, ambient)
        for us in itertools.combinations(range(1, p + 1), h):
            var = PresVar.y(us, k)
            yield var, _q_eval_var(var, ambient)
        for vs in itertools.combinations(range(1, q + 1), h):
            var = PresVar.z(vs, k)
            yield var, _q_eval_var(var, ambient)


def _as_sorted(word):
    if isinstance(word, JWord):
        return word
    factors = list(word)
    keys = [j.sort_key() for j in factors]
    if keys != sorted(keys):
        raise ValueError('word %s is not sorted'
                         % ' '.join(str(j) for j in factors))
    return JWord(factors)


def is_standard(word, ambient):
    '''Test a sorted word for standardness.

    Returns ``(True, chain)`` with the certificate chain of tagged
    sequences, or ``(False, position)`` with the 1-based position of the
    first factor that cannot be chained.
    '''
    word = _as_sorted(word)
    for j in word:
        j.check(ambient)
    chain, failure = build_chain(word, ambient.h)
    if failure is None:
        return True, chain
    logger.debug('%s is not standard at position %d' % (word, failure))
    return False, failure


def pi_inverse(word, ambient):
    '''The tagged chain of a standard word.'''
    standard, certificate = is_standard(word, ambient)
    if not standard:
        raise NotStandardError('word %s is not standard' % (JWord(word),),
                               certificate)
    return certificate


def alphabet(ambient, max_weight):
    '''Every letter of weight at most ``max_weight``, ascending.'''
    letters = []
    h, p, q = ambient.h, ambient.p, ambient.q
    for weight in range(max_weight + 1):
        for us in itertools.combinations(range(1, p + 1), h):
            letters.append(JSeq.left(weight, us))
        for vs in itertools.combinations(range(1, q + 1), h):
            letters.append(JSeq.right(weight, vs))
        for size in range(1, h):
            for us in itertools.combinations(range(1, p + 1), size):
                for vs in itertools.combinations(range(1, q + 1), size):
                    letters.append(JSeq.full(weight, us, vs))
    letters.sort(key=lambda j: j.sort_key())
    return letters


def _words(letters, max_weight, max_degree, prefix_ok):
    # sorted words as nondecreasing runs through the sorted letters
    stack = [((), 0, 0)]
    while stack:
        prefix, start, weight = stack.pop()
        yield prefix
        if len(prefix) == max_degree:
            continue
        children = []
        for i in range(start, len(letters)):
            j = letters[i]
            if weight + j.weight > max_weight:
                continue
            candidate = prefix + (j,)
            if prefix_ok(candidate):
                children.append((candidate, i, weight + j.weight))
        stack.extend(reversed(children))


def enumerate_words(ambient, max_weight, max_degree):
    '''Every sorted word of letters with total weight at most
    ``max_weight`` and at most ``max_degree`` factors, in word order.'''
    if max_weight < 0 or max_degree < 0:
        raise ValueError('bounds must be non-negative')
    letters = alphabet(ambient, max_weight)
    for factors in _words(letters, max_weight, max_degree, lambda w: True):
        yield JWord(factors)


def enumerate_standard(ambient, max_weight, max_degree):
    '''Every standard word within the bounds, in word order.  A word
    whose prefix fails the chain test is pruned with all its
    extensions.'''
    if max_weight < 0 or max_degree < 0:
        raise ValueError('bounds must be non-negative')
    letters = alphabet(ambient, max_weight)

    def prefix_ok(factors):
        return build_chain(factors, ambient.h)[1] is None

    count = 0
    for factors in _words(letters, max_weight, max_degree, prefix_ok):
        count += 1
        yield JWord(factors)
    logger.debug('enumerated %d standard words (weight <= %d, degree <= %d)'
                 % (count, max_weight, max_degree))


def word_content(word):
    '''The grading of a word: ``(a_rows, b_rows, weight)`` with the row
    multisets as sorted tuples.'''
    a_rows, b_rows = [], []
    for j in word:
        a_rows.extend(j.us)
        b_rows.extend(j.vs)
    return (tuple(sorted(a_rows)), tuple(sorted(b_rows)),
            sum(j.weight for j in word))


def peel(f, ambient, max_steps=None):
    '''Express ``f`` in the basis of standard words.

    Raises :class:`NotInSubringError` when a leading monomial is not the
    leading monomial of a standard word, or when ``max_steps`` is
    exceeded, and ValueError when ``f`` has a variable outside the
    ambient.
    '''
    for mono in f.terms:
        for var, _ in mono:
            ambient.check_var(var)
    coords = BasisCoords()
    residual = f
    previous = None
    steps = 0
    while not residual.is_zero():
        if max_steps is not None and steps >= max_steps:
            logger.warning('peel aborted after %d steps' % steps)
            raise NotInSubringError('no standard expansion within %d steps'
                                    % max_steps, residual)
        steps += 1
        mono, coeff = ld_plus(residual, ambient)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug('peel step %d leads with\n%s'
                         % (steps, pretty(layout(mono, ambient))))
        key = word_key(mono, ambient)
        if previous is not None and not key < previous:
            raise NotInSubringError('leading word did not decrease at %s'
                                    % (mono,), residual)
        previous = key
        chain = invert_t_plus(mono, ambient)
        if chain is None:
            raise NotInSubringError('leading monomial %s has no tagged chain'
                                    % (mono,), residual)
        word = JWord(e.norm() for e in chain)
        if not is_standard(word, ambient)[0]:
            raise NotInSubringError('leading monomial %s reads as a '
                                    'nonstandard word' % (mono,), residual)
        image = q_eval_word(word, ambient)
        lead, lead_coeff = ld_plus(image, ambient)
        if lead != mono or lead_coeff not in (1, -1):
            raise NotInSubringError('leading monomial %s is not led by %s'
                                    % (mono, word), residual)
        multiple = coeff * lead_coeff
        coords.add(word, multiple)
        residual = residual - image.scale(multiple)
        logger.debug('peel step %d: %d * %s' % (steps, multiple, word))
    return coords


def straighten(word, ambient, max_steps=None):
    '''Rewrite any word as an integer combination of standard words.'''
    word = JWord(word)
    standard, _ = is_standard(word, ambient)
    if standard:
        coords = BasisCoords()
        coords.add(word, 1)
        return coords
    return peel(q_eval_word(word, ambient), ambient, max_steps)


def triangularity_failures(ambient, max_weight, max_degree):
    '''Check every nonempty standard word within the bounds: its image
    must be led by the monomial of its tagged chain with coefficient
    +1 or -1, and no two words may share a leading monomial.  Yields
    ``(word, reason)`` for each failure.'''
    seen = {}
    for word in enumerate_standard(ambient, max_weight, max_degree):
        if not word:
            continue
        mono, coeff = ld_plus(q_eval_word(word, ambient), ambient)
        expected = t_plus(pi_inverse(word, ambient), ambient)
        if mono != expected:
            yield word, 'led by %s instead of %s' % (mono, expected)
        elif coeff not in (1, -1):
            yield word, 'leading coefficient %d' % coeff
        if mono in seen:
            yield word, 'shares its leading monomial with %s' % (seen[mono],)
        seen[mono] = word


def _poly_rows(polys):
    columns = {}
    for f in polys:
        for mono in f.terms:
            columns.setdefault(mono, len(columns))
    rows = []
    for f in polys:
        row = [0] * len(columns)
        for mono, coeff in f.terms.items():
            row[columns[mono]] = coeff
        rows.append(row)
    return rows


def dimension_failures(ambient, max_weight, max_degree):
    '''Compare, grading by grading, the number of standard words with the
    rank of the images of all words.  Only gradings whose every word fits
    in ``max_degree`` factors are compared; a letter uses at least
    ``min(h, 2)`` rows.  Yields ``(content, standard, rank)`` for each
    mismatch.'''
    max_rows = min(ambient.h, 2) * max_degree
    by_content = defaultdict(list)
    for word in enumerate_words(ambient, max_weight, max_degree):
        content = word_content(word)
        if word and len(content[0]) + len(content[1]) <= max_rows:
            by_content[content].append(word)
    standard = defaultdict(int)
    for word in enumerate_standard(ambient, max_weight, max_degree):
        standard[word_content(word)] += 1
    for content in sorted(by_content):
        polys = [q_eval_word(w, ambient) for w in by_content[content]]
        found = rank(_poly_rows(polys))
        if found != standard[content]:
            yield content, standard[content], found
    logger.debug('compared %d gradings' % len(by_content))


def random_words(ambient, count, max_weight, max_degree, seed=0):
    '''``count`` random nonempty sorted words within the bounds, drawn
    from a generator seeded with ``seed``.'''
    if max_degree < 1:
        raise ValueError('random words need max_degree >= 1')
    rng = random.Random(seed)
    letters = alphabet(ambient, max_weight)
    if not letters:
        raise ValueError('no letters for %s' % (ambient,))
    for n in range(count):
        factors, budget = [], max_weight
        for i in range(rng.randint(1, max_degree)):
            j = rng.choice([j for j in letters if j.weight <= budget])
            factors.append(j)
            budget -= j.weight
        yield JWord(factors)


def straighten_failures(word, coords, ambient):
    '''Problems with ``coords`` as the straightening of ``word``: every
    coefficient an integer, every word standard and no later than
    ``word``, and the expansion equal to the image of ``word``.'''
    word = JWord(word)
    problems = []
    for basis_word, coeff in coords.items_sorted():
        if not isinstance(coeff, Integral):
            problems.append('coefficient %r of %s is not an integer'
                            % (coeff, basis_word))
        if not is_standard(basis_word, ambient)[0]:
            problems.append('%s is not standard' % (basis_word,))
        if basis_word.sort_key() > word.sort_key():
            problems.append('%s follows %s' % (basis_word, word))
    if coords.expand(ambient) != q_eval_word(word, ambient):
        problems.append('expansion differs from the image of %s' % (word,))
    return problems
