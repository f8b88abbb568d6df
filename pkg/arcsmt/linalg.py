# file arcsmt/linalg.py
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

"""Exact integer linear algebra by fraction-free (Bareiss) elimination.

Matrices are lists of rows of Python integers.
"""

import logging
from fractions import Fraction

__all__ = ['rank', 'det', 'integer_inverse', 'matmul', 'identity']

logger = logging.getLogger(__name__)


def _eliminate(rows, ncols):
    # Bareiss forward elimination in place; returns (rank, sign, last pivot)
    nrows = len(rows)
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
            sign = -sign
        for i in range(r + 1, nrows):
            for k in range(c + 1, ncols):
                rows[i][k] = (rows[r][c] * rows[i][k] -
                              rows[i][c] * rows[r][k]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
    return r, sign, prev


def rank(matrix):
    '''The rank of an integer matrix over the rationals.'''
    rows = [list(row) for row in matrix]
    if not rows:
        return 0
    result = _eliminate(rows, len(rows[0]))[0]
    logger.debug('rank %d of a %dx%d matrix'
                 % (result, len(rows), len(rows[0])))
    return result


def det(matrix):
    '''The determinant of a square integer matrix.'''
    rows = [list(row) for row in matrix]
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ValueError('determinant of a non-square matrix')
    if not size:
        return 1
    r, sign, last = _eliminate(rows, size)
    if r < size:
        return 0
    return sign * last


def identity(size):
    return [[int(i == j) for j in range(size)] for i in range(size)]


def matmul(left, right):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*right)]
            for row in left]


def integer_inverse(matrix):
    '''The inverse of a square integer matrix, which must have an integer
    inverse (determinant +1 or -1).'''
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError('inverse of a non-square matrix')
    d = det(matrix)
    if d not in (1, -1):
        raise ValueError('matrix has determinant %d, no integer inverse' % d)
    aug = [[Fraction(x) for x in row] + [Fraction(x) for x in ident]
           for row, ident in zip(matrix, identity(size))]
    for c in range(size):
        pivot = next(i for i in range(c, size) if aug[i][c])
        aug[c], aug[pivot] = aug[pivot], aug[c]
        lead = aug[c][c]
        aug[c] = [x / lead for x in aug[c]]
        for i in range(size):
            if i != c and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[c])]
    return [[int(x) for x in row[size:]] for row in aug]
