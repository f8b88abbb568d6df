# file arcsmt/utils/combinat.py
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

"""Integer combinatorics: binomials, compositions and permutation signs."""

import itertools
import math
from functools import lru_cache

__all__ = ['binomial', 'compositions', 'permutation_sign', 'sort_with_sign',
           'signed_splits']


@lru_cache(maxsize=None)
def binomial(n, k):
    '''Exact binomial coefficient; zero outside ``0 <= k <= n``.'''
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def compositions(total, parts):
    '''Generate every tuple of ``parts`` non-negative integers summing to
    ``total``, in colexicographic order (the last entry varies slowest).

    ``compositions(0, 0)`` yields the empty tuple once; any other request
    with zero parts yields nothing.
    '''
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for head in compositions(total - last, parts - 1):
            yield head + (last,)


def permutation_sign(seq):
    '''Sign of the permutation that sorts ``seq`` ascending: +1 or -1, and
    0 when ``seq`` contains a repeated item.'''
    items = list(seq)
    if len(set(items)) != len(items):
        return 0
    inversions = 0
    for i, j in itertools.combinations(range(len(items)), 2):
        if items[i] > items[j]:
            inversions += 1
    return -1 if inversions % 2 else 1


def sort_with_sign(seq):
    '''Return ``(sign, sorted_tuple)``; ``(0, None)`` on a repeated item.'''
    sign = permutation_sign(seq)
    if sign == 0:
        return 0, None
    return sign, tuple(sorted(seq))


def signed_splits(seq, k):
    '''Split ``seq`` into a chosen block of ``k`` items and the rest, over
    every ``k``-subset of positions.

    Yields ``(sign, chosen, rest)``; both blocks keep the relative order of
    ``seq`` and ``sign`` is the sign of the permutation moving the chosen
    positions to the front.  Summing an alternating expression over these
    splits equals the average over all permutations of ``seq``.
    '''
    items = tuple(seq)
    positions = range(len(items))
    for chosen in itertools.combinations(positions, k):
        rest = tuple(i for i in positions if i not in chosen)
        sign = permutation_sign(chosen + rest)
        yield (sign, tuple(items[i] for i in chosen),
               tuple(items[i] for i in rest))
