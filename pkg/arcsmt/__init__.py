# file arcsmt/__init__.py
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

"""Exact standard monomial theory for invariants of arc spaces under
the special linear group.

The package is organised bottom-up:

* :mod:`arcsmt.diffring` -- sparse integer polynomials with divided-power
  derivations, for the concrete ring and the presentation ring
* :mod:`arcsmt.seqcomb` -- the alphabet of derived minors and its tagged
  refinement, with their orders
* :mod:`arcsmt.tableau` -- double-tableau words and leading monomials
* :mod:`arcsmt.smt` -- evaluation, standardness, enumeration and
  straightening
* :mod:`arcsmt.relations` -- relation families, kernel checks and graded
  linear algebra
* :mod:`arcsmt.action` -- infinitesimal invariance checks
* :mod:`arcsmt.text` -- parsing the canonical text forms
"""

__version_info__ = (0, 1, 0, None)

# Dot-connect all but the last. Last is dash-connected if not None.
__version__ = '.'.join([str(i) for i in __version_info__[:-1]])
if __version_info__[-1] is not None:
    __version__ += ('-%s' % (__version_info__[-1],))
