# file arcsmt/text/__init__.py
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

"""Parsing the canonical text forms back into values.

.. function:: parse_word(text)

   Parse a product of derived minors, such as ``D^0(2,1| D^1|1,2)``, into
   a ``(sign, JWord)`` pair.  Index lists may be unsorted; the sign
   records the sorting permutations.

.. function:: parse_jseq(text)

   Parse a single derived minor into a signed sequence.

.. function:: parse_eseq(text)

   Parse a tagged sequence such as ``((2,1),(1,0)|``.

.. function:: parse_poly(text)

   Parse a concrete ring polynomial as printed by ``str``.

Serialization is ``str()`` on each value type.
"""

from arcsmt.text.core import (ParseError, parse, parse_eseq, parse_jseq,
                              parse_poly, parse_word)
