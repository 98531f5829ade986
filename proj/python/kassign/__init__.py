# Copyright 2026 The kassign Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact k-cardinality assignment sequences over the max-plus semifield.

The core objects are :class:`Matrix` (a square max-plus weight matrix with
exact rational entries) and :class:`Instance` (a max or min instance as
written in a file, possibly rectangular).  :func:`solve` returns the best
assignment weight for every cardinality k = 0..n together with witness
matchings, the full characteristic maxpolynomial, its singular values, and
the term classes.
"""

from ._core import (
    Instance,
    Matrix,
    ParseError,
    Poly,
    SizeBoundError,
    __version__,
    fullchar,
    generate,
    maxperm,
    parse_instance,
    solve,
)

__all__ = [
    "Instance",
    "Matrix",
    "ParseError",
    "Poly",
    "SizeBoundError",
    "__version__",
    "fullchar",
    "generate",
    "maxperm",
    "parse_instance",
    "solve",
]
