#
# galoistrans: sound model transformation with Galois connections
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Tag lattices, options lattices and tag-options lattices.

A tag-options lattice relates constraints of the form "these tags apply, and
for each of them only these options are possible". It is built from

* the tag lattice, the dual powerset of a tag universe (:py:mod:`.tags`),
* the family of options lattices, one per tag set (:py:mod:`.options`),
* the transport ``phi`` between options lattices (:py:mod:`.homomorphism`).

The lattices register themselves in :py:mod:`galoistrans.lattice` as ``tag``,
``options`` and ``tag-options``. Hasse diagrams of any small lattice are exported
with :py:func:`hasse_export`.
"""

from galoistrans.tagopts.hasse import *
from galoistrans.tagopts.homomorphism import *
from galoistrans.tagopts.options import *
from galoistrans.tagopts.tags import *
from galoistrans.tagopts.tol import *

__all__ = [
    "TagSet",
    "TagUniverse",
    "TagLattice",
    "tag_lattice",
    "DomainMismatchError",
    "OptionsElement",
    "OptionsLattice",
    "options_lattice",
    "options_leq",
    "options_meet",
    "options_join",
    "phi",
    "check_homomorphism",
    "UniverseMismatchError",
    "TagOptionsElement",
    "TagOptionsLattice",
    "tag_options_lattice",
    "tol_leq",
    "tol_meet",
    "tol_join",
    "covering_graph",
    "hasse_export",
]
