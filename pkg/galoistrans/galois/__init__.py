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
"""Galois connections, correctness relations and model transformation.

A modeling formalism is attached to the lattice of system properties by a
Galois connection. Connections are verified with :py:func:`check_galois` before
they are used to

* induce a correctness relation on models (:py:func:`induced_relation`),
* transform models between formalisms (:py:func:`transform`),
* select a single model and refine the properties (:py:func:`specialize`).

Selection strategies are kept in a registry, see :py:func:`get_options`.
"""

import galoistrans.registry

galoistrans.registry.add_helper_functions(__name__)

from galoistrans.galois.connection import *
from galoistrans.galois.relation import *
from galoistrans.galois.selection import *

galoistrans.registry.add_docstring(__name__)

__all__ = [
    "CorrectnessRelation",
    "check_correctness_relation",
    "trivial_relation",
    "LawViolationError",
    "ConcreteDomainError",
    "ModelLiftError",
    "ModelSpace",
    "GaloisConnection",
    "identity_connection",
    "check_galois",
    "induced_relation",
    "transform",
    "check_transform_soundness",
    "NoModelError",
    "ContractError",
    "SelectionOperator",
    "CanonicalLeastSelection",
    "ExplicitSelection",
    "SystemSelection",
    "select",
    "refine",
    "specialize",
    "check_selection",
]
