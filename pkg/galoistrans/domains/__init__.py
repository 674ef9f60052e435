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
"""Reliability and topology models of a finite system universe.

The worked instantiation of the framework. Systems consist of components with
exact reliabilities and lines between nodes. Their properties form the product
of two tag-options lattices, and two formalisms are attached to it by Galois
connections: one for component reliabilities and one for the topology. On top
of them, this package checks models of different formalisms for consistency and
bounds the two-terminal reliability of all systems a property describes.

Formalisms are kept in a registry, see :py:func:`get_options`.
"""

import galoistrans.registry

galoistrans.registry.add_helper_functions(__name__)

from galoistrans.domains.boxes import *
from galoistrans.domains.consistency import *
from galoistrans.domains.formalisms import *
from galoistrans.domains.properties import *
from galoistrans.domains.reliability import *
from galoistrans.domains.universe import *

galoistrans.registry.add_docstring(__name__)

__all__ = [
    "ABSENT",
    "PRESENT",
    "line_name",
    "pair_of",
    "Universe",
    "SystemInstance",
    "systems_within",
    "enumerate_systems",
    "count_all_systems",
    "PropertiesElement",
    "PropertiesLattice",
    "properties_lattice",
    "satisfies",
    "is_inconsistent",
    "systems_satisfying",
    "count_systems",
    "properties_relation",
    "Model",
    "ModelBox",
    "ReliabilityModelBox",
    "TopologyModelBox",
    "BoxLattice",
    "box_model_space",
    "Formalism",
    "ReliabilityFormalism",
    "TopologyFormalism",
    "PowersetHullFormalism",
    "formalism",
    "reliability_connection",
    "topology_connection",
    "powerset_hull_connection",
    "Conflict",
    "ConsistencyReport",
    "consistency_check",
    "MAX_EDGES",
    "SYSTEM_BUDGET",
    "InconsistentPropertiesError",
    "BudgetExceededError",
    "series_reliability",
    "parallel_reliability",
    "two_terminal_reliability",
    "ReliabilityBound",
    "reliability_bound",
]
