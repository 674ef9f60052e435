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
"""Finite complete lattices and the lattice-law checker.

The lattices used throughout ``galoistrans`` are finitely enumerable complete
lattices implementing :py:class:`FiniteLattice`: powersets ordered by inclusion,
their duals, grid intervals of reliabilities, and componentwise products.
Every lattice can be verified against the complete-lattice axioms with
:py:func:`check_lattice_laws`.

.. autoclass:: FiniteLattice
.. autofunction:: check_lattice_laws
"""

import galoistrans.registry

galoistrans.registry.add_helper_functions(__name__)

from galoistrans.lattice.base import *
from galoistrans.lattice.interval import *
from galoistrans.lattice.laws import *
from galoistrans.lattice.powerset import *
from galoistrans.lattice.product import *

__all__ = [
    "CapacityError",
    "ElementError",
    "FiniteLattice",
    "ExplicitLattice",
    "PowersetLattice",
    "DualLattice",
    "IntervalElement",
    "IntervalLattice",
    "ProductLattice",
    "Budget",
    "Cases",
    "Law",
    "LawResult",
    "LawReport",
    "SamplingWarning",
    "powerset_lattice",
    "dual_lattice",
    "interval_lattice",
    "product_lattice",
    "grid_values",
    "check_law",
    "check_laws",
    "check_lattice_laws",
]
