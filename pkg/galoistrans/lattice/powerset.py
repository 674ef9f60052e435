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
"""Powerset and dual lattices."""

from typing import Hashable, Iterable

import galoistrans.helper as helper
import galoistrans.lattice as lattice
from galoistrans.lattice.base import CapacityError
from galoistrans.lattice.base import ElementError
from galoistrans.lattice.base import FiniteLattice

MAX_UNIVERSE = 12


@lattice.register("powerset")
class PowersetLattice(FiniteLattice):
    """All subsets of a finite universe, ordered by inclusion.

    Elements are ``frozenset`` values. The meet is intersection (the empty meet
    is the universe) and the join is union (the empty join is ``∅``).

    Args:
        universe: The finite universe.
        max_universe: Largest accepted universe.

    Raises:
        CapacityError: If the universe is larger than ``max_universe``.
    """

    def __init__(self,
                 universe: Iterable[Hashable],
                 max_universe: int = MAX_UNIVERSE):
        universe = frozenset(universe)
        if len(universe) > max_universe:
            raise CapacityError(
                f"Powerset over {len(universe)} elements requested, but the "
                f"universe is limited to {max_universe} elements.")
        self.universe = universe

    def _enumerate(self):
        return helper.powerset(self.universe)

    def _key(self):
        return ("powerset", self.universe)

    @property
    def cardinality(self):
        return 2**len(self.universe)

    def describe(self):
        return f"powerset{helper.render_set(self.universe)}"

    def element(self, values: Iterable[Hashable]) -> frozenset:
        """Build an element from an iterable, checking it against the universe."""
        values = frozenset(values)
        unknown = values - self.universe
        if unknown:
            raise ElementError(
                f"Values {helper.render_set(unknown)} are not in the universe "
                f"{helper.render_set(self.universe)}.")
        return values

    def contains(self, element):
        return isinstance(element, frozenset) and element <= self.universe

    def leq(self, a, b):
        return a <= b

    def meet_all(self, items):
        result = self.universe
        for item in items:
            result = result & item
        return result

    def join_all(self, items):
        return frozenset().union(*items)

    def render(self, element):
        return helper.render_set(element)


@lattice.register("dual")
class DualLattice(FiniteLattice):
    """The dual of a lattice: same elements, order and operations reversed."""

    def __init__(self, base: FiniteLattice):
        self.base = base

    def _enumerate(self):
        return self.base.elements

    def _key(self):
        return ("dual", self.base)

    @property
    def cardinality(self):
        return self.base.cardinality

    def describe(self):
        return f"dual({self.base.describe()})"

    def contains(self, element):
        return self.base.contains(element)

    def leq(self, a, b):
        return self.base.leq(b, a)

    def meet_all(self, items):
        return self.base.join_all(items)

    def join_all(self, items):
        return self.base.meet_all(items)

    def render(self, element):
        return self.base.render(element)


def powerset_lattice(universe: Iterable[Hashable],
                     max_universe: int = MAX_UNIVERSE) -> PowersetLattice:
    """The powerset lattice of ``universe``, ordered by subset inclusion."""
    return PowersetLattice(universe, max_universe=max_universe)


def dual_lattice(base: FiniteLattice) -> DualLattice:
    """The dual of ``base``, obtained by turning the order around."""
    return DualLattice(base)
