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
"""Componentwise product of two lattices."""

import itertools
from typing import Callable

import galoistrans.lattice as lattice
from galoistrans.lattice.base import FiniteLattice


@lattice.register("product")
class ProductLattice(FiniteLattice):
    """Pairs of elements, with order and operations taken componentwise.

    Args:
        first: Lattice of the first component.
        second: Lattice of the second component.
        element_type: Callable building an element from its two components,
            e.g. a ``NamedTuple``. Defaults to a plain ``tuple``.
    """

    def __init__(self,
                 first: FiniteLattice,
                 second: FiniteLattice,
                 element_type: Callable = None):
        self.first = first
        self.second = second
        self.element_type = element_type

    def pair(self, a, b):
        if self.element_type is None:
            return (a, b)
        return self.element_type(a, b)

    def _enumerate(self):
        for a, b in itertools.product(self.first.elements, self.second.elements):
            yield self.pair(a, b)

    def _key(self):
        return ("product", self.first, self.second, self.element_type)

    @property
    def cardinality(self):
        return self.first.cardinality * self.second.cardinality

    def describe(self):
        return f"{self.first.describe()} × {self.second.describe()}"

    def contains(self, element):
        return (isinstance(element, tuple) and len(element) == 2 and
                self.first.contains(element[0]) and
                self.second.contains(element[1]))

    def leq(self, a, b):
        return self.first.leq(a[0], b[0]) and self.second.leq(a[1], b[1])

    def meet_all(self, items):
        items = tuple(items)
        return self.pair(self.first.meet_all(item[0] for item in items),
                         self.second.meet_all(item[1] for item in items))

    def join_all(self, items):
        items = tuple(items)
        return self.pair(self.first.join_all(item[0] for item in items),
                         self.second.join_all(item[1] for item in items))

    def render(self, element):
        return (f"({self.first.render(element[0])}, "
                f"{self.second.render(element[1])})")


def product_lattice(first: FiniteLattice,
                    second: FiniteLattice,
                    element_type: Callable = None) -> ProductLattice:
    """The product of two lattices."""
    return ProductLattice(first, second, element_type=element_type)
