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
"""The lattice of system properties.

A properties element constrains the reliability of components and the presence
of lines. Both parts are tag-options elements: reliabilities over the component
tags with the grid values as options, topology over the line tags with the
options ``absent`` and ``present``. Tags a part does not mention are
unconstrained.
"""

import math
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional

import galoistrans.helper as helper
import galoistrans.lattice as lattice
from galoistrans.domains.universe import LINE_STATES
from galoistrans.domains.universe import SystemInstance
from galoistrans.domains.universe import Universe
from galoistrans.domains.universe import enumerate_systems
from galoistrans.domains.universe import pair_of
from galoistrans.domains.universe import systems_within
from galoistrans.galois.relation import CorrectnessRelation
from galoistrans.lattice.product import ProductLattice
from galoistrans.tagopts.tol import TagOptionsElement
from galoistrans.tagopts.tol import TagOptionsLattice
from galoistrans.tagopts.tol import UniverseMismatchError


class PropertiesElement(NamedTuple):
    """Reliability constraints ``rel`` and topology constraints ``topo``."""

    rel: TagOptionsElement
    topo: TagOptionsElement

    def __str__(self):
        return f"(rel: {self.rel}, topo: {self.topo})"


@lattice.register("properties")
class PropertiesLattice(ProductLattice):
    """Product of the reliability and the topology tag-options lattices.

    Args:
        universe: The system universe.
    """

    def __init__(self, universe: Universe):
        self.universe = universe
        super().__init__(
            TagOptionsLattice(universe.components, universe.grid_values),
            TagOptionsLattice(universe.lines, LINE_STATES),
            element_type=PropertiesElement,
        )

    @property
    def reliability(self) -> TagOptionsLattice:
        return self.first

    @property
    def topology(self) -> TagOptionsLattice:
        return self.second

    def _key(self):
        return ("properties", self.universe)

    def describe(self):
        return (f"properties{helper.render_set(self.universe.components.tags)}"
                f"/grid {self.universe.grid}")

    def contains(self, element):
        return isinstance(element, PropertiesElement) and super().contains(element)

    def element(self,
                rel: Optional[Mapping[str, Iterable]] = None,
                topo: Optional[Mapping[str, Iterable[str]]] = None) -> PropertiesElement:
        """Build an element from ``tag -> options`` mappings.

        Reliability options are parsed as rationals and must lie on the grid.
        """
        rel = {tag: [self.universe.check_value(v) for v in values]
               for tag, values in (rel or {}).items()}
        topo = {self.universe.check_line(tag): values
                for tag, values in (topo or {}).items()}
        return PropertiesElement(self.first.element(rel), self.second.element(topo))

    def render(self, element):
        return str(element)


def properties_lattice(universe: Universe) -> PropertiesLattice:
    return PropertiesLattice(universe)


def satisfies(s: SystemInstance, p: PropertiesElement) -> bool:
    """Whether ``p`` describes the system ``s``.

    Every constrained component must have one of its allowed reliabilities and
    every constrained line must be in one of its allowed states.

    Raises:
        UniverseMismatchError: If ``p`` constrains a component or line the
            system does not have.
    """
    components = s.components
    for tag, allowed in p.rel.options.assignment:
        if tag not in components:
            raise UniverseMismatchError(
                f"{tag!r} is not a component of {s}.")
        if s.reliability_of(tag) not in allowed:
            return False
    for tag, allowed in p.topo.options.assignment:
        if not set(pair_of(tag)) <= s.nodes:
            raise UniverseMismatchError(f"{tag!r} is not a line of {s}.")
        if s.state_of(tag) not in allowed:
            return False
    return True


def is_inconsistent(p: PropertiesElement) -> bool:
    """Whether some tag of either part is assigned no option at all."""
    return p.rel.is_empty_somewhere() or p.topo.is_empty_somewhere()


def _allowed(part: TagOptionsElement, default):

    def allowed(tag):
        if tag in part.tag_set:
            return helper.sorted_canonical(part[tag])
        return default

    return allowed


def systems_satisfying(p: PropertiesElement,
                       universe: Universe) -> Iterator[SystemInstance]:
    """The systems of ``universe`` described by ``p``, in enumeration order."""
    PropertiesLattice(universe).validate(p)
    return systems_within(universe, _allowed(p.rel, universe.grid_values),
                          _allowed(p.topo, LINE_STATES))


def count_systems(p: PropertiesElement, universe: Universe) -> int:
    """Number of systems described by ``p``, without enumerating them."""
    rel = _allowed(p.rel, universe.grid_values)
    topo = _allowed(p.topo, LINE_STATES)
    return (math.prod(len(rel(c)) for c in universe.components) *
            math.prod(len(topo(l)) for l in universe.lines))


def properties_relation(universe: Universe,
                        systems: Optional[Iterable[SystemInstance]] = None
                       ) -> CorrectnessRelation:
    """The base correctness relation ``s ⊨ p`` given by :py:func:`satisfies`.

    Args:
        universe: The system universe.
        systems: The systems to relate, by default every system of the universe.
    """
    if systems is None:
        systems = enumerate_systems(universe)
    return CorrectnessRelation(tuple(systems), PropertiesLattice(universe),
                               satisfies, name="satisfies")


__all__ = [
    "PropertiesElement",
    "PropertiesLattice",
    "properties_lattice",
    "satisfies",
    "is_inconsistent",
    "systems_satisfying",
    "count_systems",
    "properties_relation",
]
