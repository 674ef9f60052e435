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
"""Modeling formalisms attached to the properties lattice.

Each formalism is registered in :py:mod:`galoistrans.domains` and provides a
:py:class:`~galoistrans.galois.GaloisConnection` from the properties lattice of
a universe to its own lattice of models:

* ``reliability`` keeps the reliability constraints and forgets the topology,
* ``topology`` keeps the topology constraints and forgets the reliabilities,
* ``powerset-hull`` describes reliabilities by arbitrary sets of assignments.
  Its concretization takes the box hull of a set, which does not map meets to
  meets, so it is not a Galois connection. It is kept as a negative example.
"""

import functools
import itertools
from typing import Mapping, Optional

import galoistrans.domains as domains
from galoistrans.domains.boxes import BoxLattice
from galoistrans.domains.boxes import Model
from galoistrans.domains.boxes import ModelBox
from galoistrans.domains.boxes import ReliabilityModelBox
from galoistrans.domains.boxes import TopologyModelBox
from galoistrans.domains.boxes import box_model_space
from galoistrans.domains.properties import PropertiesElement
from galoistrans.domains.properties import PropertiesLattice
from galoistrans.domains.universe import SystemInstance
from galoistrans.domains.universe import Universe
from galoistrans.galois.connection import GaloisConnection
from galoistrans.galois.connection import ModelSpace
from galoistrans.lattice.base import FiniteLattice
from galoistrans.lattice.powerset import MAX_UNIVERSE
from galoistrans.lattice.powerset import PowersetLattice
from galoistrans.tagopts.tol import TagOptionsElement
from galoistrans.tagopts.tol import TagOptionsLattice


class Formalism:
    """Base class of modeling formalisms over a system universe.

    Subclasses define the abstract lattice, ``alpha``, ``gamma``, the model
    space and the exact model of a system.

    Args:
        universe: The system universe.
    """

    name = "formalism"

    def __init__(self, universe: Universe):
        self.universe = universe
        self.properties = PropertiesLattice(universe)

    @property
    def abstract(self) -> FiniteLattice:
        raise NotImplementedError()

    @property
    def models(self) -> ModelSpace:
        raise NotImplementedError()

    def alpha(self, p: PropertiesElement):
        raise NotImplementedError()

    def gamma(self, m) -> PropertiesElement:
        raise NotImplementedError()

    def model_of(self, system: SystemInstance) -> Model:
        """The single model describing ``system`` exactly."""
        raise NotImplementedError()

    def model(self, mapping: Mapping[str, object]):
        """Build an abstract element from its literal form."""
        raise NotImplementedError()

    @functools.cached_property
    def connection(self) -> GaloisConnection:
        return GaloisConnection(self.properties,
                                self.abstract,
                                self.alpha,
                                self.gamma,
                                name=self.name,
                                models=self.models)

    def __repr__(self):
        return f"{type(self).__name__}({self.universe})"


class _BoxFormalism(Formalism):
    """A formalism whose models are boxes over one part of the properties."""

    box_type = ModelBox

    @property
    def space(self) -> TagOptionsLattice:
        """The part of the properties lattice the boxes mirror."""
        raise NotImplementedError()

    def part(self, p: PropertiesElement) -> TagOptionsElement:
        raise NotImplementedError()

    def assemble(self, part: TagOptionsElement) -> PropertiesElement:
        raise NotImplementedError()

    @functools.cached_property
    def abstract(self) -> BoxLattice:
        return BoxLattice(self.space, self.box_type)

    @functools.cached_property
    def models(self) -> ModelSpace:
        return box_model_space(self.abstract)

    def alpha(self, p):
        return self.abstract.wrap(self.part(p))

    def gamma(self, m):
        return self.assemble(m.as_tag_options())


@domains.register("reliability")
class ReliabilityFormalism(_BoxFormalism):
    """Allowed reliabilities per component; the topology is left open."""

    name = "reliability"
    box_type = ReliabilityModelBox

    @property
    def space(self):
        return self.properties.reliability

    def part(self, p):
        return p.rel

    def assemble(self, part):
        return PropertiesElement(part, self.properties.topology.top)

    def model_of(self, system):
        return tuple((c, system.reliability_of(c))
                     for c in self.universe.components.tags)

    def model(self, mapping):
        return self.abstract.box({
            component: [self.universe.check_value(v) for v in values]
            for component, values in mapping.items()
        })


@domains.register("topology")
class TopologyFormalism(_BoxFormalism):
    """Allowed line states per line; reliabilities are left open."""

    name = "topology"
    box_type = TopologyModelBox

    @property
    def space(self):
        return self.properties.topology

    def part(self, p):
        return p.topo

    def assemble(self, part):
        return PropertiesElement(self.properties.reliability.top, part)

    def model_of(self, system):
        return tuple((line, system.state_of(line))
                     for line in self.universe.lines.tags)

    def model(self, mapping):
        return self.abstract.box({
            self.universe.check_line(line): states
            for line, states in mapping.items()
        })


@domains.register("powerset-hull")
class PowersetHullFormalism(Formalism):
    """Arbitrary sets of reliability assignments, concretized by their box hull.

    Args:
        universe: The system universe.
        max_universe: Largest number of assignments the powerset is built over.
    """

    name = "powerset-hull"

    def __init__(self, universe: Universe, max_universe: int = MAX_UNIVERSE):
        super().__init__(universe)
        components = universe.components.tags
        self.assignments = tuple(
            tuple(zip(components, values)) for values in itertools.product(
                universe.grid_values, repeat=len(components)))
        self._abstract = PowersetLattice(self.assignments,
                                         max_universe=max_universe)

    @property
    def abstract(self) -> PowersetLattice:
        return self._abstract

    @functools.cached_property
    def models(self) -> ModelSpace:
        return ModelSpace.of_powerset(self._abstract)

    def alpha(self, p):
        rel = p.rel
        return frozenset(
            assignment for assignment in self.assignments
            if all(value in rel[c] for c, value in assignment if c in rel.tag_set))

    def gamma(self, m):
        components = self.universe.components.tags
        hull = {c: set() for c in components}
        for assignment in m:
            for c, value in assignment:
                hull[c].add(value)
        rel = self.properties.reliability.element(hull)
        return PropertiesElement(rel, self.properties.topology.top)

    def model_of(self, system):
        return tuple((c, system.reliability_of(c))
                     for c in self.universe.components.tags)

    def model(self, mapping):
        """A set of assignments, given as ``{"assignments": [{c: value}, ...]}``."""
        chosen = []
        for entry in mapping.get("assignments", ()):
            chosen.append(tuple(
                (c, self.universe.check_value(entry[c]))
                for c in self.universe.components.tags))
        return self._abstract.element(chosen)


def formalism(name: str, universe: Universe, **kwargs) -> Formalism:
    """Instantiate the formalism registered as ``name`` over ``universe``."""
    return domains.init(name, universe, **kwargs)


def reliability_connection(universe: Universe,
                           grid: Optional[int] = None) -> GaloisConnection:
    """Connection of the reliability formalism, optionally on another grid."""
    if grid is not None:
        universe = universe.with_grid(grid)
    return ReliabilityFormalism(universe).connection


def topology_connection(universe: Universe) -> GaloisConnection:
    """Connection of the topology formalism."""
    return TopologyFormalism(universe).connection


def powerset_hull_connection(universe: Universe) -> GaloisConnection:
    """The box-hull candidate over the full powerset of assignments."""
    return PowersetHullFormalism(universe).connection


__all__ = [
    "Formalism",
    "ReliabilityFormalism",
    "TopologyFormalism",
    "PowersetHullFormalism",
    "formalism",
    "reliability_connection",
    "topology_connection",
    "powerset_hull_connection",
]
