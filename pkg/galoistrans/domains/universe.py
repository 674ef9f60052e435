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
"""The finite universe of systems.

A system is a set of components with exact reliabilities and a set of lines
between nodes. Lines are named ``a-b`` after their endpoints with ``a < b``. A
line may itself be a component, in which case a present line carries the
reliability of that component.
"""

import dataclasses
import fractions
import itertools
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

import galoistrans.helper as helper
from galoistrans.lattice.base import ElementError
from galoistrans.lattice.interval import grid_values
from galoistrans.tagopts.tags import TagUniverse

ABSENT = "absent"
PRESENT = "present"
LINE_STATES = (ABSENT, PRESENT)


def line_name(a: str, b: str) -> str:
    """The canonical tag ``a-b`` of the line between ``a`` and ``b``."""
    if a == b:
        raise ElementError(f"A line needs two distinct endpoints, got {a!r} twice.")
    a, b = sorted((a, b))
    return f"{a}-{b}"


def pair_of(name: str) -> Tuple[str, str]:
    """The endpoints of the line ``name``, in canonical order."""
    parts = name.split("-")
    if len(parts) != 2 or not all(parts) or parts[0] >= parts[1]:
        raise ElementError(
            f"{name!r} is not a canonical line name of the form 'a-b' with a < b.")
    return parts[0], parts[1]


class Universe:
    """Components, nodes and the reliability grid shared by all systems.

    Args:
        components: Names of the components with a reliability. Line
            components are named like the line they belong to.
        nodes: Vertices of the topology. Defaults to the components.
        grid: Denominator ``n`` of the reliability grid ``{1/n, ..., n/n}``.

    Raises:
        ElementError: If a name is repeated, a node name contains ``-`` or the
            grid is not positive.
    """

    def __init__(self,
                 components: Iterable[str],
                 nodes: Optional[Iterable[str]] = None,
                 grid: int = 20):
        self.components = TagUniverse(components)
        self.nodes = self.components if nodes is None else TagUniverse(nodes)
        for node in self.nodes:
            if "-" in node:
                raise ElementError(
                    f"Node names must not contain '-', got {node!r}.")
        self.grid = grid
        self.grid_values = grid_values(grid)
        self.lines = TagUniverse(
            line_name(a, b) for a, b in itertools.combinations(self.nodes.tags, 2))

    def with_grid(self, grid: int) -> "Universe":
        return Universe(self.components.tags, self.nodes.tags, grid)

    def check_value(self, value) -> fractions.Fraction:
        """Parse a reliability and check that it lies on the grid."""
        value = helper.parse_rational(value)
        if value not in self.grid_values:
            raise ElementError(
                f"The reliability {helper.format_rational(value)} is not on the "
                f"grid with denominator {self.grid}.")
        return value

    def check_line(self, name: str) -> str:
        if name not in self.lines:
            raise ElementError(
                f"Unknown line {name!r}; the lines are "
                f"{helper.render_set(self.lines.tags)}.")
        return name

    def _key(self):
        return (self.components, self.nodes, self.grid)

    def __eq__(self, other):
        if not isinstance(other, Universe):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"Universe(components={list(self.components.tags)}, "
                f"nodes={list(self.nodes.tags)}, grid={self.grid})")


@dataclasses.dataclass(frozen=True)
class SystemInstance:
    """One concrete system: exact reliabilities and the lines that exist.

    ``reliability`` holds one ``(component, value)`` pair per component, sorted
    by component. Build instances with :py:meth:`build`.
    """

    nodes: frozenset
    reliability: Tuple[Tuple[str, fractions.Fraction], ...]
    edges: frozenset

    @classmethod
    def build(cls,
              reliability: Mapping[str, Union[str, int, float, fractions.Fraction]],
              edges: Iterable[Union[str, Tuple[str, str]]] = (),
              nodes: Optional[Iterable[str]] = None) -> "SystemInstance":
        """Build a system from a reliability map and lines given as names or pairs.

        Nodes default to the endpoints of the lines.
        """
        names = frozenset(
            line_name(*edge) if isinstance(edge, tuple) else line_name(*pair_of(edge))
            for edge in edges)
        endpoints = frozenset(itertools.chain.from_iterable(
            pair_of(name) for name in names))
        nodes = endpoints if nodes is None else frozenset(nodes)
        if not endpoints <= nodes:
            raise ElementError(
                f"Lines {helper.render_set(names)} connect nodes outside "
                f"{helper.render_set(nodes)}.")
        values = tuple((component, helper.parse_rational(reliability[component]))
                       for component in sorted(reliability))
        for component, value in values:
            if not 0 < value <= 1:
                raise ElementError(
                    f"The reliability of {component!r} must lie in (0, 1], got "
                    f"{helper.format_rational(value)}.")
        return cls(nodes, values, names)

    @property
    def components(self) -> frozenset:
        return frozenset(component for component, _ in self.reliability)

    def reliability_of(self, component: str) -> fractions.Fraction:
        for name, value in self.reliability:
            if name == component:
                return value
        raise KeyError(component)

    def state_of(self, line: str) -> str:
        """``present`` or ``absent``."""
        return PRESENT if line in self.edges else ABSENT

    def __str__(self):
        values = ",".join(f"{c}={helper.format_rational(v)}"
                          for c, v in self.reliability)
        return f"system(rel: {values or '∅'}; lines: {helper.render_set(self.edges)})"


def systems_within(universe: Universe, allowed_values,
                   allowed_states) -> Iterator[SystemInstance]:
    """Systems whose values and line states are drawn from the given callables."""
    components = universe.components.tags
    lines = universe.lines.tags
    nodes = universe.nodes.all
    for values in itertools.product(*(allowed_values(c) for c in components)):
        reliability = tuple(zip(components, values))
        for states in itertools.product(*(allowed_states(l) for l in lines)):
            edges = frozenset(
                line for line, state in zip(lines, states) if state == PRESENT)
            yield SystemInstance(nodes, reliability, edges)


def enumerate_systems(universe: Universe) -> Iterator[SystemInstance]:
    """All systems of the universe.

    Components vary over the grid in increasing order, lines over ``absent``
    before ``present``; components vary slowest.
    """
    return systems_within(universe, lambda c: universe.grid_values,
                          lambda l: LINE_STATES)


def count_all_systems(universe: Universe) -> int:
    return (len(universe.grid_values)**len(universe.components) *
            2**len(universe.lines))


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
]
