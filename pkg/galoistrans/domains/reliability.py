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
"""Exact two-terminal reliability of systems and bounds over property sets.

Lines fail independently. A present line named ``a-b`` works with the
reliability of the component of the same name, or always if there is no such
component. Nodes never fail. The reliability between two nodes is the
probability that the working lines connect them, computed exactly by summing
over all states of the lines that can fail.
"""

import fractions
import itertools
from typing import Iterable, List, Optional

import literate_dataclasses as dataclasses
import networkx as nx

import galoistrans.helper as helper
from galoistrans.domains.properties import PropertiesElement
from galoistrans.domains.properties import count_systems
from galoistrans.domains.properties import is_inconsistent
from galoistrans.domains.properties import systems_satisfying
from galoistrans.domains.universe import SystemInstance
from galoistrans.domains.universe import Universe
from galoistrans.domains.universe import pair_of
from galoistrans.lattice.base import CapacityError
from galoistrans.lattice.base import ElementError

MAX_EDGES = 20
SYSTEM_BUDGET = 2**16

Rational = fractions.Fraction


class InconsistentPropertiesError(ValueError):
    """The properties describe no system."""


class BudgetExceededError(RuntimeError):
    """More systems would have to be enumerated than the budget allows."""


def series_reliability(values: Iterable[Rational]) -> Rational:
    """Reliability of lines in series: all of them have to work."""
    result = Rational(1)
    for value in values:
        result *= value
    return result


def parallel_reliability(values: Iterable[Rational]) -> Rational:
    """Reliability of lines in parallel: one of them has to work."""
    failure = Rational(1)
    for value in values:
        failure *= 1 - value
    return 1 - failure


def _line_reliability(s: SystemInstance, line: str) -> Rational:
    if line in s.components:
        return s.reliability_of(line)
    return Rational(1)


def two_terminal_reliability(s: SystemInstance,
                             source: str,
                             sink: str,
                             max_edges: int = MAX_EDGES) -> Rational:
    """Probability that ``source`` and ``sink`` are connected by working lines.

    Raises:
        ElementError: If an endpoint is not a node of the system.
        CapacityError: If the system has more than ``max_edges`` lines.
    """
    for endpoint in (source, sink):
        if endpoint not in s.nodes:
            raise ElementError(
                f"{endpoint!r} is not a node of the system; the nodes are "
                f"{helper.render_set(s.nodes)}.")
    if len(s.edges) > max_edges:
        raise CapacityError(
            f"The system has {len(s.edges)} lines, but the analyzer is limited "
            f"to {max_edges}.")
    if source == sink:
        return Rational(1)

    certain, uncertain = [], []
    for line in sorted(s.edges):
        r = _line_reliability(s, line)
        (certain if r == 1 else uncertain).append((line, r))

    graph = nx.Graph()
    graph.add_nodes_from(s.nodes)
    graph.add_edges_from(pair_of(line) for line, _ in certain)

    total = Rational(0)
    for working in itertools.product((False, True), repeat=len(uncertain)):
        probability = Rational(1)
        lines = []
        for (line, r), up in zip(uncertain, working):
            probability *= r if up else 1 - r
            if up:
                lines.append(pair_of(line))
        graph.add_edges_from(lines)
        if nx.has_path(graph, source, sink):
            total += probability
        graph.remove_edges_from(lines)
    return total


@dataclasses.dataclass
class ReliabilityBound:
    """The range of two-terminal reliabilities over a set of systems."""

    low: Rational = dataclasses.field(default=None,
                                      doc="""The smallest reliability.""")
    high: Rational = dataclasses.field(default=None,
                                       doc="""The largest reliability.""")
    argmin: Optional[SystemInstance] = dataclasses.field(
        default=None, doc="""The first system attaining ``low``.""")
    argmax: Optional[SystemInstance] = dataclasses.field(
        default=None, doc="""The first system attaining ``high``.""")
    systems: int = dataclasses.field(default=0,
                                     doc="""Number of systems enumerated.""")

    def contains(self, other: "ReliabilityBound") -> bool:
        """Whether ``other`` lies within this interval."""
        return self.low <= other.low and other.high <= self.high

    def to_dict(self):
        return {
            "low": helper.format_rational(self.low),
            "high": helper.format_rational(self.high),
            "argmin": str(self.argmin),
            "argmax": str(self.argmax),
            "systems": self.systems,
        }


def reliability_bound(p: PropertiesElement,
                      source: str,
                      sink: str,
                      universe: Universe,
                      budget: int = SYSTEM_BUDGET,
                      max_edges: int = MAX_EDGES) -> ReliabilityBound:
    """Smallest and largest reliability of the systems described by ``p``.

    Every described system is enumerated; nothing is approximated.

    Raises:
        InconsistentPropertiesError: If ``p`` is inconsistent.
        BudgetExceededError: If ``p`` describes more than ``budget`` systems.
        ElementError: If an endpoint is not a node of the universe.
    """
    if is_inconsistent(p):
        raise InconsistentPropertiesError(
            f"{p} is inconsistent and describes no system.")
    for endpoint in (source, sink):
        if endpoint not in universe.nodes:
            raise ElementError(
                f"{endpoint!r} is not a node; the nodes are "
                f"{helper.render_set(universe.nodes.tags)}.")
    count = count_systems(p, universe)
    if count > budget:
        raise BudgetExceededError(
            f"{p} describes {count} systems, more than the budget of {budget}.")
    bound = None
    for system in systems_satisfying(p, universe):
        r = two_terminal_reliability(system, source, sink, max_edges=max_edges)
        if bound is None:
            bound = ReliabilityBound(r, r, system, system, 0)
        if r < bound.low:
            bound.low, bound.argmin = r, system
        if r > bound.high:
            bound.high, bound.argmax = r, system
        bound.systems += 1
    if bound is None:
        raise InconsistentPropertiesError(f"{p} describes no system.")
    return bound


__all__ = [
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
