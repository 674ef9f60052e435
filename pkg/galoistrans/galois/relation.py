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
"""Correctness relations between systems and lattice elements."""

from typing import Any, Callable, Hashable, List, Optional, Sequence

import literate_dataclasses as dataclasses

from galoistrans.lattice.base import CapacityError
from galoistrans.lattice.base import FiniteLattice
from galoistrans.lattice.laws import Budget
from galoistrans.lattice.laws import Cases
from galoistrans.lattice.laws import Law
from galoistrans.lattice.laws import LawReport
from galoistrans.lattice.laws import check_laws


@dataclasses.dataclass
class CorrectnessRelation:
    """A relation ``s ⊨ l`` between systems and elements of a lattice.

    A correctness relation must be closed upwards (relaxing a correct
    constraint keeps it correct) and under meets (the conjunction of correct
    constraints is correct). :py:func:`check_correctness_relation` verifies both.

    Args:
        systems: The finite set of systems.
        lattice: The lattice of constraints.
        holds: Predicate deciding ``s ⊨ l``.
    """

    systems: Sequence[Hashable]
    lattice: FiniteLattice
    holds: Callable[[Any, Any], bool]
    name: str = dataclasses.field(default="correctness",
                                  doc="""Name used in reports.""")
    render_system: Callable[[Any], str] = dataclasses.field(
        default=str, doc="""Text rendering of a system for witnesses.""")

    def __call__(self, system, element) -> bool:
        return bool(self.holds(system, element))

    def described(self, system) -> List:
        """All lattice elements describing ``system``, in enumeration order."""
        return [l for l in self.lattice.elements if self(system, l)]

    def describing(self, element) -> List:
        """All systems described by ``element``."""
        return [s for s in self.systems if self(s, element)]


def _relation_laws(r: CorrectnessRelation, budget: Budget) -> List[Law]:
    L = r.lattice
    render = L.render
    systems = tuple(r.systems)

    def top_describes(s):
        if not r(s, L.top):
            return {"system": r.render_system(s), "element": render(L.top),
                    "relation": "s ⊨ ⊤"}

    def upward(case):
        s, (l, x) = case
        above = L.join(l, x)
        if r(s, l) and not r(s, above):
            return {"system": r.render_system(s), "l1": render(l),
                    "l2": render(above),
                    "relation": "s ⊨ l1 and l1 ⊑ l2 but not s ⊨ l2"}

    def meet_closed(case):
        s, S = case
        meet = L.meet_all(S)
        if not r(s, meet):
            return {"system": r.render_system(s),
                    "collection": [render(l) for l in S],
                    "meet": render(meet),
                    "relation": "s ⊨ l for all l in collection but not s ⊨ ⨅"}

    return [
        Law("top describes every system", Cases.of(systems), top_describes),
        Law("upward closure",
            Cases.product(Cases.of(systems), Cases.tuples(L.elements, 2)),
            upward),
        Law("meet closure",
            Cases.dependent(
                systems, lambda s: Cases.collections(r.described(s),
                                                     budget.subset_size)),
            meet_closed),
    ]


def check_correctness_relation(r: CorrectnessRelation,
                               budget: Optional[Budget] = None) -> LawReport:
    """Check upward closure and meet closure of ``r``.

    Upward closure is checked for all ``(s, l1, l2)`` with ``l2 = l1 ⊔ x``, which
    covers every comparable pair. Meet closure is checked for every system on the
    sub-collections of the elements describing it.

    Raises:
        CapacityError: If the lattice or the system set is too large.
    """
    budget = budget or Budget()
    r.lattice.check_capacity(budget.max_elements)
    if len(r.systems) > budget.max_elements:
        raise CapacityError(
            f"{len(r.systems)} systems exceed the bound of {budget.max_elements}.")
    report = check_laws(r.name, _relation_laws(r, budget), budget)
    report.notes["systems"] = len(r.systems)
    return report


def trivial_relation(systems: Sequence[Hashable],
                     lattice: FiniteLattice) -> CorrectnessRelation:
    """The relation describing every system by ``⊤`` only."""
    top = lattice.top
    return CorrectnessRelation(systems, lattice, lambda s, l: l == top,
                               name="trivial")


__all__ = [
    "CorrectnessRelation",
    "check_correctness_relation",
    "trivial_relation",
]
