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
"""Selection of a single model and refinement of properties.

A modeling formalism usually admits many models for the same properties. A
selection operator picks one of them, and refinement folds the information of
the chosen model back into the properties: ``p' = p ⊓ gamma({m})``.

Selection strategies are registered in :py:mod:`galoistrans.galois`:

* ``canonical-least`` chooses the first model in the deterministic member order.
* ``explicit`` always chooses a configured model, which is contract-checked.
* ``system`` chooses the model of a known system.
"""

from typing import Any, Callable, Hashable, List, Optional, Tuple

import galoistrans.galois as galois
from galoistrans.galois.connection import GaloisConnection
from galoistrans.galois.connection import ModelSpace
from galoistrans.galois.relation import CorrectnessRelation
from galoistrans.lattice.laws import Budget
from galoistrans.lattice.laws import Cases
from galoistrans.lattice.laws import Law
from galoistrans.lattice.laws import LawReport
from galoistrans.lattice.laws import check_laws


class NoModelError(RuntimeError):
    """Selection was requested on an element representing no model.

    The formalism cannot reason about the given system constraints.
    """


class ContractError(RuntimeError):
    """A selection strategy returned a model outside the given model set."""


class SelectionOperator:
    """Base class of selection strategies.

    Args:
        space: The model space of the formalism.
        choose: Picks one model from a non-empty abstract element.
        name: Name used in reports.
    """

    needs_system = False

    def __init__(self,
                 space: ModelSpace,
                 choose: Callable[[Any], Hashable],
                 name: str = "selection"):
        self.space = space
        self.choose = choose
        self.name = name

    def for_system(self, system) -> "SelectionOperator":
        """The strategy to use when the exact system is known."""
        return self

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"


@galois.register("canonical-least")
class CanonicalLeastSelection(SelectionOperator):
    """Choose the first member of the model set.

    Deterministic, but it does not know the system: a system correct for a
    model set is in general not correct for the least model of that set.
    """

    def __init__(self, space: ModelSpace):

        def choose(element):
            for model in space.members(element):
                return model
            raise NoModelError("The model set is empty.")

        super().__init__(space, choose, name="canonical-least")


@galois.register("explicit")
class ExplicitSelection(SelectionOperator):
    """Always choose ``model``; selecting from a set without it is a contract error."""

    def __init__(self, space: ModelSpace, model: Hashable):
        self.model = model
        super().__init__(space, lambda element: model, name="explicit")


@galois.register("system")
class SystemSelection(SelectionOperator):
    """Choose the model that describes a known system exactly.

    Args:
        space: The model space.
        model_of: Maps a system to its fully specified model.
        system: The system; set by :py:meth:`for_system`.
    """

    needs_system = True

    def __init__(self,
                 space: ModelSpace,
                 model_of: Callable[[Any], Hashable],
                 system: Any = None):
        self.model_of = model_of
        self.system = system

        def choose(element):
            if self.system is None:
                raise ContractError(
                    "The system selection needs a system; use for_system.")
            return model_of(self.system)

        super().__init__(space, choose, name="system")

    def for_system(self, system):
        return SystemSelection(self.space, self.model_of, system)


def select(sel: SelectionOperator, element) -> Hashable:
    """Choose a single model from the model set ``element``.

    Raises:
        NoModelError: If ``element`` represents no model.
        ContractError: If the strategy returns a model outside ``element``.
    """
    if sel.space.is_empty(element):
        raise NoModelError(
            "Cannot select a model from an empty model set: the chosen "
            "modeling formalism cannot reason about the given system "
            "constraints.")
    model = sel.choose(element)
    if not sel.space.contains(element, model):
        raise ContractError(
            f"The selection {sel.name} chose {sel.space.render(model)}, "
            f"which is not a member of the model set.")
    return model


def refine(p, c: GaloisConnection, model: Hashable):
    """Fold a selected model back into the properties: ``p ⊓ gamma({model})``.

    Raises:
        ValueError: If the connection has no model space.
        ModelLiftError: If ``model`` is not a model of the formalism.
    """
    if c.models is None:
        raise ValueError(f"The connection {c.name} has no model space.")
    c.concrete.validate(p)
    return c.concrete.meet(p, c.gamma(c.models.lift(model)))


def specialize(p, c: GaloisConnection,
               sel: SelectionOperator) -> Tuple[Hashable, Any]:
    """One round of abstraction, selection and refinement.

    Returns:
        The chosen model ``m = sel(alpha(p))`` and the refined ``p ⊓ gamma({m})``.
    """
    model = select(sel, c.alpha(p))
    return model, refine(p, c, model)


def check_selection(sel: SelectionOperator,
                    relation: CorrectnessRelation,
                    budget: Optional[Budget] = None) -> LawReport:
    """Check the selection contract against a correctness relation on models.

    * membership: the chosen model belongs to the model set,
    * correctness: a system correct for a model set is correct for the
      singleton of the chosen model.

    Strategies that need the system are checked per system, on the model sets
    describing it.
    """
    budget = budget or Budget()
    space = sel.space
    M = relation.lattice

    def described_pairs():
        return Cases.dependent(relation.systems,
                               lambda s: Cases.of(relation.described(s)))

    def member(case):
        s, element = case
        model = sel.for_system(s).choose(element)
        if not space.contains(element, model):
            return {"system": relation.render_system(s),
                    "models": M.render(element), "chosen": space.render(model),
                    "relation": "chosen ∈ models"}

    def member_any(element):
        model = sel.choose(element)
        if not space.contains(element, model):
            return {"models": M.render(element), "chosen": space.render(model),
                    "relation": "chosen ∈ models"}

    def preserves(case):
        s, element = case
        model = sel.for_system(s).choose(element)
        if not relation(s, space.lift(model)):
            return {"system": relation.render_system(s),
                    "models": M.render(element), "chosen": space.render(model),
                    "relation": "s ⊨ models but not s ⊨ {chosen}"}

    if sel.needs_system:
        membership = Law("selection is a member", described_pairs(), member)
    else:
        non_empty = [m for m in M.elements if not space.is_empty(m)]
        membership = Law("selection is a member", Cases.of(non_empty),
                         member_any)
    laws: List[Law] = [
        membership,
        Law("selection preserves correctness", described_pairs(), preserves),
    ]
    return check_laws(f"selection {sel.name}", laws, budget)


__all__ = [
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
